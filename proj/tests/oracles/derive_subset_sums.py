"""Independent oracle for the signed subset-sum counts s_n.

Teichmueller lifts are computed as j^(p^N) mod p^N (Python big integers),
and every subset of mu_{p-1} is enumerated by plain bitmask iteration.
Run: python3 derive_subset_sums.py
"""
import sys


def teichmuller(p, prec):
    mod = p ** prec
    return [pow(j, p ** prec, mod) for j in range(1, p)]


def vp(x, p, cap):
    if x == 0:
        return cap
    v = 0
    while x % p == 0 and v < cap:
        x //= p
        v += 1
    return v


def s_sequence(p, nmax):
    prec = nmax + 2
    mod = p ** prec
    xi = teichmuller(p, prec)
    k = p - 1
    tally = [0] * (prec + 1)
    for mask in range(1 << k):
        s = 0
        for b in range(k):
            if mask >> b & 1:
                s += xi[b]
        sign = -1 if bin(mask).count("1") % 2 else 1
        tally[vp(s % mod, p, prec)] += sign
    out = []
    for n in range(nmax + 1):
        total = sum(tally[n:])
        assert total % (p - 1) == 0
        out.append(total // (p - 1))
    return out


if __name__ == "__main__":
    for p, nmax in [(3, 3), (5, 3), (7, 3), (11, 4), (13, 4), (17, 4), (19, 4)]:
        print(p, s_sequence(p, nmax))
    print("xi(2) p=5 N=2:", teichmuller(5, 2)[1])
