#include "eisen/padic/traces.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <thread>
#include <utility>

#include "eisen/errors.hpp"

namespace eisen {

namespace {

using u128 = unsigned __int128;

void require_odd_prime(unsigned long p) {
    if (!is_odd_prime(p)) throw ParameterError("p must be an odd prime, got " + std::to_string(p));
}

u128 to_u128(const Integer& x) {
    Integer rest = x;
    u128 out = 0;
    unsigned shift = 0;
    while (sgn(rest) != 0) {
        const Integer low = rest & Integer(0xFFFFFFFFUL);
        out |= static_cast<u128>(low.get_ui()) << shift;
        rest >>= 32;
        shift += 32;
    }
    return out;
}

Integer from_i64(std::int64_t v) {
    Integer r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

/// Signed and unsigned subset counts per exact valuation class; index `precision` holds zero sums.
struct ValuationTally {
    std::vector<std::int64_t> signed_count;
    std::vector<std::uint64_t> count;

    explicit ValuationTally(unsigned precision) : signed_count(precision + 1), count(precision + 1) {}

    void add(const ValuationTally& o) {
        for (std::size_t v = 0; v < count.size(); ++v) {
            signed_count[v] += o.signed_count[v];
            count[v] += o.count[v];
        }
    }
};

/// Runs fn(task) for task in [0, tasks) on up to `workers` threads. Results must be written
/// to per-task slots so that the outcome does not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t tasks, unsigned workers, Fn fn) {
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(tasks)));
    if (workers == 1) {
        for (std::size_t t = 0; t < tasks; ++t) fn(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t t; (t = next.fetch_add(1)) < tasks;) fn(t);
        });
    for (auto& th : pool) th.join();
}

template <class U>
struct Residues {
    U modulus;
    unsigned long p;
    unsigned precision;
    std::vector<U> xi;

    U add(U a, U b) const {
        U s = a + b;
        return s >= modulus ? U(s - modulus) : s;
    }
    U sub(U a, U b) const { return a >= b ? U(a - b) : U(a + (modulus - b)); }

    /// Exact valuation, or `precision` for zero.
    unsigned valuation(U x) const {
        if (x == 0) return precision;
        unsigned v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    }
};

template <class U>
ValuationTally direct_tally(const Residues<U>& r, unsigned workers) {
    const unsigned k = static_cast<unsigned>(r.xi.size());
    unsigned top = 0;
    while (top < k && (std::size_t{1} << top) < 64) ++top;
    const unsigned low = k - top;
    const std::size_t chunks = std::size_t{1} << top;
    std::vector<ValuationTally> parts(chunks, ValuationTally(r.precision));
    parallel_for(chunks, workers, [&](std::size_t c) {
        ValuationTally& t = parts[c];
        U sum = 0;
        int sign = 1;
        for (unsigned b = 0; b < top; ++b)
            if (c >> b & 1) {
                sum = r.add(sum, r.xi[low + b]);
                sign = -sign;
            }
        std::vector<bool> in(low, false);
        auto record = [&] {
            const unsigned v = r.valuation(sum);
            t.signed_count[v] += sign;
            ++t.count[v];
        };
        record();
        const std::size_t steps = std::size_t{1} << low;
        for (std::size_t idx = 1; idx < steps; ++idx) {
            const unsigned b = static_cast<unsigned>(__builtin_ctzll(idx));
            sum = in[b] ? r.sub(sum, r.xi[b]) : r.add(sum, r.xi[b]);
            in[b] = !in[b];
            sign = -sign;
            record();
        }
    });
    ValuationTally total(r.precision);
    for (const auto& t : parts) total.add(t);
    return total;
}

template <class U>
std::vector<std::pair<U, int>> half_sums(const Residues<U>& r, std::size_t begin, std::size_t end) {
    const std::size_t k = end - begin;
    std::vector<std::pair<U, int>> out;
    out.reserve(std::size_t{1} << k);
    U sum = 0;
    int sign = 1;
    std::vector<bool> in(k, false);
    out.emplace_back(sum, sign);
    for (std::size_t idx = 1; idx < (std::size_t{1} << k); ++idx) {
        const unsigned b = static_cast<unsigned>(__builtin_ctzll(idx));
        sum = in[b] ? r.sub(sum, r.xi[begin + b]) : r.add(sum, r.xi[begin + b]);
        in[b] = !in[b];
        sign = -sign;
        out.emplace_back(sum, sign);
    }
    return out;
}

struct Aggregate {
    std::int64_t signed_count = 0;
    std::uint64_t count = 0;
};

template <class U>
std::vector<std::pair<U, Aggregate>> grouped(std::vector<std::pair<U, int>> keyed) {
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<U, Aggregate>> out;
    for (const auto& [key, sign] : keyed) {
        if (out.empty() || out.back().first != key) out.push_back({key, Aggregate{}});
        out.back().second.signed_count += sign;
        ++out.back().second.count;
    }
    return out;
}

/// Signed and unsigned numbers of pairs (a, b) with a + b ≡ 0 mod `mod`.
template <class U>
Aggregate count_level(const std::vector<std::pair<U, int>>& A, const std::vector<std::pair<U, int>>& B, U mod) {
    std::vector<std::pair<U, int>> ka, kb;
    ka.reserve(A.size());
    kb.reserve(B.size());
    for (const auto& [a, s] : A) {
        const U x = a % mod;
        ka.emplace_back(x == 0 ? U(0) : U(mod - x), s);
    }
    for (const auto& [b, s] : B) kb.emplace_back(b % mod, s);
    const auto ga = grouped(std::move(ka));
    const auto gb = grouped(std::move(kb));
    Aggregate total;
    std::size_t i = 0, j = 0;
    while (i < ga.size() && j < gb.size()) {
        if (ga[i].first < gb[j].first) {
            ++i;
        } else if (gb[j].first < ga[i].first) {
            ++j;
        } else {
            total.signed_count += ga[i].second.signed_count * gb[j].second.signed_count;
            total.count += ga[i].second.count * gb[j].second.count;
            ++i;
            ++j;
        }
    }
    return total;
}

/// Per level n in [0, precision]: signed/unsigned counts of subsets with sum ≡ 0 mod p^n.
template <class U>
std::vector<Aggregate> mitm_levels(const Residues<U>& r, unsigned workers) {
    const std::size_t k = r.xi.size();
    const auto A = half_sums(r, 0, k / 2);
    const auto B = half_sums(r, k / 2, k);
    std::vector<Aggregate> levels(r.precision + 1);
    std::vector<U> moduli(r.precision + 1);
    moduli[0] = 1;
    for (unsigned n = 1; n <= r.precision; ++n) moduli[n] = moduli[n - 1] * r.p;
    parallel_for(r.precision, workers, [&](std::size_t t) {
        const unsigned n = static_cast<unsigned>(t) + 1;
        levels[n] = count_level(A, B, moduli[n]);
    });
    // Every subset sum is ≡ 0 mod 1; Σ_H (-1)^{#H} vanishes for a nonempty ground set.
    levels[0].count = std::uint64_t{1} << k;
    levels[0].signed_count = 0;
    return levels;
}

template <class U>
Residues<U> make_residues(const TeichmullerSet& ts) {
    Residues<U> r;
    r.modulus = static_cast<U>(to_u128(ts.ring.modulus));
    r.p = ts.ring.p;
    r.precision = ts.ring.precision;
    for (const auto& x : ts.xi) r.xi.push_back(static_cast<U>(to_u128(x)));
    return r;
}

/// Signed/unsigned counts with sum ≡ 0 mod p^n for every level n in [0, precision].
std::vector<Aggregate> level_counts(const TeichmullerSet& ts, SumStrategy strategy, unsigned workers) {
    const bool fits64 = ts.ring.modulus < (Integer(1) << 62);
    if (strategy == SumStrategy::Mitm) {
        return fits64 ? mitm_levels(make_residues<std::uint64_t>(ts), workers)
                      : mitm_levels(make_residues<u128>(ts), workers);
    }
    const ValuationTally t = fits64 ? direct_tally(make_residues<std::uint64_t>(ts), workers)
                                    : direct_tally(make_residues<u128>(ts), workers);
    std::vector<Aggregate> levels(ts.ring.precision + 1);
    Aggregate acc;
    for (std::size_t v = t.count.size(); v-- > 0;) {
        acc.signed_count += t.signed_count[v];
        acc.count += t.count[v];
        levels[v] = acc;
    }
    return levels;
}

}  // namespace

TeichmullerSet teichmuller(unsigned long p, unsigned precision) {
    require_odd_prime(p);
    if (precision < 1) throw ParameterError("precision must be >= 1");
    TeichmullerSet ts;
    ts.ring.p = p;
    ts.ring.precision = precision;
    ts.ring.modulus = ipow(p, precision);
    for (unsigned long j = 1; j < p; ++j) {
        Integer x(j), next;
        while (true) {
            mpz_powm_ui(next.get_mpz_t(), x.get_mpz_t(), p, ts.ring.modulus.get_mpz_t());
            if (next == x) break;
            x = next;
        }
        ts.xi.push_back(x);
    }
    return ts;
}

std::string to_string(SumStrategy s) {
    switch (s) {
        case SumStrategy::Auto: return "auto";
        case SumStrategy::Direct: return "direct";
        case SumStrategy::Mitm: return "mitm";
    }
    return "auto";
}

SumStrategy parse_strategy(const std::string& text) {
    if (text == "auto") return SumStrategy::Auto;
    if (text == "direct") return SumStrategy::Direct;
    if (text == "mitm") return SumStrategy::Mitm;
    throw ParameterError("unknown strategy: " + text);
}

SubsetSumTally s_sequence(unsigned long p, unsigned n_max, const SubsetSumOptions& options) {
    require_odd_prime(p);
    const unsigned k = static_cast<unsigned>(p - 1);
    SumStrategy strategy = options.strategy;
    if (strategy == SumStrategy::Auto) strategy = k <= 22 ? SumStrategy::Direct : SumStrategy::Mitm;
    if (strategy == SumStrategy::Direct && k > options.direct_cap)
        throw CapExceeded("direct strategy: p-1 = " + std::to_string(k) + " exceeds cap " +
                          std::to_string(options.direct_cap));
    if (strategy == SumStrategy::Mitm && k > options.mitm_cap)
        throw CapExceeded("mitm strategy: p-1 = " + std::to_string(k) + " exceeds cap " +
                          std::to_string(options.mitm_cap));

    // A nonzero subset sum has valuation < φ(p-1), so this precision separates zero sums.
    const unsigned precision = std::max<unsigned>(n_max, static_cast<unsigned>(euler_phi(k))) + 2;
    if (ipow(p, precision) >= (Integer(1) << 126)) throw CapExceeded("p^precision exceeds 126 bits");
    const TeichmullerSet ts = teichmuller(p, precision);
    const std::vector<Aggregate> levels = level_counts(ts, strategy, options.workers);

    const std::int64_t divisor = static_cast<std::int64_t>(k);
    std::vector<Integer> s(precision + 1);
    for (unsigned n = 0; n <= precision; ++n) {
        if (levels[n].signed_count % divisor != 0)
            throw InternalError("s_" + std::to_string(n) + " is not an integer for p=" + std::to_string(p));
        s[n] = from_i64(levels[n].signed_count / divisor);
    }
    if (s[0] != 0) throw InternalError("s_0 != 0");
    if (s[1] != 1) throw InternalError("s_1 != 1");

    SubsetSumTally out;
    out.p = p;
    out.strategy = strategy;
    const std::uint64_t zero_sums = levels[precision].count;
    unsigned max_finite = 0;
    for (unsigned n = 0; n < precision; ++n)
        if (levels[n].count > zero_sums) max_finite = n;
    out.n_bound = max_finite + 1;
    unsigned n0 = out.n_bound;
    while (n0 > 0 && s[n0 - 1] == s[precision]) --n0;
    if (n0 <= n_max) out.n0 = n0;
    out.s.assign(s.begin(), s.begin() + n_max + 1);
    return out;
}

long n_upper_bound(unsigned long p) {
    require_odd_prime(p);
    if (p < 5) throw ParameterError("the bound is stated for p >= 5");
    const unsigned long phi = euler_phi(p - 1);
    for (mpfr_prec_t prec = 64; prec <= 8192; prec *= 2) {
        mpfr_t pi_lo, pi_hi, lpi_lo, lpi_hi, lp_lo, lp_hi, ratio_lo, ratio_hi, lo, hi;
        mpfr_inits2(prec, pi_lo, pi_hi, lpi_lo, lpi_hi, lp_lo, lp_hi, ratio_lo, ratio_hi, lo, hi, (mpfr_ptr)nullptr);
        mpfr_const_pi(pi_lo, MPFR_RNDD);
        mpfr_const_pi(pi_hi, MPFR_RNDU);
        mpfr_log(lpi_lo, pi_lo, MPFR_RNDD);
        mpfr_log(lpi_hi, pi_hi, MPFR_RNDU);
        mpfr_set_ui(lp_lo, p, MPFR_RNDN);
        mpfr_log(lp_hi, lp_lo, MPFR_RNDU);
        mpfr_log(lp_lo, lp_lo, MPFR_RNDD);
        mpfr_div(ratio_lo, lpi_lo, lp_hi, MPFR_RNDD);
        mpfr_div(ratio_hi, lpi_hi, lp_lo, MPFR_RNDU);
        // lo = φ(1 - ratio_hi) + 1, hi = φ(1 - ratio_lo) + 1.
        mpfr_ui_sub(lo, 1, ratio_hi, MPFR_RNDD);
        mpfr_ui_sub(hi, 1, ratio_lo, MPFR_RNDU);
        mpfr_mul_ui(lo, lo, phi, MPFR_RNDD);
        mpfr_mul_ui(hi, hi, phi, MPFR_RNDU);
        mpfr_add_ui(lo, lo, 1, MPFR_RNDD);
        mpfr_add_ui(hi, hi, 1, MPFR_RNDU);
        mpfr_floor(lo, lo);
        mpfr_floor(hi, hi);
        const bool certified = mpfr_equal_p(lo, hi) != 0;
        const long value = mpfr_get_si(lo, MPFR_RNDN);
        mpfr_clears(pi_lo, pi_hi, lpi_lo, lpi_hi, lp_lo, lp_hi, ratio_lo, ratio_hi, lo, hi, (mpfr_ptr)nullptr);
        if (certified) return value;
    }
    throw InternalError("n_upper_bound: could not certify the floor");
}

TraceRecord trace_via_s(unsigned long p, unsigned n, const SubsetSumOptions& options) {
    if (n < 1) throw ParameterError("trace needs n >= 1");
    const SubsetSumTally t = s_sequence(p, n, options);
    TraceRecord rec{p, n, ipow(p, n) * t.s[n] - ipow(p, n - 1) * t.s[n - 1]};
    if (n == 2) {
        const Integer p2 = ipow(p, 2);
        const Integer diff = rec.trace + static_cast<unsigned long>(p);
        if (!mpz_divisible_p(diff.get_mpz_t(), p2.get_mpz_t()))
            throw InternalError("Tr(pi_2) is not congruent to -p mod p^2");
    }
    return rec;
}

ModulusCheck max_sum_modulus_check(unsigned long p, long double tolerance) {
    require_odd_prime(p);
    const unsigned k = static_cast<unsigned>(p - 1);
    if (k > 26) throw CapExceeded("max_sum_modulus_check: p-1 exceeds 26");
    const long double pi = acosl(-1.0L);
    std::vector<std::complex<long double>> roots;
    for (unsigned j = 0; j < k; ++j) roots.push_back(std::polar(1.0L, 2.0L * pi * j / k));
    std::complex<long double> sum = 0;
    std::vector<bool> in(k, false);
    long double best = 0;
    for (std::size_t idx = 1; idx < (std::size_t{1} << k); ++idx) {
        const unsigned b = static_cast<unsigned>(__builtin_ctzll(idx));
        sum = in[b] ? sum - roots[b] : sum + roots[b];
        in[b] = !in[b];
        best = std::max(best, std::abs(sum));
    }
    ModulusCheck out;
    out.p = p;
    out.max_modulus = best;
    out.expected = 1.0L / sinl(pi / k);
    out.relative_error = std::fabs(best - out.expected) / out.expected;
    out.passed = out.relative_error <= tolerance;
    return out;
}

}  // namespace eisen
