#include "eisen/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "eisen/carlitz/carlitz.hpp"
#include "eisen/carlitz/verifiers.hpp"
#include "eisen/cyclotomic/shifted.hpp"
#include "eisen/errors.hpp"
#include "eisen/padic/traces.hpp"
#include "eisen/tower/pi_tower.hpp"

namespace eisen::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned long kNboundPmaxCap = 100000;

struct RunConfig {
    std::string command;
    std::string suite;
    std::optional<unsigned long> p;
    unsigned m = 1;
    unsigned i = 1;
    unsigned beta = 1;
    unsigned n = 2;
    unsigned n_max = 4;
    unsigned long p_min = 5;
    unsigned long p_max = 41;
    std::optional<unsigned long> r;
    unsigned rho = 1;
    std::string f = "Y";
    std::string strategy = "auto";
    unsigned workers = 1;
    std::optional<std::size_t> cap;
    unsigned k_max = 10;
    std::string format;
    std::string output;
};

/// A verifier outcome in one shape for both renderers.
struct SuiteResult {
    std::string suite;
    std::string params;
    bool experimental = false;
    std::size_t checks = 0;
    std::vector<CheckFailure> failures;
    std::vector<ValuationReport> reports;
    std::optional<std::size_t> non_exact;
    std::optional<ConjectureScan> scan;

    bool passed() const { return failures.empty(); }
};

unsigned default_workers() {
    if (const char* env = std::getenv("EISEN_WORKERS")) {
        try {
            const long w = std::stol(env);
            if (w >= 1) return static_cast<unsigned>(w);
        } catch (const std::exception&) {
        }
        throw ParameterError("EISEN_WORKERS must be a positive integer");
    }
    return 1;
}

unsigned long require_p(const RunConfig& c) {
    if (!c.p) throw ParameterError("--p is required");
    return *c.p;
}

std::size_t cap_or(const RunConfig& c, std::size_t fallback) { return c.cap.value_or(fallback); }

/// r = p^ρ with p an odd prime.
std::pair<unsigned long, unsigned> split_prime_power(unsigned long r) {
    if (r < 3) throw ParameterError("--r must be an odd prime power");
    unsigned long p = 2;
    while (r % p != 0) ++p;
    unsigned rho = 0;
    for (unsigned long x = r; x > 1; x /= p) {
        if (x % p != 0) throw ParameterError("--r must be a prime power");
        ++rho;
    }
    return {p, rho};
}

/// Accepts comma-separated F_r codes low to high ("1,0,1") or a sum of terms in Y
/// with code coefficients ("Y^2 + 1", "Y + 2", "2*Y^3 - Y").
PolyFr parse_f(const GaloisField& F, const std::string& text) {
    if (text.find_first_not_of("0123456789, ") == std::string::npos) return parse_poly_fr(F, text);
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s.empty()) throw ParameterError("empty polynomial");
    PolyFr acc = PolyFr::zero(F);
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw ParameterError("malformed polynomial: " + text);
        }
        const std::size_t end = s.find_first_of("+-", pos);
        const std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end;
        if (term.empty()) throw ParameterError("malformed polynomial: " + text);
        unsigned long code = 1;
        std::size_t k = 0;
        std::string rest = term;
        const std::size_t ypos = term.find('Y');
        if (ypos == std::string::npos) {
            if (term.find_first_not_of("0123456789") != std::string::npos) throw ParameterError("malformed term: " + term);
            code = std::stoul(term);
        } else {
            std::string head = term.substr(0, ypos);
            if (!head.empty()) {
                if (head.back() != '*') throw ParameterError("malformed term: " + term);
                head.pop_back();
                if (head.empty() || head.find_first_not_of("0123456789") != std::string::npos)
                    throw ParameterError("malformed term: " + term);
                code = std::stoul(head);
            }
            const std::string tail = term.substr(ypos + 1);
            if (tail.empty()) {
                k = 1;
            } else {
                if (tail.size() < 2 || tail[0] != '^' || tail.find_first_not_of("0123456789", 1) != std::string::npos)
                    throw ParameterError("malformed term: " + term);
                k = std::stoul(tail.substr(1));
            }
        }
        if (code >= F.size()) throw ParameterError("coefficient code out of range: " + term);
        FrElem c = static_cast<FrElem>(code);
        if (negative) c = F.neg(c);
        acc += PolyFr::monomial(F, c, k);
    }
    return acc;
}

CarlitzParams carlitz_params(const RunConfig& c) {
    unsigned long p = 0;
    unsigned rho = c.rho;
    if (c.r) {
        std::tie(p, rho) = split_prime_power(*c.r);
        if (c.p && *c.p != p) throw ParameterError("--p and --r disagree");
    } else if (c.p) {
        p = *c.p;
    } else {
        throw ParameterError("--r (or --p with --rho) is required");
    }
    if (!is_odd_prime(p)) throw ParameterError("r must be a power of an odd prime");
    if (rho < 1) throw ParameterError("--rho must be >= 1");
    const GaloisField& F = GaloisField::get(p, rho);
    return make_carlitz_params(F, parse_f(F, c.f));
}

TowerParams tower_params(const RunConfig& c, unsigned beta) {
    TowerParams t{require_p(c), c.m, c.i, beta};
    t.validate();
    return t;
}

void absorb(SuiteResult& s, const CheckReport& r) {
    s.params = r.params;
    s.checks += r.checks;
    s.failures.insert(s.failures.end(), r.failures.begin(), r.failures.end());
}

void absorb(SuiteResult& s, std::vector<ValuationReport> reports) {
    for (const auto& r : reports) {
        ++s.checks;
        if (!r.passed) s.failures.push_back({"j=" + std::to_string(r.j), "v >= " + std::to_string(r.bound), r.v ? std::to_string(*r.v) : "inf"});
    }
    s.reports = std::move(reports);
}

std::string tower_label(const TowerParams& t) {
    return "p=" + std::to_string(t.p) + " m=" + std::to_string(t.m) + " i=" + std::to_string(t.i);
}

std::string ff_label(const CarlitzParams& P, const std::string& extra) { return P.label() + " " + extra; }

SuiteResult run_suite(const RunConfig& c) {
    SuiteResult s;
    s.suite = c.suite;
    const std::string& name = c.suite;
    const auto mi = [&] { return "m=" + std::to_string(c.m) + " i=" + std::to_string(c.i); };
    if (name == "th11") {
        const auto t = tower_params(c, 0);
        absorb(s, verify_th11(t, cap_or(c, kDefaultDimensionCap)));
        s.params = tower_label(t);
    } else if (name == "th11-cong") {
        absorb(s, verify_th11_cong(tower_params(c, c.beta), cap_or(c, kDefaultDimensionCap)));
    } else if (name == "cordiff") {
        absorb(s, verify_cor_diff(tower_params(c, 0), cap_or(c, kDefaultDimensionCap)));
    } else if (name == "lem10") {
        absorb(s, verify_lem10(require_p(c), c.n, cap_or(c, kDefaultDimensionCap)));
    } else if (name == "eis13") {
        absorb(s, verify_eis13(require_p(c), c.n, cap_or(c, kDefaultDimensionCap)));
    } else if (name == "cong-I") {
        absorb(s, check_congruence_I(require_p(c), c.n));
    } else if (name == "cong-II") {
        absorb(s, check_congruence_II(require_p(c), c.n));
    } else if (name == "binom") {
        BinomialBounds b;
        b.k_max = c.k_max;
        absorb(s, check_binomial_congruences(require_p(c), b));
    } else if (name == "exactness") {
        auto scan = exactness_scan(require_p(c), c.i, cap_or(c, kDefaultDimensionCap));
        s.non_exact = scan.non_exact;
        absorb(s, std::move(scan.reports));
        s.params = "p=" + std::to_string(require_p(c)) + " m=1 i=" + std::to_string(c.i);
    } else if (name == "th11a") {
        const auto P = carlitz_params(c);
        absorb(s, verify_th11a(P, c.m, c.i, cap_or(c, kDefaultDimensionCap)));
        s.params = ff_label(P, mi());
    } else if (name == "th11a-cong") {
        absorb(s, verify_th11a_cong(carlitz_params(c), c.m, c.i, c.beta, cap_or(c, kDefaultDimensionCap)));
    } else if (name == "cordiff2") {
        absorb(s, verify_cor_diff2(carlitz_params(c), c.m, c.i, cap_or(c, kDefaultDimensionCap)));
    } else if (name == "lem10a") {
        absorb(s, verify_lem10a(carlitz_params(c), c.n, cap_or(c, kDefaultDimensionCap)));
    } else if (name == "car11") {
        absorb(s, verify_car11(carlitz_params(c), c.m, cap_or(c, kDefaultDimensionCap)));
    } else if (name == "corbu") {
        absorb(s, verify_cor_bu(carlitz_params(c), c.m, c.i, cap_or(c, kDefaultDimensionCap)));
    } else if (name == "disc") {
        absorb(s, discriminant_check(carlitz_params(c), c.n, cap_or(c, 100)));
    } else if (name == "conj-car12") {
        s.experimental = true;
        auto scan = conjecture_scan(carlitz_params(c), c.m, c.i, cap_or(c, kDefaultDimensionCap));
        s.params = scan.params + " " + mi();
        s.checks = scan.verdicts.size();
        for (const auto& v : scan.verdicts)
            if (!v.match)
                s.failures.push_back({"j=" + std::to_string(v.j),
                                      v.predicted_zero ? "0 coefficient" : "v = " + std::to_string(v.predicted_v),
                                      v.actual_v ? "v = " + std::to_string(*v.actual_v) : "0 coefficient"});
        s.scan = std::move(scan);
    } else {
        throw ParameterError("unknown suite: " + name);
    }
    return s;
}

std::string digits_string(const std::vector<std::size_t>& d) {
    std::string out;
    for (std::size_t k = 0; k < d.size(); ++k) out += (k ? "," : "") + std::to_string(d[k]);
    return out;
}

void render_text(const SuiteResult& s, std::ostream& out) {
    out << "suite " << s.suite << " [" << s.params << "]\n";
    if (s.experimental) out << "EXPERIMENTAL: conjecture scan; verdicts are observations, not proofs\n";
    for (const auto& r : s.reports) out << to_string(r) << '\n';
    if (s.scan) {
        for (const auto& v : s.scan->verdicts) {
            out << "j=" << v.j << " digits=" << digits_string(v.digits) << " cond_i=" << (v.cond_decreasing ? 1 : 0)
                << " cond_ii=" << (v.cond_p_order ? 1 : 0) << " predicted="
                << (v.predicted_zero ? std::string("zero") : std::to_string(v.predicted_v))
                << " actual=" << (v.actual_v ? std::to_string(*v.actual_v) : std::string("zero")) << ' '
                << (v.match ? "match" : "MISMATCH") << '\n';
        }
    }
    for (const auto& f : s.failures)
        out << "FAIL " << f.where << ": expected " << f.expected << ", got " << f.actual << '\n';
    if (s.non_exact) out << "non-exact indices: " << *s.non_exact << '\n';
    if (s.experimental)
        out << "result: " << (s.passed() ? "all verdicts match" : std::to_string(s.failures.size()) + " mismatches")
            << " (" << s.checks << " indices)\n";
    else
        out << "result: " << (s.passed() ? "PASS" : "FAIL") << " (" << s.checks << " checks, " << s.failures.size()
            << " failures)\n";
}

void render_json(const SuiteResult& s, std::ostream& out) {
    Json doc;
    doc["suite"] = s.suite;
    doc["params"] = s.params;
    doc["experimental"] = s.experimental;
    doc["passed"] = s.passed();
    doc["checks"] = s.checks;
    Json failures = Json::array();
    for (const auto& f : s.failures) failures.push_back({{"where", f.where}, {"expected", f.expected}, {"actual", f.actual}});
    doc["failures"] = failures;
    if (!s.reports.empty()) {
        Json reports = Json::array();
        for (const auto& r : s.reports) {
            Json row;
            row["j"] = r.j;
            row["v"] = r.v ? Json(*r.v) : Json(nullptr);
            row["bound"] = r.bound;
            row["exact"] = r.exact;
            row["passed"] = r.passed;
            reports.push_back(row);
        }
        doc["reports"] = reports;
    }
    if (s.non_exact) doc["non_exact"] = *s.non_exact;
    if (s.scan) {
        Json verdicts = Json::array();
        for (const auto& v : s.scan->verdicts) {
            Json row;
            row["j"] = v.j;
            row["digits"] = v.digits;
            row["cond_i"] = v.cond_decreasing;
            row["cond_ii"] = v.cond_p_order;
            row["predicted"] = v.predicted_zero ? Json(nullptr) : Json(v.predicted_v);
            row["actual"] = v.actual_v ? Json(*v.actual_v) : Json(nullptr);
            row["match"] = v.match;
            verdicts.push_back(row);
        }
        doc["verdicts"] = verdicts;
    }
    out << doc.dump(2) << '\n';
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    const SuiteResult s = run_suite(c);
    if (c.format == "json")
        render_json(s, out);
    else if (c.format.empty() || c.format == "text")
        render_text(s, out);
    else
        throw ParameterError("verify supports --format text|json");
    return s.passed() ? kPass : kVerificationFailed;
}

int cmd_minpoly_num(const RunConfig& c, std::ostream& out) {
    if (!c.format.empty() && c.format != "json") throw ParameterError("minpoly-num emits JSON only");
    const TowerParams t = tower_params(c, 0);
    const RelMinPoly poly = minpoly_rel(t, cap_or(c, kDefaultDimensionCap));
    Json doc;
    doc["p"] = t.p;
    doc["m"] = t.m;
    doc["i"] = t.i;
    Json coeffs = Json::array();
    for (std::size_t j = 0; j < poly.coeffs.size(); ++j) {
        Json base = Json::array();
        for (const auto& x : poly.coeffs[j]) base.push_back(to_string(x));
        coeffs.push_back({{"j", j}, {"base_coeffs", base}});
    }
    doc["coefficients"] = coeffs;
    out << doc.dump(2) << '\n';
    return kPass;
}

int cmd_minpoly_ff(const RunConfig& c, std::ostream& out) {
    if (!c.format.empty() && c.format != "json") throw ParameterError("minpoly-ff emits JSON only");
    const CarlitzParams P = carlitz_params(c);
    const RelMinPolyFF poly = minpoly_rel_ff(P, c.m, c.i, cap_or(c, kDefaultDimensionCap));
    Json doc;
    doc["r"] = P.r();
    doc["f"] = to_string(P.f);
    doc["m"] = c.m;
    doc["i"] = c.i;
    Json coeffs = Json::array();
    for (std::size_t j = 0; j < poly.coeffs.size(); ++j) {
        Json base = Json::array();
        for (const auto& x : poly.coeffs[j]) base.push_back(to_string(x));
        coeffs.push_back({{"j", j}, {"base_coeffs", base}});
    }
    doc["coefficients"] = coeffs;
    out << doc.dump(2) << '\n';
    return kPass;
}

std::string optional_bound(unsigned long p) { return p >= 5 ? std::to_string(n_upper_bound(p)) : std::string(); }

int cmd_strace(const RunConfig& c, std::ostream& out) {
    const unsigned long p = require_p(c);
    SubsetSumOptions options;
    options.strategy = parse_strategy(c.strategy);
    options.workers = c.workers;
    const SubsetSumTally tally = s_sequence(p, c.n_max, options);
    const std::string bound = optional_bound(p);
    if (c.format == "json") {
        Json doc;
        doc["p"] = p;
        doc["strategy"] = to_string(tally.strategy);
        Json s = Json::array();
        for (const auto& x : tally.s) s.push_back(to_string(x));
        doc["s"] = s;
        doc["N0"] = tally.n0 ? Json(*tally.n0) : Json(nullptr);
        doc["N"] = tally.n_bound;
        doc["N_upper"] = bound.empty() ? Json(nullptr) : Json(std::stol(bound));
        out << doc.dump(2) << '\n';
        return kPass;
    }
    if (!c.format.empty() && c.format != "csv") throw ParameterError("strace supports --format csv|json");
    out << "p,n,s_n,N0_reached,N_upper\n";
    for (unsigned n = 0; n < tally.s.size(); ++n)
        out << p << ',' << n << ',' << to_string(tally.s[n]) << ',' << (tally.n0 && n >= *tally.n0 ? 1 : 0) << ','
            << bound << '\n';
    return kPass;
}

int cmd_nbound(const RunConfig& c, std::ostream& out) {
    if (c.p_max > kNboundPmaxCap) throw CapExceeded("--pmax exceeds " + std::to_string(kNboundPmaxCap));
    if (!c.format.empty() && c.format != "csv") throw ParameterError("nbound emits CSV only");
    out << "p,N_upper\n";
    for (unsigned long p = std::max<unsigned long>(c.p_min, 5); p <= c.p_max; ++p)
        if (is_prime(p)) out << p << ',' << n_upper_bound(p) << '\n';
    return kPass;
}

void add_p_options(CLI::App* sub, RunConfig& c) {
    sub->add_option("--p", c.p, "odd prime p");
    sub->add_option("--m", c.m, "base level m")->check(CLI::PositiveNumber);
    sub->add_option("--i", c.i, "relative level i")->check(CLI::PositiveNumber);
    sub->add_option("--cap", c.cap, "dimension cap")->check(CLI::PositiveNumber);
}

void add_ff_options(CLI::App* sub, RunConfig& c) {
    sub->add_option("--r", c.r, "field size r = p^rho");
    sub->add_option("--rho", c.rho, "extension degree of F_r over F_p (with --p)")->check(CLI::PositiveNumber);
    sub->add_option("--f", c.f, "monic irreducible f: codes low to high (\"1,0,1\") or a sum like \"Y^2 + 1\"");
}

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", c.output, "write the document to this path");
    sub->add_option("--workers", c.workers, "worker threads (default: EISEN_WORKERS or 1)")->check(CLI::PositiveNumber);
}

int dispatch(const RunConfig& c, std::ostream& out) {
    if (c.command == "minpoly-num") return cmd_minpoly_num(c, out);
    if (c.command == "minpoly-ff") return cmd_minpoly_ff(c, out);
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "strace") return cmd_strace(c, out);
    if (c.command == "nbound") return cmd_nbound(c, out);
    throw ParameterError("no command given");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "th11",   "th11-cong",  "cordiff",  "lem10",  "eis13", "cong-I", "cong-II",    "binom", "th11a",
        "th11a-cong", "cordiff2", "lem10a", "car11", "corbu", "conj-car12", "disc", "exactness"};
    return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    try {
        c.workers = default_workers();
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    CLI::App app{"Exact tower computations and verifiers", "eisen"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto* minpoly = app.add_subcommand("minpoly-num", "relative minimal polynomial of pi_{m+i} over E_m as JSON");
    add_p_options(minpoly, c);
    add_common(minpoly, c);

    auto* minpoly_ff = app.add_subcommand("minpoly-ff", "relative minimal polynomial of varpi_{m+i} as JSON");
    add_p_options(minpoly_ff, c);
    add_ff_options(minpoly_ff, c);
    add_common(minpoly_ff, c);

    auto* verify = app.add_subcommand("verify", "run one verifier suite");
    verify->add_option("suite", c.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    add_p_options(verify, c);
    add_ff_options(verify, c);
    add_common(verify, c);
    verify->add_option("--beta", c.beta, "congruence shift beta");
    verify->add_option("--n", c.n, "level n")->check(CLI::PositiveNumber);
    verify->add_option("--kmax", c.k_max, "binomial range k <= kmax")->check(CLI::PositiveNumber);

    auto* strace = app.add_subcommand("strace", "s_n table as CSV");
    strace->add_option("--p", c.p, "odd prime p")->required();
    strace->add_option("--nmax", c.n_max, "largest n");
    strace->add_option("--strategy", c.strategy, "auto|direct|mitm")->check(CLI::IsMember({"auto", "direct", "mitm"}));
    add_common(strace, c);

    auto* nbound = app.add_subcommand("nbound", "certified upper bound N(p) for primes in [pmin, pmax] as CSV");
    nbound->add_option("--pmax", c.p_max, "largest p")->required();
    nbound->add_option("--pmin", c.p_min, "smallest p (>= 5)");
    add_common(nbound, c);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }
    for (auto* sub : app.get_subcommands()) c.command = sub->get_name();

    std::ofstream file;
    std::ostream* sink = &out;
    if (!c.output.empty()) {
        file.open(c.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << c.output << '\n';
            return kUsage;
        }
        sink = &file;
    }
    try {
        // Render into a buffer so a refused or failed run leaves no partial document.
        std::ostringstream buffer;
        const int code = dispatch(c, buffer);
        *sink << buffer.str();
        sink->flush();
        return code;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kCapRefused;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return run(args, out, err);
}

}  // namespace eisen::cli
