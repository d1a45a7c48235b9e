#include "hpc/bounds.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "hpc/algebra.hpp"
#include "hpc/errors.hpp"

namespace hpc {

Params2 Params2::make(int q, int b, int c) {
    if (q < 2) throw ParameterError("q must be >= 2");
    if (c < 1 || b < c) throw ParameterError("need b >= c >= 1");
    Params2 p{q, b, c};
    p.g = std::gcd(b, c);
    p.bp = b / p.g;
    p.cp = c / p.g;
    return p;
}

EigenvalueVerdict eigenvalue_condition(int q, int b, int c) {
    if (b < 1 || c < 1) throw ParameterError("b and c must be positive");
    if ((b + c) % q != 0) return {false, 0};
    return {true, (b + c) / q};
}

DivisibilityVerdict divisibility_bound(int q, int b, int c) {
    const auto p = Params2::make(q, b, c);
    DivisibilityVerdict v;
    const long s = p.bp + p.cp;
    for (long f : prime_factors(s))
        if (q % f != 0) v.foreign_primes.push_back(f);
    if (!v.foreign_primes.empty()) return v;
    v.admissible = true;
    long power = 1;
    while (power % s != 0) {
        power = (power % s) * q;
        ++v.k;
    }
    v.bound = (b + c) / q + v.k - 1;
    return v;
}

C1Verdict c1_condition(int q, int b) {
    C1Verdict v;
    v.divisible = b % (q - 1) == 0;
    if (prime_power(q)) {
        long x = 1;
        while (x < b + 1L) x *= q;
        v.power = x == b + 1L;
    }
    v.pass = v.divisible && v.power.value_or(true);
    return v;
}

std::optional<int> fdf_bound(int q, int b, int c) {
    if (q != 2 || b == c) return std::nullopt;
    return (3 * (b + c) + 3) / 4;
}

const std::vector<ExceptionRecord>& default_exceptions() {
    static const std::vector<ExceptionRecord> ex = [] {
        std::istringstream in(
            "# q b c n citation\n"
            "3 14 4 7 HSS97\n"
            "6 35 1 7 GolombPosner64\n");
        return parse_exceptions(in);
    }();
    return ex;
}

std::vector<ExceptionRecord> parse_exceptions(std::istream& in) {
    std::vector<ExceptionRecord> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        ExceptionRecord r;
        if (!(ls >> r.q)) continue;
        if (!(ls >> r.b >> r.c >> r.n >> r.citation))
            throw IoError("exception file line " + std::to_string(lineno) + ": expected `q b c n citation`");
        out.push_back(r);
    }
    return out;
}

LowerBound lower_bound(int q, int b, int c) {
    return hpc::lower_bound(q, b, c, std::span<const ExceptionRecord>(default_exceptions()));
}

LowerBound lower_bound(int q, int b, int c, std::span<const ExceptionRecord> exceptions) {
    LowerBound lb;
    const auto ev = eigenvalue_condition(q, b, c);
    if (!ev.pass) {
        lb.admissible = false;
        lb.inadmissible_reason = "eigenvalue: q does not divide b+c";
        return lb;
    }
    const auto dv = divisibility_bound(q, b, c);
    if (!dv.admissible) {
        lb.admissible = false;
        std::ostringstream os;
        os << "divisibility: b'+c' has prime factor(s)";
        for (auto f : dv.foreign_primes) os << ' ' << f;
        os << " not dividing q";
        lb.inadmissible_reason = os.str();
        return lb;
    }
    if (c == 1) {
        const auto cv = c1_condition(q, b);
        if (!cv.pass) {
            lb.admissible = false;
            lb.inadmissible_reason = !cv.divisible ? "c=1: q-1 does not divide b" : "c=1: b+1 is not a power of q";
            return lb;
        }
    }
    lb.k = dv.k;
    lb.degree = (b + q - 2) / (q - 1);
    lb.divisibility = dv.bound;
    lb.reasons.push_back({ReasonKind::degree, lb.degree, "ceil(b/(q-1))"});
    lb.reasons.push_back({ReasonKind::divisibility, lb.divisibility, "(b+c)/q + k - 1 with k=" + std::to_string(dv.k)});
    lb.value = std::max(lb.degree, lb.divisibility);
    if (auto f = fdf_bound(q, b, c)) {
        lb.reasons.push_back({ReasonKind::fdf, *f, "ceil(3(b+c)/4)"});
        lb.value = std::max(lb.value, *f);
    }
    // Exact-n exclusions; reapply until stable in case records chain.
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& e : exceptions)
            if (e.q == q && e.b == b && e.c == c && e.n == lb.value) {
                lb.reasons.push_back({ReasonKind::exception, e.n + 1, "no coloring in H(" + std::to_string(e.n) + "," +
                                                                          std::to_string(q) + ") [" + e.citation + "]"});
                lb.value = e.n + 1;
                moved = true;
            }
    }
    return lb;
}

Threshold threshold_bounds_prime_power(int q, int b, int c) {
    if (!prime_power(q)) throw ParameterError("threshold bounds need a prime-power q");
    const auto p = Params2::make(q, b, c);
    long s = p.bp + p.cp, x = 1;
    int k = 0;
    while (x < s) {
        x *= q;
        ++k;
    }
    if (x != s) throw ParameterError("threshold bounds need b'+c' to be a power of q");
    Threshold t;
    t.lb = std::max((b + q - 2) / (q - 1), (b + c) / q + k - 1);
    t.ub = (b + c - p.g) / (q - 1);
    return t;
}

std::vector<std::string> conjecture_notes(int q, int b, int c, int n_lb) {
    std::vector<std::string> notes;
    const auto p = Params2::make(q, b, c);
    if (q >= 3 && p.bp + p.cp > q) {
        const int conj = ((q + 1) * (b + c) + q * q - 1) / (q * q);
        if (conj > n_lb)
            notes.push_back("conjectured (not proven): n >= (q+1)(b+c)/q^2, i.e. n >= " + std::to_string(conj));
    }
    if (c != 1 && divisibility_bound(q, b, c).admissible && !prime_power(q))
        notes.push_back("conjectured (not proven): admissible, since b'+c' divides a power of q");
    return notes;
}

}  // namespace hpc
