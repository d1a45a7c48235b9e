#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hpc {

struct Params2 {
    int q = 2, b = 1, c = 1;
    int g = 1;        // gcd(b, c)
    int bp = 1, cp = 1;  // b', c'

    static Params2 make(int q, int b, int c);
};

struct EigenvalueVerdict {
    bool pass = false;
    int i = 0;  // (b+c)/q when pass
};
EigenvalueVerdict eigenvalue_condition(int q, int b, int c);

struct DivisibilityVerdict {
    bool admissible = false;
    int k = 0;      // minimal k with (b'+c') | q^k
    int bound = 0;  // n >= (b+c)/q + k - 1
    std::vector<long> foreign_primes;  // primes of b'+c' not dividing q
};
DivisibilityVerdict divisibility_bound(int q, int b, int c);

struct C1Verdict {
    bool pass = false;
    bool divisible = false;        // (q-1) | b
    std::optional<bool> power;     // b+1 a power of q; only for prime-power q
};
C1Verdict c1_condition(int q, int b);

// ceil(3(b+c)/4) for q = 2 and b != c; nullopt when inapplicable.
std::optional<int> fdf_bound(int q, int b, int c);

struct ExceptionRecord {
    int q = 0, b = 0, c = 0, n = 0;
    std::string citation;
};

const std::vector<ExceptionRecord>& default_exceptions();
std::vector<ExceptionRecord> parse_exceptions(std::istream& in);

enum class ReasonKind { degree, divisibility, fdf, exception };

struct Reason {
    ReasonKind kind;
    int value = 0;
    std::string detail;
};

struct LowerBound {
    bool admissible = true;
    std::string inadmissible_reason;
    int value = 0;
    int degree = 0;        // a = ceil(b/(q-1))
    int divisibility = 0;  // (b+c)/q + k - 1
    int k = 0;
    std::vector<Reason> reasons;
};

LowerBound lower_bound(int q, int b, int c);
LowerBound lower_bound(int q, int b, int c, std::span<const ExceptionRecord> exceptions);

struct Threshold {
    int lb = 0, ub = 0;
    bool exact() const noexcept { return lb == ub; }
};
// Needs prime-power q with b'+c' a power of q.
Threshold threshold_bounds_prime_power(int q, int b, int c);

// Advisory notes from unproven conjectures; never used as bounds.
std::vector<std::string> conjecture_notes(int q, int b, int c, int n_lb);

}  // namespace hpc
