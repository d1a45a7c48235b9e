#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hpc/hamming.hpp"

namespace hpc {

bool is_prime(long v) noexcept;
// (p, s) with q = p^s, or nullopt.
std::optional<std::pair<int, int>> prime_power(long q) noexcept;
std::vector<long> prime_factors(long v);

// GF(p^s). Elements are labeled 0..p^s-1 by their base-p coefficient vectors,
// constant term least significant.
class FiniteField {
public:
    using Element = std::uint32_t;

    static FiniteField make(int p, int s);
    static FiniteField of_order(int q);

    int p() const noexcept { return p_; }
    int s() const noexcept { return s_; }
    int order() const noexcept { return order_; }
    // Monic modulus, coefficients c_0..c_s.
    const std::vector<int>& modulus() const noexcept { return modulus_; }
    std::string modulus_string() const;

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element pow(Element a, std::uint64_t e) const;

private:
    FiniteField() = default;
    void check(Element a) const;

    int p_ = 0, s_ = 0, order_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, length order-1
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

// Lexicographically least monic irreducible of degree s over GF(p); ordering is
// by the lower coefficients read as a base-p integer.
std::vector<int> least_irreducible(int p, int s);

// n-ary quasigroup of order q. Default is the iterated sum mod q; a nonzero seed
// picks the isotope tau(sigma_1(x_1) + ... + sigma_m(x_m)).
class Quasigroup {
public:
    static Quasigroup iterated_sum(int arity, int order, std::uint64_t seed = 0);
    static Quasigroup from_table(int arity, int order, std::shared_ptr<const std::vector<Symbol>> table);

    int arity() const noexcept { return arity_; }
    int order() const noexcept { return order_; }
    std::uint64_t seed() const noexcept { return seed_; }

    Symbol operator()(std::span<const Symbol> args) const;

private:
    Quasigroup() = default;
    int arity_ = 0, order_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<std::vector<Symbol>> perms_;
    std::vector<Symbol> outer_;
    std::shared_ptr<const std::vector<Symbol>> table_;
};

struct LatinViolation {
    Vertex line_base;
    int direction = 0;
};

struct QuasigroupReport {
    bool exhaustive = false;
    std::uint64_t lines_checked = 0;
    std::vector<LatinViolation> violations;
    bool pass() const noexcept { return violations.empty(); }
};

QuasigroupReport validate_quasigroup(const Quasigroup& qg, std::uint64_t budget = 1'000'000,
                                     std::uint64_t samples = 4096, std::uint64_t seed = 0);

}  // namespace hpc
