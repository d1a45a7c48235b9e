#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hpc/coloring.hpp"

namespace hpc {

struct Violation {
    std::uint64_t rank = 0;  // meaningful when the shape fits 64 bits
    Vertex vertex;
    Color color = 0;
    std::vector<std::int64_t> expected;
    std::vector<std::int64_t> observed;
};

struct VerifyReport {
    enum class Mode { full, sampled };
    Mode mode = Mode::full;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t checked = 0;
    QuotientMatrix matrix;
    std::vector<Violation> violations;

    bool pass() const noexcept { return violations.empty(); }
};

// Throws NotPerfect with the first violating rank, or ParameterError when a
// color is never used.
QuotientMatrix extract_quotient(const Coloring& c, std::uint64_t budget = default_budget());

VerifyReport verify_full(const Coloring& c, const QuotientMatrix& expected, std::uint64_t budget = default_budget());
// Necessary-condition check on `samples` vertices drawn with replacement.
VerifyReport verify_sampled(const Coloring& c, const QuotientMatrix& expected, std::uint64_t samples,
                            std::uint64_t seed);
// The sample sequence used by verify_sampled.
std::vector<Vertex> sample_vertices(const GraphShape& shape, std::uint64_t samples, std::uint64_t seed);

struct DistanceParameters {
    GraphShape shape;
    std::int64_t a(int j) const noexcept { return static_cast<std::int64_t>(j) * (shape.q - 2); }
    std::int64_t b(int j) const noexcept { return static_cast<std::int64_t>(shape.n - j) * (shape.q - 1); }
    std::int64_t c(int j) const noexcept { return j; }
};

struct WeightDistribution {
    int n = 0;
    std::vector<std::vector<BigInt>> W;  // W[l][j], colors 0-based

    int colors() const noexcept { return static_cast<int>(W.size()); }
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// start_color is 1-based. Throws Infeasible on a negative or fractional step.
WeightDistribution weight_distribution_recurrence(const QuotientMatrix& S, int start_color, const GraphShape& shape);
WeightDistribution weight_distribution_bruteforce(const Coloring& c, std::span<const Symbol> origin,
                                                  std::uint64_t budget = default_budget());

struct FaceBalanceReport {
    int k_min = 0;
    BigInt expected;  // color-1 vertices per k_min-face
    std::uint64_t faces_checked = 0;
    std::optional<Face> witness;
    std::string note;
    bool pass() const noexcept { return !witness && note.find("non-integral") == std::string::npos; }
};

FaceBalanceReport face_balance_check(const Coloring& c, std::uint64_t budget = std::uint64_t{1} << 28);

}  // namespace hpc
