#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hpc/algebra.hpp"
#include "hpc/coloring.hpp"

namespace hpc {

enum class CodeKind { perfect, tfold_perfect, mds2, tfold_mds, mds3 };

std::string_view to_string(CodeKind k) noexcept;

// Color 1 is the code.
struct CodeColoring {
    Coloring coloring;
    CodeKind kind;
    int multiplicity = 1;  // t for t-fold codes
    int r = 0;             // redundancy for Hamming codes

    const GraphShape& shape() const noexcept { return coloring.shape(); }
    bool contains(std::span<const Symbol> v) const { return coloring.evaluate(v) == 1; }
};

// Syndrome decoder for the linear Hamming code over GF(q) with r check symbols.
// r = 1 is the trivial code {0} in K_q and works for any q.
class HammingCode {
public:
    HammingCode(int r, int q);

    int r() const noexcept { return r_; }
    int q() const noexcept { return q_; }
    int length() const noexcept { return n_; }
    // Columns as base-q labels, first check row most significant.
    const std::vector<std::uint32_t>& columns() const noexcept { return columns_; }
    std::uint32_t syndrome(std::span<const Symbol> x) const;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
    // Syndrome of the unit vector a*e_i.
    std::uint32_t contribution(int i, Symbol a) const noexcept;
    std::uint32_t syndrome_count() const noexcept { return syndromes_; }

private:
    int r_, q_, n_;
    std::uint32_t syndromes_;
    std::vector<std::uint32_t> columns_;
    std::vector<std::uint32_t> contrib_;  // [i*q + a] = a * column_i
    std::vector<std::uint32_t> add_;      // syndrome addition table, empty when r = 1
    std::shared_ptr<const FiniteField> field_;
};

CodeColoring hamming_perfect_coloring(int r, int q);
CodeColoring tfold_perfect_coloring(int t, int r, int q);
CodeColoring mds2_coloring(int n, int q, int t);

// Partition of H(m,q) into q distance-2 MDS codes (labels 0..q-1), optionally
// refined into distance-3 MDS codes.
struct MdsPartition {
    int m = 0;
    int q = 0;
    std::shared_ptr<const std::vector<Symbol>> block;
    std::shared_ptr<const std::vector<Symbol>> sub;  // null when unrefined

    bool refined() const noexcept { return sub != nullptr; }
    GraphShape shape() const { return GraphShape(m, q); }
    Symbol block_of(std::span<const Symbol> x) const;
    Symbol sub_of(std::span<const Symbol> x) const;
    Symbol block_at(std::uint64_t r) const { return (*block)[r]; }
    Symbol sub_at(std::uint64_t r) const { return (*sub)[r]; }
    CodeColoring block_code(int i) const;
    CodeColoring refinement_code(int i, int j) const;
};

// Whether hqq_decomposition(q) is available: q a prime power with q^q <= 2^24.
bool hqq_supported(int q) noexcept;
// Built once per q and cached.
std::shared_ptr<const MdsPartition> hqq_decomposition(int q);
MdsPartition zero_sum_partition(int m, int q);

Quasigroup quasigroup_from_mds_partition(const MdsPartition& partition);

struct CodeReport {
    bool exhaustive = true;
    std::uint64_t checked = 0;
    std::uint64_t seed = 0;
    std::optional<Vertex> witness;  // center of a ball or base of a face that fails
    std::string detail;
    bool pass() const noexcept { return !witness; }
};

CodeReport verify_code(const CodeColoring& code, std::uint64_t budget = 1'000'000, std::uint64_t samples = 100'000,
                       std::uint64_t seed = 0);

}  // namespace hpc
