#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hpc {

class QuotientMatrix {
public:
    QuotientMatrix() = default;
    QuotientMatrix(int k, std::vector<std::int64_t> entries);
    // [[degree-b, b], [c, degree-c]]
    static QuotientMatrix two(std::int64_t degree, std::int64_t b, std::int64_t c);

    int k() const noexcept { return k_; }
    // 0-based indices.
    std::int64_t at(int i, int j) const { return entries_[static_cast<std::size_t>(i * k_ + j)]; }
    std::int64_t& at(int i, int j) { return entries_[static_cast<std::size_t>(i * k_ + j)]; }
    const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

    std::optional<std::int64_t> row_sum() const;
    bool nonnegative() const;

    // 2-coloring accessors.
    std::int64_t b() const { return at(0, 1); }
    std::int64_t c() const { return at(1, 0); }
    std::int64_t main_eigenvalue() const { return at(0, 0) - at(1, 0); }

    QuotientMatrix swapped() const;  // k = 2 only

    friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;

private:
    int k_ = 0;
    std::vector<std::int64_t> entries_;
};

std::string to_string(const QuotientMatrix& m);

}  // namespace hpc
