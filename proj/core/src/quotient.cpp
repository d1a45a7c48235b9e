#include "hpc/quotient.hpp"

#include <algorithm>
#include <sstream>

#include "hpc/errors.hpp"

namespace hpc {

QuotientMatrix::QuotientMatrix(int k, std::vector<std::int64_t> entries) : k_(k), entries_(std::move(entries)) {
    if (k < 1 || entries_.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k))
        throw ParameterError("quotient matrix entry count does not match k=" + std::to_string(k));
}

QuotientMatrix QuotientMatrix::two(std::int64_t degree, std::int64_t b, std::int64_t c) {
    return QuotientMatrix(2, {degree - b, b, c, degree - c});
}

std::optional<std::int64_t> QuotientMatrix::row_sum() const {
    std::optional<std::int64_t> sum;
    for (int i = 0; i < k_; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < k_; ++j) s += at(i, j);
        if (sum && *sum != s) return std::nullopt;
        sum = s;
    }
    return sum;
}

bool QuotientMatrix::nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t v) { return v >= 0; });
}

QuotientMatrix QuotientMatrix::swapped() const {
    if (k_ != 2) throw ParameterError("color swap needs a 2-coloring");
    return QuotientMatrix(2, {at(1, 1), at(1, 0), at(0, 1), at(0, 0)});
}

std::string to_string(const QuotientMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < m.k(); ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < m.k(); ++j) os << (j ? "," : "") << m.at(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace hpc
