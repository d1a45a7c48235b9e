#include "hpc/hamming.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "hpc/errors.hpp"

namespace hpc {

GraphShape::GraphShape(int n_, int q_) : n(n_), q(q_) {
    if (n < 0) throw ParameterError("dimension must be nonnegative, got " + std::to_string(n));
    if (q < 2 || q > kMaxAlphabet)
        throw ParameterError("alphabet size must lie in 2.." + std::to_string(kMaxAlphabet) + ", got " +
                             std::to_string(q));
}

BigInt GraphShape::vertex_count() const { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n)); }

bool GraphShape::fits_u64() const noexcept {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q)) return false;
        v *= static_cast<std::uint64_t>(q);
    }
    return true;
}

std::uint64_t GraphShape::size() const {
    if (!fits_u64()) throw BudgetExceeded("q^n does not fit in 64 bits for " + to_string(*this));
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) v *= static_cast<std::uint64_t>(q);
    return v;
}

std::string to_string(const GraphShape& s) { return "H(" + std::to_string(s.n) + "," + std::to_string(s.q) + ")"; }

Vertex::Vertex(std::initializer_list<int> coords) {
    coords_.reserve(coords.size());
    for (int c : coords) {
        if (c < 0 || c > kMaxAlphabet) throw MalformedVertex("symbol out of range: " + std::to_string(c));
        coords_.push_back(static_cast<Symbol>(c));
    }
}

std::string to_string(std::span<const Symbol> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << int(v[i]);
    os << ')';
    return os.str();
}

void check_vertex(const GraphShape& shape, std::span<const Symbol> v) {
    if (static_cast<int>(v.size()) != shape.n)
        throw MalformedVertex("vertex " + to_string(v) + " has length " + std::to_string(v.size()) + ", expected " +
                              std::to_string(shape.n));
    for (Symbol s : v)
        if (s >= shape.q) throw MalformedVertex("vertex " + to_string(v) + " has symbol >= q=" + std::to_string(shape.q));
}

std::uint64_t rank(const GraphShape& shape, std::span<const Symbol> v) {
    check_vertex(shape, v);
    shape.size();  // overflow guard
    std::uint64_t r = 0;
    for (int i = shape.n - 1; i >= 0; --i) r = r * static_cast<std::uint64_t>(shape.q) + v[i];
    return r;
}

void unrank_into(const GraphShape& shape, std::uint64_t r, std::span<Symbol> out) {
    if (static_cast<int>(out.size()) != shape.n) throw MalformedVertex("unrank buffer has wrong length");
    const auto q = static_cast<std::uint64_t>(shape.q);
    for (int i = 0; i < shape.n; ++i) {
        out[i] = static_cast<Symbol>(r % q);
        r /= q;
    }
    if (r != 0) throw ParameterError("rank out of range for " + to_string(shape));
}

Vertex unrank(const GraphShape& shape, std::uint64_t r) {
    Vertex v(static_cast<std::size_t>(shape.n));
    unrank_into(shape, r, v.coords());
    return v;
}

std::vector<Vertex> neighbors(const GraphShape& shape, std::span<const Symbol> v) {
    check_vertex(shape, v);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(shape.degree()));
    Vertex u(std::vector<Symbol>(v.begin(), v.end()));
    for (int i = 0; i < shape.n; ++i) {
        const Symbol orig = u[i];
        for (int s = 0; s < shape.q; ++s) {
            if (s == orig) continue;
            u[i] = static_cast<Symbol>(s);
            out.push_back(u);
        }
        u[i] = orig;
    }
    return out;
}

int distance(std::span<const Symbol> u, std::span<const Symbol> v) {
    if (u.size() != v.size())
        throw MalformedVertex("distance between vertices of lengths " + std::to_string(u.size()) + " and " +
                              std::to_string(v.size()));
    int d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
    return d;
}

int weight(std::span<const Symbol> v) noexcept {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](Symbol s) { return s != 0; }));
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt sphere_size(const GraphShape& shape, int j) {
    if (j < 0 || j > shape.n)
        throw ParameterError("sphere radius " + std::to_string(j) + " outside 0.." + std::to_string(shape.n));
    return binomial(shape.n, j) * boost::multiprecision::pow(BigInt(shape.q - 1), static_cast<unsigned>(j));
}

std::vector<Vertex> enumerate_face(const GraphShape& shape, const Face& f) {
    check_vertex(shape, f.base);
    std::vector<bool> seen(static_cast<std::size_t>(shape.n), false);
    for (int i : f.free) {
        if (i < 0 || i >= shape.n) throw ParameterError("face direction " + std::to_string(i) + " out of range");
        if (seen[i]) throw ParameterError("duplicate face direction " + std::to_string(i));
        seen[i] = true;
    }
    Vertex v = f.base;
    for (int i : f.free) v[i] = 0;
    std::vector<Vertex> out;
    while (true) {
        out.push_back(v);
        std::size_t j = 0;
        for (; j < f.free.size(); ++j) {
            auto& s = v[f.free[j]];
            if (++s < shape.q) break;
            s = 0;
        }
        if (j == f.free.size()) break;
    }
    return out;
}

}  // namespace hpc
