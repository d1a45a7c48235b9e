#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hpc {

using Symbol = std::uint8_t;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxAlphabet = 255;

struct GraphShape {
    int n = 0;
    int q = 2;

    GraphShape() = default;
    GraphShape(int n_, int q_);

    int degree() const noexcept { return n * (q - 1); }
    int theta(int i) const noexcept { return n * (q - 1) - q * i; }
    BigInt vertex_count() const;
    bool fits_u64() const noexcept;
    // q^n as a native integer; throws BudgetExceeded when it does not fit.
    std::uint64_t size() const;

    friend bool operator==(const GraphShape&, const GraphShape&) = default;
};

std::string to_string(const GraphShape& s);

class Vertex {
public:
    Vertex() = default;
    explicit Vertex(std::size_t n, Symbol fill = 0) : coords_(n, fill) {}
    explicit Vertex(std::vector<Symbol> coords) : coords_(std::move(coords)) {}
    Vertex(std::initializer_list<int> coords);

    std::size_t size() const noexcept { return coords_.size(); }
    Symbol operator[](std::size_t i) const noexcept { return coords_[i]; }
    Symbol& operator[](std::size_t i) noexcept { return coords_[i]; }
    std::span<const Symbol> coords() const noexcept { return coords_; }
    std::span<Symbol> coords() noexcept { return coords_; }
    operator std::span<const Symbol>() const noexcept { return coords_; }
    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;

private:
    std::vector<Symbol> coords_;
};

std::string to_string(std::span<const Symbol> v);

struct Face {
    Vertex base;
    std::vector<int> free;
};

void check_vertex(const GraphShape& shape, std::span<const Symbol> v);

// Little-endian mixed radix: coordinate 0 is least significant.
std::uint64_t rank(const GraphShape& shape, std::span<const Symbol> v);
Vertex unrank(const GraphShape& shape, std::uint64_t r);
void unrank_into(const GraphShape& shape, std::uint64_t r, std::span<Symbol> out);

// Coordinate-major, then symbol ascending.
std::vector<Vertex> neighbors(const GraphShape& shape, std::span<const Symbol> v);

int distance(std::span<const Symbol> u, std::span<const Symbol> v);
int weight(std::span<const Symbol> v) noexcept;

BigInt binomial(int n, int k);
BigInt sphere_size(const GraphShape& shape, int j);

std::vector<Vertex> enumerate_face(const GraphShape& shape, const Face& f);

// Advance v to the next vertex in rank order; returns false after the last one.
inline bool increment(std::span<Symbol> v, int q) noexcept {
    for (auto& s : v) {
        if (++s < q) return true;
        s = 0;
    }
    return false;
}

}  // namespace hpc
