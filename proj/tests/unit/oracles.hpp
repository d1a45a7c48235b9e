#pragma once
// Slow, obviously-correct reference implementations. Nothing here calls into
// the library beyond the Coloring evaluator, so the checks stay independent.

#include <cstdint>
#include <map>
#include <vector>

#include "hpc/coloring.hpp"

namespace oracle {

inline std::vector<std::vector<int>> all_words(int n, int q) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(w);
        int i = 0;
        while (i < n && ++w[static_cast<std::size_t>(i)] == q) w[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
    }
    return out;
}

inline int hamming(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

inline std::vector<hpc::Symbol> sym(const std::vector<int>& w) { return {w.begin(), w.end()}; }

// Quotient by pairwise distance filtering: O(q^2n), fine for q^n up to ~2000.
// Returns an empty matrix if the coloring is not perfect.
inline std::vector<std::vector<long>> quotient(const hpc::Coloring& c) {
    const int n = c.shape().n, q = c.shape().q, k = c.colors();
    const auto words = all_words(n, q);
    std::vector<int> col;
    for (const auto& w : words) col.push_back(c.evaluate(sym(w)));
    std::vector<std::vector<long>> S(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::vector<long> row(static_cast<std::size_t>(k), 0);
        for (std::size_t j = 0; j < words.size(); ++j)
            if (hamming(words[i], words[j]) == 1) ++row[static_cast<std::size_t>(col[j] - 1)];
        auto& slot = S[static_cast<std::size_t>(col[i] - 1)];
        if (slot.empty()) slot = row;
        else if (slot != row) return {};
    }
    return S;
}

// W[l][j]: color-(l+1) vertices at distance j from origin.
inline std::vector<std::vector<long>> weights(const hpc::Coloring& c, const std::vector<int>& origin) {
    const int n = c.shape().n, q = c.shape().q;
    std::vector<std::vector<long>> W(static_cast<std::size_t>(c.colors()),
                                     std::vector<long>(static_cast<std::size_t>(n + 1), 0));
    for (const auto& w : all_words(n, q))
        ++W[static_cast<std::size_t>(c.evaluate(sym(w)) - 1)][static_cast<std::size_t>(hamming(w, origin))];
    return W;
}

// GF(p^s) multiplication by schoolbook polynomial product and reduction.
inline int gf_mul(int p, const std::vector<int>& modulus, int a, int b) {
    const int s = static_cast<int>(modulus.size()) - 1;
    std::vector<int> x(static_cast<std::size_t>(s)), y(static_cast<std::size_t>(s)),
        prod(static_cast<std::size_t>(2 * s), 0);
    for (int i = 0; i < s; ++i, a /= p, b /= p) {
        x[static_cast<std::size_t>(i)] = a % p;
        y[static_cast<std::size_t>(i)] = b % p;
    }
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            prod[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    for (int d = 2 * s - 1; d >= s; --d) {
        const int f = prod[static_cast<std::size_t>(d)] % p;
        for (int i = 0; i <= s; ++i)
            prod[static_cast<std::size_t>(d - s + i)] -= f * modulus[static_cast<std::size_t>(i)];
    }
    int out = 0;
    for (int i = s - 1; i >= 0; --i) out = out * p + ((prod[static_cast<std::size_t>(i)] % p) + p) % p;
    return out;
}

// Trial division.
inline std::vector<long> primes_of(long v) {
    std::vector<long> out;
    for (long d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    if (v > 1) out.push_back(v);
    return out;
}

// Does m divide some power of q? Checked by brute powering.
inline bool divides_power(long m, long q) {
    long x = 1 % m;
    for (int i = 0; i < 64; ++i) {
        if (x == 0) return true;
        x = (x * q) % m;
    }
    return x == 0;
}

}  // namespace oracle
