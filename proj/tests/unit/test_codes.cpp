#include <set>

#include "doctest.h"
#include "hpc/analysis.hpp"
#include "hpc/codes.hpp"
#include "hpc/errors.hpp"
#include "oracles.hpp"

using namespace hpc;

namespace {

long code_size(const Coloring& c) {
    long k = 0;
    for (const auto& w : oracle::all_words(c.shape().n, c.shape().q)) k += c.evaluate(oracle::sym(w)) == 1;
    return k;
}

// every radius-1 ball holds exactly t code words
bool balls_hold(const Coloring& c, int t) {
    const auto words = oracle::all_words(c.shape().n, c.shape().q);
    std::vector<int> in;
    for (const auto& w : words) in.push_back(c.evaluate(oracle::sym(w)) == 1);
    for (const auto& x : words) {
        int k = 0;
        for (std::size_t j = 0; j < words.size(); ++j) k += in[j] && oracle::hamming(x, words[j]) <= 1;
        if (k != t) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("hamming codes are 1-perfect") {
    for (auto [r, q] : {std::pair{2, 2}, {3, 2}, {2, 3}, {2, 4}, {2, 5}, {1, 6}, {1, 3}}) {
        auto code = hamming_perfect_coloring(r, q);
        const int n = code.shape().n;
        long qr = 1;
        for (int i = 0; i < r; ++i) qr *= q;
        CHECK(n == (qr - 1) / (q - 1));
        long total = 1;
        for (int i = 0; i < n; ++i) total *= q;
        CHECK(code_size(code.coloring) == total / qr);
        CHECK(balls_hold(code.coloring, 1));
        CHECK(verify_code(code).pass());
    }
    CHECK(hamming_perfect_coloring(2, 3).coloring.evaluate(Vertex{0, 0, 0, 0}) == 1);
    CHECK_THROWS_AS(hamming_perfect_coloring(2, 6), Unsupported);
}

TEST_CASE("hamming code quotients") {
    CHECK(extract_quotient(hamming_perfect_coloring(2, 3).coloring) == QuotientMatrix::two(8, 8, 1));
    CHECK(extract_quotient(hamming_perfect_coloring(2, 2).coloring) == QuotientMatrix::two(3, 3, 1));
    CHECK(extract_quotient(hamming_perfect_coloring(2, 4).coloring) == QuotientMatrix::two(15, 15, 1));
}

TEST_CASE("t-fold perfect codes") {
    CHECK(extract_quotient(tfold_perfect_coloring(1, 2, 3).coloring) ==
          extract_quotient(hamming_perfect_coloring(2, 3).coloring));
    auto c72 = tfold_perfect_coloring(2, 2, 3);
    CHECK(extract_quotient(c72.coloring) == QuotientMatrix::two(8, 7, 2));
    CHECK(balls_hold(c72.coloring, 2));
    auto c54 = tfold_perfect_coloring(4, 2, 3);
    CHECK(extract_quotient(c54.coloring) == QuotientMatrix::two(8, 5, 4));
    CHECK(balls_hold(c54.coloring, 4));
    CHECK(verify_code(c54).pass());
    CHECK_THROWS(tfold_perfect_coloring(9, 2, 3));
}

TEST_CASE("mds2 codes") {
    auto a = mds2_coloring(2, 3, 1);
    CHECK(oracle::quotient(a.coloring) == std::vector<std::vector<long>>{{0, 4}, {2, 2}});
    CHECK(a.coloring.evaluate(Vertex{0, 0}) == 1);
    CHECK(a.coloring.evaluate(Vertex{1, 0}) == 2);
    CHECK(extract_quotient(mds2_coloring(1, 3, 1).coloring) == QuotientMatrix::two(2, 2, 1));
    CHECK(extract_quotient(mds2_coloring(2, 4, 2).coloring) == QuotientMatrix::two(6, 4, 4));
    CHECK(verify_code(a).pass());
}

TEST_CASE("verify_code finds a missing codeword") {
    auto code = hamming_perfect_coloring(2, 3);
    auto broken = code.coloring.with_recipe(nullptr);
    Coloring b(code.shape(), 2, [broken](std::span<const Symbol> v) -> Color {
        if (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0) return 2;
        return broken(v);
    });
    CodeColoring bad{b, CodeKind::perfect, 1, 2};
    auto rep = verify_code(bad);
    CHECK_FALSE(rep.pass());
    REQUIRE(rep.witness);
    CHECK(distance(*rep.witness, Vertex{0, 0, 0, 0}) <= 1);
}

TEST_CASE("hqq decompositions") {
    for (int q : {2, 3, 4}) {
        auto part = hqq_decomposition(q);
        REQUIRE(part->refined());
        const auto words = oracle::all_words(q, q);
        std::vector<std::vector<std::vector<int>>> blocks(static_cast<std::size_t>(q));
        std::map<std::pair<int, int>, std::vector<std::vector<int>>> subs;
        for (const auto& w : words) {
            const int i = part->block_of(oracle::sym(w)), j = part->sub_of(oracle::sym(w));
            REQUIRE(i < q);
            REQUIRE(j < q);
            blocks[static_cast<std::size_t>(i)].push_back(w);
            subs[{i, j}].push_back(w);
        }
        long qq1 = 1;
        for (int i = 0; i < q - 1; ++i) qq1 *= q;
        // each block is a distance-2 MDS code: size q^(q-1), min distance 2
        for (const auto& blk : blocks) {
            REQUIRE(static_cast<long>(blk.size()) == qq1);
            for (std::size_t x = 0; x < blk.size(); ++x)
                for (std::size_t y = x + 1; y < blk.size(); ++y) REQUIRE(oracle::hamming(blk[x], blk[y]) >= 2);
        }
        // refinements: distance 3 within each sub-block
        REQUIRE(subs.size() == static_cast<std::size_t>(q * q));
        for (const auto& [key, s] : subs) {
            REQUIRE(static_cast<long>(s.size()) == qq1 / q);
            for (std::size_t x = 0; x < s.size(); ++x)
                for (std::size_t y = x + 1; y < s.size(); ++y) REQUIRE(oracle::hamming(s[x], s[y]) >= 3);
        }
        for (int i = 0; i < q; ++i) CHECK(verify_code(part->block_code(i)).pass());
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) CHECK(verify_code(part->refinement_code(i, j)).pass());
    }
    CHECK(hqq_supported(8));
    CHECK_FALSE(hqq_supported(6));
    CHECK_THROWS_AS(hqq_decomposition(6), Unsupported);
}

TEST_CASE("hamming code columns are in lexicographic order") {
    HammingCode h(2, 3);
    CHECK(h.length() == 4);
    // normalized columns of GF(3)^2, first entry most significant: 01, 10, 11, 12
    CHECK(h.columns() == std::vector<std::uint32_t>{1, 3, 4, 5});
    CHECK(h.syndrome(Vertex{0, 0, 0, 0}) == 0);
}
