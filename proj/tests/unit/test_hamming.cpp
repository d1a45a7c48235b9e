#include <set>

#include "doctest.h"
#include "hpc/errors.hpp"
#include "hpc/hamming.hpp"
#include "hpc/rng.hpp"
#include "oracles.hpp"

using namespace hpc;

TEST_CASE("rank is little-endian mixed radix") {
    const GraphShape s(2, 3);
    CHECK(rank(s, Vertex{0, 0}) == 0);
    CHECK(rank(s, Vertex{2, 1}) == 5);
    CHECK(rank(GraphShape(4, 3), Vertex{2, 2, 2, 2}) == 80);
    CHECK_THROWS_AS(rank(s, Vertex{3, 0}), MalformedVertex);
    CHECK_THROWS_AS(rank(s, Vertex{0, 0, 0}), MalformedVertex);
}

TEST_CASE("rank and unrank are inverse") {
    for (auto [n, q] : {std::pair{4, 3}, {3, 5}, {10, 2}, {2, 7}}) {
        const GraphShape s(n, q);
        for (std::uint64_t r = 0; r < s.size(); ++r) REQUIRE(rank(s, unrank(s, r)) == r);
    }
    const GraphShape big(12, 3);
    for (std::uint64_t r = 0; r < big.size(); r += 997) REQUIRE(rank(big, unrank(big, r)) == r);
}

TEST_CASE("shape basics") {
    const GraphShape s(4, 3);
    CHECK(s.degree() == 8);
    CHECK(s.size() == 81);
    CHECK(s.theta(0) == 8);
    CHECK(s.theta(4) == -4);
    CHECK_THROWS_AS(GraphShape(2, 1), ParameterError);
    CHECK_THROWS_AS(GraphShape(-1, 3), ParameterError);
    const GraphShape huge(41, 3);
    CHECK_FALSE(huge.fits_u64());
    CHECK_THROWS_AS(huge.size(), BudgetExceeded);
    CHECK(huge.vertex_count() == boost::multiprecision::pow(BigInt(3), 41));
}

TEST_CASE("neighbors match the distance-1 filter") {
    CHECK(neighbors(GraphShape(1, 3), Vertex{0}) == std::vector<Vertex>{Vertex{1}, Vertex{2}});
    CHECK(neighbors(GraphShape(2, 2), Vertex{0, 0}) == std::vector<Vertex>{Vertex{1, 0}, Vertex{0, 1}});
    for (auto [n, q] : {std::pair{2, 3}, {3, 4}, {5, 2}, {3, 3}}) {
        const GraphShape s(n, q);
        const auto words = oracle::all_words(n, q);
        for (const auto& w : words) {
            std::set<Vertex> want;
            for (const auto& u : words)
                if (oracle::hamming(w, u) == 1) want.insert(Vertex(oracle::sym(u)));
            const auto got = neighbors(s, oracle::sym(w));
            REQUIRE(got.size() == static_cast<std::size_t>(s.degree()));
            REQUIRE(std::set<Vertex>(got.begin(), got.end()) == want);
        }
    }
}

TEST_CASE("distance and weight") {
    CHECK(distance(Vertex{0, 0, 0}, Vertex{0, 0, 0}) == 0);
    CHECK(distance(Vertex{0, 1, 2}, Vertex{0, 2, 2}) == 1);
    CHECK(distance(Vertex{1, 1, 1, 1}, Vertex{0, 0, 0, 0}) == 4);
    CHECK_THROWS(distance(Vertex{0}, Vertex{0, 0}));
    CHECK(weight(Vertex{0, 2, 0, 1}) == 2);
}

TEST_CASE("sphere sizes") {
    const GraphShape s(4, 3);
    CHECK(sphere_size(s, 0) == 1);
    CHECK(sphere_size(s, 3) == 32);
    CHECK(sphere_size(s, 4) == 16);
    // oracle: count by weight
    std::vector<long> count(5, 0);
    for (const auto& w : oracle::all_words(4, 3)) ++count[static_cast<std::size_t>(weight(oracle::sym(w)))];
    for (int j = 0; j <= 4; ++j) CHECK(sphere_size(s, j) == count[static_cast<std::size_t>(j)]);
    for (int n = 0; n <= 20; ++n)
        for (int q = 2; q <= 8; ++q) {
            const GraphShape t(n, q);
            BigInt total = 0;
            for (int j = 0; j <= n; ++j) total += sphere_size(t, j);
            REQUIRE(total == t.vertex_count());
        }
}

TEST_CASE("faces") {
    const GraphShape s(2, 3);
    auto line = enumerate_face(s, Face{Vertex{0, 0}, {0}});
    CHECK(line == std::vector<Vertex>{Vertex{0, 0}, Vertex{1, 0}, Vertex{2, 0}});
    CHECK(enumerate_face(s, Face{Vertex{1, 2}, {}}) == std::vector<Vertex>{Vertex{1, 2}});
    auto sq = enumerate_face(GraphShape(3, 2), Face{Vertex{0, 0, 0}, {0, 2}});
    CHECK(sq.size() == 4);
    CHECK(std::set<Vertex>(sq.begin(), sq.end()).size() == 4);
    for (const auto& v : sq) CHECK(v[1] == 0);
    CHECK_THROWS(enumerate_face(s, Face{Vertex{0, 0}, {2}}));
}

TEST_CASE("splitmix64 test vectors") {
    SplitMix64 g(0);
    CHECK(g.next() == 0xE220A8397B1DCDAFull);
    CHECK(g.next() == 0x6E789E6AA1B965F4ull);
    CHECK(g.next() == 0x06C45D188009454Full);
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 100; ++i) REQUIRE(a.below(81) == b.below(81));
}
