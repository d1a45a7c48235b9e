#include "doctest.h"
#include "hpc/analysis.hpp"
#include "hpc/codes.hpp"
#include "hpc/constructions.hpp"
#include "hpc/errors.hpp"
#include "oracles.hpp"

using namespace hpc;

TEST_CASE("evaluate") {
    auto m = mds2_coloring(2, 3, 1).coloring;
    CHECK(m.evaluate(Vertex{0, 0}) == 1);
    CHECK(m.evaluate(Vertex{1, 0}) == 2);
    CHECK(hamming_perfect_coloring(2, 3).coloring.evaluate(Vertex{0, 0, 0, 0}) == 1);
    CHECK_THROWS_AS(m.evaluate(Vertex{3, 0}), MalformedVertex);
}

TEST_CASE("materialize") {
    auto c = materialize(hamming_perfect_coloring(2, 3).coloring);
    REQUIRE(c.has_dense());
    CHECK(c.dense().size() == 81);
    for (std::uint64_t r = 0; r < 81; ++r) CHECK(c.dense()[r] == c.evaluate(unrank(c.shape(), r)));
    auto big = build(parse_recipe("(flaass-impr :variant 1 :t 1 (complement (faces :color 2 :dim 1 (perfect :r 2 :q 3))))"));
    CHECK(materialize(big).dense().size() == 531441);
    auto huge = build(parse_recipe("(extend :t 22 (perfect :r 2 :q 3))"));
    CHECK(huge.shape().n == 26);
    CHECK_THROWS_AS(materialize(huge), BudgetExceeded);
}

TEST_CASE("swap_to_canonical") {
    auto c35 = build(parse_recipe("(splitII :p 2 :t 1 (faces :color 2 :dim 1 (perfect :r 2 :q 2)))"));
    CHECK(quotient_of(c35).b() == 3);
    auto s = swap_to_canonical(c35);
    CHECK(quotient_of(s).b() == 5);
    CHECK(extract_quotient(s) == quotient_of(s));
    auto c81 = hamming_perfect_coloring(2, 3).coloring;
    CHECK(quotient_of(swap_to_canonical(c81)) == quotient_of(c81));
    auto c66 = build(parse_recipe("(mult-length :t 6 (mds2 :n 1 :q 2))"));
    CHECK(quotient_of(c66).b() == quotient_of(c66).c());
    auto s66 = swap_to_canonical(c66);
    for (const auto& w : oracle::all_words(6, 2)) REQUIRE(s66.evaluate(oracle::sym(w)) == c66.evaluate(oracle::sym(w)));
}

TEST_CASE("predicted quotients") {
    CHECK(predicted_quotient(*parse_recipe("(extend :t 1 (mds2 :n 1 :q 3))")) ==
          QuotientMatrix(2, {2, 2, 1, 3}));
    CHECK(predicted_quotient(*parse_recipe("(mult-length :t 2 (mds2 :n 1 :q 3))")) == QuotientMatrix::two(4, 4, 2));
    CHECK(predicted_quotient(*parse_recipe("(flaass-std :t1 1 :t2 0 (mds2 :n 1 :q 3))")) ==
          QuotientMatrix::two(8, 8, 1));
}

TEST_CASE("predicted equals extracted on small recipes") {
    const char* recipes[] = {
        "(extend :t 1 (mds2 :n 1 :q 3))",
        "(extend :t 2 (perfect :r 2 :q 2))",
        "(mult-length :t 2 (mds2 :n 1 :q 3))",
        "(mult-length :t 3 (mds2 :n 1 :q 3))",
        "(mult-alphabet :p 2 (mds2 :n 1 :q 3))",
        "(mult-alphabet :p 3 (perfect :r 2 :q 2))",
        "(complement (perfect :r 2 :q 3 :t 2))",
        "(splitI-base (mds2 :n 1 :q 3))",
        "(splitI-base (mds2 :n 1 :q 2))",
        "(splitI-base :seed 5 (mds2 :n 2 :q 3))",
        "(invasion :mode 2 :t1 1 :t2 0 (splitI-base (mds2 :n 1 :q 3)))",
        "(invasion :mode 2 :t1 2 :t2 0 (splitI-base (mds2 :n 1 :q 3)))",
        "(flaass-std :t1 2 :t2 1 (mds2 :n 1 :q 4))",
        "(flaass-std :t1 1 :t2 1 (mds2 :n 1 :q 2))",
        "(splitI-faces :variant prime (faces :color 1 :dim 1 (complement (perfect :r 2 :q 2))))",
        "(splitI-faces :variant doubleprime (faces :color 1 :dim 1 (complement (perfect :r 2 :q 2))))",
        "(flaass-impr :variant 1 :t 1 (faces :color 1 :dim 1 (complement (perfect :r 2 :q 2))))",
        "(flaass-impr :variant 2 :t 2 (faces :color 1 :dim 1 (complement (perfect :r 2 :q 2))))",
        "(splitII :p 2 :t 0 (faces :color 2 :dim 1 (perfect :r 2 :q 2)))",
        "(splitII :p 3 :t 1 (faces :color 2 :dim 1 (perfect :r 2 :q 2)))",
    };
    for (const char* text : recipes) {
        CAPTURE(text);
        auto r = parse_recipe(text);
        auto c = build(r);
        const auto m = oracle::quotient(c);
        REQUIRE_FALSE(m.empty());
        const auto p = predicted_quotient(*r);
        REQUIRE(static_cast<int>(m.size()) == p.k());
        for (int i = 0; i < p.k(); ++i)
            for (int j = 0; j < p.k(); ++j) CHECK(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == p.at(i, j));
    }
}

TEST_CASE("color densities") {
    auto c = build(parse_recipe("(flaass-std :t1 0 :t2 2 (mds2 :n 1 :q 3))"));  // (5,4)
    const auto m = quotient_of(c);
    long ones = 0;
    for (const auto& w : oracle::all_words(4, 3)) ones += c.evaluate(oracle::sym(w)) == 1;
    CHECK(ones * (m.b() + m.c()) == 81 * m.c());
}

TEST_CASE("from_dense validates colors") {
    CHECK_THROWS_AS(from_dense(GraphShape(1, 3), 2, {1, 2, 3}), ParameterError);
    CHECK_THROWS_AS(from_dense(GraphShape(1, 3), 2, {1, 2}), ParameterError);
    auto c = from_dense(GraphShape(1, 3), 2, {1, 2, 2});
    CHECK(extract_quotient(c) == QuotientMatrix::two(2, 2, 1));
}
