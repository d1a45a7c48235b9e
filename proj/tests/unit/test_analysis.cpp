#include "doctest.h"
#include "hpc/analysis.hpp"
#include "hpc/codes.hpp"
#include "hpc/constructions.hpp"
#include "hpc/errors.hpp"
#include "oracles.hpp"

using namespace hpc;

namespace {

std::vector<std::vector<long>> as_long(const WeightDistribution& w) {
    std::vector<std::vector<long>> out;
    for (const auto& row : w.W) {
        out.emplace_back();
        for (const auto& x : row) out.back().push_back(x.convert_to<long>());
    }
    return out;
}

}  // namespace

TEST_CASE("extract quotient") {
    CHECK(extract_quotient(mds2_coloring(2, 3, 1).coloring) == QuotientMatrix(2, {0, 4, 2, 2}));
    CHECK(extract_quotient(hamming_perfect_coloring(2, 3).coloring) == QuotientMatrix(2, {0, 8, 1, 7}));
    Coloring ones(GraphShape(2, 3), 2, [](std::span<const Symbol>) -> Color { return 1; });
    CHECK_THROWS_AS(extract_quotient(ones), ParameterError);
    auto bad = from_dense(GraphShape(2, 2), 2, {1, 2, 2, 2});
    CHECK_THROWS_AS(extract_quotient(bad), NotPerfect);
}

TEST_CASE("verify full") {
    auto f = flaass_standard(mds2_coloring(1, 3, 1).coloring, 1, 0);
    CHECK(verify_full(f, QuotientMatrix(2, {0, 8, 1, 7})).pass());
    auto rep = verify_full(f, QuotientMatrix(2, {1, 7, 1, 7}));
    CHECK_FALSE(rep.pass());
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(f.evaluate(rep.violations.front().vertex) == 1);
    auto g = splitI_base(mds2_coloring(1, 3, 1).coloring);
    CHECK(verify_full(g, predicted_quotient(*g.recipe())).pass());
}

TEST_CASE("verify sampled") {
    auto f = materialize(hamming_perfect_coloring(2, 3).coloring);
    const auto S = QuotientMatrix(2, {0, 8, 1, 7});
    auto a = verify_sampled(f, S, 500, 9), b = verify_sampled(f, S, 500, 9);
    CHECK(a.pass());
    CHECK(a.checked == 500);
    CHECK(sample_vertices(f.shape(), 50, 3) == sample_vertices(f.shape(), 50, 3));
    CHECK(sample_vertices(f.shape(), 50, 3) != sample_vertices(f.shape(), 50, 4));
    // plant one defect; with many samples every vertex is drawn
    std::vector<Color> t(f.dense().begin(), f.dense().end());
    t[40] = static_cast<Color>(3 - t[40]);
    auto broken = from_dense(f.shape(), 2, t);
    CHECK_FALSE(verify_sampled(broken, S, 5000, 1).pass());
    CHECK_FALSE(verify_full(broken, S).pass());
}

TEST_CASE("sampling beyond 64-bit ranks") {
    const GraphShape s(50, 3);
    auto v = sample_vertices(s, 20, 0);
    CHECK(v.size() == 20);
    for (const auto& x : v) CHECK_NOTHROW(check_vertex(s, x));
}

TEST_CASE("weight distribution") {
    auto W = weight_distribution_recurrence(QuotientMatrix(2, {0, 8, 1, 7}), 1, GraphShape(4, 3));
    CHECK(as_long(W) == std::vector<std::vector<long>>{{1, 0, 0, 8, 0}, {0, 8, 24, 24, 16}});
    auto code = hamming_perfect_coloring(2, 3).coloring;
    CHECK(as_long(weight_distribution_bruteforce(code, Vertex{0, 0, 0, 0})) == oracle::weights(code, {0, 0, 0, 0}));
    auto one = weight_distribution_recurrence(QuotientMatrix(2, {0, 2, 1, 1}), 1, GraphShape(1, 3));
    CHECK(as_long(one) == std::vector<std::vector<long>>{{1, 0}, {0, 2}});
    auto all = weight_distribution_recurrence(QuotientMatrix(1, {8}), 1, GraphShape(4, 3));
    for (int j = 0; j <= 4; ++j) CHECK(all.W[0][static_cast<std::size_t>(j)] == sphere_size(GraphShape(4, 3), j));
    CHECK_THROWS_AS(weight_distribution_recurrence(QuotientMatrix(2, {1, 7, 3, 5}), 1, GraphShape(4, 3)), Infeasible);
}

TEST_CASE("recurrence agrees with brute force from every origin") {
    const char* recipes[] = {"(flaass-std :t1 0 :t2 2 (mds2 :n 1 :q 3))", "(perfect :r 2 :q 3 :t 2)",
                             "(splitII :p 2 :t 1 (faces :color 2 :dim 1 (perfect :r 2 :q 2)))",
                             "(mult-length :t 2 (mds2 :n 1 :q 4 :t 1))"};
    for (const char* text : recipes) {
        CAPTURE(text);
        auto c = build(parse_recipe(text));
        const auto S = predicted_quotient(*c.recipe());
        for (const auto& o : oracle::all_words(c.shape().n, c.shape().q)) {
            const auto want = oracle::weights(c, o);
            auto rec = weight_distribution_recurrence(S, c.evaluate(oracle::sym(o)), c.shape());
            REQUIRE(as_long(rec) == want);
        }
    }
}

TEST_CASE("face balance") {
    auto code = hamming_perfect_coloring(2, 3).coloring;
    auto rep = face_balance_check(code);
    CHECK(rep.pass());
    auto bad = from_dense(GraphShape(2, 2), 2, {1, 2, 2, 2});
    CHECK_THROWS_AS(face_balance_check(bad), NotPerfect);
}
