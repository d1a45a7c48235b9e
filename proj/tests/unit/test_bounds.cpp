#include <numeric>
#include <sstream>

#include "doctest.h"
#include "hpc/bounds.hpp"
#include "hpc/errors.hpp"
#include "oracles.hpp"

using namespace hpc;

TEST_CASE("reduced parameters") {
    auto p = Params2::make(3, 6, 3);
    CHECK(p.g == 3);
    CHECK(p.bp == 2);
    CHECK(p.cp == 1);
    CHECK_THROWS_AS(Params2::make(3, 0, 1), ParameterError);
    CHECK_THROWS_AS(Params2::make(1, 1, 1), ParameterError);
}

TEST_CASE("eigenvalue condition") {
    CHECK(eigenvalue_condition(3, 8, 1).pass);
    CHECK(eigenvalue_condition(3, 8, 1).i == 3);
    CHECK_FALSE(eigenvalue_condition(3, 7, 1).pass);
    CHECK(eigenvalue_condition(6, 7, 5).pass);
}

TEST_CASE("divisibility bound against a factorization oracle") {
    for (int q = 2; q <= 8; ++q)
        for (int s = q; s <= 60; s += q)
            for (int c = 1; 2 * c <= s; ++c) {
                const int b = s - c;
                const int g = std::gcd(b, c);
                const long red = s / g;
                bool foreign = false;
                for (long p : oracle::primes_of(red)) foreign |= q % p != 0;
                const auto v = divisibility_bound(q, b, c);
                CAPTURE(q);
                CAPTURE(b);
                CAPTURE(c);
                REQUIRE(v.admissible == !foreign);
                REQUIRE(v.admissible == oracle::divides_power(red, q));
                if (v.admissible) {
                    long x = 1;
                    int k = 0;
                    while (x % red != 0) x *= q, ++k;
                    REQUIRE(v.k == k);
                    REQUIRE(v.bound == s / q + k - 1);
                } else {
                    REQUIRE_FALSE(v.foreign_primes.empty());
                    for (long p : v.foreign_primes) REQUIRE(q % p != 0);
                }
            }
}

TEST_CASE("c = 1 condition") {
    CHECK(c1_condition(3, 8).pass);
    CHECK(c1_condition(3, 8).power == true);
    CHECK_FALSE(c1_condition(3, 7).pass);      // (q-1) does not divide b
    CHECK_FALSE(c1_condition(3, 14).pass);     // 15 is not a power of 3
    CHECK(c1_condition(6, 35).pass);           // no power test for q = 6
    CHECK_FALSE(c1_condition(6, 35).power.has_value());
}

TEST_CASE("binary fdf bound") {
    CHECK(fdf_bound(2, 3, 1) == 3);
    CHECK(fdf_bound(2, 5, 3) == 6);
    CHECK_FALSE(fdf_bound(2, 2, 2));
    CHECK_FALSE(fdf_bound(3, 8, 1));
}

TEST_CASE("lower bounds") {
    auto lb = lower_bound(3, 8, 1);
    CHECK(lb.admissible);
    CHECK(lb.degree == 4);
    CHECK(lb.divisibility == 4);
    CHECK(lb.value == 4);
    CHECK_FALSE(lower_bound(3, 7, 5).admissible);
    auto l6 = lower_bound(6, 7, 5);
    CHECK(l6.admissible);
    CHECK(l6.value == 3);
    CHECK(lower_bound(3, 14, 4).value == 8);
    CHECK(lower_bound(6, 35, 1).value == 8);
    CHECK(lower_bound(3, 14, 4, {}).value == 7);
    CHECK(lower_bound(6, 35, 1, {}).value == 7);
    CHECK(lower_bound(4, 21, 3).value == 7);
}

TEST_CASE("thresholds") {
    auto t = threshold_bounds_prime_power(3, 6, 3);
    CHECK(t.exact());
    CHECK(t.lb == 3);
    for (int c : {1, 2, 4}) {
        auto u = threshold_bounds_prime_power(3, 9 - c, c);
        CHECK(u.exact());
        CHECK(u.lb == 4);
    }
    CHECK_THROWS_AS(threshold_bounds_prime_power(6, 3, 3), ParameterError);
    CHECK_THROWS_AS(threshold_bounds_prime_power(3, 5, 1), ParameterError);
}

TEST_CASE("exception records") {
    CHECK(default_exceptions().size() == 2);
    std::istringstream in("# comment\n\n4 5 3 3 note\n");
    auto ex = parse_exceptions(in);
    REQUIRE(ex.size() == 1);
    CHECK(ex[0].q == 4);
    CHECK(ex[0].n == 3);
    CHECK(ex[0].citation == "note");
    std::istringstream bad("3 x 4 7\n");
    CHECK_THROWS(parse_exceptions(bad));
}

TEST_CASE("conjecture notes stay advisory") {
    auto lb = lower_bound(4, 21, 3);
    auto notes = conjecture_notes(4, 21, 3, lb.value);
    CHECK(lb.value == 7);
    CHECK(conjecture_notes(3, 2, 1, 1).empty());
    CHECK_FALSE(conjecture_notes(6, 7, 5, 3).empty());
    (void)notes;
}
