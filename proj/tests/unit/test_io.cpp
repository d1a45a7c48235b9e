#include <sstream>

#include "doctest.h"
#include "hpc/codes.hpp"
#include "hpc/constructions.hpp"
#include "hpc/errors.hpp"
#include "hpc/io.hpp"

using namespace hpc;

namespace {

void same(const Coloring& a, const Coloring& b) {
    REQUIRE(a.shape() == b.shape());
    REQUIRE(a.colors() == b.colors());
    auto ma = materialize(a), mb = materialize(b);
    CHECK(std::equal(ma.dense().begin(), ma.dense().end(), mb.dense().begin(), mb.dense().end()));
}

}  // namespace

TEST_CASE("round trips") {
    auto c = build(parse_recipe("(splitII :p 2 :t 1 (faces :color 2 :dim 1 (perfect :r 2 :q 2)))"));
    for (auto mode : {FileMode::dense, FileMode::dense_rle, FileMode::recipe}) {
        std::stringstream s;
        write_coloring(s, c, mode);
        same(c, read_coloring(s));
    }
    std::stringstream s;
    write_coloring(s, c, FileMode::dense_rle);
    CHECK(s.str().rfind("HPC1 3 4 2 DENSE RLE\n", 0) == 0);
}

TEST_CASE("recipe mode needs a recipe") {
    auto c = from_dense(GraphShape(1, 2), 2, {1, 2});
    std::stringstream s;
    CHECK_THROWS_AS(write_coloring(s, c, FileMode::recipe), ParameterError);
}

TEST_CASE("malformed files") {
    auto bad = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_coloring(in), IoError);
    };
    bad("");
    bad("HPC2 1 2 2 DENSE\n\x01\x02");
    bad("HPC1 1 2 2 SPARSE\n");
    bad("HPC1 1 2 2 DENSE\n\x01");
    bad("HPC1 1 2 2 DENSE\n\x01\x02\x02");
    bad("HPC1 1 2 2 DENSE\n\x01\x03");
    bad("HPC1 1 1 2 DENSE\n");
    bad(std::string("HPC1 1 2 2 DENSE RLE\n\x03\x00\x00\x00\x01", 26));
    bad("HPC1 2 3 2 RECIPE\n(mds2 :n 1 :q 3)\n");
}

TEST_CASE("matrix parsing") {
    CHECK(parse_matrix("[[0,8],[1,7]]") == QuotientMatrix(2, {0, 8, 1, 7}));
    CHECK(parse_matrix("0 8 1 7") == QuotientMatrix(2, {0, 8, 1, 7}));
    CHECK_THROWS_AS(parse_matrix("0 8 1"), IoError);
    CHECK_THROWS_AS(parse_matrix("[[0,x],[1,7]]"), IoError);
}
