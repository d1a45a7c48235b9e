#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hpc/algebra.hpp"
#include "hpc/codes.hpp"
#include "hpc/coloring.hpp"
#include "hpc/recipe.hpp"

namespace hpc {

// Covering constructions.
Coloring extend_dimension(const Coloring& f, int t);
Coloring multiply_length(const Coloring& f, int t);
Coloring multiply_alphabet(const Coloring& f, int p);

// G^start_t on H(m,q): the t-fold MDS code built from blocks start..start+t-1
// (cyclic) of the zero-sum partition. start is 1-based; m = 0 gives the
// one-vertex convention (color 1 iff start <= t).
Coloring mds_fold(int m, int q, int start, int t);
Coloring solid(int m, int q, Color color);

// h(x,y) = g_{f(x)}(y). Perfectness is the caller's business.
Coloring invasion(const Coloring& f, const std::vector<Coloring>& fillers);
Coloring invasion_mode1(const Coloring& f, int t, int l);
Coloring invasion_mode2(const Coloring& f, int t1, int t2);

Coloring splitI_base(const Coloring& f, const MdsPartition& partition, const Quasigroup& R);
Coloring splitI_base(const Coloring& f, std::uint64_t seed = 0);

enum class FacesVariant { prime, doubleprime };
Coloring splitI_faces(const Coloring& f, const MdsPartition& partition, FacesVariant variant, const Quasigroup& R);
Coloring splitI_faces(const Coloring& f, FacesVariant variant, std::uint64_t seed = 0);

Coloring flaass_standard(const Coloring& f, int t1, int t2, std::uint64_t seed = 0);
Coloring flaass_improved(const Coloring& f, int variant, int t, std::uint64_t seed = 0);
Coloring flaass_iterated(const Coloring& f, std::span<const int> ts, std::uint64_t seed = 0);

Coloring split_II(const Coloring& base, int p, int t);

// Face partitions.
std::shared_ptr<const FacePartition> point_partition(Color color);
std::shared_ptr<const FacePartition> edge_partition_binary(const Coloring& c, Color color);

struct LineSearchResult {
    enum class Outcome { found, not_found, timeout };
    Outcome outcome = Outcome::not_found;
    std::shared_ptr<const FacePartition> partition;
    std::uint64_t nodes = 0;
    std::uint64_t candidate_lines = 0;
};

LineSearchResult line_partition_search(const Coloring& c, Color color,
                                       std::chrono::milliseconds timeout = std::chrono::seconds(60));

// Attach a point, edge or line partition of `color`; throws NoPartition when
// none is found.
Coloring attach_faces(const Coloring& c, int color, int dim,
                      std::chrono::milliseconds timeout = std::chrono::seconds(60));

struct FaceReport {
    std::uint64_t faces = 0;
    std::string detail;  // empty on success
    bool pass() const noexcept { return detail.empty(); }
};

FaceReport validate_face_partition(const Coloring& c, const FacePartition& fp, std::uint64_t budget = default_budget());

// Interpret a recipe; the result carries the recipe.
Coloring build(const RecipePtr& r);

}  // namespace hpc
