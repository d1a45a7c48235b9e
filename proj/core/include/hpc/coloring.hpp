#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hpc/hamming.hpp"
#include "hpc/quotient.hpp"
#include "hpc/recipe.hpp"

namespace hpc {

using Color = std::uint8_t;  // 1..k
using Directions = boost::container::small_vector<int, 8>;

// A partition of one color class into faces of equal dimension. directions()
// reports the free coordinates of the face through v; v must lie in the class.
struct FacePartition {
    Color color = 1;
    int dim = 0;
    std::function<void(std::span<const Symbol>, Directions&)> directions;

    Face face_of(std::span<const Symbol> v) const;
};

class Coloring {
public:
    using Evaluator = std::function<Color(std::span<const Symbol>)>;

    Coloring(GraphShape shape, int colors, Evaluator eval, RecipePtr recipe = nullptr);

    const GraphShape& shape() const noexcept { return shape_; }
    int colors() const noexcept { return k_; }
    const RecipePtr& recipe() const noexcept { return recipe_; }
    const FacePartition* witness() const noexcept { return witness_.get(); }
    std::shared_ptr<const FacePartition> witness_ptr() const noexcept { return witness_; }
    bool has_dense() const noexcept { return dense_ != nullptr; }
    std::span<const Color> dense() const noexcept;

    // Unchecked fast path; v must conform to shape().
    Color operator()(std::span<const Symbol> v) const;
    Color evaluate(std::span<const Symbol> v) const;
    Color at_rank(std::uint64_t r) const;

    Coloring with_recipe(RecipePtr r) const;
    Coloring with_witness(std::shared_ptr<const FacePartition> w) const;
    Coloring with_dense(std::shared_ptr<const std::vector<Color>> table) const;

private:
    GraphShape shape_;
    int k_;
    Evaluator eval_;
    RecipePtr recipe_;
    std::shared_ptr<const std::vector<Color>> dense_;
    std::shared_ptr<const FacePartition> witness_;
};

// HPC_BUDGET if set, else 2^24 vertices.
std::uint64_t default_budget();
void check_budget(const GraphShape& shape, std::uint64_t budget);

Coloring materialize(const Coloring& c, std::uint64_t budget = default_budget());
Coloring from_dense(GraphShape shape, int k, std::vector<Color> table);

// Predicted from the recipe when there is one, extracted otherwise.
QuotientMatrix quotient_of(const Coloring& c);

Coloring complement(const Coloring& c);
// Swap colors so that b >= c; ties keep the original orientation.
Coloring swap_to_canonical(const Coloring& c);

}  // namespace hpc
