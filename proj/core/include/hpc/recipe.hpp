#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hpc/hamming.hpp"
#include "hpc/quotient.hpp"

namespace hpc {

enum class NodeKind {
    mds2,
    perfect,
    extend,
    mult_length,
    mult_alphabet,
    complement,
    faces,
    splitI_base,
    splitI_faces,
    invasion,
    flaass_std,
    flaass_impr,
    splitII,
};

std::string_view node_name(NodeKind kind) noexcept;
std::optional<NodeKind> node_kind(std::string_view name) noexcept;

using ParamValue = std::variant<std::int64_t, std::string>;

struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

struct Recipe {
    NodeKind kind{};
    std::vector<std::pair<std::string, ParamValue>> params;
    std::vector<RecipePtr> children;

    bool has(std::string_view key) const noexcept;
    std::int64_t num(std::string_view key) const;
    std::string sym(std::string_view key) const;
    const Recipe& child(std::size_t i = 0) const { return *children.at(i); }
};

// Builders. Parameters are stored in the canonical order used by the printer.
namespace recipe {
RecipePtr mds2(int n, int q, int t);
RecipePtr perfect(int r, int q, int t);
RecipePtr extend(int t, RecipePtr child);
RecipePtr mult_length(int t, RecipePtr child);
RecipePtr mult_alphabet(int p, RecipePtr child);
RecipePtr complement(RecipePtr child);
RecipePtr faces(int color, int dim, RecipePtr child);
RecipePtr splitI_base(std::uint64_t seed, RecipePtr child);
RecipePtr splitI_faces(std::string_view variant, std::uint64_t seed, RecipePtr child);
RecipePtr invasion1(int t, int l, RecipePtr child);
RecipePtr invasion2(int t1, int t2, RecipePtr child);
RecipePtr flaass_std(int t1, int t2, std::uint64_t seed, RecipePtr child);
RecipePtr flaass_impr(int variant, int t, std::uint64_t seed, RecipePtr child);
RecipePtr splitII(int p, int t, RecipePtr child);
}  // namespace recipe

struct WitnessInfo {
    int color = 1;
    int dim = 0;
    friend bool operator==(const WitnessInfo&, const WitnessInfo&) = default;
};

struct RecipeInfo {
    GraphShape shape;
    QuotientMatrix quotient;
    std::optional<WitnessInfo> witness;  // a face partition the node guarantees
};

// Bottom-up symbolic evaluation; throws RecipeError naming the failing node.
RecipeInfo analyze(const Recipe& r);
QuotientMatrix predicted_quotient(const Recipe& r);
// One node's rule applied to an already-known child description; the node's
// own children are ignored.
RecipeInfo analyze_step(const Recipe& node, const std::optional<RecipeInfo>& child);

// Single-line canonical form; also the sort key for deterministic selection.
std::string to_string(const Recipe& r);
// One node per line, two-space indentation.
std::string to_pretty(const Recipe& r);
RecipePtr parse_recipe(std::string_view text);

}  // namespace hpc
