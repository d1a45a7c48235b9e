#include "hpc/coloring.hpp"

#include <cstdlib>
#include <string>

#include "hpc/analysis.hpp"
#include "hpc/errors.hpp"
#include "parallel.hpp"

namespace hpc {

Face FacePartition::face_of(std::span<const Symbol> v) const {
    Directions dirs;
    directions(v, dirs);
    Face f{Vertex(std::vector<Symbol>(v.begin(), v.end())), {}};
    for (int d : dirs) {
        f.free.push_back(d);
        f.base[static_cast<std::size_t>(d)] = 0;
    }
    return f;
}

Coloring::Coloring(GraphShape shape, int colors, Evaluator eval, RecipePtr recipe)
    : shape_(shape), k_(colors), eval_(std::move(eval)), recipe_(std::move(recipe)) {
    if (k_ < 1 || k_ > 255) throw ParameterError("number of colors must lie in 1..255");
    if (!eval_) throw ParameterError("coloring needs an evaluator");
}

std::span<const Color> Coloring::dense() const noexcept {
    if (!dense_) return {};
    return *dense_;
}

Color Coloring::operator()(std::span<const Symbol> v) const {
    if (dense_) {
        std::uint64_t r = 0;
        for (std::size_t i = v.size(); i-- > 0;) r = r * static_cast<std::uint64_t>(shape_.q) + v[i];
        return (*dense_)[r];
    }
    return eval_(v);
}

Color Coloring::evaluate(std::span<const Symbol> v) const {
    check_vertex(shape_, v);
    return (*this)(v);
}

Color Coloring::at_rank(std::uint64_t r) const {
    if (dense_) return (*dense_).at(r);
    const Vertex v = unrank(shape_, r);
    return eval_(v);
}

Coloring Coloring::with_recipe(RecipePtr r) const {
    Coloring c = *this;
    c.recipe_ = std::move(r);
    return c;
}

Coloring Coloring::with_witness(std::shared_ptr<const FacePartition> w) const {
    Coloring c = *this;
    c.witness_ = std::move(w);
    return c;
}

Coloring Coloring::with_dense(std::shared_ptr<const std::vector<Color>> table) const {
    if (table && table->size() != shape_.size()) throw ParameterError("dense table size does not match q^n");
    Coloring c = *this;
    c.dense_ = std::move(table);
    return c;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("HPC_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return std::uint64_t{1} << 24;
}

void check_budget(const GraphShape& shape, std::uint64_t budget) {
    if (!shape.fits_u64() || shape.size() > budget)
        throw BudgetExceeded(to_string(shape) + " has " + shape.vertex_count().str() +
                             " vertices, over the materialization budget of " + std::to_string(budget));
}

Coloring materialize(const Coloring& c, std::uint64_t budget) {
    if (c.has_dense()) return c;
    check_budget(c.shape(), budget);
    const GraphShape& s = c.shape();
    const std::uint64_t total = s.size();
    auto table = std::make_shared<std::vector<Color>>(total);
    detail::parallel_chunks(total, detail::worker_count(total), [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        if (begin >= end) return;
        Vertex v = unrank(s, begin);
        for (std::uint64_t r = begin; r < end; ++r) {
            const Color col = c(v);
            if (col < 1 || col > c.colors())
                throw Error("evaluator returned color " + std::to_string(col) + " outside 1.." +
                            std::to_string(c.colors()) + " at rank " + std::to_string(r));
            (*table)[r] = col;
            increment(v.coords(), s.q);
        }
    });
    return c.with_dense(std::move(table));
}

Coloring from_dense(GraphShape shape, int k, std::vector<Color> table) {
    if (table.size() != shape.size()) throw ParameterError("dense table size does not match q^n");
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i] < 1 || table[i] > k)
            throw ParameterError("dense table color " + std::to_string(table[i]) + " at rank " + std::to_string(i) +
                                 " outside 1.." + std::to_string(k));
    auto t = std::make_shared<const std::vector<Color>>(std::move(table));
    const int q = shape.q;
    Coloring c(shape, k, [t, q](std::span<const Symbol> v) {
        std::uint64_t r = 0;
        for (std::size_t i = v.size(); i-- > 0;) r = r * static_cast<std::uint64_t>(q) + v[i];
        return (*t)[r];
    });
    return c.with_dense(t);
}

QuotientMatrix quotient_of(const Coloring& c) {
    if (c.recipe()) return predicted_quotient(*c.recipe());
    return extract_quotient(c);
}

Coloring complement(const Coloring& c) {
    if (c.colors() != 2) throw ParameterError("complement needs a 2-coloring");
    auto inner = c;
    Coloring out(c.shape(), 2, [inner](std::span<const Symbol> v) { return static_cast<Color>(3 - inner(v)); },
                 c.recipe() ? recipe::complement(c.recipe()) : nullptr);
    if (c.has_dense()) {
        auto t = std::make_shared<std::vector<Color>>(c.dense().begin(), c.dense().end());
        for (auto& x : *t) x = static_cast<Color>(3 - x);
        out = out.with_dense(std::move(t));
    }
    if (const auto w = c.witness_ptr()) {
        auto fp = std::make_shared<FacePartition>(*w);
        fp->color = static_cast<Color>(3 - w->color);
        out = out.with_witness(std::move(fp));
    }
    return out;
}

Coloring swap_to_canonical(const Coloring& c) {
    if (c.colors() != 2) throw ParameterError("swap_to_canonical needs a 2-coloring");
    const QuotientMatrix m = quotient_of(c);
    if (m.b() >= m.c()) return c;
    return complement(c);
}

}  // namespace hpc
