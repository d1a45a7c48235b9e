#include "hpc/constructions.hpp"

#include <boost/container/small_vector.hpp>

#include "hpc/errors.hpp"

namespace hpc {

namespace {

// small_vector iterators are not contiguous_iterator in this Boost, so spans
// need an explicit conversion.
struct Buf : boost::container::small_vector<Symbol, 64> {
    using small_vector::small_vector;
    operator std::span<const Symbol>() const noexcept { return {data(), size()}; }
};

RecipeInfo info_of(const Coloring& f) {
    RecipeInfo info{f.shape(), quotient_of(f), std::nullopt};
    if (const auto* w = f.witness()) info.witness = WitnessInfo{w->color, w->dim};
    return info;
}

// node with f's recipe as its only child, or null when f has none or the
// composed recipe does not describe the result (e.g. an ad-hoc witness).
RecipePtr compose(const RecipePtr& node, const Coloring& f) {
    if (!f.recipe()) return nullptr;
    auto r = std::make_shared<Recipe>(*node);
    r->children = {f.recipe()};
    try {
        analyze(*r);
    } catch (const RecipeError&) {
        return nullptr;
    }
    return r;
}

std::uint64_t block_rank(std::span<const Symbol> y, int block, int q) {
    std::uint64_t r = 0;
    for (int j = q - 1; j >= 0; --j) r = r * static_cast<std::uint64_t>(q) + y[static_cast<std::size_t>(block * q + j)];
    return r;
}

std::vector<Coloring> mode1_fillers(int q, int m, int t, int l) {
    std::vector<Coloring> g;
    for (int i = 1; i <= q; ++i) g.push_back(mds_fold(m, q, i, t));
    g.push_back(solid(m, q, static_cast<Color>(l)));
    return g;
}

std::vector<Coloring> mode2_fillers(int q, int m, int t1, int t2) {
    std::vector<Coloring> g;
    for (int i = 1; i <= q; ++i) g.push_back(mds_fold(m, q, i, t1));
    for (int i = 1; i <= q; ++i) g.push_back(mds_fold(m, q, i, t2));
    return g;
}

std::shared_ptr<const MdsPartition> partition_for(int q, const std::string& who) {
    try {
        return hqq_decomposition(q);
    } catch (const Unsupported& e) {
        throw RecipeError(who, e.what());
    }
}

Coloring splitI_faces_impl(const Coloring& f, std::shared_ptr<const MdsPartition> part, FacesVariant variant,
                           std::shared_ptr<const Quasigroup> R) {
    const int n = f.shape().n, q = f.shape().q;
    auto fw = f.witness_ptr();
    Coloring::Evaluator eval = [f, part, variant, R, fw, n, q](std::span<const Symbol> y) -> Color {
        Buf X(static_cast<std::size_t>(n)), J(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto r = block_rank(y, i, q);
            X[i] = part->block_at(r);
            J[i] = part->sub_at(r);
        }
        if (f(X) != 1) return static_cast<Color>(q + 1);
        Directions dirs;
        fw->directions(X, dirs);
        if (variant == FacesVariant::prime) {
            for (int d : dirs) J[static_cast<std::size_t>(d)] = X[static_cast<std::size_t>(d)];
            return static_cast<Color>((*R)(J) + 1);
        }
        Buf rest;
        std::size_t next = 0;
        std::sort(dirs.begin(), dirs.end());
        for (int i = 0; i < n; ++i) {
            if (next < dirs.size() && dirs[next] == i) {
                ++next;
                continue;
            }
            rest.push_back(J[i]);
        }
        return static_cast<Color>((*R)(rest) + 1);
    };
    return Coloring(GraphShape(q * n, q), q + 1, std::move(eval));
}

Coloring splitI_base_impl(const Coloring& f, std::shared_ptr<const MdsPartition> part, std::shared_ptr<const Quasigroup> R) {
    const int n = f.shape().n, q = f.shape().q;
    Coloring::Evaluator eval = [f, part, R, n, q](std::span<const Symbol> y) -> Color {
        Buf X(static_cast<std::size_t>(n)), J(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto r = block_rank(y, i, q);
            X[i] = part->block_at(r);
            J[i] = part->sub_at(r);
        }
        return static_cast<Color>(q * (f(X) - 1) + (*R)(J) + 1);
    };
    return Coloring(GraphShape(q * n, q), 2 * q, std::move(eval));
}

void check_partition(const Coloring& f, const MdsPartition& part) {
    if (part.q != f.shape().q || part.m != f.shape().q || !part.refined())
        throw ParameterError("splitting needs a refined decomposition of H(q,q) for q=" + std::to_string(f.shape().q));
}

}  // namespace

Coloring extend_dimension(const Coloring& f, int t) {
    auto node = recipe::extend(t, nullptr);
    const auto out = analyze_step(*node, info_of(f));
    const int n = f.shape().n;
    Coloring res(out.shape, f.colors(), [f, n](std::span<const Symbol> y) { return f(y.first(static_cast<std::size_t>(n))); },
                 compose(node, f));
    if (const auto w = f.witness_ptr()) {
        auto fp = std::make_shared<FacePartition>();
        fp->color = w->color;
        fp->dim = w->dim + t;
        fp->directions = [w, n, t](std::span<const Symbol> y, Directions& d) {
            w->directions(y.first(static_cast<std::size_t>(n)), d);
            for (int i = 0; i < t; ++i) d.push_back(n + i);
        };
        res = res.with_witness(std::move(fp));
    }
    return res;
}

Coloring multiply_length(const Coloring& f, int t) {
    auto node = recipe::mult_length(t, nullptr);
    const auto out = analyze_step(*node, info_of(f));
    const int n = f.shape().n, q = f.shape().q;
    return Coloring(out.shape, f.colors(),
                    [f, n, q, t](std::span<const Symbol> y) {
                        Buf x(static_cast<std::size_t>(n));
                        for (int i = 0; i < n; ++i) {
                            unsigned s = 0;
                            for (int j = 0; j < t; ++j) s += y[static_cast<std::size_t>(i * t + j)];
                            x[i] = static_cast<Symbol>(s % static_cast<unsigned>(q));
                        }
                        return f(x);
                    },
                    compose(node, f));
}

Coloring multiply_alphabet(const Coloring& f, int p) {
    auto node = recipe::mult_alphabet(p, nullptr);
    const auto out = analyze_step(*node, info_of(f));
    const int q = f.shape().q;
    return Coloring(out.shape, f.colors(),
                    [f, q](std::span<const Symbol> y) {
                        Buf x(y.begin(), y.end());
                        for (auto& s : x) s = static_cast<Symbol>(s % q);
                        return f(x);
                    },
                    compose(node, f));
}

Coloring mds_fold(int m, int q, int start, int t) {
    if (start < 1 || start > q) throw ParameterError("block index must lie in 1..q");
    if (t < 0 || t > q) throw ParameterError("fold multiplicity must lie in 0..q");
    const GraphShape shape(m, q);
    if (m == 0) {
        const Color col = start <= t ? 1 : 2;
        return Coloring(shape, 2, [col](std::span<const Symbol>) { return col; });
    }
    return Coloring(shape, 2, [q, start, t](std::span<const Symbol> y) {
        unsigned s = 0;
        for (Symbol a : y) s += a;
        const unsigned shifted = (s + static_cast<unsigned>(q) * 256u - static_cast<unsigned>(start - 1)) % static_cast<unsigned>(q);
        return static_cast<Color>(shifted < static_cast<unsigned>(t) ? 1 : 2);
    });
}

Coloring solid(int m, int q, Color color) {
    if (color != 1 && color != 2) throw ParameterError("solid filler color must be 1 or 2");
    return Coloring(GraphShape(m, q), 2, [color](std::span<const Symbol>) { return color; });
}

Coloring invasion(const Coloring& f, const std::vector<Coloring>& fillers) {
    if (static_cast<int>(fillers.size()) != f.colors())
        throw ParameterError("invasion needs one filler per color of f");
    const GraphShape inner = fillers.front().shape();
    for (const auto& g : fillers)
        if (!(g.shape() == inner) || g.colors() != 2) throw ParameterError("invasion fillers must be 2-colorings of one shape");
    if (inner.q != f.shape().q) throw ParameterError("invasion fillers must share the alphabet of f");
    const auto n = static_cast<std::size_t>(f.shape().n);
    auto gs = std::make_shared<const std::vector<Coloring>>(fillers);
    return Coloring(GraphShape(f.shape().n + inner.n, inner.q), 2, [f, gs, n](std::span<const Symbol> y) {
        return (*gs)[static_cast<std::size_t>(f(y.first(n)) - 1)](y.subspan(n));
    });
}

Coloring invasion_mode1(const Coloring& f, int t, int l) {
    auto node = recipe::invasion1(t, l, nullptr);
    const auto out = analyze_step(*node, info_of(f));
    const int m = out.shape.n - f.shape().n;
    return invasion(f, mode1_fillers(f.shape().q, m, t, l)).with_recipe(compose(node, f));
}

Coloring invasion_mode2(const Coloring& f, int t1, int t2) {
    auto node = recipe::invasion2(t1, t2, nullptr);
    const auto out = analyze_step(*node, info_of(f));
    const int m = out.shape.n - f.shape().n;
    return invasion(f, mode2_fillers(f.shape().q, m, t1, t2)).with_recipe(compose(node, f));
}

Coloring splitI_base(const Coloring& f, const MdsPartition& partition, const Quasigroup& R) {
    if (f.colors() != 2) throw ParameterError("splitI_base needs a 2-coloring");
    check_partition(f, partition);
    if (R.arity() != f.shape().n || R.order() != f.shape().q) throw ParameterError("quasigroup must have arity n and order q");
    return splitI_base_impl(f, std::make_shared<MdsPartition>(partition), std::make_shared<Quasigroup>(R));
}

Coloring splitI_base(const Coloring& f, std::uint64_t seed) {
    auto node = recipe::splitI_base(seed, nullptr);
    analyze_step(*node, info_of(f));
    const int q = f.shape().q;
    auto R = std::make_shared<Quasigroup>(Quasigroup::iterated_sum(f.shape().n, q, seed));
    return splitI_base_impl(f, partition_for(q, "splitI-base"), R).with_recipe(compose(node, f));
}

Coloring splitI_faces(const Coloring& f, const MdsPartition& partition, FacesVariant variant, const Quasigroup& R) {
    if (f.colors() != 2) throw ParameterError("splitI_faces needs a 2-coloring");
    if (!f.witness() || f.witness()->color != 1) throw ParameterError("splitI_faces needs a face partition of color 1");
    check_partition(f, partition);
    const int want = variant == FacesVariant::prime ? f.shape().n : f.shape().n - f.witness()->dim;
    if (R.arity() != want || R.order() != f.shape().q) throw ParameterError("quasigroup has the wrong arity or order");
    return splitI_faces_impl(f, std::make_shared<MdsPartition>(partition), variant, std::make_shared<Quasigroup>(R));
}

Coloring splitI_faces(const Coloring& f, FacesVariant variant, std::uint64_t seed) {
    auto node = recipe::splitI_faces(variant == FacesVariant::prime ? "prime" : "doubleprime", seed, nullptr);
    analyze_step(*node, info_of(f));
    if (!f.witness()) throw RecipeError("splitI-faces", "coloring carries no face partition");
    const int q = f.shape().q;
    const int arity = variant == FacesVariant::prime ? f.shape().n : f.shape().n - f.witness()->dim;
    auto R = std::make_shared<Quasigroup>(Quasigroup::iterated_sum(arity, q, seed));
    return splitI_faces_impl(f, partition_for(q, "splitI-faces"), variant, R).with_recipe(compose(node, f));
}

Coloring flaass_standard(const Coloring& f, int t1, int t2, std::uint64_t seed) {
    auto node = recipe::flaass_std(t1, t2, seed, nullptr);
    const auto out = analyze_step(*node, info_of(f));
    const int n = f.shape().n, q = f.shape().q;
    auto R = std::make_shared<Quasigroup>(Quasigroup::iterated_sum(n, q, seed));
    const Coloring g = splitI_base_impl(f, partition_for(q, "flaass-std"), R);
    const int m = out.shape.n - q * n;
    return invasion(g, mode2_fillers(q, m, t1, t2)).with_recipe(compose(node, f));
}

Coloring flaass_improved(const Coloring& f, int variant, int t, std::uint64_t seed) {
    auto node = recipe::flaass_impr(variant, t, seed, nullptr);
    const auto out = analyze_step(*node, info_of(f));
    const int n = f.shape().n, q = f.shape().q;
    const int k = f.witness()->dim;
    const auto fv = variant == 1 ? FacesVariant::prime : FacesVariant::doubleprime;
    auto R = std::make_shared<Quasigroup>(Quasigroup::iterated_sum(variant == 1 ? n : n - k, q, seed));
    auto part = partition_for(q, "flaass-impr");
    const Coloring g = splitI_faces_impl(f, part, fv, R);
    const int m = out.shape.n - q * n;
    Coloring h = invasion(g, mode1_fillers(q, m, t, 2)).with_recipe(compose(node, f));
    if (variant == 2) {
        // Color 1 sits over f's color 1; its faces span whole blocks of the special directions.
        auto fw = f.witness_ptr();
        auto fp = std::make_shared<FacePartition>();
        fp->color = 1;
        fp->dim = k * q;
        fp->directions = [fw, part, n, q](std::span<const Symbol> y, Directions& d) {
            Buf X(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) X[i] = part->block_at(block_rank(y, i, q));
            Directions inner;
            fw->directions(X, inner);
            std::sort(inner.begin(), inner.end());
            for (int i : inner)
                for (int j = 0; j < q; ++j) d.push_back(i * q + j);
        };
        h = h.with_witness(std::move(fp));
    }
    return h;
}

Coloring flaass_iterated(const Coloring& f, std::span<const int> ts, std::uint64_t seed) {
    if (ts.empty()) throw ParameterError("flaass_iterated needs at least one step");
    Coloring cur = f;
    for (int t : ts) cur = flaass_improved(cur, 2, t, seed);
    return cur;
}

Coloring split_II(const Coloring& base, int p, int t) {
    auto node = recipe::splitII(p, t, nullptr);
    const auto out = analyze_step(*node, info_of(base));
    const int q = base.shape().q, n = base.shape().n;
    auto bw = base.witness_ptr();
    Coloring h(out.shape, 2,
               [base, bw, q, n, p, t](std::span<const Symbol> y) -> Color {
                   Buf X(static_cast<std::size_t>(n));
                   for (int i = 0; i < n; ++i) X[i] = static_cast<Symbol>(y[i] % q);
                   if (base(X) == 1) return 1;
                   Directions d;
                   bw->directions(X, d);
                   const int special = d.front();
                   unsigned s = 0;
                   for (int i = 0; i < n; ++i)
                       if (i != special) s += y[i] / q;
                   return static_cast<Color>(s % static_cast<unsigned>(p) < static_cast<unsigned>(t) ? 1 : 2);
               },
               compose(node, base));
    auto fp = std::make_shared<FacePartition>();
    fp->color = 2;
    fp->dim = 1;
    fp->directions = [bw, q, n](std::span<const Symbol> y, Directions& d) {
        Buf X(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) X[i] = static_cast<Symbol>(y[i] % q);
        bw->directions(X, d);
    };
    return h.with_witness(std::move(fp));
}

namespace {

Coloring build_node(const RecipePtr& r) {
    const Recipe& node = *r;
    auto child = [&]() { return build_node(node.children.at(0)); };
    auto num = [&](const char* k) { return static_cast<int>(node.num(k)); };
    auto seed = [&]() { return static_cast<std::uint64_t>(node.num("seed")); };
    switch (node.kind) {
        case NodeKind::mds2: return mds2_coloring(num("n"), num("q"), num("t")).coloring;
        case NodeKind::perfect: return tfold_perfect_coloring(num("t"), num("r"), num("q")).coloring;
        case NodeKind::extend: return extend_dimension(child(), num("t"));
        case NodeKind::mult_length: return multiply_length(child(), num("t"));
        case NodeKind::mult_alphabet: return multiply_alphabet(child(), num("p"));
        case NodeKind::complement: return complement(child());
        case NodeKind::faces: return attach_faces(child(), num("color"), num("dim"));
        case NodeKind::splitI_base: return splitI_base(child(), seed());
        case NodeKind::splitI_faces:
            return splitI_faces(child(), node.sym("variant") == "prime" ? FacesVariant::prime : FacesVariant::doubleprime,
                                seed());
        case NodeKind::invasion:
            return num("mode") == 1 ? invasion_mode1(child(), num("t"), num("l"))
                                    : invasion_mode2(child(), num("t1"), num("t2"));
        case NodeKind::flaass_std: return flaass_standard(child(), num("t1"), num("t2"), seed());
        case NodeKind::flaass_impr: return flaass_improved(child(), num("variant"), num("t"), seed());
        case NodeKind::splitII: return split_II(child(), num("p"), num("t"));
    }
    throw RecipeError(std::string(node_name(node.kind)), "unknown node");
}

}  // namespace

Coloring build(const RecipePtr& r) {
    if (!r) throw ParameterError("null recipe");
    analyze(*r);  // reports the failing node path before any work
    return build_node(r).with_recipe(r);
}

}  // namespace hpc
