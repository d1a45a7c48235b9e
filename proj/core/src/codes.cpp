#include "hpc/codes.hpp"

#include <map>
#include <mutex>

#include "hpc/errors.hpp"
#include "hpc/rng.hpp"

namespace hpc {

std::string_view to_string(CodeKind k) noexcept {
    switch (k) {
        case CodeKind::perfect: return "perfect";
        case CodeKind::tfold_perfect: return "tfold_perfect";
        case CodeKind::mds2: return "mds2";
        case CodeKind::tfold_mds: return "tfold_mds";
        case CodeKind::mds3: return "mds3";
    }
    return "?";
}

HammingCode::HammingCode(int r, int q) : r_(r), q_(q) {
    if (r < 1) throw ParameterError("Hamming code needs r >= 1");
    GraphShape(1, q);  // validates q
    std::uint64_t qr = 1;
    for (int i = 0; i < r; ++i) {
        qr *= static_cast<std::uint64_t>(q);
        if (qr > (1u << 24)) throw ParameterError("Hamming code syndrome space too large");
    }
    syndromes_ = static_cast<std::uint32_t>(qr);
    n_ = static_cast<int>((qr - 1) / static_cast<std::uint64_t>(q - 1));
    if (r == 1) {
        columns_ = {1};
        for (int a = 0; a < q; ++a) contrib_.push_back(static_cast<std::uint32_t>(a));
        return;
    }
    field_ = std::make_shared<FiniteField>(FiniteField::of_order(q));
    const auto& F = *field_;
    auto digit = [&](std::uint32_t label, int j) {  // j = 0 is most significant
        for (int k = r - 1; k > j; --k) label /= static_cast<std::uint32_t>(q);
        return label % static_cast<std::uint32_t>(q);
    };
    for (std::uint32_t label = 1; label < syndromes_; ++label) {
        int j = 0;
        while (digit(label, j) == 0) ++j;
        if (digit(label, j) == 1) columns_.push_back(label);
    }
    contrib_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(q), 0);
    for (int i = 0; i < n_; ++i)
        for (int a = 0; a < q; ++a) {
            std::uint32_t v = 0;
            for (int j = 0; j < r; ++j) v = v * static_cast<std::uint32_t>(q) + F.mul(static_cast<std::uint32_t>(a), digit(columns_[i], j));
            contrib_[static_cast<std::size_t>(i * q + a)] = v;
        }
    add_.assign(static_cast<std::size_t>(q) * static_cast<std::size_t>(q), 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) add_[static_cast<std::size_t>(a * q + b)] = F.add(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
}

std::uint32_t HammingCode::add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (r_ == 1) return (a + b) % static_cast<std::uint32_t>(q_);
    const auto q = static_cast<std::uint32_t>(q_);
    std::uint32_t out = 0, scale = 1;
    for (int j = 0; j < r_; ++j) {
        out += add_[(a % q) * q + b % q] * scale;
        a /= q;
        b /= q;
        scale *= q;
    }
    return out;
}

std::uint32_t HammingCode::contribution(int i, Symbol a) const noexcept {
    return contrib_[static_cast<std::size_t>(i * q_ + a)];
}

std::uint32_t HammingCode::syndrome(std::span<const Symbol> x) const {
    if (static_cast<int>(x.size()) != n_) throw MalformedVertex("syndrome of a vertex with the wrong length");
    std::uint32_t s = 0;
    for (int i = 0; i < n_; ++i)
        if (x[i]) s = add(s, contrib_[static_cast<std::size_t>(i * q_ + x[i])]);
    return s;
}

CodeColoring tfold_perfect_coloring(int t, int r, int q) {
    if (r >= 2 && !prime_power(q)) throw Unsupported("perfect codes need a prime-power q; q=" + std::to_string(q));
    auto code = std::make_shared<const HammingCode>(r, q);
    if (t < 1 || static_cast<std::uint32_t>(t) >= code->syndrome_count())
        throw ParameterError("t=" + std::to_string(t) + " outside 1.." + std::to_string(code->syndrome_count() - 1));
    const GraphShape shape(code->length(), q);
    auto member = std::make_shared<std::vector<bool>>(code->syndrome_count(), false);
    int found = 0;
    Vertex v(static_cast<std::size_t>(shape.n));
    do {
        const auto s = code->syndrome(v);
        if (!(*member)[s]) {
            (*member)[s] = true;
            ++found;
        }
    } while (found < t && increment(v.coords(), q));
    Coloring c(shape, 2,
               [code, member](std::span<const Symbol> x) { return static_cast<Color>((*member)[code->syndrome(x)] ? 1 : 2); },
               recipe::perfect(r, q, t));
    return {std::move(c), t == 1 ? CodeKind::perfect : CodeKind::tfold_perfect, t, r};
}

CodeColoring hamming_perfect_coloring(int r, int q) { return tfold_perfect_coloring(1, r, q); }

CodeColoring mds2_coloring(int n, int q, int t) {
    if (n < 1) throw ParameterError("mds2 needs n >= 1");
    if (t < 1 || t > q - 1) throw ParameterError("mds2 needs 1 <= t <= q-1");
    const GraphShape shape(n, q);
    Coloring c(shape, 2,
               [q, t](std::span<const Symbol> x) {
                   unsigned s = 0;
                   for (Symbol a : x) s += a;
                   return static_cast<Color>(s % static_cast<unsigned>(q) < static_cast<unsigned>(t) ? 1 : 2);
               },
               recipe::mds2(n, q, t));
    return {std::move(c), t == 1 ? CodeKind::mds2 : CodeKind::tfold_mds, t, 0};
}

Symbol MdsPartition::block_of(std::span<const Symbol> x) const { return (*block)[rank(shape(), x)]; }

Symbol MdsPartition::sub_of(std::span<const Symbol> x) const {
    if (!sub) throw ParameterError("partition has no refinement");
    return (*sub)[rank(shape(), x)];
}

CodeColoring MdsPartition::block_code(int i) const {
    if (i < 0 || i >= q) throw ParameterError("block index out of range");
    auto self = *this;
    Coloring c(shape(), 2, [self, i](std::span<const Symbol> x) {
        std::uint64_t r = 0;
        for (std::size_t k = x.size(); k-- > 0;) r = r * static_cast<std::uint64_t>(self.q) + x[k];
        return static_cast<Color>(self.block_at(r) == i ? 1 : 2);
    });
    return {std::move(c), CodeKind::mds2, 1, 0};
}

CodeColoring MdsPartition::refinement_code(int i, int j) const {
    if (!sub) throw ParameterError("partition has no refinement");
    if (i < 0 || i >= q || j < 0 || j >= q) throw ParameterError("refinement index out of range");
    auto self = *this;
    Coloring c(shape(), 2, [self, i, j](std::span<const Symbol> x) {
        std::uint64_t r = 0;
        for (std::size_t k = x.size(); k-- > 0;) r = r * static_cast<std::uint64_t>(self.q) + x[k];
        return static_cast<Color>(self.block_at(r) == i && self.sub_at(r) == j ? 1 : 2);
    });
    return {std::move(c), CodeKind::mds3, 1, 0};
}

bool hqq_supported(int q) noexcept {
    if (q < 2 || q > 8 || !prime_power(q)) return false;
    return true;  // 8^8 = 2^24 is the largest table
}

namespace {

MdsPartition build_hqq(int q) {
    // C: Hamming code with r = 2 in H(q+1,q). M = C with the last coordinate
    // dropped, L_j = codewords ending in j; M^i and L^i_j shift the first
    // coordinate by i (mod q).
    const HammingCode code(2, q);
    const auto nsyn = code.syndrome_count();
    std::vector<int> last_of(nsyn, -1);  // s -> j with s + j*col_q = 0
    for (int j = 0; j < q; ++j) {
        const auto cj = code.contribution(q, static_cast<Symbol>(j));
        for (std::uint32_t s = 0; s < nsyn; ++s)
            if (code.add(s, cj) == 0) last_of[s] = j;
    }
    const GraphShape shape(q, q);
    const std::uint64_t total = shape.size();
    auto block = std::make_shared<std::vector<Symbol>>(total);
    auto sub = std::make_shared<std::vector<Symbol>>(total);
    Vertex x(static_cast<std::size_t>(q));
    std::uint64_t r = 0;
    do {
        std::uint32_t rest = 0;
        for (int i = 1; i < q; ++i)
            if (x[i]) rest = code.add(rest, code.contribution(i, x[i]));
        int hits = 0;
        for (int i = 0; i < q; ++i) {
            const auto x0 = static_cast<Symbol>((x[0] + q - i) % q);
            const int j = last_of[code.add(rest, code.contribution(0, x0))];
            if (j >= 0) {
                (*block)[r] = static_cast<Symbol>(i);
                (*sub)[r] = static_cast<Symbol>(j);
                ++hits;
            }
        }
        if (hits != 1) throw Error("H(q,q) decomposition is not a partition at " + to_string(x.coords()));
        ++r;
    } while (increment(x.coords(), q));
    return {q, q, std::move(block), std::move(sub)};
}

}  // namespace

std::shared_ptr<const MdsPartition> hqq_decomposition(int q) {
    if (!hqq_supported(q))
        throw Unsupported("no H(q,q) decomposition for q=" + std::to_string(q) +
                          " (needs a prime power with q^q <= 2^24)");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const MdsPartition>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[q];
    if (!slot) slot = std::make_shared<const MdsPartition>(build_hqq(q));
    return slot;
}

MdsPartition zero_sum_partition(int m, int q) {
    const GraphShape shape(m, q);
    auto block = std::make_shared<std::vector<Symbol>>(shape.size());
    Vertex x(static_cast<std::size_t>(m));
    std::uint64_t r = 0;
    do {
        unsigned s = 0;
        for (Symbol a : x) s += a;
        (*block)[r++] = static_cast<Symbol>(s % static_cast<unsigned>(q));
    } while (increment(x.coords(), q));
    return {m, q, std::move(block), nullptr};
}

Quasigroup quasigroup_from_mds_partition(const MdsPartition& partition) {
    if (!partition.block || partition.block->size() != partition.shape().size())
        throw ParameterError("partition table does not cover H(m,q)");
    auto qg = Quasigroup::from_table(partition.m, partition.q, partition.block);
    const auto rep = validate_quasigroup(qg, partition.shape().size());
    if (!rep.pass())
        throw ParameterError("blocks are not disjoint distance-2 MDS codes: line through " +
                             to_string(rep.violations.front().line_base.coords()) + " in direction " +
                             std::to_string(rep.violations.front().direction) + " is not Latin");
    return qg;
}

namespace {

// Count code vertices in the structure anchored at v; returns expected count.
struct Checker {
    const CodeColoring& code;
    GraphShape shape;

    int expected() const {
        return code.kind == CodeKind::mds3 ? 1 : code.multiplicity;
    }

    // Returns false with detail on the first failing structure anchored at v.
    bool check_at(Vertex& v, std::string& detail, std::uint64_t& checked) const {
        const auto& c = code.coloring;
        const int q = shape.q;
        switch (code.kind) {
            case CodeKind::perfect:
            case CodeKind::tfold_perfect: {
                int cnt = c(v) == 1;
                for (int i = 0; i < shape.n; ++i) {
                    const Symbol o = v[i];
                    for (int s = 0; s < q; ++s) {
                        if (s == o) continue;
                        v[i] = static_cast<Symbol>(s);
                        cnt += c(v) == 1;
                    }
                    v[i] = o;
                }
                ++checked;
                if (cnt != expected()) {
                    detail = "ball around " + to_string(v.coords()) + " holds " + std::to_string(cnt) + " codewords";
                    return false;
                }
                return true;
            }
            case CodeKind::mds2:
            case CodeKind::tfold_mds: {
                for (int i = 0; i < shape.n; ++i) {
                    if (v[i] != 0) continue;
                    int cnt = 0;
                    for (int s = 0; s < q; ++s) {
                        v[i] = static_cast<Symbol>(s);
                        cnt += c(v) == 1;
                    }
                    v[i] = 0;
                    ++checked;
                    if (cnt != expected()) {
                        detail = "line through " + to_string(v.coords()) + " in direction " + std::to_string(i) +
                                 " holds " + std::to_string(cnt) + " codewords";
                        return false;
                    }
                }
                return true;
            }
            case CodeKind::mds3: {
                for (int i = 0; i < shape.n; ++i)
                    for (int j = i + 1; j < shape.n; ++j) {
                        if (v[i] != 0 || v[j] != 0) continue;
                        int cnt = 0;
                        for (int a = 0; a < q; ++a)
                            for (int b = 0; b < q; ++b) {
                                v[i] = static_cast<Symbol>(a);
                                v[j] = static_cast<Symbol>(b);
                                cnt += c(v) == 1;
                            }
                        v[i] = v[j] = 0;
                        ++checked;
                        if (cnt != 1) {
                            detail = "2-face through " + to_string(v.coords()) + " in directions " + std::to_string(i) +
                                     "," + std::to_string(j) + " holds " + std::to_string(cnt) + " codewords";
                            return false;
                        }
                    }
                return true;
            }
        }
        return true;
    }
};

}  // namespace

CodeReport verify_code(const CodeColoring& code, std::uint64_t budget, std::uint64_t samples, std::uint64_t seed) {
    CodeReport rep;
    const GraphShape& shape = code.shape();
    Checker chk{code, shape};
    std::string detail;
    if (shape.fits_u64() && shape.size() <= budget) {
        CodeColoring dense{materialize(code.coloring, budget), code.kind, code.multiplicity, code.r};
        Checker dchk{dense, shape};
        Vertex v(static_cast<std::size_t>(shape.n));
        do {
            if (!dchk.check_at(v, detail, rep.checked)) {
                rep.witness = v;
                rep.detail = detail;
                return rep;
            }
        } while (increment(v.coords(), shape.q));
        return rep;
    }
    rep.exhaustive = false;
    rep.seed = seed;
    SplitMix64 rng(seed);
    Vertex v(static_cast<std::size_t>(shape.n));
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (auto& s : v.coords()) s = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(shape.q)));
        if (!chk.check_at(v, detail, rep.checked)) {
            rep.witness = v;
            rep.detail = detail;
            return rep;
        }
    }
    return rep;
}

}  // namespace hpc
