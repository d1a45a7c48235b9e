#include "hpc/analysis.hpp"

#include <algorithm>
#include <limits>

#include "hpc/errors.hpp"
#include "hpc/rng.hpp"
#include "parallel.hpp"

namespace hpc {

namespace {

std::vector<std::uint64_t> powers_of(const GraphShape& s) {
    std::vector<std::uint64_t> p(static_cast<std::size_t>(s.n) + 1, 1);
    for (int i = 0; i < s.n; ++i) p[i + 1] = p[i] * static_cast<std::uint64_t>(s.q);
    return p;
}

// Neighbor color counts of the vertex at rank r with digits v, from a dense table.
void count_dense(std::span<const Color> table, const GraphShape& s, const std::vector<std::uint64_t>& pw,
                 std::uint64_t r, std::span<const Symbol> v, std::vector<std::int64_t>& counts) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int i = 0; i < s.n; ++i) {
        const std::uint64_t base = r - v[i] * pw[i];
        for (int a = 0; a < s.q; ++a) {
            if (a == v[i]) continue;
            ++counts[table[base + static_cast<std::uint64_t>(a) * pw[i]] - 1];
        }
    }
}

void count_lazy(const Coloring& c, Vertex& v, std::vector<std::int64_t>& counts) {
    std::fill(counts.begin(), counts.end(), 0);
    const int q = c.shape().q;
    for (int i = 0; i < c.shape().n; ++i) {
        const Symbol o = v[i];
        for (int a = 0; a < q; ++a) {
            if (a == o) continue;
            v[i] = static_cast<Symbol>(a);
            const Color col = c(v);
            if (col < 1 || col > c.colors()) throw Error("evaluator returned an out-of-range color");
            ++counts[col - 1];
        }
        v[i] = o;
    }
}

void check_expected(const Coloring& c, const QuotientMatrix& m) {
    if (m.k() != c.colors())
        throw ParameterError("expected matrix is " + std::to_string(m.k()) + "x" + std::to_string(m.k()) + " but the coloring has " +
                             std::to_string(c.colors()) + " colors");
    if (!m.nonnegative()) throw ParameterError("expected matrix has negative entries");
    const auto rs = m.row_sum();
    if (!rs || *rs != c.shape().degree())
        throw ParameterError("expected matrix rows must sum to n(q-1)=" + std::to_string(c.shape().degree()));
}

std::vector<std::int64_t> row_of(const QuotientMatrix& m, int i) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(m.k()));
    for (int j = 0; j < m.k(); ++j) r[j] = m.at(i, j);
    return r;
}

}  // namespace

QuotientMatrix extract_quotient(const Coloring& col, std::uint64_t budget) {
    const Coloring c = materialize(col, budget);
    const GraphShape& s = c.shape();
    const int k = c.colors();
    const auto pw = powers_of(s);
    const auto table = c.dense();
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(k));
    std::vector<std::uint64_t> first(static_cast<std::size_t>(k), 0);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(k));
    Vertex v(static_cast<std::size_t>(s.n));
    for (std::uint64_t r = 0; r < table.size(); ++r, increment(v.coords(), s.q)) {
        const Color me = table[r];
        count_dense(table, s, pw, r, v, counts);
        auto& row = rows[me - 1];
        if (row.empty()) {
            row = counts;
            first[me - 1] = r;
        } else if (row != counts) {
            throw NotPerfect(r, "not perfect: vertex " + to_string(v.coords()) + " (rank " + std::to_string(r) +
                                    ", color " + std::to_string(me) + ") has neighbor counts differing from rank " +
                                    std::to_string(first[me - 1]));
        }
    }
    std::vector<std::int64_t> entries;
    for (int i = 0; i < k; ++i) {
        if (rows[i].empty()) throw ParameterError("coloring is not surjective: color " + std::to_string(i + 1) + " is unused");
        entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    return QuotientMatrix(k, std::move(entries));
}

VerifyReport verify_full(const Coloring& col, const QuotientMatrix& expected, std::uint64_t budget) {
    check_expected(col, expected);
    const Coloring c = materialize(col, budget);
    const GraphShape& s = c.shape();
    const auto pw = powers_of(s);
    const auto table = c.dense();
    const std::uint64_t total = table.size();
    const unsigned chunks = detail::worker_count(total);
    std::vector<std::optional<Violation>> found(chunks);
    detail::parallel_chunks(total, chunks, [&](unsigned ch, std::uint64_t begin, std::uint64_t end) {
        if (begin >= end) return;
        std::vector<std::int64_t> counts(static_cast<std::size_t>(c.colors()));
        Vertex v = unrank(s, begin);
        for (std::uint64_t r = begin; r < end; ++r, increment(v.coords(), s.q)) {
            const Color me = table[r];
            count_dense(table, s, pw, r, v, counts);
            bool ok = true;
            for (int j = 0; j < c.colors(); ++j) ok = ok && counts[j] == expected.at(me - 1, j);
            if (!ok) {
                found[ch] = Violation{r, v, me, row_of(expected, me - 1), counts};
                return;
            }
        }
    });
    VerifyReport rep;
    rep.mode = VerifyReport::Mode::full;
    rep.matrix = expected;
    rep.checked = total;
    for (auto& f : found)
        if (f) {
            rep.violations.push_back(std::move(*f));
            break;  // chunks are in rank order: the first hit is the smallest rank
        }
    return rep;
}

std::vector<Vertex> sample_vertices(const GraphShape& shape, std::uint64_t samples, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Vertex> out;
    out.reserve(samples);
    const bool by_rank = shape.fits_u64();
    const std::uint64_t total = by_rank ? shape.size() : 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        if (by_rank) {
            out.push_back(unrank(shape, rng.below(total)));
        } else {
            Vertex v(static_cast<std::size_t>(shape.n));
            for (auto& s : v.coords()) s = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(shape.q)));
            out.push_back(std::move(v));
        }
    }
    return out;
}

VerifyReport verify_sampled(const Coloring& c, const QuotientMatrix& expected, std::uint64_t samples,
                            std::uint64_t seed) {
    if (samples < 1) throw ParameterError("sampled verification needs at least one sample");
    check_expected(c, expected);
    const GraphShape& s = c.shape();
    const auto pts = sample_vertices(s, samples, seed);
    const unsigned chunks = detail::worker_count(samples * static_cast<std::uint64_t>(s.degree() + 1) / 64);
    std::vector<std::optional<Violation>> found(chunks);
    detail::parallel_chunks(samples, chunks, [&](unsigned ch, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(c.colors()));
        for (std::uint64_t i = begin; i < end; ++i) {
            Vertex v = pts[i];
            const Color me = c(v);
            if (me < 1 || me > c.colors()) throw Error("evaluator returned an out-of-range color");
            count_lazy(c, v, counts);
            bool ok = true;
            for (int j = 0; j < c.colors(); ++j) ok = ok && counts[j] == expected.at(me - 1, j);
            if (!ok) {
                const std::uint64_t r = s.fits_u64() ? rank(s, v) : std::numeric_limits<std::uint64_t>::max();
                found[ch] = Violation{r, v, me, row_of(expected, me - 1), counts};
                return;
            }
        }
    });
    VerifyReport rep;
    rep.mode = VerifyReport::Mode::sampled;
    rep.samples = samples;
    rep.seed = seed;
    rep.matrix = expected;
    rep.checked = samples;
    for (auto& f : found)
        if (f) {
            rep.violations.push_back(std::move(*f));
            break;
        }
    return rep;
}

WeightDistribution weight_distribution_recurrence(const QuotientMatrix& S, int start_color, const GraphShape& shape) {
    const int k = S.k();
    if (start_color < 1 || start_color > k) throw ParameterError("start color outside 1..k");
    if (!S.nonnegative()) throw ParameterError("quotient matrix has negative entries");
    const auto rs = S.row_sum();
    if (!rs || *rs != shape.degree()) throw ParameterError("quotient rows must sum to n(q-1)");
    const DistanceParameters dp{shape};
    const int n = shape.n;
    WeightDistribution wd;
    wd.n = n;
    wd.W.assign(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0));
    wd.W[start_color - 1][0] = 1;
    for (int j = 0; j < n; ++j) {
        for (int l = 0; l < k; ++l) {
            BigInt num = 0;
            for (int m = 0; m < k; ++m) num += wd.W[m][j] * S.at(m, l);
            num -= wd.W[l][j] * dp.a(j);
            if (j >= 1) num -= wd.W[l][j - 1] * dp.b(j - 1);
            const int denom = j + 1;
            if (num < 0 || num % denom != 0)
                throw Infeasible("weight distribution step j=" + std::to_string(j + 1) + ", color " +
                                 std::to_string(l + 1) + " gives " + num.str() + "/" + std::to_string(denom));
            wd.W[l][j + 1] = num / denom;
        }
    }
    // Beyond the last step nothing may leak past distance n.
    for (int l = 0; l < k; ++l) {
        BigInt num = 0;
        for (int m = 0; m < k; ++m) num += wd.W[m][n] * S.at(m, l);
        num -= wd.W[l][n] * dp.a(n);
        if (n >= 1) num -= wd.W[l][n - 1] * dp.b(n - 1);
        if (num != 0)
            throw Infeasible("weight distribution does not close at distance " + std::to_string(n) + " for color " +
                             std::to_string(l + 1));
    }
    return wd;
}

WeightDistribution weight_distribution_bruteforce(const Coloring& col, std::span<const Symbol> origin,
                                                  std::uint64_t budget) {
    check_vertex(col.shape(), origin);
    const Coloring c = materialize(col, budget);
    const GraphShape& s = c.shape();
    WeightDistribution wd;
    wd.n = s.n;
    std::vector<std::vector<std::uint64_t>> raw(static_cast<std::size_t>(c.colors()),
                                                std::vector<std::uint64_t>(static_cast<std::size_t>(s.n) + 1, 0));
    const auto table = c.dense();
    Vertex v(static_cast<std::size_t>(s.n));
    for (std::uint64_t r = 0; r < table.size(); ++r, increment(v.coords(), s.q))
        ++raw[table[r] - 1][distance(v, origin)];
    wd.W.assign(raw.size(), {});
    for (std::size_t l = 0; l < raw.size(); ++l)
        for (auto x : raw[l]) wd.W[l].push_back(BigInt(x));
    return wd;
}

FaceBalanceReport face_balance_check(const Coloring& col, std::uint64_t budget) {
    if (col.colors() != 2) throw ParameterError("face balance needs a 2-coloring");
    const QuotientMatrix m = quotient_of(col);
    const GraphShape& s = col.shape();
    FaceBalanceReport rep;
    const std::int64_t bc = m.b() + m.c();
    rep.k_min = static_cast<int>(s.n - bc / s.q + 1);
    const int k = std::max(rep.k_min, 0);
    if (k > s.n) {
        rep.note = "no faces of dimension >= k_min; condition is vacuous";
        return rep;
    }
    const BigInt qk = boost::multiprecision::pow(BigInt(s.q), static_cast<unsigned>(k));
    if ((qk * m.c()) % bc != 0) {
        rep.note = "non-integral expected count c*q^k/(b+c)";
        return rep;
    }
    rep.expected = qk * m.c() / bc;
    const BigInt work = binomial(s.n, k) * s.vertex_count();
    if (work > BigInt(budget)) throw BudgetExceeded("face enumeration exceeds the budget");
    const Coloring c = materialize(col);
    const auto table = c.dense();
    const auto pw = powers_of(s);
    const auto want = static_cast<std::int64_t>(rep.expected);
    // Directions as a k-subset in lexicographic order.
    std::vector<int> dirs(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) dirs[i] = i;
    const std::uint64_t face_size = static_cast<std::uint64_t>(qk);
    while (true) {
        std::vector<bool> is_free(static_cast<std::size_t>(s.n), false);
        for (int d : dirs) is_free[d] = true;
        Vertex v(static_cast<std::size_t>(s.n));
        do {
            bool base = true;
            for (int d : dirs) base = base && v[d] == 0;
            if (!base) continue;
            const std::uint64_t r0 = rank(s, v);
            std::int64_t cnt = 0;
            for (std::uint64_t f = 0; f < face_size; ++f) {
                std::uint64_t r = r0, rest = f;
                for (int d : dirs) {
                    r += (rest % static_cast<std::uint64_t>(s.q)) * pw[d];
                    rest /= static_cast<std::uint64_t>(s.q);
                }
                cnt += table[r] == 1;
            }
            ++rep.faces_checked;
            if (cnt != want) {
                rep.witness = Face{v, dirs};
                rep.note = "face holds " + std::to_string(cnt) + " color-1 vertices, expected " + std::to_string(want);
                return rep;
            }
        } while (increment(v.coords(), s.q));
        int i = k - 1;
        while (i >= 0 && dirs[i] == s.n - k + i) --i;
        if (i < 0) break;
        ++dirs[i];
        for (int j = i + 1; j < k; ++j) dirs[j] = dirs[j - 1] + 1;
    }
    rep.note = "all " + std::to_string(k) + "-faces balanced; larger faces follow by summation";
    return rep;
}

}  // namespace hpc
