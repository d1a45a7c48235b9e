#include <algorithm>
#include <bit>
#include <functional>
#include <deque>
#include <limits>
#include <set>

#include "hpc/constructions.hpp"
#include "hpc/errors.hpp"

namespace hpc {

namespace {

std::uint64_t rank_unchecked(std::span<const Symbol> v, int q) {
    std::uint64_t r = 0;
    for (std::size_t i = v.size(); i-- > 0;) r = r * static_cast<std::uint64_t>(q) + v[i];
    return r;
}

std::vector<std::uint64_t> powers_of(const GraphShape& s) {
    std::vector<std::uint64_t> p(static_cast<std::size_t>(s.n) + 1, 1);
    for (int i = 0; i < s.n; ++i) p[i + 1] = p[i] * static_cast<std::uint64_t>(s.q);
    return p;
}

// Per-rank line direction; -1 outside the class.
std::shared_ptr<const FacePartition> dense_lines(Color color, int q, std::shared_ptr<const std::vector<std::int8_t>> dir) {
    auto fp = std::make_shared<FacePartition>();
    fp->color = color;
    fp->dim = 1;
    fp->directions = [dir, q](std::span<const Symbol> v, Directions& d) {
        const auto x = (*dir)[rank_unchecked(v, q)];
        if (x < 0) throw ParameterError("vertex " + to_string(v) + " is outside the partitioned class");
        d.push_back(x);
    };
    return fp;
}

class HopcroftKarp {
public:
    // Left vertices 0..L-1, right 0..R-1.
    HopcroftKarp(std::size_t L, std::size_t R, std::vector<std::vector<std::uint32_t>> adj)
        : adj_(std::move(adj)), matchL_(L, kNone), matchR_(R, kNone), dist_(L) {}

    std::size_t run() {
        std::size_t matched = 0;
        while (bfs())
            for (std::uint32_t u = 0; u < matchL_.size(); ++u)
                if (matchL_[u] == kNone && dfs(u)) ++matched;
        return matched;
    }

    std::uint32_t mate_of_left(std::uint32_t u) const { return matchL_[u]; }

    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

private:
    bool bfs() {
        std::deque<std::uint32_t> queue;
        bool found = false;
        for (std::uint32_t u = 0; u < matchL_.size(); ++u) {
            if (matchL_[u] == kNone) {
                dist_[u] = 0;
                queue.push_back(u);
            } else {
                dist_[u] = kNone;
            }
        }
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto v : adj_[u]) {
                const auto w = matchR_[v];
                if (w == kNone) found = true;
                else if (dist_[w] == kNone) {
                    dist_[w] = dist_[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return found;
    }

    bool dfs(std::uint32_t u) {
        for (auto v : adj_[u]) {
            const auto w = matchR_[v];
            if (w == kNone || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                matchL_[u] = v;
                matchR_[v] = u;
                return true;
            }
        }
        dist_[u] = kNone;
        return false;
    }

    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<std::uint32_t> matchL_, matchR_, dist_;
};

}  // namespace

std::shared_ptr<const FacePartition> point_partition(Color color) {
    auto fp = std::make_shared<FacePartition>();
    fp->color = color;
    fp->dim = 0;
    fp->directions = [](std::span<const Symbol>, Directions&) {};
    return fp;
}

std::shared_ptr<const FacePartition> edge_partition_binary(const Coloring& col, Color color) {
    if (col.shape().q != 2) throw ParameterError("edge partition by matching needs q = 2");
    const Coloring c = materialize(col);
    const GraphShape& s = c.shape();
    const auto table = c.dense();
    std::vector<std::uint32_t> index(table.size(), HopcroftKarp::kNone);
    std::vector<std::uint64_t> even, odd;
    for (std::uint64_t r = 0; r < table.size(); ++r) {
        if (table[r] != color) continue;
        auto& side = (std::popcount(r) % 2 == 0) ? even : odd;
        index[r] = static_cast<std::uint32_t>(side.size());
        side.push_back(r);
    }
    if (even.empty() && odd.empty()) throw NoPartition("color class is empty");
    std::vector<std::vector<std::uint32_t>> adj(even.size());
    std::size_t edges = 0;
    std::set<std::size_t> degrees;
    auto degree_of = [&](std::uint64_t r) {
        std::size_t d = 0;
        for (int i = 0; i < s.n; ++i) d += table[r ^ (std::uint64_t{1} << i)] == color;
        return d;
    };
    for (std::size_t u = 0; u < even.size(); ++u) {
        for (int i = 0; i < s.n; ++i) {
            const auto w = even[u] ^ (std::uint64_t{1} << i);
            if (table[w] == color) adj[u].push_back(index[w]);
        }
        edges += adj[u].size();
        degrees.insert(adj[u].size());
    }
    for (auto r : odd) degrees.insert(degree_of(r));
    if (edges == 0) throw NoPartition("color class " + std::to_string(color) + " is independent");
    HopcroftKarp hk(even.size(), odd.size(), std::move(adj));
    const auto matched = hk.run();
    if (matched != even.size() || matched != odd.size()) {
        if (degrees.size() == 1) throw std::logic_error("regular bipartite class without a perfect matching");
        throw NoPartition("class has no perfect matching (" + std::to_string(matched) + " edges matched)");
    }
    auto dir = std::make_shared<std::vector<std::int8_t>>(table.size(), -1);
    for (std::uint32_t u = 0; u < even.size(); ++u) {
        const auto a = even[u], b = odd[hk.mate_of_left(u)];
        const auto d = static_cast<std::int8_t>(std::countr_zero(a ^ b));
        (*dir)[a] = (*dir)[b] = d;
    }
    return dense_lines(color, 2, dir);
}

LineSearchResult line_partition_search(const Coloring& col, Color color, std::chrono::milliseconds timeout) {
    using Clock = std::chrono::steady_clock;
    const auto deadline = Clock::now() + timeout;
    const Coloring c = materialize(col);
    const GraphShape& s = c.shape();
    const int q = s.q;
    const auto table = c.dense();
    const auto pw = powers_of(s);
    LineSearchResult res;

    std::vector<std::uint64_t> verts;
    std::vector<std::uint32_t> idx(table.size(), std::numeric_limits<std::uint32_t>::max());
    for (std::uint64_t r = 0; r < table.size(); ++r)
        if (table[r] == color) {
            idx[r] = static_cast<std::uint32_t>(verts.size());
            verts.push_back(r);
        }
    if (verts.empty() || verts.size() % static_cast<std::size_t>(q) != 0) {
        res.outcome = LineSearchResult::Outcome::not_found;
        return res;
    }

    // Candidate lines: all q points in the class; listed from their base point.
    struct Line {
        std::vector<std::uint32_t> pts;
        int dir;
    };
    std::vector<Line> lines;
    std::vector<std::vector<std::uint32_t>> through(verts.size());
    Vertex v(static_cast<std::size_t>(s.n));
    for (std::size_t vi = 0; vi < verts.size(); ++vi) {
        unrank_into(s, verts[vi], v.coords());
        for (int i = 0; i < s.n; ++i) {
            if (v[i] != 0) continue;
            Line L{{}, i};
            bool inside = true;
            for (int a = 0; a < q && inside; ++a) {
                const auto r = verts[vi] + static_cast<std::uint64_t>(a) * pw[i];
                if (table[r] != color) inside = false;
                else L.pts.push_back(idx[r]);
            }
            if (!inside) continue;
            for (auto p : L.pts) through[p].push_back(static_cast<std::uint32_t>(lines.size()));
            lines.push_back(std::move(L));
        }
    }
    res.candidate_lines = lines.size();

    std::vector<char> covered(verts.size(), 0), alive(lines.size(), 1);
    std::vector<std::uint32_t> options(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) options[i] = static_cast<std::uint32_t>(through[i].size());
    std::vector<std::uint32_t> chosen;
    std::size_t uncovered = verts.size();
    bool timed_out = false;

    auto cover = [&](std::uint32_t li, std::vector<std::uint32_t>& killed) {
        for (auto p : lines[li].pts) {
            covered[p] = 1;
            --uncovered;
            for (auto other : through[p]) {
                if (!alive[other]) continue;
                alive[other] = 0;
                killed.push_back(other);
                for (auto w : lines[other].pts) --options[w];
            }
        }
    };
    auto uncover = [&](std::uint32_t li, const std::vector<std::uint32_t>& killed) {
        for (auto it = killed.rbegin(); it != killed.rend(); ++it) {
            alive[*it] = 1;
            for (auto w : lines[*it].pts) ++options[w];
        }
        for (auto p : lines[li].pts) {
            covered[p] = 0;
            ++uncovered;
        }
    };

    std::function<bool()> search = [&]() -> bool {
        if (uncovered == 0) return true;
        if (++res.nodes % 1024 == 0 && Clock::now() > deadline) {
            timed_out = true;
            return false;
        }
        std::size_t best = verts.size();
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (!covered[i] && (best == verts.size() || options[i] < options[best])) {
                best = i;
                if (options[i] == 0) break;
            }
        if (options[best] == 0) return false;
        std::vector<std::uint32_t> cands;
        for (auto li : through[best])
            if (alive[li]) cands.push_back(li);
        for (auto li : cands) {
            std::vector<std::uint32_t> killed;
            cover(li, killed);
            chosen.push_back(li);
            if (search()) return true;
            chosen.pop_back();
            uncover(li, killed);
            if (timed_out) return false;
        }
        return false;
    };

    if (!search()) {
        res.outcome = timed_out ? LineSearchResult::Outcome::timeout : LineSearchResult::Outcome::not_found;
        return res;
    }
    auto dir = std::make_shared<std::vector<std::int8_t>>(table.size(), -1);
    for (auto li : chosen)
        for (auto p : lines[li].pts) (*dir)[verts[p]] = static_cast<std::int8_t>(lines[li].dir);
    res.outcome = LineSearchResult::Outcome::found;
    res.partition = dense_lines(color, q, dir);
    return res;
}

Coloring attach_faces(const Coloring& c, int color, int dim, std::chrono::milliseconds timeout) {
    auto node = recipe::faces(color, dim, nullptr);
    RecipeInfo info{c.shape(), quotient_of(c), std::nullopt};
    analyze_step(*node, info);
    RecipePtr composed;
    if (c.recipe()) {
        auto r = std::make_shared<Recipe>(*node);
        r->children = {c.recipe()};
        composed = r;
    }
    const auto col = static_cast<Color>(color);
    if (dim == 0) return c.with_witness(point_partition(col)).with_recipe(composed);
    const Coloring dense = materialize(c);
    std::shared_ptr<const FacePartition> fp;
    if (c.shape().q == 2) {
        fp = edge_partition_binary(dense, col);
    } else {
        auto res = line_partition_search(dense, col, timeout);
        if (res.outcome == LineSearchResult::Outcome::timeout)
            throw NoPartition("line partition search timed out after " + std::to_string(res.nodes) + " nodes");
        if (res.outcome != LineSearchResult::Outcome::found) throw NoPartition("color class has no line partition");
        fp = res.partition;
    }
    return dense.with_witness(fp).with_recipe(composed);
}

FaceReport validate_face_partition(const Coloring& col, const FacePartition& fp, std::uint64_t budget) {
    const Coloring c = materialize(col, budget);
    const GraphShape& s = c.shape();
    const auto table = c.dense();
    FaceReport rep;
    std::uint64_t members = 0;
    Vertex v(static_cast<std::size_t>(s.n)), u(static_cast<std::size_t>(s.n));
    for (std::uint64_t r = 0; r < table.size(); ++r, increment(v.coords(), s.q)) {
        if (table[r] != fp.color) continue;
        ++members;
        Directions d;
        fp.directions(v, d);
        std::sort(d.begin(), d.end());
        if (static_cast<int>(d.size()) != fp.dim || std::adjacent_find(d.begin(), d.end()) != d.end() ||
            (!d.empty() && (d.front() < 0 || d.back() >= s.n))) {
            rep.detail = "vertex " + to_string(v.coords()) + " reports a malformed face";
            return rep;
        }
        bool is_base = true;
        for (int i : d) is_base = is_base && v[i] == 0;
        if (is_base) ++rep.faces;
        // Every point of the face must be in the class and report the same face.
        Vertex w = v;
        for (int i : d) w[i] = 0;
        while (true) {
            const auto wr = rank_unchecked(w, s.q);
            if (table[wr] != fp.color) {
                rep.detail = "face through " + to_string(v.coords()) + " leaves the class at " + to_string(w.coords());
                return rep;
            }
            Directions dw;
            fp.directions(w, dw);
            std::sort(dw.begin(), dw.end());
            if (!std::equal(d.begin(), d.end(), dw.begin(), dw.end())) {
                rep.detail = "faces through " + to_string(v.coords()) + " and " + to_string(w.coords()) + " overlap";
                return rep;
            }
            std::size_t j = 0;
            for (; j < d.size(); ++j) {
                auto& x = w[d[j]];
                if (++x < s.q) break;
                x = 0;
            }
            if (j == d.size()) break;
        }
    }
    std::uint64_t face_size = 1;
    for (int i = 0; i < fp.dim; ++i) face_size *= static_cast<std::uint64_t>(s.q);
    if (rep.faces * face_size != members) rep.detail = "faces do not cover the class exactly";
    return rep;
}

}  // namespace hpc
