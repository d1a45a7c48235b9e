#include "hpc/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hpc/algebra.hpp"
#include "hpc/codes.hpp"
#include "hpc/errors.hpp"

namespace hpc {

std::string_view column_label(Column c) noexcept {
    switch (c) {
        case Column::star: return "*";
        case Column::alphabet: return "q";
        case Column::perfect: return "P";
        case Column::flaass: return "F";
        case Column::split: return "S";
    }
    return "?";
}

namespace {

bool has_proper_divisor(int q) {
    for (int d = 2; d < q; ++d)
        if (q % d == 0) return true;
    return false;
}

std::vector<int> split_bases(int q) {
    std::vector<int> out;
    for (int q0 : {2, 3})
        if (q % q0 == 0 && q / q0 >= 2) out.push_back(q0);
    return out;
}

bool admissible(int q, int b, int c) {
    if (b < 1 || c < 1) return false;
    return lower_bound(q, std::max(b, c), std::min(b, c)).admissible;
}

bool better(const Plan& x, const std::optional<Plan>& cur) {
    if (!cur) return true;
    if (x.n != cur->n) return x.n < cur->n;
    return to_string(*x.recipe) < to_string(*cur->recipe);
}

void offer(std::optional<Plan>& slot, Plan p) {
    if (better(p, slot)) slot = std::move(p);
}

// Undo a trailing complement instead of stacking two.
RecipePtr flipped(const RecipePtr& r) {
    if (r->kind == NodeKind::complement) return r->children.front();
    return recipe::complement(r);
}

// Orient a recipe predicting (x, y) so that it predicts (b, c); nullptr when
// neither orientation fits.
RecipePtr oriented(RecipePtr r, int x, int y, int b, int c) {
    if (x == b && y == c) return r;
    if (x == c && y == b) return flipped(r);
    return nullptr;
}

RecipePtr code_lines(int q0) { return recipe::faces(2, 1, recipe::perfect(2, q0, 1)); }

}  // namespace

std::vector<Column> table_columns(int q) {
    std::vector<Column> cols = {Column::star};
    if (has_proper_divisor(q)) cols.push_back(Column::alphabet);
    cols.push_back(Column::perfect);
    if (hqq_supported(q)) cols.push_back(Column::flaass);
    if (!split_bases(q).empty()) cols.push_back(Column::split);
    return cols;
}

std::string_view status_marker(Status s) noexcept {
    switch (s) {
        case Status::settled: return ".";
        case Status::gap: return "-?-";
        case Status::unknown: return "???";
    }
    return "?";
}

int AdmissibilityRecord::reduced_sum() const noexcept { return (b + c) / std::gcd(b, c); }

std::optional<Plan> Planner::plan(int q, int b, int c) { return best(q, std::max(b, c), std::min(b, c), depth_); }

std::map<Column, Plan> Planner::columns(int q, int b, int c) {
    return columns_at(q, std::max(b, c), std::min(b, c), depth_);
}

std::optional<RecipePtr> Planner::witness_at(int q, int b, int c, int n) {
    auto p = plan(q, b, c);
    if (!p || n < p->n) return std::nullopt;
    if (n == p->n) return p->recipe;
    return recipe::extend(n - p->n, p->recipe);
}

std::optional<Plan> Planner::best(int q, int b, int c, int depth) {
    if (depth < 0 || !admissible(q, b, c)) return std::nullopt;
    const Key key{q, b, c, depth};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<Plan> out;
    for (auto& [col, p] : columns_at(q, b, c, depth)) offer(out, p);
    memo_[key] = out;
    return out;
}

std::map<Column, Plan> Planner::columns_at(int q, int b, int c, int depth) {
    const Key key{q, b, c, depth};
    if (auto it = column_memo_.find(key); it != column_memo_.end()) return it->second;

    std::map<Column, std::optional<Plan>> slots;
    const int s = b + c;

    // * : t copies of each coordinate
    if (depth > 0) {
        const int g = std::gcd(b, c);
        for (int t = 2; t <= g; ++t) {
            if (g % t) continue;
            if (auto sub = best(q, b / t, c / t, depth - 1))
                offer(slots[Column::star], {t * sub->n, recipe::mult_length(t, sub->recipe)});
        }
    }

    // q : alphabet multiplication from a divisor
    if (depth > 0) {
        for (int q0 = 2; q0 < q; ++q0) {
            const int p = q / q0;
            if (q % q0 || b % p || c % p) continue;
            if (auto sub = best(q0, b / p, c / p, depth - 1))
                offer(slots[Column::alphabet], {sub->n, recipe::mult_alphabet(p, sub->recipe)});
        }
    }

    // P : t-fold 1-perfect codes, b + c = q^r
    {
        long qr = q;
        int r = 1;
        while (qr < s) {
            qr *= q;
            ++r;
        }
        if (qr == s && (r == 1 || prime_power(q)) && qr <= (1L << 24))
            offer(slots[Column::perfect], {static_cast<int>((qr - 1) / (q - 1)), recipe::perfect(r, q, c)});
    }

    // F : splitting I
    if (depth > 0 && hqq_supported(q) && s % q == 0) {
        const int s0 = s / q;
        for (int c0 = 1; 2 * c0 <= s0; ++c0) {
            const int b0 = s0 - c0;
            auto base = best(q, b0, c0, depth - 1);
            if (!base) continue;
            const int lambda = base->n * (q - 1) - s0;
            if (lambda > 0) continue;
            const int n = q * base->n - lambda;
            for (int t1 = 0; t1 <= q; ++t1)
                for (int t2 = 0; t2 <= q; ++t2) {
                    if (t1 + t2 == 0 || t1 + t2 == 2 * q) continue;
                    const int cc = c0 * t1 + b0 * t2;
                    if (auto r = oriented(recipe::flaass_std(t1, t2, 0, base->recipe), s - cc, cc, b, c))
                        offer(slots[Column::flaass], {n, r});
                }
        }
        for (const auto& fb : face_bases(q, s0, depth - 1)) {
            const int lambda = fb.n * (q - 1) - s0;
            for (int variant : {1, 2}) {
                int n = 0;
                if (variant == 1) {
                    if (lambda + fb.k > 0) continue;
                    n = q * fb.n - lambda - fb.k;
                } else {
                    if (lambda > fb.k * (q - 1) || fb.n - fb.k < 1) continue;
                    n = q * fb.n - lambda + fb.k * (q - 1);
                }
                for (int t = 1; t <= q; ++t) {
                    const int cc = t * fb.c;
                    if (auto r = oriented(recipe::flaass_impr(variant, t, 0, fb.recipe), s - cc, cc, b, c))
                        offer(slots[Column::flaass], {n, r});
                }
            }
        }
    }

    // S : splitting II over the 1-perfect code of H(q0+1,q0)
    for (int q0 : split_bases(q)) {
        const int p = q / q0, w = q0 * q0 - 1;
        for (int t = 1; t <= p - 1; ++t) {
            const int x = w * (p - t), y = w * t + p;
            if (auto r = oriented(recipe::splitII(p, t, code_lines(q0)), x, y, b, c))
                offer(slots[Column::split], {q0 + 1, r});
        }
    }

    std::map<Column, Plan> out;
    for (auto& [col, p] : slots)
        if (p) out.emplace(col, *p);
    column_memo_[key] = out;
    return out;
}

const std::vector<Planner::FaceBase>& Planner::face_bases(int q, int sum, int depth) {
    const Key key{q, sum, -1, depth};
    if (auto it = face_memo_.find(key); it != face_memo_.end()) return it->second;

    std::map<std::tuple<int, int, int>, FaceBase> pick;  // (b, c, k) -> smallest n
    auto add = [&](FaceBase fb) {
        const std::tuple<int, int, int> k{fb.b, fb.c, fb.k};
        auto it = pick.find(k);
        if (it == pick.end() || fb.n < it->second.n ||
            (fb.n == it->second.n && to_string(*fb.recipe) < to_string(*it->second.recipe)))
            pick.insert_or_assign(k, std::move(fb));
    };

    if (depth >= 0) {
        // binary colorings: any class with internal edges splits into edges
        if (q == 2) {
            for (int c0 = 1; 2 * c0 <= sum; ++c0) {
                const int b0 = sum - c0;
                auto p = best(2, b0, c0, depth);
                if (!p) continue;
                if (p->n - b0 > 0) add({p->n, b0, c0, 1, recipe::faces(1, 1, p->recipe)});
                if (b0 != c0 && p->n - c0 > 0) add({p->n, c0, b0, 1, recipe::faces(1, 1, flipped(p->recipe))});
            }
        }
        // line class of a splitting-II output
        for (int q0 : split_bases(q)) {
            const int p = q / q0, w = q0 * q0 - 1;
            for (int t = 0; t <= p - 1; ++t)
                if (w * (p - t) + w * t + p == sum)
                    add({q0 + 1, w * t + p, w * (p - t), 1, recipe::complement(recipe::splitII(p, t, code_lines(q0)))});
        }
        // non-codewords of the ternary Hamming code of length 4
        if (q == 3 && sum == 9) add({4, 1, 8, 1, recipe::complement(code_lines(3))});

        // variant 2 keeps a face partition, so it can be iterated
        if (depth > 0 && hqq_supported(q) && sum % q == 0) {
            const int s0 = sum / q;
            for (const auto& fb : face_bases(q, s0, depth - 1)) {
                const int lambda = fb.n * (q - 1) - s0;
                if (lambda > fb.k * (q - 1) || fb.n - fb.k < 1) continue;
                const int n = q * fb.n - lambda + fb.k * (q - 1);
                for (int t = 1; t <= q; ++t)
                    add({n, sum - t * fb.c, t * fb.c, fb.k * q, recipe::flaass_impr(2, t, 0, fb.recipe)});
            }
        }
    }

    std::vector<FaceBase> out;
    for (auto& [k, fb] : pick) out.push_back(std::move(fb));
    return face_memo_[key] = std::move(out);
}

std::vector<AdmissibilityRecord> build_table(int q, int max_bc) {
    Planner planner;
    return build_table(q, max_bc, planner);
}

std::vector<AdmissibilityRecord> build_table(int q, int max_bc, Planner& planner) {
    if (q < 2) throw ParameterError("q must be >= 2");
    if (max_bc < q || max_bc % q) throw ParameterError("max b+c must be a positive multiple of q");
    std::vector<AdmissibilityRecord> rows;
    for (int s = q; s <= max_bc; s += q) {
        for (int c = 1; 2 * c <= s; ++c) {
            const int b = s - c;
            auto lb = lower_bound(q, b, c);
            if (!lb.admissible) continue;
            AdmissibilityRecord rec;
            rec.q = q;
            rec.b = b;
            rec.c = c;
            rec.lb = lb;
            rec.columns = planner.columns(q, b, c);
            for (auto& [col, p] : rec.columns)
                if (!rec.ub || better(p, rec.ub)) rec.ub = p;
            if (!rec.ub) rec.status = Status::unknown;
            else if (rec.ub->n < lb.value)
                throw std::logic_error("planner produced n below the lower bound for (" + std::to_string(b) + "," +
                                       std::to_string(c) + ")");
            else rec.status = rec.ub->n == lb.value ? Status::settled : Status::gap;
            rec.notes = conjecture_notes(q, b, c, lb.value);
            rows.push_back(std::move(rec));
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        return std::tuple(x.sum(), x.reduced_sum(), x.b) < std::tuple(y.sum(), y.reduced_sum(), y.b);
    });
    return rows;
}

ReferenceTable to_reference(int q, const std::vector<AdmissibilityRecord>& rows) {
    ReferenceTable t;
    t.q = q;
    t.header = {"b+c", "b'+c'", "b", "c", "a", "k", "LB"};
    const auto cols = table_columns(q);
    for (auto col : cols) t.header.emplace_back(column_label(col));
    t.header.emplace_back("UB");
    t.header.emplace_back("status");
    for (const auto& r : rows) {
        std::vector<std::string> cells = {std::to_string(r.sum()),      std::to_string(r.reduced_sum()),
                                          std::to_string(r.b),          std::to_string(r.c),
                                          std::to_string(r.lb.degree), std::to_string(r.lb.divisibility),
                                          std::to_string(r.lb.value)};
        for (auto col : cols) {
            auto it = r.columns.find(col);
            cells.push_back(it == r.columns.end() ? "-" : std::to_string(it->second.n));
        }
        cells.push_back(r.ub ? std::to_string(r.ub->n) : "?");
        cells.emplace_back(status_marker(r.status));
        t.rows.push_back(std::move(cells));
    }
    return t;
}

void write_table_tsv(std::ostream& os, int q, const std::vector<AdmissibilityRecord>& rows) {
    const auto t = to_reference(q, rows);
    os << "# q=" << q << '\n';
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << cells[i];
        os << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

void write_table_text(std::ostream& os, int q, const std::vector<AdmissibilityRecord>& rows) {
    auto t = to_reference(q, rows);
    // merge b and c into one "(b,c)" cell like the printed tables
    auto merge = [](std::vector<std::string>& cells, bool header) {
        cells[2] = header ? "(b,c)" : "(" + cells[2] + "," + cells[3] + ")";
        cells.erase(cells.begin() + 3);
    };
    merge(t.header, true);
    for (auto& r : t.rows) merge(r, false);
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t i = 0; i < width.size(); ++i) {
        width[i] = t.header[i].size();
        for (const auto& r : t.rows) width[i] = std::max(width[i], r[i].size());
    }
    os << "q = " << q << '\n';
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << "  ";
            os << std::setw(static_cast<int>(width[i])) << cells[i];
        }
        os << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

ReferenceTable parse_reference(std::istream& in) {
    ReferenceTable t;
    std::string line;
    int lineno = 0;
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cell;
        std::istringstream ls(s);
        while (std::getline(ls, cell, '\t')) out.push_back(cell);
        return out;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("# q=", 0) == 0) {
                const char* p = line.data() + 4;
                auto [end, ec] = std::from_chars(p, line.data() + line.size(), t.q);
                if (ec != std::errc() || end != line.data() + line.size() || t.q < 2)
                    throw IoError("malformed fixture: bad q on line " + std::to_string(lineno));
            }
            continue;
        }
        auto cells = split(line);
        if (t.header.empty()) {
            t.header = std::move(cells);
            for (const char* need : {"b", "c", "UB", "status"})
                if (std::find(t.header.begin(), t.header.end(), need) == t.header.end())
                    throw IoError(std::string("malformed fixture: header lacks column ") + need);
            continue;
        }
        if (cells.size() != t.header.size())
            throw IoError("malformed fixture: line " + std::to_string(lineno) + " has " + std::to_string(cells.size()) +
                          " cells, header has " + std::to_string(t.header.size()));
        t.rows.push_back(std::move(cells));
    }
    if (t.q == 0) throw IoError("malformed fixture: missing '# q=N' line");
    if (t.header.empty()) throw IoError("malformed fixture: missing header");
    return t;
}

namespace {

std::optional<int> as_int(const std::string& s) {
    int v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
    return v;
}

bool is_construction_column(const std::string& h) {
    return h == "*" || h == "q" || h == "P" || h == "F" || h == "S" || h == "UB";
}

}  // namespace

std::vector<CellDiff> compare_with_reference(const std::vector<AdmissibilityRecord>& rows, const ReferenceTable& ref,
                                             int max_bc) {
    if (!rows.empty() && rows.front().q != ref.q)
        throw ParameterError("reference is for q=" + std::to_string(ref.q) + ", table for q=" +
                             std::to_string(rows.front().q));
    const auto gen = to_reference(ref.q, rows);
    auto index = [](const std::vector<std::string>& header, const std::string& name) -> std::optional<std::size_t> {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) return std::nullopt;
        return static_cast<std::size_t>(it - header.begin());
    };
    const auto rb = *index(ref.header, "b"), rc = *index(ref.header, "c");
    const auto gb = *index(gen.header, "b"), gc = *index(gen.header, "c");

    std::map<std::pair<int, int>, const std::vector<std::string>*> generated;
    for (const auto& r : gen.rows) generated[{*as_int(r[gb]), *as_int(r[gc])}] = &r;

    std::vector<CellDiff> diff;
    std::set<std::pair<int, int>> seen;
    for (const auto& r : ref.rows) {
        const auto b = as_int(r[rb]), c = as_int(r[rc]);
        if (!b || !c) throw IoError("malformed fixture: non-numeric b or c");
        if (max_bc > 0 && *b + *c > max_bc) continue;
        seen.insert({*b, *c});
        auto it = generated.find({*b, *c});
        if (it == generated.end()) {
            diff.push_back({*b, *c, "row", "present", "missing", false});
            continue;
        }
        const auto& g = *it->second;
        bool ub_improved = false;
        for (std::size_t i = 0; i < ref.header.size(); ++i) {
            const auto& h = ref.header[i];
            auto gi = index(gen.header, h);
            const std::string actual = gi ? g[*gi] : "(no column)";
            if (actual == r[i]) continue;
            bool improvement = false;
            if (is_construction_column(h)) {
                const auto e = as_int(r[i]), a = as_int(actual);
                improvement = a && (!e || *a < *e);
                if (h == "UB") ub_improved = improvement;
            }
            diff.push_back({*b, *c, h, r[i], actual, improvement});
        }
        if (ub_improved)
            for (auto& d : diff)
                if (d.b == *b && d.c == *c && d.column == "status") d.improvement = true;
    }
    for (const auto& [bc, row] : generated) {
        if (max_bc > 0 && bc.first + bc.second > max_bc) continue;
        if (!seen.count(bc)) diff.push_back({bc.first, bc.second, "row", "absent", "present", false});
    }
    return diff;
}

std::string format_diff(const std::vector<CellDiff>& diff) {
    std::ostringstream os;
    for (const auto& d : diff) {
        os << '(' << d.b << ',' << d.c << ") " << d.column << ": expected " << d.expected << ", got " << d.actual;
        if (d.improvement) os << " [improvement]";
        os << '\n';
    }
    return os.str();
}

}  // namespace hpc
