#include "hpc/recipe.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

#include "hpc/algebra.hpp"
#include "hpc/codes.hpp"
#include "hpc/errors.hpp"

namespace hpc {

namespace {

struct ParamSpec {
    std::string_view name;
    bool symbol;
    std::optional<std::int64_t> default_num;
};

struct KindSpec {
    NodeKind kind;
    std::string_view name;
    int children;
    std::vector<ParamSpec> params;
};

const std::vector<KindSpec>& kind_specs() {
    static const std::vector<KindSpec> specs = {
        {NodeKind::mds2, "mds2", 0, {{"n", false, {}}, {"q", false, {}}, {"t", false, 1}}},
        {NodeKind::perfect, "perfect", 0, {{"r", false, {}}, {"q", false, {}}, {"t", false, 1}}},
        {NodeKind::extend, "extend", 1, {{"t", false, {}}}},
        {NodeKind::mult_length, "mult-length", 1, {{"t", false, {}}}},
        {NodeKind::mult_alphabet, "mult-alphabet", 1, {{"p", false, {}}}},
        {NodeKind::complement, "complement", 1, {}},
        {NodeKind::faces, "faces", 1, {{"color", false, 1}, {"dim", false, 1}}},
        {NodeKind::splitI_base, "splitI-base", 1, {{"seed", false, 0}}},
        {NodeKind::splitI_faces, "splitI-faces", 1, {{"variant", true, {}}, {"seed", false, 0}}},
        {NodeKind::invasion, "invasion", 1,
         {{"mode", false, {}}, {"t", false, -1}, {"l", false, -1}, {"t1", false, -1}, {"t2", false, -1}}},
        {NodeKind::flaass_std, "flaass-std", 1, {{"t1", false, {}}, {"t2", false, {}}, {"seed", false, 0}}},
        {NodeKind::flaass_impr, "flaass-impr", 1, {{"variant", false, {}}, {"t", false, {}}, {"seed", false, 0}}},
        {NodeKind::splitII, "splitII", 1, {{"p", false, {}}, {"t", false, 0}}},
    };
    return specs;
}

const KindSpec& spec_of(NodeKind k) {
    for (const auto& s : kind_specs())
        if (s.kind == k) return s;
    throw Error("unknown node kind");
}

RecipePtr node(NodeKind kind, std::vector<std::pair<std::string, ParamValue>> params,
               std::vector<RecipePtr> children = {}) {
    auto r = std::make_shared<Recipe>();
    r->kind = kind;
    r->params = std::move(params);
    r->children = std::move(children);
    return r;
}

using P = std::pair<std::string, ParamValue>;
P num(std::string k, std::int64_t v) { return {std::move(k), v}; }

}  // namespace

std::string_view node_name(NodeKind kind) noexcept {
    for (const auto& s : kind_specs())
        if (s.kind == kind) return s.name;
    return "?";
}

std::optional<NodeKind> node_kind(std::string_view name) noexcept {
    for (const auto& s : kind_specs())
        if (s.name == name) return s.kind;
    return std::nullopt;
}

bool Recipe::has(std::string_view key) const noexcept {
    for (const auto& [k, v] : params)
        if (k == key) return true;
    return false;
}

std::int64_t Recipe::num(std::string_view key) const {
    for (const auto& [k, v] : params)
        if (k == key) {
            if (auto p = std::get_if<std::int64_t>(&v)) return *p;
            throw RecipeError(std::string(node_name(kind)), "parameter :" + std::string(key) + " must be an integer");
        }
    throw RecipeError(std::string(node_name(kind)), "missing parameter :" + std::string(key));
}

std::string Recipe::sym(std::string_view key) const {
    for (const auto& [k, v] : params)
        if (k == key) {
            if (auto p = std::get_if<std::string>(&v)) return *p;
            throw RecipeError(std::string(node_name(kind)), "parameter :" + std::string(key) + " must be a symbol");
        }
    throw RecipeError(std::string(node_name(kind)), "missing parameter :" + std::string(key));
}

namespace recipe {
RecipePtr mds2(int n, int q, int t) { return node(NodeKind::mds2, {num("n", n), num("q", q), num("t", t)}); }
RecipePtr perfect(int r, int q, int t) { return node(NodeKind::perfect, {num("r", r), num("q", q), num("t", t)}); }
RecipePtr extend(int t, RecipePtr c) { return node(NodeKind::extend, {num("t", t)}, {std::move(c)}); }
RecipePtr mult_length(int t, RecipePtr c) { return node(NodeKind::mult_length, {num("t", t)}, {std::move(c)}); }
RecipePtr mult_alphabet(int p, RecipePtr c) { return node(NodeKind::mult_alphabet, {num("p", p)}, {std::move(c)}); }
RecipePtr complement(RecipePtr c) { return node(NodeKind::complement, {}, {std::move(c)}); }
RecipePtr faces(int color, int dim, RecipePtr c) {
    return node(NodeKind::faces, {num("color", color), num("dim", dim)}, {std::move(c)});
}
RecipePtr splitI_base(std::uint64_t seed, RecipePtr c) {
    return node(NodeKind::splitI_base, {num("seed", static_cast<std::int64_t>(seed))}, {std::move(c)});
}
RecipePtr splitI_faces(std::string_view variant, std::uint64_t seed, RecipePtr c) {
    return node(NodeKind::splitI_faces, {P{"variant", std::string(variant)}, num("seed", static_cast<std::int64_t>(seed))},
                {std::move(c)});
}
RecipePtr invasion1(int t, int l, RecipePtr c) {
    return node(NodeKind::invasion, {num("mode", 1), num("t", t), num("l", l)}, {std::move(c)});
}
RecipePtr invasion2(int t1, int t2, RecipePtr c) {
    return node(NodeKind::invasion, {num("mode", 2), num("t1", t1), num("t2", t2)}, {std::move(c)});
}
RecipePtr flaass_std(int t1, int t2, std::uint64_t seed, RecipePtr c) {
    return node(NodeKind::flaass_std, {num("t1", t1), num("t2", t2), num("seed", static_cast<std::int64_t>(seed))},
                {std::move(c)});
}
RecipePtr flaass_impr(int variant, int t, std::uint64_t seed, RecipePtr c) {
    return node(NodeKind::flaass_impr,
                {num("variant", variant), num("t", t), num("seed", static_cast<std::int64_t>(seed))}, {std::move(c)});
}
RecipePtr splitII(int p, int t, RecipePtr c) { return node(NodeKind::splitII, {num("p", p), num("t", t)}, {std::move(c)}); }
}  // namespace recipe

namespace {

struct Analyzer {
    std::string path;

    [[noreturn]] void fail(const std::string& what) const { throw RecipeError(path, what); }
    void require(bool cond, const std::string& what) const {
        if (!cond) fail(what);
    }

    std::int64_t get(const Recipe& r, std::string_view key) const {
        try {
            return r.num(key);
        } catch (const RecipeError& e) {
            fail("missing or non-integer parameter :" + std::string(key));
        }
    }

    static bool is_prime_power(int q) { return prime_power(q).has_value(); }

    RecipeInfo two(GraphShape shape, std::int64_t b, std::int64_t c) const {
        return {shape, QuotientMatrix::two(shape.degree(), b, c), std::nullopt};
    }

    GraphShape shape(std::int64_t n, std::int64_t q) const {
        require(n >= 0 && n <= 4096, "dimension out of range");
        require(q >= 2 && q <= kMaxAlphabet, "alphabet size out of range 2..255");
        return GraphShape(static_cast<int>(n), static_cast<int>(q));
    }

    void require_hqq(int q) const {
        require(hqq_supported(q), "needs a 1-perfect code in H(q+1,q) and a tabulated H(q,q) decomposition; q=" +
                                      std::to_string(q) + " unsupported");
    }

    RecipeInfo child_info(const Recipe& r) {
        const std::string saved = path;
        const auto& ch = r.child(0);
        path += "/" + std::string(node_name(ch.kind));
        RecipeInfo info = run(ch);
        path = saved;
        return info;
    }

    RecipeInfo run(const Recipe& r) {
        const KindSpec& spec = spec_of(r.kind);
        require(static_cast<int>(r.children.size()) == spec.children,
                "expected " + std::to_string(spec.children) + " child node(s), got " + std::to_string(r.children.size()));
        for (const auto& c : r.children) require(c != nullptr, "null child");
        if (spec.children == 0) return step(r, nullptr);
        const RecipeInfo in = child_info(r);
        return step(r, &in);
    }

    RecipeInfo step(const Recipe& r, const RecipeInfo* child) {
        const KindSpec& spec = spec_of(r.kind);
        require((spec.children == 0) == (child == nullptr), "child description mismatch");
        switch (r.kind) {
            case NodeKind::mds2: {
                const auto n = get(r, "n"), q = get(r, "q"), t = get(r, "t");
                require(n >= 1, "mds2 needs n >= 1");
                const auto s = shape(n, q);
                require(t >= 1 && t <= q - 1, "t must lie in 1..q-1");
                return two(s, n * (q - t), n * t);
            }
            case NodeKind::perfect: {
                const auto rr = get(r, "r"), q = get(r, "q"), t = get(r, "t");
                require(rr >= 1, "r must be >= 1");
                require(rr == 1 || is_prime_power(static_cast<int>(q)), "q must be a prime power for r >= 2");
                std::int64_t qr = 1;
                for (int i = 0; i < rr; ++i) {
                    qr *= q;
                    require(qr <= (1LL << 24), "code too large");
                }
                const std::int64_t len = (qr - 1) / (q - 1);
                const auto s = shape(len, q);
                require(t >= 1 && t <= qr - 1, "t must lie in 1..q^r-1");
                return two(s, len * (q - 1) - t + 1, t);
            }
            case NodeKind::extend: {
                auto in = *child;
                const auto t = get(r, "t");
                require(t >= 1, "extend needs t >= 1");
                const auto s = shape(in.shape.n + t, in.shape.q);
                QuotientMatrix m = in.quotient;
                for (int i = 0; i < m.k(); ++i) m.at(i, i) += t * (in.shape.q - 1);
                std::optional<WitnessInfo> w;
                if (in.witness) w = WitnessInfo{in.witness->color, in.witness->dim + static_cast<int>(t)};
                return {s, m, w};
            }
            case NodeKind::mult_length: {
                auto in = *child;
                const auto t = get(r, "t");
                require(t >= 1, "mult-length needs t >= 1");
                const auto s = shape(in.shape.n * t, in.shape.q);
                QuotientMatrix m = in.quotient;
                for (int i = 0; i < m.k(); ++i)
                    for (int j = 0; j < m.k(); ++j) m.at(i, j) *= t;
                return {s, m, std::nullopt};
            }
            case NodeKind::mult_alphabet: {
                auto in = *child;
                const auto p = get(r, "p");
                require(p >= 1, "mult-alphabet needs p >= 1");
                const auto s = shape(in.shape.n, in.shape.q * p);
                QuotientMatrix m = in.quotient;
                for (int i = 0; i < m.k(); ++i) {
                    for (int j = 0; j < m.k(); ++j) m.at(i, j) *= p;
                    m.at(i, i) += in.shape.n * (p - 1);
                }
                return {s, m, std::nullopt};
            }
            case NodeKind::complement: {
                auto in = *child;
                require(in.quotient.k() == 2, "complement needs a 2-coloring");
                std::optional<WitnessInfo> w;
                if (in.witness) w = WitnessInfo{3 - in.witness->color, in.witness->dim};
                return {in.shape, in.quotient.swapped(), w};
            }
            case NodeKind::faces: {
                auto in = *child;
                const auto color = get(r, "color"), dim = get(r, "dim");
                require(color >= 1 && color <= in.quotient.k(), "color out of range");
                require(dim == 0 || dim == 1, "only point (dim 0) and line (dim 1) partitions can be produced");
                require(dim <= in.shape.n, "face dimension exceeds n");
                require(in.quotient.at(static_cast<int>(color - 1), static_cast<int>(color - 1)) >= dim * (in.shape.q - 1),
                        "class internal degree too small to contain faces of this dimension");
                return {in.shape, in.quotient, WitnessInfo{static_cast<int>(color), static_cast<int>(dim)}};
            }
            case NodeKind::splitI_base: {
                auto in = *child;
                get(r, "seed");
                require(in.quotient.k() == 2, "splitI-base needs a 2-coloring");
                const int q = in.shape.q;
                require_hqq(q);
                require(in.shape.n >= 1, "splitI-base needs n >= 1");
                const auto s = shape(static_cast<std::int64_t>(q) * in.shape.n, q);
                std::vector<std::int64_t> e(static_cast<std::size_t>(4 * q * q));
                for (int i = 0; i < 2 * q; ++i)
                    for (int j = 0; j < 2 * q; ++j) e[static_cast<std::size_t>(i * 2 * q + j)] = in.quotient.at(i / q, j / q);
                return {s, QuotientMatrix(2 * q, std::move(e)), std::nullopt};
            }
            case NodeKind::splitI_faces: {
                auto in = *child;
                get(r, "seed");
                std::string variant;
                try {
                    variant = r.sym("variant");
                } catch (const RecipeError&) {
                    fail("variant must be the symbol prime or doubleprime");
                }
                require(variant == "prime" || variant == "doubleprime", "variant must be prime or doubleprime");
                require(in.quotient.k() == 2, "splitI-faces needs a 2-coloring");
                require(in.witness && in.witness->color == 1, "splitI-faces needs a face partition of color 1");
                const int q = in.shape.q;
                require_hqq(q);
                const std::int64_t k = in.witness->dim;
                const auto a = in.quotient.at(0, 0), b = in.quotient.at(0, 1), c = in.quotient.at(1, 0),
                           d = in.quotient.at(1, 1);
                if (variant == "doubleprime") require(in.shape.n - k >= 1, "doubleprime variant needs n - k >= 1");
                require(in.shape.n >= 1, "splitI-faces needs n >= 1");
                const auto s = shape(static_cast<std::int64_t>(q) * in.shape.n, q);
                const std::int64_t diag = variant == "prime" ? a - k * (q - 1) : a + k * (q - 1) * (q - 1);
                const std::int64_t off = variant == "prime" ? a + k : a - k * (q - 1);
                require(diag >= 0 && off >= 0, "face partition inconsistent with the quotient matrix");
                QuotientMatrix m(q + 1, std::vector<std::int64_t>(static_cast<std::size_t>((q + 1) * (q + 1))));
                for (int i = 0; i < q; ++i) {
                    for (int j = 0; j < q; ++j) m.at(i, j) = i == j ? diag : off;
                    m.at(i, q) = q * b;
                    m.at(q, i) = c;
                }
                m.at(q, q) = q * d;
                return {s, m, std::nullopt};
            }
            case NodeKind::invasion: {
                auto in = *child;
                const auto mode = get(r, "mode");
                const int q = in.shape.q;
                const auto& S = in.quotient;
                auto range = [&](std::int64_t t, const char* name) {
                    require(t >= 0 && t <= q, std::string(name) + " must lie in 0..q");
                };
                if (mode == 1) {
                    require(S.k() == q + 1, "invasion mode 1 needs a (q+1)-coloring");
                    const auto ap = S.at(0, 0), al = S.at(0, 1), be = S.at(0, q), ga = S.at(q, 0);
                    for (int i = 0; i < q; ++i) {
                        for (int j = 0; j < q; ++j) require(S.at(i, j) == (i == j ? ap : al), "child matrix lacks the mode-1 block form");
                        require(S.at(i, q) == be && S.at(q, i) == ga, "child matrix lacks the mode-1 block form");
                    }
                    const auto m = ga - al, t = get(r, "t"), l = get(r, "l");
                    require(m >= 0, "gamma - alpha must be nonnegative");
                    range(t, "t");
                    require(l == 1 || l == 2, "l must be 1 or 2");
                    require(t * (l - 1) + (q - t) * (2 - l) != 0, "degenerate (t,l): output would be one color");
                    const auto s = shape(in.shape.n + m, q);
                    return two(s, ga * (q - t) + be * (l - 1), ga * t + be * (2 - l));
                }
                require(mode == 2, "invasion :mode must be 1 or 2");
                require(S.k() == 2 * q, "invasion mode 2 needs a 2q-coloring");
                const auto al = S.at(0, 0), be = S.at(0, q), ga = S.at(q, 0), de = S.at(q, q);
                for (int i = 0; i < 2 * q; ++i)
                    for (int j = 0; j < 2 * q; ++j) {
                        const auto want = i < q ? (j < q ? al : be) : (j < q ? ga : de);
                        require(S.at(i, j) == want, "child matrix lacks the mode-2 block form");
                    }
                const auto m = ga - al, t1 = get(r, "t1"), t2 = get(r, "t2");
                require(m >= 0 && be - de == m, "needs gamma - alpha = beta - delta >= 0");
                range(t1, "t1");
                range(t2, "t2");
                require(t1 + t2 != 0 && t1 + t2 != 2 * q, "t1 + t2 must avoid 0 and 2q");
                const auto s = shape(in.shape.n + m, q);
                return two(s, q * (ga + be) - ga * t1 - be * t2, ga * t1 + be * t2);
            }
            case NodeKind::flaass_std: {
                auto in = *child;
                get(r, "seed");
                require(in.quotient.k() == 2, "flaass-std needs a 2-coloring");
                const int q = in.shape.q;
                require_hqq(q);
                const auto b = in.quotient.b(), c = in.quotient.c(), lambda = in.quotient.main_eigenvalue();
                require(lambda <= 0, "main eigenvalue " + std::to_string(lambda) + " is positive");
                require(in.shape.n >= 1, "flaass-std needs n >= 1");
                const auto t1 = get(r, "t1"), t2 = get(r, "t2");
                require(t1 >= 0 && t1 <= q && t2 >= 0 && t2 <= q, "t1, t2 must lie in 0..q");
                require(t1 + t2 != 0 && t1 + t2 != 2 * q, "t1 + t2 must avoid 0 and 2q");
                const auto s = shape(static_cast<std::int64_t>(q) * in.shape.n - lambda, q);
                return two(s, q * (b + c) - (c * t1 + b * t2), c * t1 + b * t2);
            }
            case NodeKind::flaass_impr: {
                auto in = *child;
                get(r, "seed");
                require(in.quotient.k() == 2, "flaass-impr needs a 2-coloring");
                require(in.witness && in.witness->color == 1, "flaass-impr needs a face partition of color 1");
                const int q = in.shape.q;
                require_hqq(q);
                const std::int64_t k = in.witness->dim;
                const auto b = in.quotient.b(), c = in.quotient.c(), lambda = in.quotient.main_eigenvalue();
                const auto variant = get(r, "variant"), t = get(r, "t");
                require(t >= 1 && t <= q, "t must lie in 1..q");
                require(in.shape.n >= 1, "flaass-impr needs n >= 1");
                const std::int64_t qn = static_cast<std::int64_t>(q) * in.shape.n;
                if (variant == 1) {
                    require(lambda + k <= 0, "variant 1 needs lambda + k <= 0 (lambda=" + std::to_string(lambda) +
                                                 ", k=" + std::to_string(k) + ")");
                    return two(shape(qn - lambda - k, q), q * (b + c) - t * c, t * c);
                }
                require(variant == 2, "variant must be 1 or 2");
                require(lambda <= k * (q - 1), "variant 2 needs lambda <= k(q-1)");
                require(in.shape.n - k >= 1, "variant 2 needs n - k >= 1");
                auto out = two(shape(qn - lambda + k * (q - 1), q), q * (b + c) - t * c, t * c);
                out.witness = WitnessInfo{1, static_cast<int>(k * q)};
                return out;
            }
            case NodeKind::splitII: {
                auto in = *child;
                const int q = in.shape.q;
                const auto p = get(r, "p"), t = get(r, "t");
                require(in.shape.n == q + 1, "splitII needs a base coloring of H(q+1,q)");
                require(in.quotient == QuotientMatrix::two(in.shape.degree(), q * q - 1, 1),
                        "splitII needs the (q^2-1,1) perfect-code coloring");
                require(in.witness && in.witness->color == 2 && in.witness->dim == 1,
                        "splitII needs a line partition of color 2");
                require(p >= 1, "p must be >= 1");
                require(t >= 0 && t <= p - 1, "t must lie in 0..p-1");
                const auto s = shape(q + 1, q * p);
                auto out = two(s, (static_cast<std::int64_t>(q) * q - 1) * (p - t),
                               (static_cast<std::int64_t>(q) * q - 1) * t + p);
                out.witness = WitnessInfo{2, 1};
                return out;
            }
        }
        fail("unknown node");
    }
};

void print(const Recipe& r, std::ostream& os, int indent, bool pretty) {
    os << '(' << node_name(r.kind);
    for (const auto& [k, v] : r.params) {
        os << " :" << k << ' ';
        if (auto p = std::get_if<std::int64_t>(&v)) os << *p;
        else os << std::get<std::string>(v);
    }
    for (const auto& c : r.children) {
        if (pretty) os << '\n' << std::string(static_cast<std::size_t>(indent + 2), ' ');
        else os << ' ';
        print(*c, os, indent + 2, pretty);
    }
    os << ')';
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw RecipeError("", "parse error at offset " + std::to_string(pos) + ": " + what);
    }

    void skip() {
        while (pos < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            else if (text[pos] == ';')
                while (pos < text.size() && text[pos] != '\n') ++pos;
            else break;
        }
    }

    std::string_view atom() {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '(' &&
               text[pos] != ')' && text[pos] != ';')
            ++pos;
        if (start == pos) fail("expected a token");
        return text.substr(start, pos - start);
    }

    RecipePtr parse_node() {
        skip();
        if (pos >= text.size() || text[pos] != '(') fail("expected '('");
        ++pos;
        const auto name = atom();
        const auto kind = node_kind(name);
        if (!kind) fail("unknown node kind '" + std::string(name) + "'");
        const KindSpec& spec = spec_of(*kind);
        auto r = std::make_shared<Recipe>();
        r->kind = *kind;
        std::vector<std::pair<std::string, ParamValue>> given;
        while (true) {
            skip();
            if (pos >= text.size()) fail("unterminated node");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == '(') {
                r->children.push_back(parse_node());
                continue;
            }
            const auto key = atom();
            if (key.size() < 2 || key[0] != ':') fail("expected :keyword, got '" + std::string(key) + "'");
            const auto value = atom();
            const std::string k(key.substr(1));
            const ParamSpec* ps = nullptr;
            for (const auto& s : spec.params)
                if (s.name == k) ps = &s;
            if (!ps) fail("node " + std::string(name) + " has no parameter :" + k);
            for (const auto& g : given)
                if (g.first == k) fail("duplicate parameter :" + k);
            if (ps->symbol) {
                given.emplace_back(k, std::string(value));
            } else {
                std::int64_t v = 0;
                auto res = std::from_chars(value.data(), value.data() + value.size(), v);
                if (res.ec != std::errc() || res.ptr != value.data() + value.size())
                    fail("parameter :" + k + " needs an integer, got '" + std::string(value) + "'");
                given.emplace_back(k, v);
            }
        }
        // Canonical order; fill defaults. Invasion keeps only the keys of its mode.
        for (const auto& s : spec.params) {
            auto it = std::find_if(given.begin(), given.end(), [&](const auto& g) { return g.first == s.name; });
            if (it != given.end()) {
                r->params.push_back(*it);
            } else if (s.default_num && !(r->kind == NodeKind::invasion)) {
                r->params.emplace_back(std::string(s.name), *s.default_num);
            }
        }
        return r;
    }
};

}  // namespace

RecipeInfo analyze(const Recipe& r) {
    Analyzer a{std::string(node_name(r.kind))};
    return a.run(r);
}

RecipeInfo analyze_step(const Recipe& node, const std::optional<RecipeInfo>& child) {
    Analyzer a{std::string(node_name(node.kind))};
    return a.step(node, child ? &*child : nullptr);
}

QuotientMatrix predicted_quotient(const Recipe& r) { return analyze(r).quotient; }

std::string to_string(const Recipe& r) {
    std::ostringstream os;
    print(r, os, 0, false);
    return os.str();
}

std::string to_pretty(const Recipe& r) {
    std::ostringstream os;
    print(r, os, 0, true);
    os << '\n';
    return os.str();
}

RecipePtr parse_recipe(std::string_view text) {
    Parser p{text};
    auto r = p.parse_node();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input after recipe");
    return r;
}

}  // namespace hpc
