#include "hpc/algebra.hpp"

#include <numeric>
#include <sstream>

#include "hpc/errors.hpp"
#include "hpc/rng.hpp"

namespace hpc {

bool is_prime(long v) noexcept {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::optional<std::pair<int, int>> prime_power(long q) noexcept {
    if (q < 2) return std::nullopt;
    long p = 2;
    while (q % p) ++p;
    int s = 0;
    while (q % p == 0) {
        q /= p;
        ++s;
    }
    if (q != 1) return std::nullopt;
    return std::pair<int, int>{static_cast<int>(p), s};
}

std::vector<long> prime_factors(long v) {
    std::vector<long> out;
    for (long d = 2; d * d <= v; ++d) {
        if (v % d) continue;
        out.push_back(d);
        while (v % d == 0) v /= d;
    }
    if (v > 1) out.push_back(v);
    return out;
}

namespace {

using Poly = std::vector<int>;  // c_0..c_deg

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m over GF(p).
Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const int lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly digits(std::uint32_t label, int p, int s) {
    Poly d(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        d[i] = static_cast<int>(label % p);
        label /= p;
    }
    return d;
}

std::uint32_t label_of(const Poly& d, int p) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

bool irreducible(const Poly& m, int p) {
    const int s = static_cast<int>(m.size()) - 1;
    for (int d = 1; d <= s / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long low = 0; low < count; ++low) {
            Poly f = digits(static_cast<std::uint32_t>(low), p, d);
            f.push_back(1);
            if (poly_mod(m, f, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<int> least_irreducible(int p, int s) {
    long count = 1;
    for (int i = 0; i < s; ++i) count *= p;
    for (long low = 0; low < count; ++low) {
        Poly m = digits(static_cast<std::uint32_t>(low), p, s);
        m.push_back(1);
        if (s == 1 || (m[0] != 0 && irreducible(m, p))) return m;
    }
    throw Error("no irreducible polynomial found");  // unreachable for prime p
}

FiniteField FiniteField::make(int p, int s) {
    if (!is_prime(p)) throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
    if (s < 1) throw ParameterError("field degree must be >= 1");
    long order = 1;
    for (int i = 0; i < s; ++i) {
        order *= p;
        if (order > (1L << 16)) throw ParameterError("field order exceeds 2^16");
    }
    FiniteField f;
    f.p_ = p;
    f.s_ = s;
    f.order_ = static_cast<int>(order);
    f.modulus_ = least_irreducible(p, s);

    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
        return label_of(poly_mod(poly_mul(digits(a, p, s), digits(b, p, s), p), f.modulus_, p), p);
    };
    const auto group = static_cast<std::uint32_t>(order - 1);
    for (std::uint32_t g = 1; g < static_cast<std::uint32_t>(order); ++g) {
        std::vector<std::uint32_t> powers{1};
        std::uint32_t x = g;
        while (x != 1) {
            powers.push_back(x);
            x = slow_mul(x, g);
        }
        if (powers.size() == group) {
            f.exp_ = std::move(powers);
            break;
        }
    }
    f.log_.assign(static_cast<std::size_t>(order), 0);
    for (std::uint32_t i = 0; i < group; ++i) f.log_[f.exp_[i]] = i;
    return f;
}

FiniteField FiniteField::of_order(int q) {
    auto pp = prime_power(q);
    if (!pp) throw Unsupported("q=" + std::to_string(q) + " is not a prime power");
    return make(pp->first, pp->second);
}

std::string FiniteField::modulus_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = s_; i >= 0; --i) {
        const int c = modulus_[i];
        if (!c) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

void FiniteField::check(Element a) const {
    if (a >= static_cast<Element>(order_))
        throw ParameterError("element " + std::to_string(a) + " outside GF(" + std::to_string(order_) + ")");
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
    check(a);
    check(b);
    Element r = 0, scale = 1;
    for (int i = 0; i < s_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

FiniteField::Element FiniteField::neg(Element a) const {
    check(a);
    Element r = 0, scale = 1;
    for (int i = 0; i < s_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::mul(Element a, Element b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    const auto group = static_cast<std::uint32_t>(order_ - 1);
    return exp_[(log_[a] + log_[b]) % group];
}

FiniteField::Element FiniteField::inv(Element a) const {
    check(a);
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(order_) + ")");
    const auto group = static_cast<std::uint32_t>(order_ - 1);
    return exp_[(group - log_[a]) % group];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
    check(a);
    if (e == 0) return 1;
    if (a == 0) return 0;
    const auto group = static_cast<std::uint64_t>(order_ - 1);
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % group)) % group];
}

namespace {

std::vector<Symbol> random_permutation(SplitMix64& rng, int q) {
    std::vector<Symbol> perm(static_cast<std::size_t>(q));
    std::iota(perm.begin(), perm.end(), Symbol{0});
    for (int i = q - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return perm;
}

}  // namespace

Quasigroup Quasigroup::iterated_sum(int arity, int order, std::uint64_t seed) {
    if (arity < 1) throw ParameterError("quasigroup arity must be >= 1");
    if (order < 2 || order > kMaxAlphabet) throw ParameterError("quasigroup order out of range");
    Quasigroup qg;
    qg.arity_ = arity;
    qg.order_ = order;
    qg.seed_ = seed;
    if (seed != 0) {
        SplitMix64 rng(seed);
        for (int i = 0; i < arity; ++i) qg.perms_.push_back(random_permutation(rng, order));
        qg.outer_ = random_permutation(rng, order);
    }
    return qg;
}

Quasigroup Quasigroup::from_table(int arity, int order, std::shared_ptr<const std::vector<Symbol>> table) {
    if (arity < 1) throw ParameterError("quasigroup arity must be >= 1");
    GraphShape shape(arity, order);
    if (!table || table->size() != shape.size()) throw ParameterError("quasigroup table has wrong size");
    Quasigroup qg;
    qg.arity_ = arity;
    qg.order_ = order;
    qg.table_ = std::move(table);
    return qg;
}

Symbol Quasigroup::operator()(std::span<const Symbol> args) const {
    if (table_) {
        std::uint64_t r = 0;
        for (std::size_t i = args.size(); i-- > 0;) r = r * static_cast<std::uint64_t>(order_) + args[i];
        return (*table_)[r];
    }
    unsigned sum = 0;
    if (perms_.empty()) {
        for (Symbol a : args) sum += a;
        return static_cast<Symbol>(sum % static_cast<unsigned>(order_));
    }
    for (std::size_t i = 0; i < args.size(); ++i) sum += perms_[i][args[i]];
    return outer_[sum % static_cast<unsigned>(order_)];
}

namespace {

bool line_is_latin(const Quasigroup& qg, Vertex& base, int dir) {
    std::vector<bool> seen(static_cast<std::size_t>(qg.order()), false);
    const Symbol saved = base[dir];
    bool ok = true;
    for (int s = 0; s < qg.order() && ok; ++s) {
        base[dir] = static_cast<Symbol>(s);
        const Symbol v = qg(base);
        if (v >= qg.order() || seen[v]) ok = false;
        else seen[v] = true;
    }
    base[dir] = saved;
    return ok;
}

}  // namespace

QuasigroupReport validate_quasigroup(const Quasigroup& qg, std::uint64_t budget, std::uint64_t samples,
                                     std::uint64_t seed) {
    QuasigroupReport rep;
    GraphShape shape(qg.arity(), qg.order());
    if (shape.fits_u64() && shape.size() <= budget) {
        rep.exhaustive = true;
        Vertex v(static_cast<std::size_t>(shape.n));
        do {
            for (int dir = 0; dir < shape.n; ++dir) {
                if (v[dir] != 0) continue;
                ++rep.lines_checked;
                if (!line_is_latin(qg, v, dir)) rep.violations.push_back({v, dir});
            }
        } while (increment(v.coords(), shape.q));
        return rep;
    }
    SplitMix64 rng(seed);
    Vertex v(static_cast<std::size_t>(shape.n));
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (auto& s : v.coords()) s = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(shape.q)));
        const int dir = static_cast<int>(rng.below(static_cast<std::uint64_t>(shape.n)));
        v[dir] = 0;
        ++rep.lines_checked;
        if (!line_is_latin(qg, v, dir)) rep.violations.push_back({v, dir});
    }
    return rep;
}

}  // namespace hpc
