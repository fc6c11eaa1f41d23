#include "tsys/hyperfields.hpp"

#include <algorithm>
#include <deque>

namespace tsys {

namespace {

ElemSet bit(int i) { return ElemSet{1} << i; }

template <class F>
void for_bits(ElemSet x, F&& f) {
    for (int i = 0; x; ++i, x >>= 1)
        if (x & 1) f(i);
}

}  // namespace

ElemSet Hyperfield::set_add(ElemSet x, ElemSet y) const {
    ElemSet out = 0;
    for_bits(x, [&](int a) { for_bits(y, [&](int b) { out |= hyperadd[a][b]; }); });
    return out;
}

ElemSet Hyperfield::set_mul(ElemSet x, ElemSet y) const {
    ElemSet out = 0;
    for_bits(x, [&](int a) { for_bits(y, [&](int b) { out |= bit(mul[a][b]); }); });
    return out;
}

ElemSet Hyperfield::set_neg(ElemSet x) const {
    ElemSet out = 0;
    for_bits(x, [&](int a) { out |= bit(neg[a]); });
    return out;
}

std::string Hyperfield::show(ElemSet x) const {
    std::string s = "{";
    bool first = true;
    for_bits(x, [&](int a) {
        if (!first) s += ",";
        s += names[a];
        first = false;
    });
    return s + "}";
}

Hyperfield make_krasner() {
    Hyperfield h;
    h.name = "krasner";
    h.names = {"0", "1"};
    h.hyperadd = {{bit(0), bit(1)}, {bit(1), bit(0) | bit(1)}};
    h.mul = {{0, 0}, {0, 1}};
    h.neg = {0, 1};
    return h;
}

Hyperfield make_signs() {
    Hyperfield h;
    h.name = "signs";
    h.names = {"0", "1", "-1"};
    const ElemSet all = bit(0) | bit(1) | bit(2);
    h.hyperadd = {{bit(0), bit(1), bit(2)}, {bit(1), bit(1), all}, {bit(2), all, bit(2)}};
    h.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
    h.neg = {0, 2, 1};
    return h;
}

Report check_hyperfield(const Hyperfield& h) {
    Report r;
    r.checked = {"hyperadd-comm", "hyperadd-assoc", "zero-identity", "unique-negation", "distributive", "mul-assoc"};
    const int n = h.size();
    auto E = [](int i) { return Elem::symbol(i); };
    for (int a = 0; a < n; ++a) {
        if (h.hyperadd[a][h.zero] != bit(a)) r.fail("zero-identity", {E(a)});
        for (int b = 0; b < n; ++b) {
            if (h.hyperadd[a][b] != h.hyperadd[b][a]) r.fail("hyperadd-comm", {E(a), E(b)});
            const bool has_zero = h.hyperadd[a][b] & bit(h.zero);
            if (has_zero != (b == h.neg[a])) r.fail("unique-negation", {E(a), E(b)});
            for (int c = 0; c < n; ++c) {
                if (h.set_add(h.set_add(bit(a), bit(b)), bit(c)) != h.set_add(bit(a), h.set_add(bit(b), bit(c))))
                    r.fail("hyperadd-assoc", {E(a), E(b), E(c)});
                if (h.set_mul(bit(a), h.hyperadd[b][c]) != h.set_add(bit(h.mul[a][b]), bit(h.mul[a][c])))
                    r.fail("distributive", {E(a), E(b), E(c)});
                if (h.mul[h.mul[a][b]][c] != h.mul[a][h.mul[b][c]]) r.fail("mul-assoc", {E(a), E(b), E(c)});
            }
        }
    }
    return r;
}

SofH build_S_of_H(const Hyperfield& h, std::size_t bound) {
    if (h.size() > 64) throw InvalidInput("hyperfield too large for set encoding");
    std::vector<ElemSet> sets;
    std::map<ElemSet, int> index;
    std::deque<ElemSet> work;
    auto push = [&](ElemSet s) {
        if (index.count(s)) return;
        if (sets.size() >= bound) throw NonterminatingClosure("S(H) closure exceeds " + std::to_string(bound));
        index[s] = static_cast<int>(sets.size());
        sets.push_back(s);
        work.push_back(s);
    };
    for (int a = 0; a < h.size(); ++a) push(bit(a));
    while (!work.empty()) {
        ElemSet s = work.front();
        work.pop_front();
        for (std::size_t i = 0; i < sets.size(); ++i) {
            push(h.set_add(s, sets[i]));
            push(h.set_mul(s, sets[i]));
        }
    }
    const int n = static_cast<int>(sets.size());
    FinSpec spec;
    for (auto s : sets) spec.names.push_back(h.show(s));
    spec.add.assign(n, std::vector<int>(n));
    spec.mul.assign(n, std::vector<int>(n));
    spec.surpass.emplace();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            spec.add[i][j] = index.at(h.set_add(sets[i], sets[j]));
            spec.mul[i][j] = index.at(h.set_mul(sets[i], sets[j]));
            if ((sets[i] & sets[j]) == sets[i]) spec.surpass->emplace_back(i, j);
        }
    for (int i = 0; i < n; ++i) spec.neg.push_back(index.at(h.set_neg(sets[i])));
    spec.zero = index.at(bit(h.zero));
    spec.one = index.at(bit(h.one));
    for (int a = 0; a < h.size(); ++a)
        if (a != h.zero) spec.tangibles.push_back(index.at(bit(a)));
    return {std::make_shared<FinSys>(std::move(spec), "S(" + h.name + ")"), std::move(sets)};
}

// ---------------------------------------------------------------------------
// Tropical hyperfield and S(T).

Elem TropicalHyperfield::hyperadd(const TropVal& a, const TropVal& b) const {
    if (!a && !b) return Elem::zero();
    if (!a) return Elem::tangible(*b);
    if (!b) return Elem::tangible(*a);
    if (*a == *b) return Elem::interval(*a);
    return Elem::tangible(*a < *b ? *b : *a);
}

TropVal TropicalHyperfield::mul(const TropVal& a, const TropVal& b) const {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

bool trop_member(const TropVal& v, const Elem& s) {
    switch (s.tag()) {
        case Tag::zero: return !v;
        case Tag::tangible: return v && *v == s.value();
        case Tag::interval: return !v || *v <= s.value();
        default: throw InvalidElement("not an S(T) element");
    }
}

namespace {

// Elements are subsets of Q u {-inf}: {-inf}, {v}, or [-inf, v].
class SOfTropical final : public System {
public:
    explicit SOfTropical(SampleConfig cfg) : cfg_(cfg) {}
    std::string name() const override { return "S(tropical)"; }
    bool is_triple() const override { return true; }
    Elem zero() const override { return Elem::zero(); }
    std::optional<Elem> one() const override { return Elem::tangible(0); }
    bool contains(const Elem& e) const override {
        return e.is_zero() || e.tag() == Tag::tangible || e.tag() == Tag::interval;
    }

    // X (+) Y is the union of x (+) y; with maxima mx, my the union is X when
    // mx > my and the interval [-inf, m] when mx = my = m.
    Elem add(const Elem& x, const Elem& y) const override {
        require(x);
        require(y);
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        if (x.value() == y.value()) return Elem::interval(x.value());
        return x.value() > y.value() ? x : y;
    }
    // Elementwise sums; an interval factor yields the interval below the sum of maxima.
    Elem mul(const Elem& x, const Elem& y) const override {
        require(x);
        require(y);
        if (x.is_zero() || y.is_zero()) return Elem::zero();
        Rational v = x.value() + y.value();
        if (x.tag() == Tag::interval || y.tag() == Tag::interval) return Elem::interval(v);
        return Elem::tangible(v);
    }
    Elem negate(const Elem& x) const override {
        require(x);
        return x;
    }
    bool tangible(const Elem& x) const override { return x.tag() == Tag::tangible; }
    // Inclusion.
    bool surpass(const Elem& x, const Elem& y) const override {
        require(x);
        require(y);
        switch (y.tag()) {
            case Tag::zero: return x.is_zero();
            case Tag::tangible: return x == y;
            default: return x.is_zero() || x.value() <= y.value();
        }
    }
    bool is_quasi_zero(const Elem& x) const override { return x.is_zero() || x.tag() == Tag::interval; }
    std::vector<Elem> sample(Rng& rng, std::size_t n) const override {
        std::uniform_int_distribution<int> kind(0, 9);
        std::vector<Elem> out;
        for (std::size_t i = 0; i < n; ++i) {
            int k = kind(rng);
            if (k == 0) out.push_back(Elem::zero());
            else if (k <= 5) out.push_back(Elem::tangible(sample_rational(rng, cfg_)));
            else out.push_back(Elem::interval(sample_rational(rng, cfg_)));
        }
        return out;
    }
    std::vector<Elem> summand_candidates(const Elem& t) const override {
        if (t.is_zero()) return {Elem::zero()};
        return {Elem::zero(), Elem::tangible(t.value()), Elem::interval(t.value())};
    }
    std::vector<Elem> height_candidates(const Elem& b) const override {
        if (b.is_zero()) return {};
        return {Elem::tangible(b.value())};
    }
    std::optional<Elem> inverse(const Elem& a) const override {
        if (a.tag() != Tag::tangible) return std::nullopt;
        return Elem::tangible(-a.value());
    }
    std::string show(const Elem& a) const override {
        switch (a.tag()) {
            case Tag::zero: return "{-inf}";
            case Tag::tangible: return "{" + a.value().str() + "}";
            default: return "[-inf," + a.value().str() + "]";
        }
    }

private:
    SampleConfig cfg_;
};

}  // namespace

SysPtr make_S_of_tropical(SampleConfig cfg) { return std::make_shared<SOfTropical>(cfg); }

Elem supertropical_to_S(const Elem& e) {
    switch (e.tag()) {
        case Tag::zero: return e;
        case Tag::tangible: return e;
        case Tag::ghost: return Elem::interval(e.value());
        default: throw InvalidElement("not a supertropical element");
    }
}

Elem S_to_supertropical(const Elem& e) {
    switch (e.tag()) {
        case Tag::zero: return e;
        case Tag::tangible: return e;
        case Tag::interval: return Elem::ghost(e.value());
        default: throw InvalidElement("not an S(T) element");
    }
}

// ---------------------------------------------------------------------------
// Functors.

SemiringMonoid functor_t(const FinSys& a) {
    if (a.kind() != Kind::semiring || !a.zero_index()) throw InvalidInput("functor t needs a semiring with zero");
    const int z = *a.zero_index();
    SemiringMonoid out;
    for (int x = 0; x < a.size(); ++x) {
        if (x == z) continue;
        for (int y = 0; y < a.size(); ++y)
            if (y != z && a.mul_i(x, y) == z)
                throw ZeroDivisor(a.name_of(x) + " * " + a.name_of(y) + " = " + a.name_of(z));
        out.monoid.push_back(x);
    }
    out.semiring = std::make_shared<FinSys>(a.spec(), a.name());
    return out;
}

FinPtr functor_e(const SemiringMonoid& p) {
    FinSpec spec = p.semiring->spec();
    spec.neg.resize(spec.names.size());
    for (std::size_t i = 0; i < spec.neg.size(); ++i) spec.neg[i] = static_cast<int>(i);
    spec.tangibles = p.monoid;
    spec.surpass.reset();
    return std::make_shared<FinSys>(std::move(spec), "e(" + p.semiring->name() + ")");
}

SofH functor_a(const Hyperfield& h) { return build_S_of_H(h); }

SofH functor_c(const Hyperfield& h) {
    for (int a = 0; a < h.size(); ++a)
        for (int b = 0; b < h.size(); ++b)
            if (a != h.zero && b != h.zero && h.mul[a][b] == h.zero)
                throw ZeroDivisor(h.names[a] + " * " + h.names[b] + " = " + h.names[h.zero]);
    return build_S_of_H(h);
}

bool is_hyperfield_homomorphism(const Hyperfield& h1, const Hyperfield& h2, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != h1.size()) return false;
    if (f[h1.zero] != h2.zero || f[h1.one] != h2.one) return false;
    for (int a = 0; a < h1.size(); ++a) {
        if (f[h1.neg[a]] != h2.neg[f[a]]) return false;
        for (int b = 0; b < h1.size(); ++b) {
            if (f[h1.mul[a][b]] != h2.mul[f[a]][f[b]]) return false;
            ElemSet img = 0;
            for_bits(h1.hyperadd[a][b], [&](int c) { img |= bit(f[c]); });
            if ((img & h2.hyperadd[f[a]][f[b]]) != img) return false;
        }
    }
    return true;
}

// Each S(H1) element is the set of sums of some finite family of singletons; the
// image is the S(H2) sum of the images. Families are recovered by a search over
// sums of up to |H1| + 1 singletons.
std::vector<int> functor_a_map(const Hyperfield& h1, const SofH& s1, const Hyperfield& h2, const SofH& s2,
                               const std::vector<int>& f) {
    if (!is_hyperfield_homomorphism(h1, h2, f)) throw NotHomomorphism("functor a is defined on homomorphisms only");
    std::map<ElemSet, int> idx2;
    for (std::size_t i = 0; i < s2.sets.size(); ++i) idx2[s2.sets[i]] = static_cast<int>(i);
    // (set in H1, image set in H2) reachable as sums of singletons.
    std::map<ElemSet, ElemSet> rep;
    std::vector<std::pair<ElemSet, ElemSet>> frontier;
    for (int a = 0; a < h1.size(); ++a) {
        rep.emplace(bit(a), bit(f[a]));
        frontier.emplace_back(bit(a), bit(f[a]));
    }
    for (int round = 0; round < h1.size() + 1 && !frontier.empty(); ++round) {
        std::vector<std::pair<ElemSet, ElemSet>> next;
        for (auto [x, fx] : frontier)
            for (int a = 0; a < h1.size(); ++a) {
                ElemSet y = h1.set_add(x, bit(a));
                ElemSet fy = h2.set_add(fx, bit(f[a]));
                auto [it, fresh] = rep.emplace(y, fy);
                if (fresh) next.emplace_back(y, fy);
                else if (it->second != fy) throw IllDefined("a(f) depends on the chosen sum representative");
            }
        frontier = std::move(next);
    }
    std::vector<int> out;
    for (auto s : s1.sets) {
        auto it = rep.find(s);
        if (it == rep.end()) {
            // Products of sums are sums of products, so every element arises as a sum.
            throw IllDefined("no sum representative for " + h1.show(s));
        }
        out.push_back(idx2.at(it->second));
    }
    return out;
}

std::optional<std::vector<int>> image_set_map(const Hyperfield& h1, const SofH& s1, const SofH& s2,
                                              const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != h1.size()) throw InvalidInput("index map has the wrong length");
    std::map<ElemSet, int> idx2;
    for (std::size_t i = 0; i < s2.sets.size(); ++i) idx2[s2.sets[i]] = static_cast<int>(i);
    std::vector<int> out;
    for (auto s : s1.sets) {
        ElemSet img = 0;
        for_bits(s, [&](int a) { img |= bit(f[a]); });
        auto it = idx2.find(img);
        if (it == idx2.end()) return std::nullopt;
        out.push_back(it->second);
    }
    return out;
}

ValuationReport check_valuation(const System& src, const std::vector<Elem>& domain,
                                const std::function<TropVal(const Elem&)>& nu) {
    return check_valuation_generic(
        domain, src.zero(), [&](const Elem& a, const Elem& b) { return src.add(a, b); },
        [&](const Elem& a, const Elem& b) { return src.mul(a, b); }, nu, [&](const Elem& a) { return src.show(a); });
}

}  // namespace tsys
