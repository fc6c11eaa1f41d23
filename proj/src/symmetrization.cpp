#include "tsys/symmetrization.hpp"

#include <map>
#include <set>

namespace tsys {

Symmetrized::Symmetrized(SysPtr base) : base_(std::move(base)) {
    if (!base_->has_zero()) throw InvalidInput("symmetrization needs a base with zero");
    if (const auto* all = base_->elements()) {
        finite_ = true;
        for (const auto& a : *all)
            for (const auto& b : *all) elems_.push_back(Elem::pair(a, b));
        // Every nonzero base element must be a finite sum of tangibles.
        std::set<Elem> reach{base_->zero()};
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& r : std::vector<Elem>(reach.begin(), reach.end()))
                for (const auto& t : *all)
                    if (base_->tangible(t) && reach.insert(base_->add(r, t)).second) grew = true;
        }
        generated_ = reach.size() == all->size();
    }
}

Elem Symmetrized::zero() const { return Elem::pair(base_->zero(), base_->zero()); }

std::optional<Elem> Symmetrized::one() const {
    auto u = base_->one();
    if (!u) return std::nullopt;
    return Elem::pair(*u, base_->zero());
}

bool Symmetrized::contains(const Elem& e) const {
    return e.tag() == Tag::pair && base_->contains(e.pos()) && base_->contains(e.neg());
}

Elem Symmetrized::add(const Elem& a, const Elem& b) const {
    require(a);
    require(b);
    return Elem::pair(base_->add(a.pos(), b.pos()), base_->add(a.neg(), b.neg()));
}

// Products with a zero factor vanish without consulting the base action.
Elem Symmetrized::term(const Elem& a, const Elem& b) const {
    const Elem z = base_->zero();
    if (a == z || b == z) return z;
    return base_->mul(a, b);
}

Elem Symmetrized::twist(const Elem& x, const Elem& y) const {
    return Elem::pair(base_->add(term(x.pos(), y.pos()), term(x.neg(), y.neg())),
                      base_->add(term(x.pos(), y.neg()), term(x.neg(), y.pos())));
}

Elem Symmetrized::mul(const Elem& a, const Elem& b) const {
    require(a);
    require(b);
    if (base_->kind() == Kind::semiring) return twist(a, b);
    const Elem z = zero();
    if (a == z || b == z) return z;
    if (tangible(a)) return twist(a, b);
    if (tangible(b)) return twist(b, a);
    throw ActionOnly("twist product over an action-only base needs an operand in T-hat");
}

Elem Symmetrized::negate(const Elem& a) const {
    require(a);
    return switch_map(a);
}

bool Symmetrized::tangible(const Elem& a) const {
    const Elem z = base_->zero();
    return (a.neg() == z && base_->tangible(a.pos())) || (a.pos() == z && base_->tangible(a.neg()));
}

bool Symmetrized::is_quasi_zero(const Elem& a) const {
    require(a);
    return a.pos() == a.neg();
}

// a <= b iff b = a + (c,c) for a single base element c.
bool Symmetrized::surpass(const Elem& a, const Elem& b) const {
    require(a);
    require(b);
    if (a == b) return true;
    std::set<Elem> cands;
    for (const auto& side : {b.pos(), b.neg()})
        for (const auto& c : base_->summand_candidates(side)) cands.insert(c);
    for (const auto& c : cands)
        if (base_->add(a.pos(), c) == b.pos() && base_->add(a.neg(), c) == b.neg()) return true;
    return false;
}

std::vector<Elem> Symmetrized::sample(Rng& rng, std::size_t n) const {
    auto ps = base_->sample(rng, n), qs = base_->sample(rng, n);
    std::uniform_int_distribution<int> shape(0, 3);
    std::vector<Elem> out;
    out.reserve(n);
    const Elem z = base_->zero();
    for (std::size_t i = 0; i < n; ++i) {
        switch (shape(rng)) {
            case 0: out.push_back(Elem::pair(ps[i], z)); break;
            case 1: out.push_back(Elem::pair(z, qs[i])); break;
            default: out.push_back(Elem::pair(ps[i], qs[i])); break;
        }
    }
    return out;
}

std::vector<Elem> Symmetrized::summand_candidates(const Elem& target) const {
    if (finite_) return elems_;
    auto ps = base_->summand_candidates(target.pos());
    auto qs = base_->summand_candidates(target.neg());
    std::vector<Elem> out;
    for (const auto& p : ps)
        for (const auto& q : qs) out.push_back(Elem::pair(p, q));
    return out;
}

std::vector<Elem> Symmetrized::height_candidates(const Elem& b) const {
    std::vector<Elem> out;
    const Elem z = base_->zero();
    if (b.pos() != z)
        for (const auto& t : base_->height_candidates(b.pos())) out.push_back(Elem::pair(t, z));
    if (b.neg() != z)
        for (const auto& t : base_->height_candidates(b.neg())) out.push_back(Elem::pair(z, t));
    return out;
}

std::optional<Elem> Symmetrized::inverse(const Elem& a) const {
    const Elem z = base_->zero();
    if (!tangible(a)) return std::nullopt;
    if (a.neg() == z) {
        auto i = base_->inverse(a.pos());
        if (!i) return std::nullopt;
        return Elem::pair(*i, z);
    }
    auto i = base_->inverse(a.neg());
    if (!i) return std::nullopt;
    return Elem::pair(z, *i);
}

std::string Symmetrized::show(const Elem& a) const {
    return "(" + base_->show(a.pos()) + "," + base_->show(a.neg()) + ")";
}

std::shared_ptr<const Symmetrized> symmetrize(SysPtr base) { return std::make_shared<Symmetrized>(std::move(base)); }

Elem twist_mul(const System& base, const Elem& x, const Elem& y) {
    auto mul = [&](const Elem& a, const Elem& b) {
        if (a == base.zero() || b == base.zero()) return base.zero();
        return base.mul(a, b);
    };
    return Elem::pair(base.add(mul(x.pos(), y.pos()), mul(x.neg(), y.neg())),
                      base.add(mul(x.pos(), y.neg()), mul(x.neg(), y.pos())));
}

Elem embed(const System& base, const Elem& a) { return Elem::pair(a, base.zero()); }

Elem switch_map(const Elem& x) {
    if (x.tag() != Tag::pair) throw InvalidElement("switch map needs a pair");
    return Elem::pair(x.neg(), x.pos());
}

Elem pair_action(const System& base, const Elem& pair, const Elem& x) {
    auto act = [&](const Elem& a) { return a == base.zero() ? base.zero() : base.mul(a, x); };
    return base.add(act(pair.pos()), base.negate(act(pair.neg())));
}

Elem componentwise_negate(const System& base, const Elem& pair) {
    return Elem::pair(base.negate(pair.pos()), base.negate(pair.neg()));
}

Elem sym_eval(const System& base, const Polynomial& f, const Polynomial& g, const Elem& b) {
    if (f.nvars != 1 || g.nvars != 1) throw InvalidInput("sym_eval needs univariate polynomials");
    if (b.tag() != Tag::pair) throw InvalidElement("sym_eval needs a pair point");
    const Elem &b0 = b.pos(), &b1 = b.neg();
    return Elem::pair(base.add(eval(base, f, {b0}), eval(base, g, {b1})),
                      base.add(eval(base, f, {b1}), eval(base, g, {b0})));
}

bool is_symmetrized_root(const System& base, const Polynomial& f, const Polynomial& g, const Elem& b) {
    Elem v = sym_eval(base, f, g, b);
    return v.pos() == v.neg();
}

Elem sym_eval_twist(const Symmetrized& sym, const Polynomial& f, const Polynomial& g, const Elem& b) {
    if (f.nvars != 1 || g.nvars != 1 || f.laurent || g.laurent)
        throw InvalidInput("sym_eval_twist needs univariate polynomials");
    const System& base = *sym.base();
    std::map<int, Elem> coef;
    for (const auto& [e, c] : f.terms) coef[e[0]] = Elem::pair(c, base.zero());
    for (const auto& [e, c] : g.terms) {
        auto it = coef.find(e[0]);
        Elem pos = it == coef.end() ? base.zero() : it->second.pos();
        coef[e[0]] = Elem::pair(pos, c);
    }
    std::vector<std::pair<Exponent, Elem>> terms;
    for (const auto& [k, c] : coef) terms.push_back({{k}, c});
    return eval(sym, make_polynomial(sym, 1, false, terms), {b});
}

}  // namespace tsys
