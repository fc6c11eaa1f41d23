#include "tsys/system.hpp"

namespace tsys {

namespace {

bool is_val(const Elem& e) { return e.tag() == Tag::tangible || e.tag() == Tag::ghost; }

// Magnitude comparison with zero as -infinity.
int mag_cmp(const Elem& a, const Elem& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero() ? 0 : (a.is_zero() ? -1 : 1);
    return a.value().compare(b.value());
}

class Supertropical final : public System {
public:
    explicit Supertropical(SampleConfig cfg) : cfg_(cfg) {}
    std::string name() const override { return "supertropical"; }
    bool is_triple() const override { return true; }
    Elem zero() const override { return Elem::zero(); }
    std::optional<Elem> one() const override { return Elem::tangible(0); }
    bool contains(const Elem& e) const override { return e.is_zero() || is_val(e); }

    Elem add(const Elem& a, const Elem& b) const override {
        require(a);
        require(b);
        int c = mag_cmp(a, b);
        if (c > 0) return a;
        if (c < 0) return b;
        return a.is_zero() ? a : Elem::ghost(a.value());
    }
    Elem mul(const Elem& a, const Elem& b) const override {
        require(a);
        require(b);
        if (a.is_zero() || b.is_zero()) return Elem::zero();
        Rational v = a.value() + b.value();
        return (a.tag() == Tag::ghost || b.tag() == Tag::ghost) ? Elem::ghost(v) : Elem::tangible(v);
    }
    Elem negate(const Elem& a) const override {
        require(a);
        return a;
    }
    bool tangible(const Elem& a) const override { return a.tag() == Tag::tangible; }

    // b <= c iff c == b, or c is a ghost of magnitude at least |b|.
    bool surpass(const Elem& b, const Elem& c) const override {
        require(b);
        require(c);
        if (b == c) return true;
        return c.tag() == Tag::ghost && mag_cmp(c, b) >= 0;
    }
    bool is_quasi_zero(const Elem& a) const override { return a.is_zero() || a.tag() == Tag::ghost; }

    std::vector<Elem> sample(Rng& rng, std::size_t n) const override {
        std::uniform_int_distribution<int> kind(0, 9);
        std::vector<Elem> out;
        for (std::size_t i = 0; i < n; ++i) {
            int k = kind(rng);
            if (k == 0) out.push_back(Elem::zero());
            else if (k <= 5) out.push_back(Elem::tangible(sample_rational(rng, cfg_)));
            else out.push_back(Elem::ghost(sample_rational(rng, cfg_)));
        }
        return out;
    }
    std::vector<Elem> summand_candidates(const Elem& t) const override {
        if (t.is_zero()) return {Elem::zero()};
        return {Elem::zero(), Elem::tangible(t.value()), Elem::ghost(t.value())};
    }
    std::vector<Elem> height_candidates(const Elem& b) const override {
        if (b.is_zero()) return {};
        return {Elem::tangible(b.value())};
    }
    std::optional<Elem> inverse(const Elem& a) const override {
        if (a.tag() != Tag::tangible) return std::nullopt;
        return Elem::tangible(-a.value());
    }
    std::string show(const Elem& a) const override { return a.debug(); }

private:
    SampleConfig cfg_;
};

// Max-plus (sense = +1) or min-plus (sense = -1) over Q with zero = the
// absorbing infinity.
class Idempotent final : public System {
public:
    Idempotent(int sense, SampleConfig cfg) : sense_(sense), cfg_(cfg) {}
    std::string name() const override { return sense_ > 0 ? "maxplus" : "minplus"; }
    bool is_triple() const override { return false; }
    Elem zero() const override { return Elem::zero(); }
    std::optional<Elem> one() const override { return Elem::tangible(0); }
    bool contains(const Elem& e) const override { return e.is_zero() || e.tag() == Tag::tangible; }

    Elem add(const Elem& a, const Elem& b) const override {
        require(a);
        require(b);
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return sense_ * a.value().compare(b.value()) >= 0 ? a : b;
    }
    Elem mul(const Elem& a, const Elem& b) const override {
        require(a);
        require(b);
        if (a.is_zero() || b.is_zero()) return Elem::zero();
        return Elem::tangible(a.value() + b.value());
    }
    Elem negate(const Elem& a) const override {
        require(a);
        return a;
    }
    bool tangible(const Elem& a) const override { return !a.is_zero(); }
    // a° = a, so b <= c iff c = b + d for some d, i.e. c dominates b.
    bool surpass(const Elem& b, const Elem& c) const override { return add(b, c) == c; }
    bool is_quasi_zero(const Elem& a) const override {
        require(a);
        return true;
    }
    std::vector<Elem> sample(Rng& rng, std::size_t n) const override {
        std::uniform_int_distribution<int> kind(0, 9);
        std::vector<Elem> out;
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(kind(rng) == 0 ? Elem::zero() : Elem::tangible(sample_rational(rng, cfg_)));
        return out;
    }
    std::vector<Elem> summand_candidates(const Elem& t) const override {
        if (t.is_zero()) return {Elem::zero()};
        return {Elem::zero(), t};
    }
    std::vector<Elem> height_candidates(const Elem& b) const override {
        if (b.is_zero()) return {};
        return {b};
    }
    std::optional<Elem> inverse(const Elem& a) const override {
        if (a.is_zero()) return std::nullopt;
        return Elem::tangible(-a.value());
    }

private:
    int sense_;
    SampleConfig cfg_;
};

// Natural numbers with identity negation; tangibles are the positive integers.
class Nat final : public System {
public:
    std::string name() const override { return "nat"; }
    bool is_triple() const override { return false; }
    Elem zero() const override { return Elem::zero(); }
    std::optional<Elem> one() const override { return Elem::tangible(1); }
    bool contains(const Elem& e) const override {
        return e.is_zero() || (e.tag() == Tag::tangible && e.value().is_integer() && e.value().sign() > 0);
    }
    static Rational val(const Elem& e) { return e.is_zero() ? Rational(0) : e.value(); }
    static Elem make(const Rational& v) { return v.sign() == 0 ? Elem::zero() : Elem::tangible(v); }
    Elem add(const Elem& a, const Elem& b) const override {
        require(a);
        require(b);
        return make(val(a) + val(b));
    }
    Elem mul(const Elem& a, const Elem& b) const override {
        require(a);
        require(b);
        return make(val(a) * val(b));
    }
    Elem negate(const Elem& a) const override {
        require(a);
        return a;
    }
    bool tangible(const Elem& a) const override { return !a.is_zero(); }
    bool is_quasi_zero(const Elem& a) const override {
        require(a);
        return val(a).raw().get_num() % 2 == 0;
    }
    std::vector<Elem> sample(Rng& rng, std::size_t n) const override {
        std::uniform_int_distribution<long> v(0, 12);
        std::vector<Elem> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(make(Rational(v(rng))));
        return out;
    }
    std::vector<Elem> summand_candidates(const Elem& t) const override {
        std::vector<Elem> out;
        long top = val(t).raw().get_num().get_si();
        for (long d = 0; d <= top; ++d) out.push_back(make(Rational(d)));
        return out;
    }
    std::vector<Elem> height_candidates(const Elem& b) const override {
        std::vector<Elem> out;
        long top = val(b).raw().get_num().get_si();
        for (long d = 1; d <= top; ++d) out.push_back(make(Rational(d)));
        return out;
    }
    std::optional<Elem> inverse(const Elem& a) const override {
        if (a == Elem::tangible(1)) return a;
        return std::nullopt;
    }
};

// Forwards everything to base except the negation map, which becomes x -> eps*x.
class Renegated final : public System {
public:
    Renegated(SysPtr base, Elem eps, bool agrees) : base_(std::move(base)), eps_(std::move(eps)), agrees_(agrees) {
        if (base_->finite()) {
            auto tmp = materialize(*this, *base_->elements(), name());
            members_ = *base_->elements();
            fin_ = tmp;
        }
    }
    std::string name() const override { return base_->name() + "[eps=" + base_->show(eps_) + "]"; }
    Kind kind() const override { return base_->kind(); }
    bool is_triple() const override { return fin_ ? fin_->is_triple() : base_->is_triple(); }
    bool commutative() const override { return base_->commutative(); }
    bool has_zero() const override { return base_->has_zero(); }
    Elem zero() const override { return base_->zero(); }
    std::optional<Elem> one() const override { return base_->one(); }
    bool contains(const Elem& e) const override { return base_->contains(e); }
    Elem add(const Elem& a, const Elem& b) const override { return base_->add(a, b); }
    Elem mul(const Elem& a, const Elem& b) const override { return base_->mul(a, b); }
    Elem negate(const Elem& a) const override { return base_->mul(eps_, a); }
    bool tangible(const Elem& a) const override { return base_->tangible(a); }
    bool surpass(const Elem& a, const Elem& b) const override {
        if (agrees_) return base_->surpass(a, b);
        return circ_surpass_search(*this, a, b);
    }
    bool is_quasi_zero(const Elem& a) const override {
        if (agrees_) return base_->is_quasi_zero(a);
        if (!base_->finite()) throw Unsupported(name() + ": quasi-zero membership needs a finite carrier");
        return System::is_quasi_zero(a);
    }
    const std::vector<Elem>* elements() const override { return base_->elements(); }
    std::vector<Elem> sample(Rng& rng, std::size_t n) const override { return base_->sample(rng, n); }
    std::vector<Elem> summand_candidates(const Elem& t) const override { return base_->summand_candidates(t); }
    std::vector<Elem> height_candidates(const Elem& b) const override { return base_->height_candidates(b); }
    std::optional<Elem> inverse(const Elem& a) const override { return base_->inverse(a); }
    std::string show(const Elem& a) const override { return base_->show(a); }

private:
    SysPtr base_;
    Elem eps_;
    bool agrees_;
    std::vector<Elem> members_;
    FinPtr fin_;
};

}  // namespace

SysPtr make_supertropical(SampleConfig cfg) { return std::make_shared<Supertropical>(cfg); }
SysPtr make_maxplus(SampleConfig cfg) { return std::make_shared<Idempotent>(+1, cfg); }
SysPtr make_minplus(SampleConfig cfg) { return std::make_shared<Idempotent>(-1, cfg); }
SysPtr make_nat() { return std::make_shared<Nat>(); }

FinPtr make_boolean() {
    FinSpec s;
    s.names = {"0", "1"};
    s.add = {{0, 1}, {1, 1}};
    s.mul = {{0, 0}, {0, 1}};
    s.zero = 0;
    s.one = 1;
    s.tangibles = {1};
    s.neg = {0, 1};
    return std::make_shared<FinSys>(s, "boolean");
}

FinPtr make_supertropical_chain() {
    FinSpec s;
    s.names = {"0", "1", "e"};
    s.add = {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}};
    s.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
    s.zero = 0;
    s.one = 1;
    s.tangibles = {1};
    s.neg = {0, 1, 2};
    return std::make_shared<FinSys>(s, "chain3");
}

std::vector<Elem> supertropical_fragment() {
    std::vector<Elem> out{Elem::zero()};
    for (long v = -1; v <= 1; ++v) out.push_back(Elem::tangible(v));
    for (long v = -1; v <= 1; ++v) out.push_back(Elem::ghost(v));
    return out;
}

SysPtr negation_from_epsilon(SysPtr sys, const Elem& eps) {
    if (sys->kind() != Kind::semiring) throw ActionOnly(sys->name() + ": negation from epsilon needs total multiplication");
    sys->require(eps);
    auto u = sys->one();
    if (!u) throw NoUnit(sys->name() + " has no unit");
    if (sys->mul(eps, eps) != *u) throw EpsNotInvolutive("eps*eps = " + sys->show(sys->mul(eps, eps)) + " is not the unit");
    std::vector<Elem> probe;
    if (sys->finite()) {
        probe = *sys->elements();
    } else {
        Rng rng(12345);
        probe = sys->sample(rng, 200);
    }
    bool agrees = true;
    for (const auto& a : probe) {
        if (sys->mul(eps, a) != sys->negate(a)) agrees = false;
        for (const auto& b : probe) {
            if (sys->mul(eps, sys->mul(a, b)) != sys->mul(sys->mul(eps, a), b))
                throw AxiomViolation("neg-mul");
            if (sys->mul(eps, sys->add(a, b)) != sys->add(sys->mul(eps, a), sys->mul(eps, b)))
                throw AxiomViolation("neg-additive");
        }
    }
    return std::make_shared<Renegated>(std::move(sys), eps, agrees);
}

}  // namespace tsys
