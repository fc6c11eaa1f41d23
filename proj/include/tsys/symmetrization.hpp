#pragma once

// The symmetrization A x A: componentwise addition, twist multiplication,
// switch negation, tangibles (T x {0}) u ({0} x T).

#include "tsys/polynomials.hpp"

namespace tsys {

class Symmetrized final : public System {
public:
    explicit Symmetrized(SysPtr base);

    const SysPtr& base() const { return base_; }

    std::string name() const override { return "sym(" + base_->name() + ")"; }
    Kind kind() const override { return base_->kind(); }
    bool is_triple() const override { return generated_; }
    bool commutative() const override { return base_->commutative(); }
    Elem zero() const override;
    std::optional<Elem> one() const override;
    bool contains(const Elem& e) const override;
    Elem add(const Elem& a, const Elem& b) const override;
    // Twist product; on action-only bases one operand must lie in T-hat.
    Elem mul(const Elem& a, const Elem& b) const override;
    Elem negate(const Elem& a) const override;
    bool tangible(const Elem& a) const override;
    bool surpass(const Elem& a, const Elem& b) const override;
    bool is_quasi_zero(const Elem& a) const override;
    const std::vector<Elem>* elements() const override { return finite_ ? &elems_ : nullptr; }
    std::vector<Elem> sample(Rng& rng, std::size_t n) const override;
    std::vector<Elem> summand_candidates(const Elem& target) const override;
    std::vector<Elem> height_candidates(const Elem& b) const override;
    std::optional<Elem> inverse(const Elem& a) const override;
    std::string show(const Elem& a) const override;

private:
    Elem term(const Elem& a, const Elem& b) const;
    Elem twist(const Elem& x, const Elem& y) const;

    SysPtr base_;
    bool finite_ = false;
    bool generated_ = true;
    std::vector<Elem> elems_;
};

std::shared_ptr<const Symmetrized> symmetrize(SysPtr base);

// (a0,a1)(b0,b1) = (a0b0 + a1b1, a0b1 + a1b0) over base.
Elem twist_mul(const System& base, const Elem& x, const Elem& y);
// a -> (a, 0).
Elem embed(const System& base, const Elem& a);
Elem switch_map(const Elem& x);

// The action (a0,a1)x = a0x (-) a1x of pairs on a module with negation.
Elem pair_action(const System& base, const Elem& pair, const Elem& x);
// ((-)a0, (-)a1): the base negation applied componentwise.
Elem componentwise_negate(const System& base, const Elem& pair);

// The pair (f, g) at b = (b0, b1): (f(b0) + g(b1), f(b1) + g(b0)), over base.
Elem sym_eval(const System& base, const Polynomial& f, const Polynomial& g, const Elem& b);
// sym_eval lands in the diagonal.
bool is_symmetrized_root(const System& base, const Polynomial& f, const Polynomial& g, const Elem& b);
// sum_i (f_i, g_i) b^i with twist products in sym; at b = (b0, 0) this is (f(b0), g(b0)).
Elem sym_eval_twist(const Symmetrized& sym, const Polynomial& f, const Polynomial& g, const Elem& b);

}  // namespace tsys
