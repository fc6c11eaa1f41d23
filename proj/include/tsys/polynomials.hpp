#pragma once

// Finite-support functions N^n -> A (or Z^n -> A for Laurent polynomials) with
// convolution, evaluation, circ-roots and circ-equivalence; tropical bend
// relations on coefficient magnitudes.

#include "tsys/system.hpp"

#include <map>

namespace tsys {

using Exponent = std::vector<int>;

struct Polynomial {
    int nvars = 1;
    bool laurent = false;
    std::map<Exponent, Elem> terms;  // no zero coefficients

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Polynomial& o) const {
        return nvars == o.nvars && laurent == o.laurent && terms == o.terms;
    }
    // Largest total degree; -1 for the zero polynomial.
    int degree() const;
};

// Sums repeated exponents with sys.add and drops zero coefficients.
Polynomial make_polynomial(const System& sys, int nvars, bool laurent,
                           const std::vector<std::pair<Exponent, Elem>>& terms);
Polynomial monomial(const System& sys, int nvars, const Exponent& e, const Elem& c, bool laurent = false);

Polynomial poly_add(const System& sys, const Polynomial& f, const Polynomial& g);
// (f*g)(s) = sum_{u+v=s} f(u)g(v).
Polynomial conv_mul(const System& sys, const Polynomial& f, const Polynomial& g);
Polynomial poly_negate(const System& sys, const Polynomial& f);
Elem eval(const System& sys, const Polynomial& f, const std::vector<Elem>& point);

std::vector<Exponent> supp(const Polynomial& f);
// Exponents whose coefficient is tangible.
std::vector<Exponent> circ_supp(const System& sys, const Polynomial& f);

// {b in domain : f(b) in A-circ}, univariate.
std::vector<Elem> circ_roots(const System& sys, const Polynomial& f, const std::vector<Elem>& domain);

struct RootBoundResult {
    bool holds = true;
    std::size_t polynomials = 0;
    std::optional<Polynomial> counterexample;
    std::vector<Elem> roots;
};
// Every degree-n polynomial with coefficients in pool u {0} (leading coefficient
// in pool) has at most n distinct circ-roots in domain. Requires a triple.
RootBoundResult check_root_bound(const System& sys, int degree, const std::vector<Elem>& pool,
                                 const std::vector<Elem>& domain);

// f(b) (-) f(b) = g(b) (-) g(b) for every point b.
bool circ_equiv(const System& sys, const Polynomial& f, const Polynomial& g,
                const std::vector<std::vector<Elem>>& domain);

struct FunctionalTangibility {
    bool holds = false;
    std::vector<std::vector<Elem>> exceptions;  // sample points with non-tangible value
};
// Holds when more than threshold of the sample points take tangible values.
FunctionalTangibility is_functionally_tangible(const System& sys, const Polynomial& f,
                                               const std::vector<std::vector<Elem>>& sample,
                                               double threshold = 0.5);

// ---------------------------------------------------------------------------
// Bend relation on tropical polynomials (coefficient magnitudes; max or min).

using TropPoly = std::map<Exponent, Rational>;

// +1 when addition takes the larger magnitude, -1 for min-plus.
int tropical_sense(const System& sys);
Rational magnitude(const Elem& e);
TropPoly to_tropical(const System& sys, const Polynomial& f);
// Tangible coefficients on sys.
Polynomial from_tropical(const System& sys, int nvars, bool laurent, const TropPoly& f);

// Best coefficient c (max convention: largest) such that c*x^u is dominated by f
// on all of Q^n, i.e. max sum mu_j c_j over convex combinations of supp(f) equal to
// u. nullopt when u is outside the convex hull of supp(f).
std::optional<Rational> domination_bound(const TropPoly& f, const Exponent& u, int sense);
// The monomial at u of f is dominated by the other monomials.
bool is_dominated(const TropPoly& f, const Exponent& u, int sense);
// Monomials that are not dominated; unique, and equal for two polynomials iff they
// define the same tropical function.
TropPoly essential_form(const TropPoly& f, int sense);

// One bend move: delete a dominated monomial or add a dominated monomial at a new
// exponent.
bool is_bend_move(const TropPoly& from, const TropPoly& to, int sense);

// Generators {f ~ f with monomial h deleted : h in supp f}.
std::vector<std::pair<Polynomial, Polynomial>> bend_generators(const Polynomial& f);

struct BendResult {
    bool equivalent = false;
    std::size_t steps = 0;
    std::vector<TropPoly> path;  // validated moves from f to g
};
// Throws SearchBoundExceeded when a path exists but needs more than bound moves.
BendResult bend_equiv(const System& sys, const Polynomial& f, const Polynomial& g, std::size_t bound);

}  // namespace tsys
