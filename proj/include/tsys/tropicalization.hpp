#pragma once

// Puiseux series with exact rational exponents, the min-convention valuation,
// coefficientwise tropicalization, the pairwise tropical-ideal condition,
// valuated-matroid axioms and the bend generators of tropicalized ideals.

#include "tsys/hyperfields.hpp"
#include "tsys/polynomials.hpp"

#include <functional>
#include <map>

namespace tsys {

// Finite Puiseux series sum c_q t^q. Exponents are strictly increasing and no
// coefficient is zero; the zero series has no terms.
class PuiseuxSeries {
public:
    PuiseuxSeries() = default;
    static PuiseuxSeries constant(const Rational& c);
    static PuiseuxSeries monomial(const Rational& coef, const Rational& exp);
    // Repeated exponents are summed.
    static PuiseuxSeries from_terms(const std::vector<std::pair<Rational, Rational>>& exp_coef);

    const std::map<Rational, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PuiseuxSeries operator+(const PuiseuxSeries& o) const;
    PuiseuxSeries operator-(const PuiseuxSeries& o) const;
    PuiseuxSeries operator-() const;
    PuiseuxSeries operator*(const PuiseuxSeries& o) const;
    bool operator==(const PuiseuxSeries& o) const { return terms_ == o.terms_; }

    // "2t^1/3 + t", "0" for the zero series.
    std::string str() const;

private:
    std::map<Rational, Rational> terms_;
};

// Value group Q with an absorbing zero symbol; nullopt is the zero symbol.
using Val = std::optional<Rational>;

// Least exponent of a nonzero term.
Val val(const PuiseuxSeries& p);
// v -> -v, zero symbol to -inf: from the min convention to the max-convention
// tropical hyperfield.
TropVal to_max_convention(const Val& v);

struct PuiseuxPolynomial {
    int nvars = 1;
    bool laurent = false;
    std::map<Exponent, PuiseuxSeries> terms;  // no zero coefficients
};

PuiseuxPolynomial make_puiseux_polynomial(int nvars, bool laurent,
                                          const std::vector<std::pair<Exponent, PuiseuxSeries>>& terms);
PuiseuxPolynomial puiseux_add(const PuiseuxPolynomial& f, const PuiseuxPolynomial& g);
PuiseuxPolynomial puiseux_mul(const PuiseuxPolynomial& f, const PuiseuxPolynomial& g);

// Coefficientwise valuation into min-plus polynomials; zero coefficients are
// already absent.
Polynomial trop(const PuiseuxPolynomial& f);
// Min-plus polynomial c x^e read as the supertropical polynomial (-c) x^e, so that
// f(x) = -f'(-x).
Polynomial min_to_supertropical(const Polynomial& f);

struct ValArith {
    Val p, q, product, sum;
    bool multiplicative = false;  // val(pq) = val(p) + val(q)
    bool hyperadditive = false;   // -val(p+q) in (-val p) (+) (-val q) in the tropical hyperfield
    bool ok() const { return multiplicative && hyperadditive; }
};
ValArith val_arith_check(const PuiseuxSeries& p, const PuiseuxSeries& q);

// The valuation laws on domain, through to_max_convention.
ValuationReport check_puiseux_valuation(const std::vector<PuiseuxSeries>& domain);

// ---------------------------------------------------------------------------
// Tropical ideals over min-plus.

struct PairWitness {
    Exponent monomial;
    Rational shift_f, shift_g;     // shifted coefficients at monomial are 0
    std::optional<Polynomial> h;   // nonzero, monomial outside supp(h)
    bool from_candidates = false;
};
struct PairCheck {
    bool holds = true;              // every common monomial has a witness
    std::vector<PairWitness> entries;
};
// For each common support monomial i (or only `monomial` when given), looks for
// a nonzero h with h_i absent and h_j >= min(shift_f + f_j, shift_g + g_j) for
// all j. Candidates are tried first, then min(shift_f f, shift_g g) with i
// removed when include_combination is set. f, g and candidates are min-plus
// polynomials. Throws NoCommonMonomial.
PairCheck tropical_ideal_pair_check(const Polynomial& f, const Polynomial& g,
                                    const std::vector<Polynomial>& candidates, bool include_combination = true,
                                    const std::optional<Exponent>& monomial = std::nullopt);

// Bend generators of every nonzero generator.
std::vector<std::pair<Polynomial, Polynomial>> trop_ideal_to_bend(const std::vector<Polynomial>& gens);

// ---------------------------------------------------------------------------
// Valuated matroids, max convention: v takes values in Q u {-inf}, products
// are sums.

inline constexpr int kMaxMatroidGround = 8;
inline constexpr int kMaxMatroidRank = 4;

struct ValuatedMatroidCandidate {
    int ground_size = 0;
    int rank = 0;
    std::vector<TropVal> v;  // tuple (e_1..e_m) at sum e_k n^(k-1)

    int index(const std::vector<int>& tuple) const;
    const TropVal& at(const std::vector<int>& tuple) const { return v[index(tuple)]; }
    TropVal& at(const std::vector<int>& tuple) { return v[index(tuple)]; }
};

// v(e) = fn(e) on every m-tuple.
ValuatedMatroidCandidate make_matroid_candidate(int n, int m, const std::function<TropVal(const std::vector<int>&)>& fn);
// U_{m,n}: 0 on tuples of distinct elements, -inf otherwise.
ValuatedMatroidCandidate uniform_matroid(int n, int m);

struct MatroidCheck {
    bool valid = true;
    std::string axiom;            // "(i)", "(ii)" or "(iii)"
    std::vector<int> witness;     // tuple(s) concatenated
};
// Axioms checked in order; the first failure is reported. Throws InvalidInput
// beyond kMaxMatroidGround elements or kMaxMatroidRank.
MatroidCheck valuated_matroid_check(const ValuatedMatroidCandidate& c);

}  // namespace tsys
