#pragma once

// Finite hyperfields, the set-valued sum closure S(H), the tropical hyperfield,
// the functors t, a, e, c and semiring valuations into the tropical hyperfield.

#include "tsys/system.hpp"

#include <cstdint>
#include <functional>
#include <map>

namespace tsys {

using ElemSet = std::uint64_t;  // bitmask over hyperfield element indices

struct Hyperfield {
    std::string name = "hyperfield";
    std::vector<std::string> names;
    std::vector<std::vector<ElemSet>> hyperadd;
    std::vector<std::vector<int>> mul;
    int zero = 0;
    int one = 1;
    std::vector<int> neg;

    int size() const { return static_cast<int>(names.size()); }
    // Union of a (+) b over a in x, b in y.
    ElemSet set_add(ElemSet x, ElemSet y) const;
    ElemSet set_mul(ElemSet x, ElemSet y) const;
    ElemSet set_neg(ElemSet x) const;
    std::string show(ElemSet x) const;
};

Hyperfield make_krasner();
Hyperfield make_signs();

// Hyperaddition commutativity and set-level associativity, unique hypernegation
// (0 in a (+) b iff b = -a), distributivity of mul over hyperaddition.
Report check_hyperfield(const Hyperfield& h);

struct SofH {
    FinPtr sys;
    std::vector<ElemSet> sets;  // sets[i] is the set denoted by symbol i
};

// Closure of the singletons under set addition; T = nonzero singletons, (-) is
// elementwise hypernegation, <= is inclusion.
SofH build_S_of_H(const Hyperfield& h, std::size_t bound = 64);

// Tropical hyperfield Q u {-inf}: a (+) b = {max} if a != b, else [-inf, a].
// Values are optional<Rational>, nullopt = -inf.
using TropVal = std::optional<Rational>;

struct TropicalHyperfield {
    // Singleton {max} or the down-interval as an S(T) element.
    Elem hyperadd(const TropVal& a, const TropVal& b) const;
    TropVal mul(const TropVal& a, const TropVal& b) const;
};

// S(T): zero = {-inf}, tangible v = {v}, interval v = [-inf, v]; <= is inclusion.
SysPtr make_S_of_tropical(SampleConfig cfg = {});
// tangible a <-> {a}, ghost a <-> [-inf, a], zero <-> {-inf}.
Elem supertropical_to_S(const Elem& e);
Elem S_to_supertropical(const Elem& e);
// Membership of v in the S(T) element s.
bool trop_member(const TropVal& v, const Elem& s);

// ---------------------------------------------------------------------------
// Functors.

struct SemiringMonoid {
    FinPtr semiring;
    std::vector<int> monoid;  // symbol indices
};

// (A, A \ {0}) for a semidomain A.
SemiringMonoid functor_t(const FinSys& a);
// (S, M) with (-) = id and the derived relation.
FinPtr functor_e(const SemiringMonoid& p);
// (S(H), H^x, -, subset) for a hyperfield.
SofH functor_a(const Hyperfield& h);
// Same carrier as functor_a; defined on hyperrings without zero divisors.
SofH functor_c(const Hyperfield& h);
// a(f) on S(H1) -> S(H2) for a hyperfield homomorphism f (index map): the sum of
// images of any family of singletons summing to X. Throws IllDefined when two
// families with the same set have different image sums.
std::vector<int> functor_a_map(const Hyperfield& h1, const SofH& s1, const Hyperfield& h2, const SofH& s2,
                               const std::vector<int>& f);
// X -> f(X) elementwise; nullopt when some image set lies outside S(H2).
std::optional<std::vector<int>> image_set_map(const Hyperfield& h1, const SofH& s1, const SofH& s2,
                                              const std::vector<int>& f);
// f preserves mul, zero, one, neg and maps a (+) b into f(a) (+) f(b).
bool is_hyperfield_homomorphism(const Hyperfield& h1, const Hyperfield& h2, const std::vector<int>& f);

// ---------------------------------------------------------------------------
// Valuations nu : S -> T, max convention.

struct ValuationReport {
    bool ok = true;
    std::vector<std::string> violations;  // "<law>: <witness>"
};

template <class E, class Add, class Mul, class Nu, class Show>
ValuationReport check_valuation_generic(const std::vector<E>& domain, const E& zero, Add add, Mul mul, Nu nu,
                                        Show show) {
    ValuationReport r;
    auto fail = [&](const std::string& law, const std::string& w) {
        r.ok = false;
        r.violations.push_back(law + ": " + w);
    };
    TropicalHyperfield th;
    if (nu(zero).has_value()) fail("zero", show(zero));
    bool nonconstant = false;
    for (const auto& a : domain) {
        if (nu(a).has_value()) nonconstant = true;
        for (const auto& b : domain) {
            const TropVal na = nu(a), nb = nu(b);
            if (nu(mul(a, b)) != th.mul(na, nb)) fail("multiplicative", show(a) + " * " + show(b));
            if (!trop_member(nu(add(a, b)), th.hyperadd(na, nb))) fail("hyperadditive", show(a) + " + " + show(b));
        }
    }
    if (!nonconstant) fail("nonconstant", "nu is identically -inf");
    return r;
}

ValuationReport check_valuation(const System& src, const std::vector<Elem>& domain,
                                const std::function<TropVal(const Elem&)>& nu);

}  // namespace tsys
