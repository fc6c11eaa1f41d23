#pragma once

// Congruences on finite systems, stored as partitions of the carrier.

#include <optional>

#include "tsys/system.hpp"

namespace tsys {

using IndexPair = std::pair<int, int>;

struct Congruence {
    FinPtr sys;
    std::vector<int> cls;          // class id per element, numbered by first occurrence
    std::vector<IndexPair> gens;   // pairs it was generated from
    bool t_congruence = false;     // additively generated by pairs in T0 x T0

    bool contains(int a, int b) const { return cls[a] == cls[b]; }
    std::vector<IndexPair> pairs() const;
    int num_classes() const;
    bool is_full() const { return num_classes() == 1; }
    bool is_diagonal() const { return num_classes() == static_cast<int>(cls.size()); }
    bool operator==(const Congruence& o) const { return cls == o.cls; }
};

Congruence diagonal(FinPtr sys);
Congruence full_congruence(FinPtr sys);

// Least congruence containing gens: reflexive, symmetric, transitive, closed under
// +, left and right multiplication and (-).
Congruence generate_congruence(FinPtr sys, const std::vector<IndexPair>& gens);
Congruence join(const Congruence& a, const Congruence& b);
Congruence meet(const Congruence& a, const Congruence& b);
bool is_subset(const Congruence& a, const Congruence& b);

// Pairs of C equal the additive closure of its pairs in T0 x T0.
bool is_T_congruence(const Congruence& c);
// Equivalence laws, compatibility with +, *, (-), and closure under the twist action.
Report check_congruence_invariants(const Congruence& c);

struct Quotient {
    FinPtr sys;
    std::vector<int> proj;  // element -> class
};
// Tangibles are the nonzero classes of tangibles. Throws IllDefined when the
// induced tables conflict.
Quotient quotient(const Congruence& c);

// (a0,a1)(b0,b1) = (a0b0 + a1b1, a0b1 + a1b0).
IndexPair twist(const FinSys& sys, IndexPair a, IndexPair b);
IndexPair twist_power(const FinSys& sys, IndexPair a, int n);
// Generated by the twist products of all members.
Congruence twist_product(const Congruence& a, const Congruence& b);
// Generated by the twist products of the recorded generators only.
Congruence twist_product_of_generators(const Congruence& a, const Congruence& b);

// ---------------------------------------------------------------------------
// Lattice-quantified properties.

inline constexpr int kMaxLatticeCarrier = 12;

struct CongLattice {
    FinPtr sys;
    std::vector<Congruence> all;
    std::vector<std::size_t> t_index;  // positions of T-congruences in all

    std::vector<Congruence> t_congruences() const;
    std::optional<std::size_t> find(const Congruence& c) const;
    // is_T_prime per entry of all, computed on first use.
    const std::vector<bool>& t_prime_flags() const;

private:
    mutable std::optional<std::vector<bool>> t_prime_;
};
// Every congruence, by joining principal congruences from the diagonal. Throws
// LatticeTooLarge beyond kMaxLatticeCarrier elements or limit congruences.
CongLattice enumerate_lattice(FinPtr sys, std::size_t limit = 20000);

// Quantified over all congruences.
bool is_prime(const CongLattice& lat, const Congruence& c);
// C is a T-congruence, and the quantifier ranges over T-congruences.
bool is_T_prime(const CongLattice& lat, const Congruence& c);
bool is_semiprime(const CongLattice& lat, const Congruence& c);
// Maximal among T-congruences with (1,0) not in C.
bool is_maximal(const CongLattice& lat, const Congruence& c);
// Any two T-congruences strictly above C meet strictly above C.
bool is_T_irreducible(const CongLattice& lat, const Congruence& c);

// a (.) b in C implies a in C or b in C, for a, b in T0 x T0; C proper.
bool prime_by_tangible_pairs(const Congruence& c);
// a^2 in C implies a in C, for a in T0 x T0.
bool radical_by_tangible_pairs(const Congruence& c);

// Generated by the pairs a in T0 x T0 with a^n in C for some n.
Congruence radical(const Congruence& c);
// Intersection of the T-prime congruences containing C (full when none).
Congruence prime_intersection_above(const CongLattice& lat, const Congruence& c);
// Least T-congruence containing C; nullopt when the T-congruences above C have
// no least element.
std::optional<Congruence> t_hull(const CongLattice& lat, const Congruence& c);
// radical(C) equals the intersection of T-primes above C. A congruence that is not
// a T-congruence is replaced by its T-hull, which has the same T-primes above it.
bool check_radical_decomposition(const CongLattice& lat, const Congruence& c);

// Longest strictly increasing chain of T-prime congruences, counted in steps;
// 0 when there are none.
int chain_height(const CongLattice& lat);

// Action of the ground carrier on a finite module: act[a][m].
struct ActionTable {
    int module_size = 0;
    std::vector<std::vector<int>> act;
};
// Generated by {(a0,a1) in T0 x T0 : a0 s = a1 s for all s in subset}.
Congruence annihilator(FinPtr sys, const ActionTable& action, const std::vector<int>& subset);

// ---------------------------------------------------------------------------
// Localization.

// Tangibles are the nonzero classes t/s.
struct Localization {
    FinPtr sys;                                // classes of fractions b/s
    std::vector<int> denominators;             // S, closed under products, with 1
    std::vector<IndexPair> reps;               // (s, b) per class
    std::vector<int> canonical;                // b -> b/1
};
// Throws NullDenominator if S meets the null set, InvalidInput unless S is central.
Localization localize(FinPtr sys, const std::vector<int>& denominators);
// {(b0,b1) : s b0 = s b1 for some s in S}.
Congruence localization_kernel(FinPtr sys, const std::vector<int>& denominators);
// Congruence kernel of b -> b/1.
Congruence canonical_kernel(const Localization& loc, FinPtr sys);
bool is_regular(const FinSys& sys, const std::vector<int>& denominators);
// (s b0, s b1) in C implies (b0, b1) in C.
bool is_C_regular(const Congruence& c, const std::vector<int>& denominators);
// Generated by {(b0/s, b1/s) : (b0,b1) in C, s in S}.
Congruence localize_congruence(const Congruence& c, const Localization& loc);

// ---------------------------------------------------------------------------
// Submodules of the carrier as a module over itself, versus congruences.

// a1 <= a2 + b implies a2 <= a1 (-) b, for tangible a1, a2.
bool is_T_reversible(const FinSys& sys);
// Submodule containing T-circ, generated by its tangibles and zero, with the
// tangible-witness condition.
bool is_T_submodule(const FinSys& sys, const std::vector<int>& members);
// a = sum a_j, b = sum b_j with a_j <= b_j + v_j, all in T_N u {0}; pairs on N.
std::vector<IndexPair> cong_of_submodule(const FinSys& sys, const std::vector<int>& members);
// Additive semigroup generated by a (-) b for (a,b) in the relation with a, b in T0.
std::vector<int> submodule_of_cong(const FinSys& sys, const std::vector<IndexPair>& relation);

}  // namespace tsys
