#pragma once

// Finite module systems over a finite ground system: morphism classification,
// Hom triples, duals, sums, spans, tensor products, kernels and exactness.

#include "tsys/congruences.hpp"

#include <map>

namespace tsys {

// Carrier with an additive table, negation map, tangibles and surpassing
// relation (held by a module-kind FinSys), plus the ground action act[a][m].
class ModSys {
public:
    // additive.zero is required; additive.mul is ignored.
    ModSys(FinPtr ground, FinSpec additive, std::vector<std::vector<int>> act, std::string name);

    const FinPtr& ground() const { return ground_; }
    const FinSys& additive() const { return *additive_; }
    const FinPtr& additive_ptr() const { return additive_; }
    const std::string& name() const { return name_; }
    const std::vector<std::vector<int>>& action() const { return act_; }

    int size() const { return additive_->size(); }
    int zero() const { return *additive_->zero_index(); }
    int add_i(int a, int b) const { return additive_->add_i(a, b); }
    int act_i(int a, int m) const { return act_[a][m]; }
    int neg_i(int a) const { return additive_->neg_i(a); }
    bool tangible_i(int a) const { return additive_->tangible_i(a); }
    bool surpass_i(int a, int b) const { return additive_->surpass_i(a, b); }
    // b in M_Null: 0 <= b.
    bool null_i(int b) const { return surpass_i(zero(), b); }
    const std::string& name_of(int i) const { return additive_->name_of(i); }
    std::optional<int> find(const std::string& n) const { return additive_->find(n); }
    std::vector<int> tangible_indices() const { return additive_->tangible_indices(); }

private:
    FinPtr ground_;
    FinPtr additive_;
    std::vector<std::vector<int>> act_;
    std::string name_;
};

using ModPtr = std::shared_ptr<const ModSys>;

// The ground acting on itself by multiplication.
ModPtr ground_module(FinPtr ground);
// Element index = sum of c_i * stride_i with stride_0 = 1 and
// stride_{i+1} = stride_i * |M_i|. Tangibles are the injected tangibles. A sum
// of one module is that module.
ModPtr direct_sum(const std::vector<ModPtr>& mods);
std::vector<int> sum_components(const std::vector<ModPtr>& mods, int index);
int sum_index(const std::vector<ModPtr>& mods, const std::vector<int>& components);
// n copies of ground_module(ground).
ModPtr free_module(FinPtr ground, int n);

// Additive monoid laws, distributivity of the action over both sums, a0 = 0,
// unit and associativity of the action, and ((-)a)b = a((-)b) = (-)(ab).
Report check_module_axioms(const ModSys& m);
std::vector<int> null_set(const ModSys& m);

// Smallest subset containing gens and 0, closed under +, (-) and the action.
std::vector<int> generated_submodule(const ModSys& m, const std::vector<int>& gens);
// Proper submodules all lie in M_Null.
bool is_simple(const ModSys& m);

// ---------------------------------------------------------------------------
// Morphisms.

struct MorphismTable {
    ModPtr source;
    ModPtr target;
    std::vector<int> map;
};

enum class MorphismKind { homomorphism, t_admissible, preceq_morphism, none };
const char* kind_name(MorphismKind k);

struct MorphismClass {
    MorphismKind kind = MorphismKind::none;
    bool admissible = false;              // equal tangible sums have equal image sums
    std::vector<std::string> violations;  // failed clauses "(i)".."(vi)"
    std::vector<std::string> strict;      // clauses among (i)-(iii) holding only as <=
};

// Clauses (i)-(vi) for module maps, with (iii) read as f(ab) <= a f(b) for
// tangible a. Admissibility scans tangible sums of up to summand_bound terms.
MorphismClass classify_morphism(const MorphismTable& m, int summand_bound = 3);
// Same clauses for maps of semiring systems, with (iii) read as
// f(ab) <= f(a) f(b).
MorphismClass classify_semiring_morphism(const FinSys& source, const FinSys& target,
                                         const std::vector<int>& map, int summand_bound = 3);

// f((-)b) = (-)f(b); f(ab) = a f(b) when every ground tangible is invertible;
// f(b0) = f(b1) and b0 <= b <= b1 imply f(b) = f(b0). Requires <= to be a partial
// order on both carriers; a failure of any law on a verified morphism is a bug.
Report derived_morphism_laws(const MorphismTable& m);

// Hom(M, N): homomorphism tables with pointwise +, (-), <= and action. Tangible
// morphisms send T_M into T_N.
struct HomTriple {
    ModPtr sys;
    ModPtr source;
    ModPtr target;
    std::vector<std::vector<int>> maps;  // element of sys -> table
    std::optional<int> find(const std::vector<int>& table) const;

private:
    friend HomTriple hom_triple(ModPtr, ModPtr, std::size_t);
    std::map<std::vector<int>, int> index_;
};
// Throws CarrierTooLarge when the candidate space exceeds limit, InvalidInput
// over a noncommutative ground.
HomTriple hom_triple(ModPtr m, ModPtr n, std::size_t limit = 1'000'000);

// S = A^(n), its dual Hom(S, A), and a -> a* with a*(b) = sum a_i b_i.
struct DualSystem {
    ModPtr space;
    HomTriple dual;
    std::vector<int> star;  // element of space -> element of dual.sys, -1 if a* is no homomorphism
    bool injective = false;
    bool onto = false;
};
DualSystem dual_system(FinPtr ground, int n);

// ---------------------------------------------------------------------------
// Spans and bases. Spanning uses sums sum t_i v_i with t_i in T0 (one
// coefficient per vector); independence ranges b_i over the whole ground.

inline constexpr std::size_t kMaxCoefficientSpace = 1'000'000;

bool span_check(const ModSys& m, const std::vector<int>& vs);
bool independence_check(const ModSys& m, const std::vector<int>& vs);
bool is_base(const ModSys& m, const std::vector<int>& vs);

// M x M over the symmetrized ground with the twist action and the switch;
// (x0, x1) has index x0 * |M| + x1.
ModPtr symmetrize_module(const ModSys& m);
bool is_symmetric_base(const ModSys& m, const std::vector<int>& vs);

// ---------------------------------------------------------------------------
// Tensor products.

inline constexpr std::size_t kMaxTensorFree = 2'000'000;

// Quotient of the free commutative monoid on simple tensors of additive
// generators by bilinearity, balance over tangibles of the ground and, when
// negated, ((-)x) (x) y = x (x) ((-)y). Free vectors are stored with each
// multiplicity reduced by the period of the generator.
struct Tensor {
    ModPtr sys;
    ModPtr left;
    ModPtr right;
    bool negated = true;
    std::vector<std::vector<int>> simple;  // class of x (x) y

    std::vector<IndexPair> gens;  // (x, y) per free coordinate
    std::vector<int> class_of;    // free vector -> class

    // Free carrier layout: multiplicity of coordinate g lies in [0, bound[g]),
    // and bound[g] * g = (bound[g] - fold[g]) * g.
    std::vector<int> bound;
    std::vector<int> fold;
    std::vector<std::size_t> stride;
    std::vector<std::vector<std::size_t>> vec;  // free vector of x (x) y

    std::size_t add_vectors(std::size_t u, std::size_t v) const;
    // Class of a formal sum of simple tensors.
    int class_of_sum(const std::vector<IndexPair>& terms) const;
};
// Throws QuotientTooLarge beyond kMaxTensorFree free vectors, InvalidInput when
// the grounds differ or are noncommutative.
Tensor tensor(ModPtr m1, ModPtr m2, bool negated = true);

// psi[x][y] in N. Bilinear in both arguments and balanced over ground tangibles.
bool is_bilinear(const Tensor& t, const ModSys& n, const std::vector<std::vector<int>>& psi);
// The induced map on classes, nullopt when psi is not constant on some class.
std::optional<std::vector<int>> induced_map(const Tensor& t, const ModSys& n,
                                            const std::vector<std::vector<int>>& psi);

// Throws NotHomomorphism unless both maps are homomorphisms, IllDefined if the
// result is not single-valued.
MorphismTable tensor_of_homomorphisms(const Tensor& source, const Tensor& target,
                                      const MorphismTable& f1, const MorphismTable& f2);

// On M = A^(2) with basis x1, x2: f fixes monomials and kills x1 + x2. The
// element x1(x)x1 + x1(x)x2 + x2(x)x2 has two regroupings on which f (x) f
// disagrees.
struct NonfunctorialityWitness {
    Tensor tensor;
    MorphismTable f;
    std::vector<IndexPair> first;
    std::vector<IndexPair> second;
    int element = -1;
    int value_first = -1;
    int value_second = -1;
};
NonfunctorialityWitness nonfunctoriality_witness(FinPtr ground);

struct TensorPower {
    std::vector<ModPtr> powers;  // V, V (x) V, ...
    ModPtr truncated;            // direct sum of powers
};
// Iterated negated tensor V (x) V^(k-1); k in 1..3.
TensorPower tensor_power(ModPtr v, int k);

// |Hom(M1 (x) M2, M3)| and |Hom(M1, Hom(M2, M3))| with the currying map.
struct AdjointCheck {
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    bool bijection = false;
};
AdjointCheck adjoint_check(ModPtr m1, ModPtr m2, ModPtr m3);

// (a0, a1) x = a0 x (-) a1 x: compatibility with tangible scalars and sums,
// additivity in both arguments, and twist associativity over T0 x T0.
Report check_twisted_action(const ModSys& m);

// ---------------------------------------------------------------------------
// Kernels, images, exactness.

struct IndexVerdict {
    bool holds = true;
    std::vector<int> witness;
};

// {a in T_M : f(a) in N_Null}.
std::vector<int> t_kernel(const MorphismTable& f);
bool is_null_morphism(const MorphismTable& f);
// Submodule generated by f(T_M).
std::vector<int> t_image(const MorphismTable& f);
// f(a0) = f(a1) implies a0 (-) a1 in M_Null, for a0, a1 in T0.
IndexVerdict null_monic(const MorphismTable& f);
// t_image(f) + N_Null = N.
bool null_onto(const MorphismTable& f);

struct Exactness {
    bool chain = false;          // f(g(k)) null for every k
    bool exact = false;          // g(K) = f^-1(N_Null)
    std::vector<int> image;      // g(K)
    std::vector<int> preimage;   // f^-1(N_Null)
};
// K --g--> M --f--> N.
Exactness exactness(const MorphismTable& g, const MorphismTable& f);

// Congruence on a module: closed under +, (-) and the ground action.
struct ModCongruence {
    ModPtr sys;
    std::vector<int> cls;  // numbered by first occurrence

    bool contains(int a, int b) const { return cls[a] == cls[b]; }
    int num_classes() const;
    bool is_diagonal() const { return num_classes() == static_cast<int>(cls.size()); }
    bool is_full() const { return num_classes() == 1; }
    std::vector<IndexPair> pairs() const;
    bool operator==(const ModCongruence& o) const { return cls == o.cls; }
};
ModCongruence generate_module_congruence(ModPtr m, const std::vector<IndexPair>& gens);
// Tangibles are the nonzero classes of tangibles.
ModPtr module_quotient(const ModCongruence& c);

// Generated by {(a0, a1) in T0 x T0 : f(a0) = f(a1)}.
ModCongruence tangible_kernel(const MorphismTable& f);
// {(x, x') : f(x) = f(x')} for homomorphisms, tangible_kernel otherwise.
ModCongruence congruence_kernel(const MorphismTable& f);
// Generated by the diagonal and (f(x0), f(x1)) for (x0, x1) in C. Throws
// NotHomomorphism for maps that are not homomorphisms.
ModCongruence congruence_image(const MorphismTable& f, const ModCongruence& c);

// M -> M / ker f -> N.
struct Factorization {
    ModCongruence kernel;
    MorphismTable projection;
    MorphismTable monic;
    bool recomposes = false;  // monic . projection = f
};
// Throws IllDefined when f is not constant on kernel classes.
Factorization factor_through(const MorphismTable& f);

// N / C with C generated by (u, 0) for u in t_image(f): every class is null.
bool cokernel_is_null(const MorphismTable& f);

}  // namespace tsys
