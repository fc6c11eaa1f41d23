#pragma once

// Carriers (A, T, (-), <=): addition, multiplication or T-action, zero, tangible
// predicate, negation map and surpassing relation.

#include "tsys/elem.hpp"
#include "tsys/errors.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace tsys {

using Rng = std::mt19937_64;

enum class Kind { semiring, module };

// Sampling bounds for parametric carriers: values p/q with 1 <= q <= max_den and
// |p/q| <= max_abs. A fraction of draws come from the small integer pool
// {-pool..pool} so that ties occur often.
struct SampleConfig {
    long max_den = 16;
    long max_abs = 8;
    long pool = 3;
    double pool_rate = 0.35;
};

Rational sample_rational(Rng& rng, const SampleConfig& cfg);

class System {
public:
    virtual ~System() = default;

    virtual std::string name() const = 0;
    virtual Kind kind() const { return Kind::semiring; }
    // False for pseudo-triples (some tangible is a quasi-zero, or T fails to
    // generate A additively).
    virtual bool is_triple() const = 0;
    virtual bool commutative() const { return true; }

    virtual bool has_zero() const { return true; }
    virtual Elem zero() const = 0;
    virtual std::optional<Elem> one() const = 0;
    virtual bool contains(const Elem& e) const = 0;

    virtual Elem add(const Elem& a, const Elem& b) const = 0;
    // Total on semiring systems; on module kind, a must be tangible.
    virtual Elem mul(const Elem& a, const Elem& b) const = 0;
    virtual Elem negate(const Elem& a) const = 0;
    virtual bool tangible(const Elem& a) const = 0;

    // a <= b. Default is the derived relation: b = a + c° for some c.
    virtual bool surpass(const Elem& a, const Elem& b) const;
    // Membership in A°.
    virtual bool is_quasi_zero(const Elem& a) const;

    // Full enumeration for finite carriers, nullptr otherwise.
    virtual const std::vector<Elem>* elements() const { return nullptr; }
    virtual std::vector<Elem> sample(Rng& rng, std::size_t n) const;
    // A finite set containing every d, up to additive equivalence, that can
    // satisfy x + d = target for some x.
    virtual std::vector<Elem> summand_candidates(const Elem& target) const;
    // Tangibles sufficient to realize any minimal tangible sum equal to b.
    virtual std::vector<Elem> height_candidates(const Elem& b) const;
    virtual std::optional<Elem> inverse(const Elem& a) const;

    virtual std::string show(const Elem& a) const;

    bool finite() const { return elements() != nullptr; }
    Elem quasi_zero(const Elem& a) const { return add(a, negate(a)); }
    void require(const Elem& e) const;
};

using SysPtr = std::shared_ptr<const System>;

// Existential search for the derived relation: b = a + d with d in A°,
// d ranging over summand_candidates(b).
bool circ_surpass_search(const System& sys, const Elem& a, const Elem& b);

// ---------------------------------------------------------------------------
// Finite systems given by tables over symbol indices.

struct FinSpec {
    std::vector<std::string> names;
    std::vector<std::vector<int>> add;
    std::vector<std::vector<int>> mul;  // empty or -1 entries allowed for module kind
    std::optional<int> zero;
    std::optional<int> one;
    std::vector<int> tangibles;
    std::vector<int> neg;
    std::optional<std::vector<std::pair<int, int>>> surpass;  // nullopt = derived
    Kind kind = Kind::semiring;
};

class FinSys : public System {
public:
    explicit FinSys(FinSpec spec, std::string name = "finite");

    std::string name() const override { return name_; }
    Kind kind() const override { return spec_.kind; }
    bool is_triple() const override { return triple_; }
    bool commutative() const override { return commutative_; }
    bool has_zero() const override { return spec_.zero.has_value(); }
    Elem zero() const override;
    std::optional<Elem> one() const override;
    bool contains(const Elem& e) const override;
    Elem add(const Elem& a, const Elem& b) const override;
    Elem mul(const Elem& a, const Elem& b) const override;
    Elem negate(const Elem& a) const override;
    bool tangible(const Elem& a) const override;
    bool surpass(const Elem& a, const Elem& b) const override;
    bool is_quasi_zero(const Elem& a) const override;
    const std::vector<Elem>* elements() const override { return &elems_; }
    std::vector<Elem> summand_candidates(const Elem&) const override { return elems_; }
    std::vector<Elem> height_candidates(const Elem& b) const override;
    std::optional<Elem> inverse(const Elem& a) const override;
    std::string show(const Elem& a) const override;

    int size() const { return static_cast<int>(spec_.names.size()); }
    int add_i(int a, int b) const { return spec_.add[a][b]; }
    int mul_i(int a, int b) const;
    bool mul_defined(int a, int b) const;
    int neg_i(int a) const { return spec_.neg[a]; }
    bool tangible_i(int a) const { return tangible_flags_[a]; }
    bool surpass_i(int a, int b) const { return surpass_[a * size() + b]; }
    bool quasi_zero_i(int a) const { return quasi_zero_flags_[a]; }
    std::optional<int> zero_index() const { return spec_.zero; }
    std::optional<int> one_index() const { return spec_.one; }
    const std::string& name_of(int i) const { return spec_.names[i]; }
    std::optional<int> find(const std::string& name) const;
    const FinSpec& spec() const { return spec_; }
    bool explicit_surpass() const { return spec_.surpass.has_value(); }
    std::vector<int> tangible_indices() const;

private:
    FinSpec spec_;
    std::string name_;
    std::vector<Elem> elems_;
    std::vector<bool> tangible_flags_;
    std::vector<bool> quasi_zero_flags_;
    std::vector<bool> surpass_;
    bool triple_ = false;
    bool commutative_ = true;
};

using FinPtr = std::shared_ptr<const FinSys>;

// Tables of a finite, operation-closed subset of sys. Names come from sys.show.
FinPtr materialize(const System& sys, const std::vector<Elem>& members,
                   const std::string& name);
FinPtr materialize(const System& sys);

// Componentwise product; tangibles are nonzero pairs of tangible-or-zero entries.
FinPtr product_system(const FinSys& a, const FinSys& b);

// ---------------------------------------------------------------------------
// Built-in carriers.

SysPtr make_supertropical(SampleConfig cfg = {});
SysPtr make_maxplus(SampleConfig cfg = {});
SysPtr make_minplus(SampleConfig cfg = {});
FinPtr make_boolean();
SysPtr make_nat();
// {zero, 1, e = 1°}: the supertropical semiring over the trivial group.
FinPtr make_supertropical_chain();
// Supertropical elements {zero, t(-1), t(0), t(1), g(-1), g(0), g(1)}, closed
// under + and (-).
std::vector<Elem> supertropical_fragment();

SysPtr negation_from_epsilon(SysPtr sys, const Elem& eps);

// ---------------------------------------------------------------------------
// Structural checks.

struct Violation {
    std::string axiom;
    std::vector<Elem> witness;
};

struct Report {
    std::vector<std::string> checked;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool passed(const std::string& axiom) const;
    void fail(const std::string& axiom, std::vector<Elem> witness);
};

struct Verdict {
    bool holds = true;
    std::vector<Elem> witness;
};

// Table axioms of a finite system: closure, associativity, commutativity,
// identities, distributivity, negation involution and compatibility.
Report check_structure(const FinSys& sys);
// Same laws on n random triples of a parametric carrier.
Report check_structure_sampled(const System& sys, Rng& rng, std::size_t n);

Verdict check_unique_negation(const System& sys, const std::vector<Elem>& domain);
Verdict check_unique_negation(const System& sys);
Verdict check_meta_tangible(const System& sys, const std::vector<Elem>& domain);
Verdict check_meta_tangible(const System& sys);
Verdict check_bipotent(const System& sys, const std::vector<Elem>& domain);
Verdict check_bipotent(const System& sys);

// Minimal number of tangible summands, nullopt when none within bound.
std::optional<int> height(const System& sys, const Elem& b, int bound);

struct CharSubtriple {
    FinPtr sub;
    std::vector<Elem> members;  // elements of the parent carrier
    std::string tag;            // boolean | integer-like | krasner-like | sign-like | char-4-like | other
};
CharSubtriple characteristic_subtriple(const System& sys, std::size_t bound = 64);

// Axioms (i)-(v) of a surpassing relation plus preorder laws and the
// T-surpassing condition, quantified over domain.
Report check_surpassing_axioms(const System& sys, const std::vector<Elem>& domain);
Report check_surpassing_axioms(const System& sys);

struct NullSet {
    std::vector<Elem> members;
    bool cross_check = true;  // agrees with {b : 0 <= b} when zero exists
};
NullSet compute_null_set(const System& sys);
// b <=^ c: c = b + d for some null d.
bool surpass_hat(const System& sys, const NullSet& null, const Elem& b, const Elem& c);

}  // namespace tsys
