// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// A criterion passes when its checks report no failures within its time limit.

#include "golden_cases.hpp"

#include "tsys/congruences.hpp"
#include "tsys/hyperfields.hpp"
#include "tsys/linalg.hpp"
#include "tsys/module_systems.hpp"
#include "tsys/polynomials.hpp"
#include "tsys/symmetrization.hpp"
#include "tsys/tropicalization.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using namespace tsys;

namespace {

// Failure counter with the first few messages kept for the report line.
struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (notes.size() < 3) notes.push_back(what);
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<void(Tally&, std::ostringstream&)> body;
};

Elem T(const Rational& v) { return Elem::tangible(v); }

// Rationals p/q with 1 <= q <= 16 and |p/q| <= 8.
Rational small_rational(Rng& rng) {
    std::uniform_int_distribution<long> den(1, 16);
    const long q = den(rng);
    std::uniform_int_distribution<long> num(-8 * q, 8 * q);
    return Rational(num(rng), q);
}

std::vector<Elem> supertropical_sample(Rng& rng, std::size_t n) {
    std::uniform_int_distribution<int> tag(0, 9);
    std::vector<Elem> out;
    while (out.size() < n) {
        const int t = tag(rng);
        Elem e = t == 0 ? Elem::zero() : t <= 6 ? Elem::tangible(small_rational(rng)) : Elem::ghost(small_rational(rng));
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    return out;
}

const char* const kSurpassAxioms[] = {"reflexive", "transitive", "(i)", "(ii)", "(iii)", "(iv)", "(v)"};

FinPtr sym_of(SysPtr base) { return materialize(*symmetrize(std::move(base))); }

std::vector<std::pair<std::string, FinPtr>> finite_fixtures() {
    return {{"boolean", make_boolean()},
            {"chain3", make_supertropical_chain()},
            {"sym(boolean)", sym_of(make_boolean())},
            {"sym(chain3)", sym_of(make_supertropical_chain())},
            {"S(krasner)", build_S_of_H(make_krasner()).sys},
            {"S(signs)", build_S_of_H(make_signs()).sys}};
}

// ---------------------------------------------------------------------------
// 1. Surpassing axioms.

void surpassing(Tally& t, std::ostringstream& info) {
    auto st = make_supertropical();
    Rng rng(1);
    std::size_t triples = 0;
    for (int round = 0; round < 8; ++round) {
        auto dom = supertropical_sample(rng, 24);
        triples += dom.size() * dom.size() * dom.size();
        auto rep = check_surpassing_axioms(*st, dom);
        for (const char* ax : kSurpassAxioms) t.expect(rep.passed(ax), std::string("supertropical ") + ax);
        // The relation itself: b <= c iff c = b + q for a quasi-zero q, searched over
        // the ghosts and zero of the sample and the ghost of c.
        for (const auto& b : dom)
            for (const auto& c : dom) {
                bool ref = false;
                std::vector<Elem> qs{Elem::zero(), st->quasi_zero(c)};
                for (const auto& d : dom) qs.push_back(st->quasi_zero(d));
                for (const auto& q : qs) ref = ref || st->add(b, q) == c;
                t.expect(st->surpass(b, c) == ref, "supertropical surpass vs search");
            }
    }
    // The fragment is not closed, so it enters as a domain of the full carrier.
    auto frag = check_surpassing_axioms(*st, supertropical_fragment());
    for (const char* ax : kSurpassAxioms) t.expect(frag.passed(ax), std::string("fragment ") + ax);
    for (const auto& [name, fin] : finite_fixtures()) {
        auto rep = check_surpassing_axioms(*fin);
        for (const char* ax : kSurpassAxioms) t.expect(rep.passed(ax), name + " " + ax);
    }
    // B x B with coordinate tangibles is only a pseudo-triple: 1 is a quasi-zero of B,
    // so (1,0) <= (1,0) + (0,1) = (1,1) breaks (v) and nothing else.
    auto b2 = product_system(*make_boolean(), *make_boolean());
    auto rb = check_surpassing_axioms(*b2);
    for (const char* ax : kSurpassAxioms)
        t.expect(rb.passed(ax) == (std::string(ax) != "(v)"), std::string("boolean^2 ") + ax);
    info << triples << " supertropical triples, " << finite_fixtures().size()
         << " finite fixtures and the fragment; boolean^2 fails only (v), as expected";
}

// ---------------------------------------------------------------------------
// 2. Twist product and symmetrization.

void symmetrization(Tally& t, std::ostringstream& info) {
    std::size_t triples = 0;
    for (SysPtr base : {SysPtr(make_boolean()), SysPtr(make_supertropical_chain())}) {
        auto s = symmetrize(base);
        const auto& all = *s->elements();
        // (a0,a1)(b0,b1) = (a0b0 + a1b1, a0b1 + a1b0) from the base operations.
        auto twist = [&](const Elem& x, const Elem& y) {
            return Elem::pair(base->add(base->mul(x.pos(), y.pos()), base->mul(x.neg(), y.neg())),
                              base->add(base->mul(x.pos(), y.neg()), base->mul(x.neg(), y.pos())));
        };
        for (const auto& x : all)
            for (const auto& y : all) {
                t.expect(s->mul(x, y) == twist(x, y), s->name() + " twist formula");
                t.expect(twist_mul(*base, x, y) == twist(x, y), s->name() + " twist_mul");
                for (const auto& z : all) {
                    ++triples;
                    t.expect(s->mul(s->mul(x, y), z) == s->mul(x, s->mul(y, z)), s->name() + " associativity");
                }
            }
        std::set<Elem> diag, null;
        for (const auto& b : *base->elements()) diag.insert(Elem::pair(b, b));
        for (const auto& e : compute_null_set(*s).members) null.insert(e);
        t.expect(null == diag, s->name() + " null set is the diagonal");
    }
    // T-hat in sym(max-plus): (a,0) and (0,a) for finite a form a group.
    auto mp = make_maxplus();
    auto s = symmetrize(mp);
    Rng rng(2);
    std::vector<Elem> hat;
    for (const auto& v : mp->sample(rng, 1200)) {
        if (v.is_zero()) continue;
        hat.push_back(hat.size() % 2 ? Elem::pair(v, Elem::zero()) : Elem::pair(Elem::zero(), v));
        if (hat.size() == 1000) break;
    }
    t.expect(hat.size() == 1000, "1000 T-hat samples");
    const Elem one = *s->one();
    for (std::size_t i = 0; i < hat.size(); ++i) {
        const Elem &x = hat[i], &y = hat[(i + 1) % hat.size()], &z = hat[(i + 7) % hat.size()];
        auto xy = s->mul(x, y);
        t.expect(s->tangible(x) && s->tangible(xy), "T-hat closed");
        t.expect(s->mul(xy, z) == s->mul(x, s->mul(y, z)), "T-hat associative");
        t.expect(s->mul(x, one) == x, "T-hat unit");
        auto inv = s->inverse(x);
        t.expect(inv && s->tangible(*inv) && s->mul(x, *inv) == one && s->mul(*inv, x) == one, "T-hat inverse");
    }
    info << triples << " finite twist triples, " << hat.size() << " T-hat samples";
}

// ---------------------------------------------------------------------------
// 3. Vandermonde identity and Laplace expansion.

void vandermonde_criterion(Tally& t, std::ostringstream& info) {
    auto check = [&](const System& sys, const std::vector<Elem>& a) {
        // prod_{i>j} (a_j (-) a_i), computed from the system operations.
        Elem prod = *sys.one();
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) prod = sys.mul(prod, sys.add(a[j], sys.negate(a[i])));
        Matrix v = vandermonde(sys, a);
        t.expect(neg_det(sys, v) == prod, sys.name() + " det(V) = product");
        t.expect(vandermonde_identity_check(sys, a), sys.name() + " identity check");
        for (std::size_t r = 0; r < v.n(); ++r) t.expect(laplace_expansion_check(sys, v, r), sys.name() + " Laplace");
    };
    auto b = make_boolean();
    std::size_t boolean_tuples = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t code = 0; code < (1u << n); ++code) {
            std::vector<Elem> a;
            for (std::size_t k = 0; k < n; ++k) a.push_back(Elem::symbol(static_cast<int>(code >> k & 1)));
            check(*b, a);
            ++boolean_tuples;
        }
    auto st = make_supertropical();
    Rng rng(3);
    std::uniform_int_distribution<int> len(1, 5);
    for (int trial = 0; trial < 1000; ++trial) check(*st, supertropical_sample(rng, static_cast<std::size_t>(len(rng))));
    info << boolean_tuples << " Boolean and 1000 supertropical tuples";
}

// ---------------------------------------------------------------------------
// 4. Root bound.

// Largest magnitude among the terms; a circ-root when it is a ghost or attained twice.
bool is_root_oracle(const std::vector<std::optional<Rational>>& coefs, const Rational& x) {
    std::optional<Rational> best;
    int hits = 0;
    for (std::size_t k = 0; k < coefs.size(); ++k) {
        if (!coefs[k]) continue;
        Rational v = *coefs[k] + Rational(static_cast<long>(k)) * x;
        if (!best || v > *best) {
            best = v;
            hits = 1;
        } else if (v == *best) {
            ++hits;
        }
    }
    return !best || hits > 1;
}

void root_bound(Tally& t, std::ostringstream& info) {
    auto st = make_supertropical();
    std::size_t polys = 0;
    const std::vector<std::vector<long>> pools{{0, 1, 2, 3}, {-2, 0, 1, 3, 4}};
    for (const auto& raw : pools) {
        std::vector<Elem> pool;
        for (long v : raw) pool.push_back(T(Rational(v)));
        std::vector<Elem> fine;
        for (long k = -32; k <= 32; ++k) fine.push_back(T(Rational(k, 4)));
        for (int n = 1; n <= 3; ++n) {
            for (const auto* dom : {&pool, &fine}) {
                auto r = check_root_bound(*st, n, pool, *dom);
                t.expect(r.holds, "root bound degree " + std::to_string(n));
                polys += r.polynomials;
            }
            // Oracle enumeration on the fine grid: coefficients in pool u {0}.
            const std::size_t base = raw.size() + 1;
            std::size_t total = raw.size();
            for (int k = 0; k < n; ++k) total *= base;
            std::size_t count = 0;
            for (std::size_t code = 0; code < total; ++code) {
                std::vector<std::optional<Rational>> c(n + 1);
                std::size_t rest = code;
                for (int k = 0; k < n; ++k) {
                    const std::size_t d = rest % base;
                    rest /= base;
                    if (d > 0) c[k] = Rational(raw[d - 1]);
                }
                c[n] = Rational(raw[rest]);
                std::size_t roots = 0;
                for (long k = -32; k <= 32; ++k) roots += is_root_oracle(c, Rational(k, 4));
                t.expect(roots <= static_cast<std::size_t>(n), "oracle root count");
                ++count;
            }
            t.expect(count == total, "enumeration size");
        }
    }
    info << polys << " polynomials checked";
}

// ---------------------------------------------------------------------------
// 5. Bend equivalence implies circ-equivalence.

TropPoly random_trop(Rng& rng, int nvars, int maxdeg, int nterms) {
    std::uniform_int_distribution<int> deg(0, maxdeg), val(-8, 8);
    TropPoly f;
    for (int i = 0; i < nterms; ++i) {
        Exponent e(nvars);
        for (auto& k : e) k = deg(rng);
        f[e] = Rational(val(rng), 2);
    }
    return f;
}

// One forward move: delete a dominated monomial, or add a monomial at a new exponent
// with coefficient at most its domination bound.
bool forward_move(Rng& rng, TropPoly& f, int nvars, int maxdeg) {
    std::uniform_int_distribution<int> coin(0, 1), deg(0, maxdeg), slack(0, 2);
    if (coin(rng)) {
        std::vector<Exponent> dominated;
        for (const auto& [e, c] : f)
            if (f.size() > 1 && is_dominated(f, e, 1)) dominated.push_back(e);
        if (!dominated.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, dominated.size() - 1);
            f.erase(dominated[pick(rng)]);
            return true;
        }
    }
    for (int attempt = 0; attempt < 20; ++attempt) {
        Exponent u(nvars);
        for (auto& k : u) k = deg(rng);
        if (f.count(u)) continue;
        auto bound = domination_bound(f, u, 1);
        if (!bound) continue;
        f[u] = *bound - Rational(slack(rng), 2);
        return true;
    }
    return false;
}

void bend_criterion(Tally& t, std::ostringstream& info) {
    auto st = make_supertropical();
    Rng rng(5);
    std::vector<std::vector<Elem>> grid1, grid2;
    for (long k = -25; k < 25; ++k) grid1.push_back({T(Rational(k, 4))});
    for (long a = -5; a < 5; ++a)
        for (long b = -2; b < 3; ++b) grid2.push_back({T(Rational(a, 2)), T(Rational(b, 2))});
    std::size_t pairs = 0, moves = 0, nontrivial = 0;
    while (pairs < 500) {
        const int nvars = pairs % 2 ? 2 : 1;
        const int maxdeg = nvars == 1 ? 5 : 3;
        TropPoly f = random_trop(rng, nvars, maxdeg, 4);
        TropPoly g = f;
        std::uniform_int_distribution<int> steps(1, 4);
        const int k = steps(rng);
        int made = 0;
        for (int i = 0; i < k; ++i) {
            TropPoly before = g;
            if (!forward_move(rng, g, nvars, maxdeg)) continue;
            t.expect(is_bend_move(before, g, 1), "forward move is a bend move");
            ++made;
        }
        if (made == 0) continue;
        ++pairs;
        moves += made;
        nontrivial += f != g;
        auto p = from_tropical(*st, nvars, false, f), q = from_tropical(*st, nvars, false, g);
        const auto& grid = nvars == 1 ? grid1 : grid2;
        t.expect(grid.size() == 50, "50-point grid");
        t.expect(circ_equiv(*st, p, q, grid), "bend pair is circ-equivalent");
    }
    info << pairs << " pairs, " << moves << " moves, " << nontrivial << " with distinct polynomials";
}

// ---------------------------------------------------------------------------
// 6. Prime and radical congruences.

void prime_radical(Tally& t, std::ostringstream& info) {
    std::size_t tcongs = 0, congs = 0, primes = 0, maximal = 0, def_agree = 0, naive_fail = 0, all_fail = 0;
    for (const auto& [name, sys] : std::vector<std::pair<std::string, FinPtr>>{
             {"boolean", make_boolean()}, {"sym(boolean)", sym_of(make_boolean())}, {"chain3", make_supertropical_chain()}}) {
        auto lat = enumerate_lattice(sys);
        const auto& flags = lat.t_prime_flags();
        std::vector<std::size_t> prime_idx;
        for (auto i : lat.t_index)
            if (flags[i]) prime_idx.push_back(i);
        for (auto i : lat.t_index) {
            const auto& c = lat.all[i];
            ++tcongs;
            const bool tp = is_T_prime(lat, c);
            primes += tp;
            t.expect(tp == prime_by_tangible_pairs(c), name + " T-prime criterion");
            // The all-congruence quantifier is reported, not required: on chain3 the
            // non-T congruence 1 = e squares into the diagonal.
            def_agree += is_prime(lat, c) == prime_by_tangible_pairs(c);
            if (is_maximal(lat, c)) {
                ++maximal;
                t.expect(tp, name + " maximal is prime");
            }
        }
        // Radical oracle: the pairs of support with a twist power in C, then closure.
        auto oracle_radical = [&](const Congruence& c, const std::vector<int>& support) {
            std::vector<IndexPair> gens;
            for (int a : support)
                for (int b : support) {
                    bool in = false;
                    for (int n = 1; n <= sys->size() * sys->size() + 1 && !in; ++n) {
                        auto [x, y] = twist_power(*sys, {a, b}, n);
                        in = c.contains(x, y);
                    }
                    if (in) gens.push_back({a, b});
                }
            return generate_congruence(sys, gens);
        };
        const auto tang = sys->tangible_indices();
        std::vector<int> t0(tang.begin(), tang.end()), everything(sys->size());
        t0.push_back(*sys->zero_index());
        std::iota(everything.begin(), everything.end(), 0);
        std::vector<std::size_t> all_primes;
        for (std::size_t i = 0; i < lat.all.size(); ++i)
            if (is_prime(lat, lat.all[i])) all_primes.push_back(i);
        for (auto i : lat.t_index) {
            const auto& c = lat.all[i];
            auto rad = oracle_radical(c, t0);
            t.expect(radical(c) == rad, name + " radical vs oracle");
            Congruence above = full_congruence(sys);
            for (auto p : prime_idx)
                if (is_subset(c, lat.all[p])) above = meet(above, lat.all[p]);
            t.expect(rad == above, name + " radical = meet of T-primes above");
            t.expect(check_radical_decomposition(lat, c), name + " radical decomposition");
        }
        // Radicals are defined on T-congruences; any other congruence is compared
        // through the least T-congruence above it, since T-primes above the two agree.
        for (const auto& c : lat.all) {
            ++congs;
            Congruence hull = full_congruence(sys);
            for (auto i : lat.t_index)
                if (is_subset(c, lat.all[i])) hull = meet(hull, lat.all[i]);
            t.expect(is_T_congruence(hull), name + " T-hull is a T-congruence");
            auto lib_hull = t_hull(lat, c);
            t.expect(lib_hull && *lib_hull == hull, name + " t_hull");
            Congruence above = full_congruence(sys);
            for (auto p : prime_idx)
                if (is_subset(c, lat.all[p])) above = meet(above, lat.all[p]);
            auto rad = oracle_radical(hull, t0);
            t.expect(is_subset(c, rad), name + " C inside its radical");
            t.expect(rad == above, name + " radical = meet of T-primes above");
            t.expect(check_radical_decomposition(lat, c), name + " radical decomposition");
            naive_fail += !is_T_congruence(c) && !is_subset(c, oracle_radical(c, t0));
            Congruence above_all = full_congruence(sys);
            for (auto p : all_primes)
                if (is_subset(c, lat.all[p])) above_all = meet(above_all, lat.all[p]);
            all_fail += !(oracle_radical(c, everything) == above_all);
        }
    }
    info << tcongs << " T-congruences, " << primes << " T-prime, " << maximal << " maximal; all-congruence is_prime agrees on "
         << def_agree << "/" << tcongs << "; radicals of " << congs << " congruences; unsound extensions fail on " << naive_fail
         << " (tangible radical of a non-T congruence) and " << all_fail << " (all pairs, all primes)";
}

// ---------------------------------------------------------------------------
// 7. Localization.

void localization_criterion(Tally& t, std::ostringstream& info) {
    auto c3 = make_supertropical_chain();
    std::vector<std::pair<std::string, FinPtr>> fixtures{
        {"boolean", make_boolean()},
        {"chain3", c3},
        {"sym(boolean)", sym_of(make_boolean())},
        {"S(signs)", build_S_of_H(make_signs()).sys},
        {"boolean^2", product_system(*make_boolean(), *make_boolean())},
        {"chain3^2", product_system(*c3, *c3)}};
    std::size_t sets = 0, regular = 0, prime_cases = 0;
    for (const auto& [name, sys] : fixtures) {
        auto lat = enumerate_lattice(sys);
        std::set<std::vector<int>> done;
        for (int a = 0; a < sys->size(); ++a)
            for (int b = a; b < sys->size(); ++b) {
                std::vector<int> seed{a};
                if (b != a) seed.push_back(b);
                Localization loc;
                try {
                    loc = localize(sys, seed);
                } catch (const NullDenominator&) {
                    continue;
                }
                if (!done.insert(loc.denominators).second) continue;
                ++sets;
                // {(b0, b1) : s b0 = s b1 for some s in S}, straight from the table.
                Congruence oracle = diagonal(sys);
                for (int x = 0; x < sys->size(); ++x)
                    for (int y = 0; y < sys->size(); ++y) {
                        bool rel = false;
                        for (int s : loc.denominators) rel = rel || sys->mul_i(s, x) == sys->mul_i(s, y);
                        if (rel) oracle = join(oracle, generate_congruence(sys, {{x, y}}));
                    }
                auto ker = canonical_kernel(loc, sys);
                t.expect(ker == oracle, name + " canonical kernel");
                t.expect(ker == localization_kernel(sys, loc.denominators), name + " kernel formula");
                for (const auto& [x, y] : ker.pairs()) {
                    bool rel = false;
                    for (int s : loc.denominators) rel = rel || sys->mul_i(s, x) == sys->mul_i(s, y);
                    t.expect(rel, name + " kernel pair is witnessed");
                }
                if (is_regular(*sys, loc.denominators)) {
                    ++regular;
                    std::set<int> image(loc.canonical.begin(), loc.canonical.end());
                    t.expect(image.size() == loc.canonical.size(), name + " regular S is injective");
                }
                auto llat = enumerate_lattice(loc.sys);
                for (auto i : lat.t_index) {
                    const auto& c = lat.all[i];
                    if (!lat.t_prime_flags()[i] || !is_C_regular(c, loc.denominators)) continue;
                    ++prime_cases;
                    t.expect(is_T_prime(llat, localize_congruence(c, loc)), name + " prime localizes to prime");
                }
            }
    }
    t.expect(regular > 0 && prime_cases > 0, "nonvacuous localization corpus");
    info << sets << " denominator sets, " << regular << " regular, " << prime_cases << " prime localizations";
}

// ---------------------------------------------------------------------------
// 8. Hyperfield functors.

using Set = std::set<int>;

Set to_set(ElemSet m) {
    Set s;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) s.insert(i);
    return s;
}

void hyperfield_criterion(Tally& t, std::ostringstream& info) {
    for (const auto& h : {make_krasner(), make_signs()}) {
        auto sum = [&](const Set& x, const Set& y) {
            Set out;
            for (int a : x)
                for (int b : y) {
                    auto s = to_set(h.hyperadd[a][b]);
                    out.insert(s.begin(), s.end());
                }
            return out;
        };
        auto prod = [&](const Set& x, const Set& y) {
            Set out;
            for (int a : x)
                for (int b : y) out.insert(h.mul[a][b]);
            return out;
        };
        // Breadth-first closure of the singletons under set sum and product.
        std::set<Set> seen;
        std::vector<Set> queue;
        for (int a = 0; a < h.size(); ++a)
            if (seen.insert({a}).second) queue.push_back({a});
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (std::size_t j = 0; j <= head; ++j)
                for (const auto& r : {sum(queue[head], queue[j]), prod(queue[head], queue[j])})
                    if (seen.insert(r).second) queue.push_back(r);
        auto s = build_S_of_H(h);
        std::set<Set> got;
        for (auto m : s.sets) got.insert(to_set(m));
        t.expect(got == seen, h.name + " carrier");
        const auto& sys = *s.sys;
        for (int i = 0; i < sys.size(); ++i)
            for (int j = 0; j < sys.size(); ++j) {
                const Set x = to_set(s.sets[i]), y = to_set(s.sets[j]);
                t.expect(to_set(s.sets[sys.add_i(i, j)]) == sum(x, y), h.name + " addition table");
                t.expect(to_set(s.sets[sys.mul_i(i, j)]) == prod(x, y), h.name + " multiplication table");
            }
        for (int i = 0; i < sys.size(); ++i) {
            Set neg;
            for (int a : to_set(s.sets[i])) neg.insert(h.neg[a]);
            t.expect(to_set(s.sets[sys.neg_i(i)]) == neg, h.name + " negation");
        }
    }
    auto sT = make_S_of_tropical();
    auto st = make_supertropical();
    Rng rng(8);
    auto xs = supertropical_sample(rng, 1000), ys = supertropical_sample(rng, 1000);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto &x = xs[i], &y = ys[i];
        auto fx = supertropical_to_S(x), fy = supertropical_to_S(y);
        t.expect(S_to_supertropical(fx) == x, "round trip");
        t.expect(supertropical_to_S(st->add(x, y)) == sT->add(fx, fy), "add");
        t.expect(supertropical_to_S(st->mul(x, y)) == sT->mul(fx, fy), "mul");
        t.expect(supertropical_to_S(st->negate(x)) == sT->negate(fx), "negate");
        t.expect(st->tangible(x) == sT->tangible(fx), "tangible");
        t.expect(st->is_quasi_zero(x) == sT->is_quasi_zero(fx), "quasi-zero");
        t.expect(st->surpass(x, y) == sT->surpass(fx, fy), "surpass");
    }
    info << "S(Krasner), S(Signs) against closure; 1000 S(tropical) samples";
}

// ---------------------------------------------------------------------------
// 9. Tensor products.

// free(m) (x) free(n) -> free(mn): (x, y) -> (x_i y_j).
void tensor_iso(Tally& t, FinPtr g, int m, int n) {
    auto fm = free_module(g, m), fn = free_module(g, n), fmn = free_module(g, m * n);
    auto tens = tensor(fm, fn);
    const std::string tag = "free(" + std::to_string(m) + ")(x)free(" + std::to_string(n) + ")";
    t.expect(tens.sys->size() == fmn->size(), tag + " class count");
    const std::vector<ModPtr> left(m, ground_module(g)), right(n, ground_module(g)), out(m * n, ground_module(g));
    std::vector<std::vector<int>> psi(fm->size(), std::vector<int>(fn->size()));
    int tab = 0;
    for (int x = 0; x < fm->size(); ++x)
        for (int y = 0; y < fn->size(); ++y) {
            auto cx = sum_components(left, x), cy = sum_components(right, y);
            std::vector<int> coords;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) coords.push_back(g->mul_i(cx[i], cy[j]));
            psi[x][y] = sum_index(out, coords);
            ++tab;
        }
    t.expect(tab == fm->size() * fn->size(), tag + " psi table");
    t.expect(is_bilinear(tens, *fmn, psi), tag + " bilinear");
    auto iso = induced_map(tens, *fmn, psi);
    t.expect(iso.has_value(), tag + " induced map");
    if (!iso) return;
    t.expect(std::set<int>(iso->begin(), iso->end()).size() == iso->size() &&
                 static_cast<int>(iso->size()) == fmn->size(),
             tag + " bijective");
    MorphismTable f{tens.sys, fmn, *iso};
    t.expect(classify_morphism(f).kind == MorphismKind::homomorphism, tag + " homomorphism");
    // Structure tables transported along the bijection.
    std::vector<int> inv(iso->size());
    for (std::size_t i = 0; i < iso->size(); ++i) inv[(*iso)[i]] = static_cast<int>(i);
    MorphismTable back{fmn, tens.sys, inv};
    t.expect(classify_morphism(back).kind == MorphismKind::homomorphism, tag + " inverse homomorphism");
    for (int a = 0; a < tens.sys->size(); ++a) {
        t.expect((*iso)[tens.sys->neg_i(a)] == fmn->neg_i((*iso)[a]), tag + " negation");
        t.expect(tens.sys->tangible_i(a) == fmn->tangible_i((*iso)[a]), tag + " tangibles");
    }
}

void tensor_criterion(Tally& t, std::ostringstream& info) {
    auto b = make_boolean();
    tensor_iso(t, b, 2, 1);
    tensor_iso(t, b, 2, 2);
    // Representative independence: every formal sum of simple tensors maps to the
    // class given by the table.
    auto m = free_module(b, 2);
    auto tm = tensor(m, m);
    auto homs = hom_triple(m, m);
    std::vector<std::vector<IndexPair>> sums;
    std::vector<IndexPair> simple;
    for (int x = 0; x < m->size(); ++x)
        for (int y = 0; y < m->size(); ++y) simple.push_back({x, y});
    for (std::size_t mask = 0; mask < (1u << simple.size()); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) > 4) continue;
        std::vector<IndexPair> terms;
        for (std::size_t k = 0; k < simple.size(); ++k)
            if (mask >> k & 1) terms.push_back(simple[k]);
        sums.push_back(terms);
    }
    std::set<int> classes;
    std::size_t evaluated = 0;
    for (const auto& f1 : homs.maps)
        for (const auto& f2 : homs.maps) {
            MorphismTable a{m, m, f1}, c{m, m, f2};
            auto ff = tensor_of_homomorphisms(tm, tm, a, c);
            for (const auto& terms : sums) {
                std::vector<IndexPair> image;
                for (auto [x, y] : terms) image.push_back({f1[x], f2[y]});
                const int src = tm.class_of_sum(terms);
                classes.insert(src);
                t.expect(ff.map[src] == tm.class_of_sum(image), "representative independence");
                ++evaluated;
            }
        }
    t.expect(static_cast<int>(classes.size()) == tm.sys->size(), "every class has a representative");
    // Regrouping witness.
    auto w = nonfunctoriality_witness(b);
    const int x1 = 1, x2 = 2;
    t.expect(w.tensor.class_of_sum(w.first) == w.element && w.tensor.class_of_sum(w.second) == w.element,
             "both regroupings represent the element");
    t.expect(w.value_first == w.tensor.simple[x2][x2], "first regrouping gives x2(x)x2");
    t.expect(w.value_second == w.tensor.simple[x1][x1], "second regrouping gives x1(x)x1");
    for (const auto* reg : {&w.first, &w.second}) {
        std::vector<IndexPair> image;
        for (auto [x, y] : *reg) image.push_back({w.f.map[x], w.f.map[y]});
        const int expect = reg == &w.first ? w.value_first : w.value_second;
        t.expect(w.tensor.class_of_sum(image) == expect, "witness values recomputed");
    }
    info << homs.maps.size() * homs.maps.size() << " map pairs, " << evaluated << " formal sums";
}

// ---------------------------------------------------------------------------
// 10. Tropicalization.

PuiseuxSeries random_series(Rng& rng) {
    static const long dens[] = {1, 2, 3, 6};
    std::uniform_int_distribution<int> nterms(1, 4), num(-6, 6), coef(-3, 3), den(0, 3);
    std::vector<std::pair<Rational, Rational>> terms;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        int c = coef(rng);
        if (c == 0) c = 1;
        terms.push_back({Rational(num(rng), dens[den(rng)]), Rational(c)});
    }
    return PuiseuxSeries::from_terms(terms);
}

std::optional<Rational> min_exponent(const PuiseuxSeries& p) {
    std::optional<Rational> best;
    for (const auto& [e, c] : p.terms())
        if (c.sign() != 0 && (!best || e < *best)) best = e;
    return best;
}

void tropicalization_criterion(Tally& t, std::ostringstream& info) {
    Rng rng(10);
    std::size_t cancellations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto p = random_series(rng), q = random_series(rng);
        if (trial % 4 == 1) q = -p + q * PuiseuxSeries::monomial(Rational(1), Rational(2));
        if (trial % 4 == 2) q = -p;
        auto a = val_arith_check(p, q);
        t.expect(a.ok(), "val arithmetic");
        const auto vp = min_exponent(p), vq = min_exponent(q), vs = min_exponent(p + q), vm = min_exponent(p * q);
        t.expect(val(p) == vp && val(q) == vq, "val is the least exponent");
        if (vp && vq) {
            t.expect(vm && *vm == *vp + *vq, "val multiplicative");
            if (*vp != *vq) t.expect(vs == std::min(*vp, *vq), "val of a sum, distinct values");
            else t.expect(!vs || *vs >= *vp, "val of a sum, equal values");
            cancellations += *vp == *vq && (!vs || *vs > *vp);
        }
    }
    t.expect(cancellations >= 100, "engineered cancellations present");

    auto u23 = uniform_matroid(3, 2);
    t.expect(valuated_matroid_check(u23).valid, "U23 accepted");
    auto zero = make_matroid_candidate(3, 2, [](const std::vector<int>&) { return TropVal{}; });
    auto z = valuated_matroid_check(zero);
    t.expect(!z.valid && z.axiom == "(i)", "mutation (i) rejected");
    auto asym = u23;
    asym.at({0, 1}) = Rational(1);
    auto as = valuated_matroid_check(asym);
    t.expect(!as.valid && as.axiom == "(ii)", "mutation (ii) symmetry rejected");
    auto rep = u23;
    rep.at({2, 2}) = Rational(0);
    auto rp = valuated_matroid_check(rep);
    t.expect(!rp.valid && rp.axiom == "(ii)", "mutation (ii) nullity rejected");
    // Rank 2 on three elements admits no exchange violation; the single-axiom
    // mutation for (iii) is taken on U_{2,4}.
    auto u24 = uniform_matroid(4, 2);
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {2, 3}}) {
        u24.at({i, j}) = Rational(1);
        u24.at({j, i}) = Rational(1);
    }
    auto ex = valuated_matroid_check(u24);
    t.expect(!ex.valid && ex.axiom == "(iii)", "mutation (iii) rejected");

    std::vector<PuiseuxSeries> dom{PuiseuxSeries()};
    for (int i = 0; i < 30; ++i) dom.push_back(random_series(rng));
    dom.push_back(-dom[3]);
    dom.push_back(-dom[7] + PuiseuxSeries::monomial(Rational(1), Rational(9)));
    t.expect(check_puiseux_valuation(dom).ok, "Puiseux valuation certified");
    info << "1000 pairs, " << cancellations << " leading cancellations; matroid mutations (i), (ii) x2, (iii)";
}

// ---------------------------------------------------------------------------
// 11. CLI golden files.

void cli_criterion(Tally& t, std::ostringstream& info) {
    const auto cases = golden::cases();
    std::set<std::string> subs;
    for (const auto& c : cases) {
        auto o = golden::run(c);
        t.expect(o.exit_ok, c.name + " exit code");
        t.expect(o.bytes_ok, c.name + " bytes");
    }
    t.expect(!cases.empty(), "golden cases present");
    info << cases.size() << " golden cases";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "surpassing axioms", 10, surpassing},
        {2, "twist product and symmetrization", 5, symmetrization},
        {3, "Vandermonde identity and Laplace expansion", 30, vandermonde_criterion},
        {4, "root bound", 60, root_bound},
        {5, "bend equivalence implies circ-equivalence", 30, bend_criterion},
        {6, "prime and radical congruences", 120, prime_radical},
        {7, "localization", 30, localization_criterion},
        {8, "hyperfield functors", 10, hyperfield_criterion},
        {9, "tensor products", 60, tensor_criterion},
        {10, "tropicalization", 10, tropicalization_criterion},
        {11, "CLI golden files", 10, cli_criterion},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Tally t;
        std::ostringstream info;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body(t, info);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = error.empty() && t.failures == 0 && t.checks > 0 && secs < c.limit_s;
        failed += !ok;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.limit_s);
        std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << ", " << t.checks
                  << " checks";
        if (t.failures) std::cout << ", " << t.failures << " failures";
        std::cout << "; " << info.str() << ")";
        if (!error.empty()) std::cout << " exception: " << error;
        for (const auto& n : t.notes) std::cout << " | " << n;
        std::cout << "\n";
    }
    return failed == 0 ? 0 : 1;
}
