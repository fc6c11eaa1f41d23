#include "tsys/system.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tsys {

bool Report::passed(const std::string& axiom) const {
    for (const auto& v : violations)
        if (v.axiom == axiom) return false;
    return std::find(checked.begin(), checked.end(), axiom) != checked.end();
}

void Report::fail(const std::string& axiom, std::vector<Elem> witness) {
    for (const auto& v : violations)
        if (v.axiom == axiom) return;  // first witness only
    violations.push_back({axiom, std::move(witness)});
}

namespace {

const std::vector<Elem>& all_of(const System& sys) {
    const auto* all = sys.elements();
    if (!all) throw Unsupported(sys.name() + ": exhaustive check needs a finite carrier");
    return *all;
}

// Evaluates f, treating an undefined action product as "skip".
template <class F>
bool defined(F&& f) {
    try {
        f();
        return true;
    } catch (const ActionOnly&) {
        return false;
    }
}

void structure_laws(const System& sys, const std::vector<Elem>& as, const std::vector<Elem>& bs,
                    const std::vector<Elem>& cs, Report& r) {
    const bool total = sys.kind() == Kind::semiring;
    r.checked = {"add-comm", "add-assoc", "zero-identity", "zero-not-tangible", "neg-involution", "neg-additive"};
    if (total) {
        for (const char* ax : {"mul-assoc", "distributive", "one-identity", "zero-absorbing", "neg-mul"})
            r.checked.push_back(ax);
    }
    const bool z = sys.has_zero();
    std::optional<Elem> zero;
    if (z) zero = sys.zero();
    auto u = sys.one();
    if (z && sys.tangible(*zero)) r.fail("zero-not-tangible", {*zero});
    for (std::size_t i = 0; i < as.size(); ++i) {
        const Elem& a = as[i];
        if (sys.negate(sys.negate(a)) != a) r.fail("neg-involution", {a});
        if (z && sys.add(a, *zero) != a) r.fail("zero-identity", {a});
        if (total && u && (sys.mul(*u, a) != a || sys.mul(a, *u) != a)) r.fail("one-identity", {a});
        if (total && z && (sys.mul(*zero, a) != *zero || sys.mul(a, *zero) != *zero)) r.fail("zero-absorbing", {a});
        for (std::size_t j = 0; j < bs.size(); ++j) {
            const Elem& b = bs[j];
            if (sys.add(a, b) != sys.add(b, a)) r.fail("add-comm", {a, b});
            if (sys.negate(sys.add(a, b)) != sys.add(sys.negate(a), sys.negate(b))) r.fail("neg-additive", {a, b});
            if (total) {
                Elem nab = sys.negate(sys.mul(a, b));
                if (nab != sys.mul(sys.negate(a), b) || nab != sys.mul(a, sys.negate(b))) r.fail("neg-mul", {a, b});
            }
            for (const Elem& c : cs) {
                if (sys.add(sys.add(a, b), c) != sys.add(a, sys.add(b, c))) r.fail("add-assoc", {a, b, c});
                if (total) {
                    if (sys.mul(sys.mul(a, b), c) != sys.mul(a, sys.mul(b, c))) r.fail("mul-assoc", {a, b, c});
                    if (sys.mul(a, sys.add(b, c)) != sys.add(sys.mul(a, b), sys.mul(a, c)) ||
                        sys.mul(sys.add(b, c), a) != sys.add(sys.mul(b, a), sys.mul(c, a)))
                        r.fail("distributive", {a, b, c});
                }
            }
        }
    }
}

}  // namespace

Report check_structure(const FinSys& sys) {
    Report r;
    const auto& all = *sys.elements();
    structure_laws(sys, all, all, all, r);
    return r;
}

Report check_structure_sampled(const System& sys, Rng& rng, std::size_t n) {
    Report r;
    const std::size_t side = 1 + static_cast<std::size_t>(std::cbrt(static_cast<double>(n)));
    auto as = sys.sample(rng, side), bs = sys.sample(rng, side), cs = sys.sample(rng, side);
    structure_laws(sys, as, bs, cs, r);
    return r;
}

Verdict check_unique_negation(const System& sys, const std::vector<Elem>& domain) {
    for (const auto& a0 : domain) {
        if (!sys.tangible(a0)) continue;
        for (const auto& a1 : domain) {
            if (!sys.tangible(a1)) continue;
            if (sys.is_quasi_zero(sys.add(a0, a1)) && a1 != sys.negate(a0)) return {false, {a0, a1}};
        }
    }
    return {};
}
Verdict check_unique_negation(const System& sys) { return check_unique_negation(sys, all_of(sys)); }

Verdict check_meta_tangible(const System& sys, const std::vector<Elem>& domain) {
    for (const auto& a0 : domain) {
        if (!sys.tangible(a0)) continue;
        for (const auto& a1 : domain) {
            if (!sys.tangible(a1) || a1 == sys.negate(a0)) continue;
            if (!sys.tangible(sys.add(a0, a1))) return {false, {a0, a1}};
        }
    }
    return {};
}
Verdict check_meta_tangible(const System& sys) { return check_meta_tangible(sys, all_of(sys)); }

Verdict check_bipotent(const System& sys, const std::vector<Elem>& domain) {
    for (const auto& a : domain) {
        if (!sys.tangible(a)) continue;
        for (const auto& b : domain) {
            if (!sys.tangible(b) || b == sys.negate(a)) continue;
            Elem s = sys.add(a, b);
            if (s != a && s != b) return {false, {a, b}};
        }
    }
    return {};
}
Verdict check_bipotent(const System& sys) { return check_bipotent(sys, all_of(sys)); }

std::optional<int> height(const System& sys, const Elem& b, int bound) {
    if (bound < 1) throw InvalidInput("height bound must be at least 1");
    sys.require(b);
    if (sys.has_zero() && b == sys.zero()) return 0;
    auto cands = sys.height_candidates(b);
    std::set<Elem> level(cands.begin(), cands.end());
    for (int t = 1; t <= bound; ++t) {
        if (level.count(b)) return t;
        std::set<Elem> next;
        for (const auto& x : level)
            for (const auto& c : cands) next.insert(sys.add(x, c));
        level = std::move(next);
    }
    return std::nullopt;
}

CharSubtriple characteristic_subtriple(const System& sys, std::size_t bound) {
    auto u = sys.one();
    if (!u) throw NoUnit(sys.name() + " has no unit");
    std::vector<Elem> members;
    std::set<Elem> seen;
    auto push = [&](const Elem& e) {
        if (seen.insert(e).second) {
            members.push_back(e);
            if (members.size() > bound) throw NonterminatingClosure("characteristic closure exceeds " + std::to_string(bound));
        }
    };
    push(*u);
    push(sys.negate(*u));
    for (std::size_t done = 0; done < members.size();) {
        std::size_t end = members.size();
        for (std::size_t i = 0; i < end; ++i) {
            push(sys.negate(members[i]));
            for (std::size_t j = 0; j < end; ++j) push(sys.add(members[i], members[j]));
        }
        done = end;
        if (members.size() == end) break;
    }
    CharSubtriple out;
    out.members = members;
    out.sub = materialize(sys, members, "char(" + sys.name() + ")");
    const Elem m = sys.negate(*u);
    const Elem e = sys.add(*u, m);
    if (e == *u) out.tag = "boolean";
    else if (sys.add(e, *u) == *u) out.tag = "integer-like";
    else if (m == *u) out.tag = "krasner-like";
    else if (sys.add(*u, *u) == *u) out.tag = "sign-like";
    else if (sys.add(e, *u) == m) out.tag = "char-4-like";
    else out.tag = "other";
    return out;
}

Report check_surpassing_axioms(const System& sys, const std::vector<Elem>& domain) {
    Report r;
    r.checked = {"reflexive", "transitive", "(i)", "(ii)", "(iv)", "(v)", "T-surpassing"};
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < domain.size(); ++i)
        for (std::size_t j = 0; j < domain.size(); ++j)
            if (sys.surpass(domain[i], domain[j])) rel.emplace_back(i, j);
    std::vector<std::vector<bool>> le(domain.size(), std::vector<bool>(domain.size(), false));
    for (auto [i, j] : rel) le[i][j] = true;

    for (std::size_t i = 0; i < domain.size(); ++i)
        if (!le[i][i]) r.fail("reflexive", {domain[i]});
    for (auto [i, j] : rel)
        for (std::size_t k = 0; k < domain.size(); ++k)
            if (le[j][k] && !le[i][k]) r.fail("transitive", {domain[i], domain[j], domain[k]});
    for (const auto& b : domain)
        for (const auto& c : domain)
            if (!sys.surpass(b, sys.add(b, sys.quasi_zero(c)))) r.fail("(i)", {b, c});
    for (auto [i, j] : rel)
        if (!sys.surpass(sys.negate(domain[i]), sys.negate(domain[j]))) r.fail("(ii)", {domain[i], domain[j]});
    bool action_checked = false;
    for (const auto& a : domain) {
        if (!sys.tangible(a)) continue;
        for (auto [i, j] : rel) {
            Elem x, y;
            if (!defined([&] { x = sys.mul(a, domain[i]); y = sys.mul(a, domain[j]); })) continue;
            action_checked = true;
            if (!sys.surpass(x, y)) r.fail("(iii)", {a, domain[i], domain[j]});
        }
    }
    if (action_checked) r.checked.push_back("(iii)");
    for (auto [i, j] : rel)
        for (auto [k, l] : rel)
            if (!sys.surpass(sys.add(domain[i], domain[k]), sys.add(domain[j], domain[l])))
                r.fail("(iv)", {domain[i], domain[j], domain[k], domain[l]});
    for (auto [i, j] : rel)
        if (i != j && sys.tangible(domain[i]) && sys.tangible(domain[j])) r.fail("(v)", {domain[i], domain[j]});
    for (const auto& b : domain)
        for (const auto& a : domain)
            if (sys.tangible(a) && sys.surpass(sys.quasi_zero(b), a)) r.fail("T-surpassing", {b, a});
    return r;
}
Report check_surpassing_axioms(const System& sys) { return check_surpassing_axioms(sys, all_of(sys)); }

NullSet compute_null_set(const System& sys) {
    const auto& all = all_of(sys);
    NullSet out;
    for (const auto& b : all) {
        bool null = true;
        for (const auto& c : all)
            if (!sys.surpass(c, sys.add(b, c))) { null = false; break; }
        if (null) out.members.push_back(b);
    }
    if (sys.has_zero()) {
        std::vector<Elem> above;
        for (const auto& b : all)
            if (sys.surpass(sys.zero(), b)) above.push_back(b);
        out.cross_check = above == out.members;
    }
    return out;
}

bool surpass_hat(const System& sys, const NullSet& null, const Elem& b, const Elem& c) {
    for (const auto& d : null.members)
        if (sys.add(b, d) == c) return true;
    return false;
}

}  // namespace tsys
