#include "tsys/tropicalization.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tsys {

PuiseuxSeries PuiseuxSeries::constant(const Rational& c) { return monomial(c, Rational(0)); }

PuiseuxSeries PuiseuxSeries::monomial(const Rational& coef, const Rational& exp) {
    PuiseuxSeries p;
    if (coef.sign() != 0) p.terms_.emplace(exp, coef);
    return p;
}

PuiseuxSeries PuiseuxSeries::from_terms(const std::vector<std::pair<Rational, Rational>>& exp_coef) {
    PuiseuxSeries p;
    for (const auto& [e, c] : exp_coef) p.terms_[e] += c;
    std::erase_if(p.terms_, [](const auto& t) { return t.second.sign() == 0; });
    return p;
}

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& o) const {
    PuiseuxSeries p = *this;
    for (const auto& [e, c] : o.terms_) {
        auto& slot = p.terms_[e];
        slot += c;
        if (slot.sign() == 0) p.terms_.erase(e);
    }
    return p;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

PuiseuxSeries PuiseuxSeries::operator-(const PuiseuxSeries& o) const { return *this + (-o); }

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& o) const {
    PuiseuxSeries p;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) p.terms_[e1 + e2] += c1 * c2;
    std::erase_if(p.terms_, [](const auto& t) { return t.second.sign() == 0; });
    return p;
}

std::string PuiseuxSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational coef = c;
        if (!first) {
            out << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) coef = -c;
        }
        first = false;
        const bool unit = coef == Rational(1) || coef == Rational(-1);
        if (e.sign() == 0) {
            out << coef.str();
            continue;
        }
        if (!unit) out << coef.str();
        else if (coef.sign() < 0) out << "-";
        out << "t";
        if (e != Rational(1)) out << "^" << e.str();
    }
    return out.str();
}

Val val(const PuiseuxSeries& p) {
    if (p.is_zero()) return std::nullopt;
    return p.terms().begin()->first;
}

TropVal to_max_convention(const Val& v) {
    if (!v) return std::nullopt;
    return -*v;
}

PuiseuxPolynomial make_puiseux_polynomial(int nvars, bool laurent,
                                          const std::vector<std::pair<Exponent, PuiseuxSeries>>& terms) {
    PuiseuxPolynomial f{nvars, laurent, {}};
    for (const auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != nvars) throw InvalidInput("exponent arity differs from nvars");
        if (!laurent && std::any_of(e.begin(), e.end(), [](int k) { return k < 0; }))
            throw InvalidInput("negative exponent in an ordinary polynomial");
        auto it = f.terms.find(e);
        PuiseuxSeries s = it == f.terms.end() ? c : it->second + c;
        if (s.is_zero()) {
            if (it != f.terms.end()) f.terms.erase(it);
        } else {
            f.terms[e] = s;
        }
    }
    return f;
}

namespace {

void check_shapes(const PuiseuxPolynomial& f, const PuiseuxPolynomial& g) {
    if (f.nvars != g.nvars || f.laurent != g.laurent) throw InvalidInput("polynomial shapes differ");
}

}  // namespace

PuiseuxPolynomial puiseux_add(const PuiseuxPolynomial& f, const PuiseuxPolynomial& g) {
    check_shapes(f, g);
    std::vector<std::pair<Exponent, PuiseuxSeries>> terms(f.terms.begin(), f.terms.end());
    terms.insert(terms.end(), g.terms.begin(), g.terms.end());
    return make_puiseux_polynomial(f.nvars, f.laurent, terms);
}

PuiseuxPolynomial puiseux_mul(const PuiseuxPolynomial& f, const PuiseuxPolynomial& g) {
    check_shapes(f, g);
    std::vector<std::pair<Exponent, PuiseuxSeries>> terms;
    for (const auto& [e1, c1] : f.terms)
        for (const auto& [e2, c2] : g.terms) {
            Exponent e(f.nvars);
            for (int k = 0; k < f.nvars; ++k) e[k] = e1[k] + e2[k];
            terms.push_back({e, c1 * c2});
        }
    return make_puiseux_polynomial(f.nvars, f.laurent, terms);
}

Polynomial trop(const PuiseuxPolynomial& f) {
    Polynomial out;
    out.nvars = f.nvars;
    out.laurent = f.laurent;
    for (const auto& [e, c] : f.terms) out.terms.emplace(e, Elem::tangible(*val(c)));
    return out;
}

Polynomial min_to_supertropical(const Polynomial& f) {
    Polynomial out;
    out.nvars = f.nvars;
    out.laurent = f.laurent;
    for (const auto& [e, c] : f.terms) {
        if (c.tag() != Tag::tangible) throw InvalidElement("min-plus coefficient expected: " + c.debug());
        out.terms.emplace(e, Elem::tangible(-c.value()));
    }
    return out;
}

ValArith val_arith_check(const PuiseuxSeries& p, const PuiseuxSeries& q) {
    ValArith r;
    r.p = val(p);
    r.q = val(q);
    r.product = val(p * q);
    r.sum = val(p + q);
    const TropicalHyperfield th;
    const TropVal np = to_max_convention(r.p), nq = to_max_convention(r.q);
    r.multiplicative = to_max_convention(r.product) == th.mul(np, nq);
    r.hyperadditive = trop_member(to_max_convention(r.sum), th.hyperadd(np, nq));
    return r;
}

ValuationReport check_puiseux_valuation(const std::vector<PuiseuxSeries>& domain) {
    return check_valuation_generic(
        domain, PuiseuxSeries(), [](const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + b; },
        [](const PuiseuxSeries& a, const PuiseuxSeries& b) { return a * b; },
        [](const PuiseuxSeries& a) { return to_max_convention(val(a)); },
        [](const PuiseuxSeries& a) { return "(" + a.str() + ")"; });
}

// ---------------------------------------------------------------------------

namespace {

const Rational& coefficient(const Polynomial& f, const Exponent& e) {
    const Elem& c = f.terms.at(e);
    if (c.tag() != Tag::tangible) throw InvalidElement("min-plus coefficient expected: " + c.debug());
    return c.value();
}

// min(shift_f + f_j, shift_g + g_j), nullopt when neither is present.
std::optional<Rational> combined(const Polynomial& f, const Polynomial& g, const Rational& sf, const Rational& sg,
                                 const Exponent& j) {
    std::optional<Rational> out;
    if (f.terms.count(j)) out = sf + coefficient(f, j);
    if (g.terms.count(j)) {
        Rational v = sg + coefficient(g, j);
        if (!out || v < *out) out = v;
    }
    return out;
}

bool dominates(const Polynomial& h, const Polynomial& f, const Polynomial& g, const Rational& sf, const Rational& sg,
               const Exponent& i) {
    if (h.is_zero() || h.terms.count(i)) return false;
    for (const auto& [j, c] : h.terms) {
        auto bound = combined(f, g, sf, sg, j);
        if (!bound || coefficient(h, j) < *bound) return false;
    }
    return true;
}

}  // namespace

PairCheck tropical_ideal_pair_check(const Polynomial& f, const Polynomial& g, const std::vector<Polynomial>& candidates,
                                    bool include_combination, const std::optional<Exponent>& monomial) {
    if (f.nvars != g.nvars || f.laurent != g.laurent) throw InvalidInput("polynomial shapes differ");
    std::vector<Exponent> common;
    for (const auto& [e, c] : f.terms)
        if (g.terms.count(e) && (!monomial || *monomial == e)) common.push_back(e);
    if (common.empty()) throw NoCommonMonomial("f and g share no support monomial");
    PairCheck out;
    for (const auto& i : common) {
        PairWitness w;
        w.monomial = i;
        w.shift_f = -coefficient(f, i);
        w.shift_g = -coefficient(g, i);
        for (const auto& h : candidates) {
            if (h.nvars != f.nvars || h.laurent != f.laurent) continue;
            if (dominates(h, f, g, w.shift_f, w.shift_g, i)) {
                w.h = h;
                w.from_candidates = true;
                break;
            }
        }
        if (!w.h && include_combination) {
            Polynomial h;
            h.nvars = f.nvars;
            h.laurent = f.laurent;
            std::set<Exponent> keys;
            for (const auto& [e, c] : f.terms) keys.insert(e);
            for (const auto& [e, c] : g.terms) keys.insert(e);
            keys.erase(i);
            for (const auto& j : keys) h.terms.emplace(j, Elem::tangible(*combined(f, g, w.shift_f, w.shift_g, j)));
            if (!h.is_zero()) w.h = h;
        }
        if (!w.h) out.holds = false;
        out.entries.push_back(std::move(w));
    }
    return out;
}

std::vector<std::pair<Polynomial, Polynomial>> trop_ideal_to_bend(const std::vector<Polynomial>& gens) {
    std::vector<std::pair<Polynomial, Polynomial>> out;
    for (const auto& f : gens) {
        if (f.is_zero()) continue;
        auto b = bend_generators(f);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

// ---------------------------------------------------------------------------

int ValuatedMatroidCandidate::index(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != rank) throw InvalidInput("tuple length differs from the rank");
    int idx = 0;
    for (int k = rank - 1; k >= 0; --k) {
        if (tuple[k] < 0 || tuple[k] >= ground_size) throw InvalidInput("tuple entry outside the ground set");
        idx = idx * ground_size + tuple[k];
    }
    return idx;
}

namespace {

void check_bounds(int n, int m) {
    if (n < 1 || n > kMaxMatroidGround) throw InvalidInput("ground set size must lie in 1..8");
    if (m < 1 || m > kMaxMatroidRank || m > n) throw InvalidInput("rank must lie in 1..min(4, |E|)");
}

int ipow(int b, int e) {
    int r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<int> decode(int idx, int n, int m) {
    std::vector<int> t(m);
    for (int k = 0; k < m; ++k) {
        t[k] = idx % n;
        idx /= n;
    }
    return t;
}

TropVal times(const TropVal& a, const TropVal& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

// a <= b with -inf the least element.
bool leq(const TropVal& a, const TropVal& b) {
    if (!a) return true;
    if (!b) return false;
    return *a <= *b;
}

}  // namespace

ValuatedMatroidCandidate make_matroid_candidate(int n, int m,
                                                const std::function<TropVal(const std::vector<int>&)>& fn) {
    check_bounds(n, m);
    ValuatedMatroidCandidate c{n, m, {}};
    const int total = ipow(n, m);
    c.v.reserve(total);
    for (int idx = 0; idx < total; ++idx) c.v.push_back(fn(decode(idx, n, m)));
    return c;
}

ValuatedMatroidCandidate uniform_matroid(int n, int m) {
    return make_matroid_candidate(n, m, [](const std::vector<int>& t) -> TropVal {
        std::vector<int> s = t;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return std::nullopt;
        return Rational(0);
    });
}

MatroidCheck valuated_matroid_check(const ValuatedMatroidCandidate& c) {
    const int n = c.ground_size, m = c.rank;
    check_bounds(n, m);
    const int total = ipow(n, m);
    if (static_cast<int>(c.v.size()) != total) throw InvalidInput("valuation table must cover every m-tuple");
    MatroidCheck out;
    auto fail = [&](const char* axiom, std::vector<int> w) {
        out.valid = false;
        out.axiom = axiom;
        out.witness = std::move(w);
        return out;
    };

    int nonzero = -1;
    for (int idx = 0; idx < total && nonzero < 0; ++idx)
        if (c.v[idx]) nonzero = idx;
    if (nonzero < 0) return fail("(i)", {});

    for (int idx = 0; idx < total; ++idx) {
        auto t = decode(idx, n, m);
        auto s = t;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end() && c.v[idx]) return fail("(ii)", t);
        // Adjacent transpositions generate every permutation.
        for (int k = 0; k + 1 < m; ++k) {
            auto u = t;
            std::swap(u[k], u[k + 1]);
            if (c.at(u) != c.v[idx]) {
                t.insert(t.end(), u.begin(), u.end());
                return fail("(ii)", t);
            }
        }
    }

    // v(e) v(e0, e'_2..e'_m) <= v(e with e_i -> e0) v(e_i, e'_2..e'_m) for some i.
    const int tails = ipow(n, m - 1);
    for (int idx = 0; idx < total; ++idx) {
        if (!c.v[idx]) continue;
        const auto e = decode(idx, n, m);
        for (int e0 = 0; e0 < n; ++e0)
            for (int tail = 0; tail < tails; ++tail) {
                std::vector<int> second(m);
                second[0] = e0;
                const auto rest = decode(tail, n, m - 1 > 0 ? m - 1 : 1);
                for (int k = 1; k < m; ++k) second[k] = rest[k - 1];
                const TropVal lhs = times(c.v[idx], c.at(second));
                if (!lhs) continue;
                bool ok = false;
                for (int i = 0; i < m && !ok; ++i) {
                    auto a = e;
                    a[i] = e0;
                    auto b = second;
                    b[0] = e[i];
                    ok = leq(lhs, times(c.at(a), c.at(b)));
                }
                if (!ok) {
                    auto w = e;
                    w.insert(w.end(), second.begin(), second.end());
                    return fail("(iii)", w);
                }
            }
    }
    return out;
}

}  // namespace tsys
