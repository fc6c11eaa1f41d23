#include "tsys/polynomials.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tsys {

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

namespace {

void check_exponent(int nvars, bool laurent, const Exponent& e) {
    if (static_cast<int>(e.size()) != nvars) throw InvalidInput("exponent length differs from nvars");
    if (!laurent)
        for (int k : e)
            if (k < 0) throw InvalidInput("negative exponent in a non-Laurent polynomial");
}

void check_shapes(const Polynomial& f, const Polynomial& g) {
    if (f.nvars != g.nvars || f.laurent != g.laurent) throw InvalidInput("polynomial shapes differ");
}

void accumulate_term(const System& sys, Polynomial& p, const Exponent& e, const Elem& c) {
    auto it = p.terms.find(e);
    Elem v = it == p.terms.end() ? c : sys.add(it->second, c);
    if (v == sys.zero()) {
        if (it != p.terms.end()) p.terms.erase(it);
    } else {
        p.terms[e] = v;
    }
}

Elem power(const System& sys, const Elem& x, int k) {
    Elem base = x;
    if (k < 0) {
        auto inv = sys.inverse(x);
        if (!inv) throw NonInvertible("coordinate " + sys.show(x) + " has no inverse");
        base = *inv;
        k = -k;
    }
    Elem acc = base;
    for (int i = 1; i < k; ++i) acc = sys.mul(acc, base);
    return acc;
}

}  // namespace

Polynomial make_polynomial(const System& sys, int nvars, bool laurent,
                           const std::vector<std::pair<Exponent, Elem>>& terms) {
    if (nvars < 1) throw InvalidInput("nvars must be positive");
    Polynomial p;
    p.nvars = nvars;
    p.laurent = laurent;
    for (const auto& [e, c] : terms) {
        check_exponent(nvars, laurent, e);
        sys.require(c);
        accumulate_term(sys, p, e, c);
    }
    return p;
}

Polynomial monomial(const System& sys, int nvars, const Exponent& e, const Elem& c, bool laurent) {
    return make_polynomial(sys, nvars, laurent, {{e, c}});
}

Polynomial poly_add(const System& sys, const Polynomial& f, const Polynomial& g) {
    check_shapes(f, g);
    Polynomial p = f;
    for (const auto& [e, c] : g.terms) accumulate_term(sys, p, e, c);
    return p;
}

Polynomial conv_mul(const System& sys, const Polynomial& f, const Polynomial& g) {
    check_shapes(f, g);
    Polynomial p;
    p.nvars = f.nvars;
    p.laurent = f.laurent;
    for (const auto& [u, a] : f.terms)
        for (const auto& [v, b] : g.terms) {
            Exponent s(u.size());
            for (std::size_t k = 0; k < u.size(); ++k) s[k] = u[k] + v[k];
            accumulate_term(sys, p, s, sys.mul(a, b));
        }
    return p;
}

Polynomial poly_negate(const System& sys, const Polynomial& f) {
    Polynomial p = f;
    for (auto& [e, c] : p.terms) c = sys.negate(c);
    return p;
}

Elem eval(const System& sys, const Polynomial& f, const std::vector<Elem>& point) {
    if (static_cast<int>(point.size()) != f.nvars) throw InvalidInput("point length differs from nvars");
    for (const auto& x : point) sys.require(x);
    Elem total = sys.zero();
    for (const auto& [e, c] : f.terms) {
        Elem t = c;
        for (int k = 0; k < f.nvars; ++k)
            if (e[k] != 0) t = sys.mul(t, power(sys, point[k], e[k]));
        total = sys.add(total, t);
    }
    return total;
}

std::vector<Exponent> supp(const Polynomial& f) {
    std::vector<Exponent> out;
    for (const auto& [e, c] : f.terms) out.push_back(e);
    return out;
}

std::vector<Exponent> circ_supp(const System& sys, const Polynomial& f) {
    std::vector<Exponent> out;
    for (const auto& [e, c] : f.terms)
        if (sys.tangible(c)) out.push_back(e);
    return out;
}

std::vector<Elem> circ_roots(const System& sys, const Polynomial& f, const std::vector<Elem>& domain) {
    if (f.nvars != 1) throw InvalidInput("circ_roots needs a univariate polynomial");
    std::vector<Elem> out;
    for (const auto& b : domain)
        if (sys.is_quasi_zero(eval(sys, f, {b}))) out.push_back(b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RootBoundResult check_root_bound(const System& sys, int degree, const std::vector<Elem>& pool,
                                 const std::vector<Elem>& domain) {
    if (!sys.is_triple()) throw NotTriple(sys.name() + " is not a triple");
    if (degree < 1 || degree > 3) throw InvalidInput("root bound degree must be 1, 2 or 3");
    for (const auto& c : pool)
        if (!sys.tangible(c)) throw InvalidInput("coefficient pool must be tangible");
    for (const auto& b : domain)
        if (!sys.tangible(b)) throw InvalidInput("domain must be tangible");
    if (pool.empty()) return {};

    std::vector<Elem> lower = pool;
    lower.push_back(sys.zero());
    RootBoundResult res;
    // idx[k] selects the coefficient of lambda^k; the leading one ranges over pool only.
    std::vector<std::size_t> idx(degree + 1, 0);
    while (true) {
        std::vector<std::pair<Exponent, Elem>> terms;
        for (int k = 0; k < degree; ++k) terms.push_back({{k}, lower[idx[k]]});
        terms.push_back({{degree}, pool[idx[degree]]});
        Polynomial f = make_polynomial(sys, 1, false, terms);
        ++res.polynomials;
        auto roots = circ_roots(sys, f, domain);
        if (static_cast<int>(roots.size()) > degree) {
            res.holds = false;
            res.counterexample = f;
            res.roots = roots;
            return res;
        }
        int k = 0;
        while (k <= degree) {
            std::size_t limit = k == degree ? pool.size() : lower.size();
            if (++idx[k] < limit) break;
            idx[k++] = 0;
        }
        if (k > degree) break;
    }
    return res;
}

bool circ_equiv(const System& sys, const Polynomial& f, const Polynomial& g,
                const std::vector<std::vector<Elem>>& domain) {
    check_shapes(f, g);
    for (const auto& b : domain)
        if (sys.quasi_zero(eval(sys, f, b)) != sys.quasi_zero(eval(sys, g, b))) return false;
    return true;
}

FunctionalTangibility is_functionally_tangible(const System& sys, const Polynomial& f,
                                               const std::vector<std::vector<Elem>>& sample,
                                               double threshold) {
    FunctionalTangibility res;
    for (const auto& b : sample)
        if (!sys.tangible(eval(sys, f, b))) res.exceptions.push_back(b);
    if (sample.empty()) return res;
    double good = static_cast<double>(sample.size() - res.exceptions.size()) / static_cast<double>(sample.size());
    res.holds = good > threshold;
    return res;
}

// ---------------------------------------------------------------------------

int tropical_sense(const System& sys) {
    if (sys.elements()) return 1;
    Elem a = Elem::tangible(0), b = Elem::tangible(1);
    if (!sys.contains(a) || !sys.contains(b)) return 1;
    return sys.add(a, b) == a ? -1 : 1;
}

Rational magnitude(const Elem& e) {
    switch (e.tag()) {
        case Tag::tangible:
        case Tag::ghost:
        case Tag::interval: return e.value();
        case Tag::symbol: return Rational(0);
        default: throw InvalidInput("coefficient has no tropical magnitude: " + e.debug());
    }
}

TropPoly to_tropical(const System& sys, const Polynomial& f) {
    TropPoly t;
    for (const auto& [e, c] : f.terms)
        if (c != sys.zero()) t[e] = magnitude(c);
    return t;
}

Polynomial from_tropical(const System& sys, int nvars, bool laurent, const TropPoly& f) {
    std::vector<std::pair<Exponent, Elem>> terms;
    for (const auto& [e, c] : f) terms.push_back({e, Elem::tangible(c)});
    return make_polynomial(sys, nvars, laurent, terms);
}

namespace {

// Unique solution of the square-or-tall system M mu = rhs, or nullopt when the
// columns are dependent or the system is inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
    const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    std::size_t r = 0;
    std::vector<std::size_t> pivot_row(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].sign() == 0) ++p;
        if (p == rows) return std::nullopt;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].sign() == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
            rhs[i] = rhs[i] - f * rhs[r];
        }
        pivot_row[c] = r++;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i].sign() != 0) return std::nullopt;
    std::vector<Rational> mu(cols);
    for (std::size_t c = 0; c < cols; ++c) mu[c] = rhs[pivot_row[c]] / m[pivot_row[c]][c];
    return mu;
}

bool better(const Rational& a, const Rational& b, int sense) { return sense > 0 ? a > b : a < b; }

}  // namespace

std::optional<Rational> domination_bound(const TropPoly& f, const Exponent& u, int sense) {
    std::vector<const std::pair<const Exponent, Rational>*> pts;
    for (const auto& t : f) pts.push_back(&t);
    if (pts.empty()) return std::nullopt;
    const std::size_t dim = u.size();
    const std::size_t max_k = std::min(pts.size(), dim + 1);
    std::optional<Rational> best;
    // Optimal vertices of the LP have affinely independent support of size <= dim+1.
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!pick.empty()) {
            std::vector<std::vector<Rational>> m(dim + 1, std::vector<Rational>(pick.size()));
            std::vector<Rational> rhs(dim + 1);
            for (std::size_t d = 0; d < dim; ++d) {
                rhs[d] = Rational(u[d]);
                for (std::size_t j = 0; j < pick.size(); ++j) m[d][j] = Rational(pts[pick[j]]->first[d]);
            }
            rhs[dim] = Rational(1);
            for (std::size_t j = 0; j < pick.size(); ++j) m[dim][j] = Rational(1);
            if (auto mu = solve_exact(m, rhs)) {
                bool feasible = std::all_of(mu->begin(), mu->end(), [](const Rational& x) { return x.sign() >= 0; });
                if (feasible) {
                    Rational v(0);
                    for (std::size_t j = 0; j < pick.size(); ++j) v += (*mu)[j] * pts[pick[j]]->second;
                    if (!best || better(v, *best, sense)) best = v;
                }
            }
        }
        if (pick.size() == max_k) return;
        for (std::size_t i = start; i < pts.size(); ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return best;
}

bool is_dominated(const TropPoly& f, const Exponent& u, int sense) {
    auto it = f.find(u);
    if (it == f.end()) throw InvalidInput("exponent not in the support");
    TropPoly rest = f;
    rest.erase(u);
    auto b = domination_bound(rest, u, sense);
    return b && !better(it->second, *b, sense);
}

TropPoly essential_form(const TropPoly& f, int sense) {
    TropPoly out;
    for (const auto& [e, c] : f)
        if (!is_dominated(f, e, sense)) out[e] = c;
    return out;
}

bool is_bend_move(const TropPoly& from, const TropPoly& to, int sense) {
    auto one_more = [&](const TropPoly& small, const TropPoly& big) -> std::optional<Exponent> {
        if (big.size() != small.size() + 1) return std::nullopt;
        std::optional<Exponent> extra;
        for (const auto& [e, c] : big) {
            auto it = small.find(e);
            if (it == small.end()) {
                if (extra) return std::nullopt;
                extra = e;
            } else if (it->second != c) {
                return std::nullopt;
            }
        }
        return extra;
    };
    if (auto e = one_more(to, from)) return is_dominated(from, *e, sense);
    if (auto e = one_more(from, to)) return is_dominated(to, *e, sense);
    return false;
}

std::vector<std::pair<Polynomial, Polynomial>> bend_generators(const Polynomial& f) {
    if (f.is_zero()) throw InvalidInput("bend generators need a nonzero polynomial");
    std::vector<std::pair<Polynomial, Polynomial>> out;
    for (const auto& [e, c] : f.terms) {
        Polynomial g = f;
        g.terms.erase(e);
        out.push_back({f, g});
    }
    return out;
}

BendResult bend_equiv(const System& sys, const Polynomial& f, const Polynomial& g, std::size_t bound) {
    check_shapes(f, g);
    const int sense = tropical_sense(sys);
    TropPoly a = to_tropical(sys, f), b = to_tropical(sys, g);
    BendResult res;
    res.path.push_back(a);
    if (a == b) {
        res.equivalent = true;
        return res;
    }
    if (essential_form(a, sense) != essential_form(b, sense)) return res;

    // Terms of a not in b are dominated in a (only the common essential part is
    // needed), so deleting them one at a time stays valid; then add b's extras,
    // each dominated by the essential part already present.
    std::vector<Exponent> drop, add;
    for (const auto& [e, c] : a) {
        auto it = b.find(e);
        if (it == b.end() || it->second != c) drop.push_back(e);
    }
    for (const auto& [e, c] : b) {
        auto it = a.find(e);
        if (it == a.end() || it->second != c) add.push_back(e);
    }
    const std::size_t steps = drop.size() + add.size();
    if (steps > bound)
        throw SearchBoundExceeded("bend path needs " + std::to_string(steps) + " moves, bound is " +
                                  std::to_string(bound));
    TropPoly cur = a;
    auto step = [&](TropPoly next) {
        if (!is_bend_move(cur, next, sense)) throw AxiomViolation("constructed bend move is invalid");
        res.path.push_back(next);
        cur = std::move(next);
    };
    for (const auto& e : drop) {
        TropPoly next = cur;
        next.erase(e);
        step(std::move(next));
    }
    for (const auto& e : add) {
        TropPoly next = cur;
        next[e] = b.at(e);
        step(std::move(next));
    }
    res.equivalent = true;
    res.steps = steps;
    return res;
}

}  // namespace tsys
