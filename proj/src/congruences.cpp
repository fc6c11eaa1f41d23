#include "tsys/congruences.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace tsys {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

std::vector<int> canonical_labels(const std::vector<int>& raw) {
    std::map<int, int> id;
    std::vector<int> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto it = id.find(raw[i]);
        if (it == id.end()) it = id.emplace(raw[i], static_cast<int>(id.size())).first;
        out[i] = it->second;
    }
    return out;
}

std::vector<int> t0_indices(const FinSys& sys) {
    auto t = sys.tangible_indices();
    if (auto z = sys.zero_index()) t.push_back(*z);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

bool in_t0(const FinSys& sys, int a) { return sys.tangible_i(a) || sys.zero_index() == a; }

// Closes the union-find under translations by +, left and right * and (-).
void close(const FinSys& sys, UnionFind& uf) {
    const int n = sys.size();
    for (bool changed = true; changed;) {
        changed = false;
        for (int a = 0; a < n; ++a) {
            int r = uf.find(a);
            if (r == a) continue;
            changed |= uf.unite(sys.neg_i(a), sys.neg_i(r));
            for (int c = 0; c < n; ++c) {
                changed |= uf.unite(sys.add_i(a, c), sys.add_i(r, c));
                if (sys.mul_defined(a, c) && sys.mul_defined(r, c)) changed |= uf.unite(sys.mul_i(a, c), sys.mul_i(r, c));
                if (sys.mul_defined(c, a) && sys.mul_defined(c, r)) changed |= uf.unite(sys.mul_i(c, a), sys.mul_i(c, r));
            }
        }
    }
}

Congruence from_labels(FinPtr sys, const std::vector<int>& raw, std::vector<IndexPair> gens) {
    Congruence c;
    c.sys = std::move(sys);
    c.cls = canonical_labels(raw);
    c.gens = std::move(gens);
    c.t_congruence = is_T_congruence(c);
    return c;
}

// Pairs (a,b) with a < b: the twist data of C up to the diagonal and symmetry.
std::vector<IndexPair> off_diagonal(const Congruence& c) {
    std::vector<IndexPair> out;
    const int n = static_cast<int>(c.cls.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (c.cls[a] == c.cls[b]) out.push_back({a, b});
    return out;
}

// Every twist product of members of a and b lies in c. Diagonal members give
// diagonal products and swapping a member swaps the product, so only a < b pairs
// are tried.
bool product_inside(const FinSys& sys, const std::vector<IndexPair>& a, const std::vector<IndexPair>& b,
                    const Congruence& c) {
    for (const auto& x : a)
        for (const auto& y : b) {
            auto p = twist(sys, x, y);
            if (!c.contains(p.first, p.second)) return false;
        }
    return true;
}

std::optional<IndexPair> unit_pair(const FinSys& sys) {
    if (!sys.one_index() || !sys.zero_index()) return std::nullopt;
    return IndexPair{*sys.one_index(), *sys.zero_index()};
}

}  // namespace

std::vector<IndexPair> Congruence::pairs() const {
    std::vector<IndexPair> out;
    const int n = static_cast<int>(cls.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (cls[a] == cls[b]) out.push_back({a, b});
    return out;
}

int Congruence::num_classes() const {
    return cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
}

Congruence diagonal(FinPtr sys) {
    std::vector<int> raw(sys->size());
    std::iota(raw.begin(), raw.end(), 0);
    return from_labels(std::move(sys), raw, {});
}

Congruence full_congruence(FinPtr sys) {
    std::vector<IndexPair> gens;
    for (int a = 1; a < sys->size(); ++a) gens.push_back({0, a});
    std::vector<int> raw(sys->size(), 0);
    return from_labels(std::move(sys), raw, gens);
}

Congruence generate_congruence(FinPtr sys, const std::vector<IndexPair>& gens) {
    const int n = sys->size();
    UnionFind uf(n);
    for (auto [a, b] : gens) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidInput("congruence generator out of range");
        uf.unite(a, b);
    }
    close(*sys, uf);
    std::vector<int> raw(n);
    for (int a = 0; a < n; ++a) raw[a] = uf.find(a);
    return from_labels(std::move(sys), raw, gens);
}

Congruence join(const Congruence& a, const Congruence& b) {
    auto gens = off_diagonal(a);
    auto more = off_diagonal(b);
    gens.insert(gens.end(), more.begin(), more.end());
    Congruence c = generate_congruence(a.sys, gens);
    c.gens = a.gens;
    c.gens.insert(c.gens.end(), b.gens.begin(), b.gens.end());
    return c;
}

Congruence meet(const Congruence& a, const Congruence& b) {
    std::vector<int> raw(a.cls.size());
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = a.cls[i] * static_cast<int>(raw.size()) + b.cls[i];
    Congruence c = from_labels(a.sys, raw, {});
    c.gens = off_diagonal(c);
    return c;
}

bool is_subset(const Congruence& a, const Congruence& b) {
    const int n = static_cast<int>(a.cls.size());
    // Each a-class lies inside one b-class.
    std::vector<int> target(n, -1);
    for (int i = 0; i < n; ++i) {
        int& t = target[a.cls[i]];
        if (t == -1) t = b.cls[i];
        else if (t != b.cls[i]) return false;
    }
    return true;
}

bool is_T_congruence(const Congruence& c) {
    const FinSys& sys = *c.sys;
    std::set<IndexPair> reach;
    std::deque<IndexPair> work;
    std::vector<IndexPair> base;
    for (int a : t0_indices(sys))
        for (int b : t0_indices(sys))
            if (c.contains(a, b)) base.push_back({a, b});
    for (const auto& p : base)
        if (reach.insert(p).second) work.push_back(p);
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        for (const auto& [u, v] : base) {
            IndexPair s{sys.add_i(x, u), sys.add_i(y, v)};
            if (reach.insert(s).second) work.push_back(s);
        }
    }
    return reach.size() == c.pairs().size();
}

Report check_congruence_invariants(const Congruence& c) {
    const FinSys& sys = *c.sys;
    const int n = sys.size();
    Report r;
    r.checked = {"equivalence", "add", "mul", "negation", "twist"};
    auto S = [](int i) { return Elem::symbol(i); };
    auto pairs = c.pairs();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d)
                if (c.contains(a, b) && c.contains(b, d) && !c.contains(a, d)) r.fail("equivalence", {S(a), S(b), S(d)});
    for (const auto& [a, b] : pairs) {
        if (!c.contains(sys.neg_i(a), sys.neg_i(b))) r.fail("negation", {S(a), S(b)});
        for (int x = 0; x < n; ++x) {
            if (sys.mul_defined(x, a) && sys.mul_defined(x, b) && !c.contains(sys.mul_i(x, a), sys.mul_i(x, b)))
                r.fail("mul", {S(x), S(a), S(b)});
            if (sys.mul_defined(a, x) && sys.mul_defined(b, x) && !c.contains(sys.mul_i(a, x), sys.mul_i(b, x)))
                r.fail("mul", {S(a), S(b), S(x)});
        }
        for (const auto& [u, v] : pairs)
            if (!c.contains(sys.add_i(a, u), sys.add_i(b, v))) r.fail("add", {S(a), S(b), S(u), S(v)});
    }
    if (sys.kind() != Kind::module)
        for (const auto& x : pairs)
            for (int y0 = 0; y0 < n; ++y0)
                for (int y1 = 0; y1 < n; ++y1) {
                    auto p = twist(sys, {y0, y1}, x);
                    if (!c.contains(p.first, p.second)) r.fail("twist", {S(y0), S(y1), S(x.first), S(x.second)});
                }
    return r;
}

Quotient quotient(const Congruence& c) {
    const FinSys& sys = *c.sys;
    const int n = sys.size(), k = c.num_classes();
    std::vector<int> rep(k, -1);
    std::vector<std::vector<std::string>> members(k);
    for (int a = 0; a < n; ++a) {
        if (rep[c.cls[a]] == -1) rep[c.cls[a]] = a;
        members[c.cls[a]].push_back(sys.name_of(a));
    }
    FinSpec q;
    q.kind = sys.kind();
    q.add.assign(k, std::vector<int>(k, -1));
    q.mul.assign(k, std::vector<int>(k, -1));
    q.neg.assign(k, -1);
    auto set = [](int& slot, int v, const char* what) {
        if (slot != -1 && slot != v) throw IllDefined(std::string("induced ") + what + " table conflicts");
        slot = v;
    };
    for (int a = 0; a < n; ++a) {
        set(q.neg[c.cls[a]], c.cls[sys.neg_i(a)], "negation");
        for (int b = 0; b < n; ++b) {
            set(q.add[c.cls[a]][c.cls[b]], c.cls[sys.add_i(a, b)], "addition");
            if (sys.mul_defined(a, b)) set(q.mul[c.cls[a]][c.cls[b]], c.cls[sys.mul_i(a, b)], "multiplication");
        }
    }
    for (int i = 0; i < k; ++i) {
        std::string name = members[i].size() == 1 ? members[i][0] : "[";
        if (members[i].size() > 1) {
            for (std::size_t j = 0; j < members[i].size(); ++j) name += (j ? "," : "") + members[i][j];
            name += "]";
        }
        q.names.push_back(name);
    }
    std::set<int> tang;
    for (int t : sys.tangible_indices()) tang.insert(c.cls[t]);
    if (sys.zero_index()) {
        q.zero = c.cls[*sys.zero_index()];
        tang.erase(*q.zero);
    }
    q.tangibles.assign(tang.begin(), tang.end());
    if (sys.one_index()) q.one = c.cls[*sys.one_index()];
    Quotient out;
    out.sys = std::make_shared<FinSys>(q, sys.name() + "/C");
    out.proj = c.cls;
    return out;
}

IndexPair twist(const FinSys& sys, IndexPair a, IndexPair b) {
    return {sys.add_i(sys.mul_i(a.first, b.first), sys.mul_i(a.second, b.second)),
            sys.add_i(sys.mul_i(a.first, b.second), sys.mul_i(a.second, b.first))};
}

IndexPair twist_power(const FinSys& sys, IndexPair a, int n) {
    if (n < 1) throw InvalidInput("twist power needs n >= 1");
    IndexPair acc = a;
    for (int i = 1; i < n; ++i) acc = twist(sys, acc, a);
    return acc;
}

Congruence twist_product(const Congruence& a, const Congruence& b) {
    std::vector<IndexPair> gens;
    for (const auto& x : a.pairs())
        for (const auto& y : b.pairs()) gens.push_back(twist(*a.sys, x, y));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return generate_congruence(a.sys, gens);
}

Congruence twist_product_of_generators(const Congruence& a, const Congruence& b) {
    std::vector<IndexPair> gens;
    for (const auto& x : a.gens)
        for (const auto& y : b.gens) gens.push_back(twist(*a.sys, x, y));
    return generate_congruence(a.sys, gens);
}

// ---------------------------------------------------------------------------

std::vector<Congruence> CongLattice::t_congruences() const {
    std::vector<Congruence> out;
    for (auto i : t_index) out.push_back(all[i]);
    return out;
}

std::optional<std::size_t> CongLattice::find(const Congruence& c) const {
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == c) return i;
    return std::nullopt;
}

const std::vector<bool>& CongLattice::t_prime_flags() const {
    if (!t_prime_) {
        std::vector<bool> flags(all.size());
        for (std::size_t i = 0; i < all.size(); ++i) flags[i] = is_T_prime(*this, all[i]);
        t_prime_ = std::move(flags);
    }
    return *t_prime_;
}

CongLattice enumerate_lattice(FinPtr sys, std::size_t limit) {
    const int n = sys->size();
    if (n > kMaxLatticeCarrier)
        throw LatticeTooLarge("carrier has " + std::to_string(n) + " elements, limit is " +
                              std::to_string(kMaxLatticeCarrier));
    std::vector<Congruence> principal;
    std::set<std::vector<int>> seen_principal;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto p = generate_congruence(sys, {{a, b}});
            if (seen_principal.insert(p.cls).second) principal.push_back(p);
        }
    CongLattice lat;
    lat.sys = sys;
    std::set<std::vector<int>> seen;
    std::deque<std::size_t> work;
    auto add = [&](Congruence c) {
        if (!seen.insert(c.cls).second) return;
        if (lat.all.size() >= limit)
            throw LatticeTooLarge("more than " + std::to_string(limit) + " congruences");
        lat.all.push_back(std::move(c));
        work.push_back(lat.all.size() - 1);
    };
    add(diagonal(sys));
    while (!work.empty()) {
        std::size_t i = work.front();
        work.pop_front();
        for (const auto& p : principal) {
            if (is_subset(p, lat.all[i])) continue;
            add(join(lat.all[i], p));
        }
    }
    for (std::size_t i = 0; i < lat.all.size(); ++i)
        if (lat.all[i].t_congruence) lat.t_index.push_back(i);
    return lat;
}

namespace {

bool prime_over(const std::vector<const Congruence*>& family, const Congruence& c) {
    if (c.is_full()) return false;
    const FinSys& sys = *c.sys;
    std::vector<std::vector<IndexPair>> data;
    for (const auto* f : family)
        if (!is_subset(*f, c)) data.push_back(off_diagonal(*f));
    for (std::size_t i = 0; i < data.size(); ++i)
        for (std::size_t j = i; j < data.size(); ++j)
            if (product_inside(sys, data[i], data[j], c) &&
                (sys.commutative() || product_inside(sys, data[j], data[i], c)))
                return false;
    return true;
}

std::vector<const Congruence*> family_of(const CongLattice& lat, bool t_only) {
    std::vector<const Congruence*> out;
    if (t_only)
        for (auto i : lat.t_index) out.push_back(&lat.all[i]);
    else
        for (const auto& c : lat.all) out.push_back(&c);
    return out;
}

}  // namespace

bool is_prime(const CongLattice& lat, const Congruence& c) { return prime_over(family_of(lat, false), c); }

bool is_T_prime(const CongLattice& lat, const Congruence& c) {
    return c.t_congruence && prime_over(family_of(lat, true), c);
}

bool is_semiprime(const CongLattice& lat, const Congruence& c) {
    if (!c.t_congruence) return false;
    for (auto i : lat.t_index) {
        const auto& f = lat.all[i];
        if (is_subset(f, c)) continue;
        auto d = off_diagonal(f);
        if (product_inside(*c.sys, d, d, c)) return false;
    }
    return true;
}

bool is_maximal(const CongLattice& lat, const Congruence& c) {
    auto u = unit_pair(*c.sys);
    if (!u) throw NoUnit("maximality needs zero and one");
    if (!c.t_congruence || c.contains(u->first, u->second)) return false;
    for (auto i : lat.t_index) {
        const auto& f = lat.all[i];
        if (f == c || !is_subset(c, f)) continue;
        if (!f.contains(u->first, u->second)) return false;
    }
    return true;
}

bool is_T_irreducible(const CongLattice& lat, const Congruence& c) {
    std::vector<const Congruence*> above;
    for (auto i : lat.t_index)
        if (!(lat.all[i] == c) && is_subset(c, lat.all[i])) above.push_back(&lat.all[i]);
    for (std::size_t i = 0; i < above.size(); ++i)
        for (std::size_t j = i + 1; j < above.size(); ++j)
            if (meet(*above[i], *above[j]) == c) return false;
    return true;
}

bool prime_by_tangible_pairs(const Congruence& c) {
    if (c.is_full()) return false;
    const FinSys& sys = *c.sys;
    auto t0 = t0_indices(sys);
    for (int a0 : t0)
        for (int a1 : t0) {
            if (c.contains(a0, a1)) continue;
            for (int b0 : t0)
                for (int b1 : t0) {
                    if (c.contains(b0, b1)) continue;
                    auto p = twist(sys, {a0, a1}, {b0, b1});
                    if (c.contains(p.first, p.second)) return false;
                }
        }
    return true;
}

bool radical_by_tangible_pairs(const Congruence& c) {
    const FinSys& sys = *c.sys;
    auto t0 = t0_indices(sys);
    for (int a0 : t0)
        for (int a1 : t0) {
            auto p = twist(sys, {a0, a1}, {a0, a1});
            if (c.contains(p.first, p.second) && !c.contains(a0, a1)) return false;
        }
    return true;
}

namespace {

Congruence radical_over(const Congruence& c, const std::vector<int>& support) {
    const FinSys& sys = *c.sys;
    std::vector<IndexPair> gens;
    for (int a0 : support)
        for (int a1 : support) {
            // Powers are eventually periodic; stop at the first repeat.
            std::set<IndexPair> seen;
            IndexPair p{a0, a1};
            while (seen.insert(p).second) {
                if (c.contains(p.first, p.second)) {
                    gens.push_back({a0, a1});
                    break;
                }
                p = twist(sys, p, {a0, a1});
            }
        }
    return generate_congruence(c.sys, gens);
}

}  // namespace

Congruence radical(const Congruence& c) { return radical_over(c, t0_indices(*c.sys)); }

std::optional<Congruence> t_hull(const CongLattice& lat, const Congruence& c) {
    Congruence acc = full_congruence(c.sys);
    for (auto i : lat.t_index)
        if (is_subset(c, lat.all[i])) acc = meet(acc, lat.all[i]);
    if (!lat.find(acc) || !is_T_congruence(acc)) return std::nullopt;
    return acc;
}

Congruence prime_intersection_above(const CongLattice& lat, const Congruence& c) {
    const auto& flags = lat.t_prime_flags();
    Congruence acc = full_congruence(c.sys);
    for (std::size_t i = 0; i < lat.all.size(); ++i)
        if (flags[i] && is_subset(c, lat.all[i])) acc = meet(acc, lat.all[i]);
    return acc;
}

bool check_radical_decomposition(const CongLattice& lat, const Congruence& c) {
    if (is_T_congruence(c)) return radical(c) == prime_intersection_above(lat, c);
    auto hull = t_hull(lat, c);
    return hull && radical(*hull) == prime_intersection_above(lat, c);
}

int chain_height(const CongLattice& lat) {
    const auto& flags = lat.t_prime_flags();
    std::vector<const Congruence*> primes;
    for (std::size_t i = 0; i < lat.all.size(); ++i)
        if (flags[i]) primes.push_back(&lat.all[i]);
    // Strict inclusion strictly lowers the class count, so sorting by it
    // descending is a topological order.
    std::sort(primes.begin(), primes.end(),
              [](const Congruence* a, const Congruence* b) { return a->num_classes() > b->num_classes(); });
    std::vector<int> best(primes.size(), 0);
    int height = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (primes[j]->num_classes() > primes[i]->num_classes() && is_subset(*primes[j], *primes[i]))
                best[i] = std::max(best[i], best[j] + 1);
        height = std::max(height, best[i]);
    }
    return height;
}

Congruence annihilator(FinPtr sys, const ActionTable& action, const std::vector<int>& subset) {
    if (static_cast<int>(action.act.size()) != sys->size()) throw InvalidInput("action table has wrong row count");
    for (int s : subset)
        if (s < 0 || s >= action.module_size) throw InvalidInput("subset element out of range");
    auto t0 = t0_indices(*sys);
    std::vector<IndexPair> gens;
    for (int a0 : t0)
        for (int a1 : t0) {
            bool same = true;
            for (int s : subset) same &= action.act[a0][s] == action.act[a1][s];
            if (same) gens.push_back({a0, a1});
        }
    return generate_congruence(std::move(sys), gens);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> close_denominators(const FinSys& sys, const std::vector<int>& s) {
    if (!sys.one_index()) throw NoUnit("localization needs a unit");
    std::set<int> out(s.begin(), s.end());
    out.insert(*sys.one_index());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<int> snap(out.begin(), out.end());
        for (int a : snap)
            for (int b : snap) grew |= out.insert(sys.mul_i(a, b)).second;
    }
    std::vector<int> v(out.begin(), out.end());
    // The unit first, so b/1 is the named representative of its class.
    std::stable_partition(v.begin(), v.end(), [&](int x) { return x == *sys.one_index(); });
    return v;
}

}  // namespace

Localization localize(FinPtr sys_ptr, const std::vector<int>& denominators) {
    const FinSys& sys = *sys_ptr;
    const int n = sys.size();
    for (int s : denominators)
        if (s < 0 || s >= n) throw InvalidInput("denominator out of range");
    auto S = close_denominators(sys, denominators);
    auto null = compute_null_set(sys);
    for (int s : S)
        for (const auto& e : null.members)
            if (e.index() == s) throw NullDenominator("denominator " + sys.name_of(s) + " is null");
    for (int s : S)
        for (int a = 0; a < n; ++a)
            if (sys.mul_i(s, a) != sys.mul_i(a, s)) throw InvalidInput("denominator " + sys.name_of(s) + " is not central");

    const int m = static_cast<int>(S.size());
    auto id = [&](int si, int b) { return si * n + b; };
    std::vector<int> s_pos(n, -1);
    for (int i = 0; i < m; ++i) s_pos[S[i]] = i;
    UnionFind uf(m * n);
    for (int i = 0; i < m; ++i)
        for (int b1 = 0; b1 < n; ++b1)
            for (int j = 0; j < m; ++j)
                for (int b2 = 0; b2 < n; ++b2) {
                    int l = sys.mul_i(S[i], b2), r = sys.mul_i(S[j], b1);
                    for (int s : S)
                        if (sys.mul_i(s, l) == sys.mul_i(s, r)) {
                            uf.unite(id(i, b1), id(j, b2));
                            break;
                        }
                }
    std::map<int, int> cls_of_root;
    std::vector<int> cls(m * n);
    Localization loc;
    for (int i = 0; i < m; ++i)
        for (int b = 0; b < n; ++b) {
            int r = uf.find(id(i, b));
            auto it = cls_of_root.find(r);
            if (it == cls_of_root.end()) {
                it = cls_of_root.emplace(r, static_cast<int>(loc.reps.size())).first;
                loc.reps.push_back({S[i], b});
            }
            cls[id(i, b)] = it->second;
        }
    const int k = static_cast<int>(loc.reps.size());
    auto frac = [&](int s, int b) { return cls[id(s_pos[s], b)]; };

    FinSpec q;
    q.kind = sys.kind();
    q.add.assign(k, std::vector<int>(k, -1));
    q.mul.assign(k, std::vector<int>(k, -1));
    q.neg.assign(k, -1);
    auto set = [](int& slot, int v, const char* what) {
        if (slot != -1 && slot != v) throw IllDefined(std::string("localized ") + what + " is not well defined");
        slot = v;
    };
    for (int i = 0; i < m; ++i)
        for (int b = 0; b < n; ++b) {
            int x = cls[id(i, b)];
            set(q.neg[x], frac(S[i], sys.neg_i(b)), "negation");
            for (int j = 0; j < m; ++j)
                for (int c = 0; c < n; ++c) {
                    int y = cls[id(j, c)];
                    int s = sys.mul_i(S[i], S[j]);
                    set(q.mul[x][y], frac(s, sys.mul_i(b, c)), "multiplication");
                    set(q.add[x][y], frac(s, sys.add_i(sys.mul_i(S[j], b), sys.mul_i(S[i], c))), "addition");
                }
        }
    const int one = *sys.one_index();
    for (const auto& [s, b] : loc.reps) q.names.push_back(s == one ? sys.name_of(b) : sys.name_of(b) + "/" + sys.name_of(s));
    std::set<int> tang;
    for (int i = 0; i < m; ++i)
        for (int t : sys.tangible_indices()) tang.insert(cls[id(i, t)]);
    if (sys.zero_index()) {
        q.zero = frac(one, *sys.zero_index());
        tang.erase(*q.zero);
    }
    q.tangibles.assign(tang.begin(), tang.end());
    q.one = frac(one, one);

    loc.sys = std::make_shared<FinSys>(q, "S^-1 " + sys.name());
    loc.denominators = S;
    for (int b = 0; b < n; ++b) loc.canonical.push_back(frac(one, b));
    return loc;
}

Congruence localization_kernel(FinPtr sys, const std::vector<int>& denominators) {
    auto S = close_denominators(*sys, denominators);
    const int n = sys->size();
    UnionFind uf(n);
    std::vector<IndexPair> gens;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int s : S)
                if (sys->mul_i(s, a) == sys->mul_i(s, b)) {
                    uf.unite(a, b);
                    gens.push_back({a, b});
                    break;
                }
    std::vector<int> raw(n);
    for (int a = 0; a < n; ++a) raw[a] = uf.find(a);
    return from_labels(std::move(sys), raw, gens);
}

Congruence canonical_kernel(const Localization& loc, FinPtr sys) {
    std::vector<IndexPair> gens;
    const int n = sys->size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (loc.canonical[a] == loc.canonical[b]) gens.push_back({a, b});
    return from_labels(std::move(sys), loc.canonical, gens);
}

bool is_regular(const FinSys& sys, const std::vector<int>& denominators) {
    for (int s : denominators)
        for (int a = 0; a < sys.size(); ++a)
            for (int b = a + 1; b < sys.size(); ++b)
                if (sys.mul_i(s, a) == sys.mul_i(s, b)) return false;
    return true;
}

bool is_C_regular(const Congruence& c, const std::vector<int>& denominators) {
    const FinSys& sys = *c.sys;
    for (int s : denominators)
        for (int a = 0; a < sys.size(); ++a)
            for (int b = a + 1; b < sys.size(); ++b)
                if (c.contains(sys.mul_i(s, a), sys.mul_i(s, b)) && !c.contains(a, b)) return false;
    return true;
}

Congruence localize_congruence(const Congruence& c, const Localization& loc) {
    const FinSys& ls = *loc.sys;
    // Class of b/s in the localized carrier, by lookup among representatives.
    std::map<IndexPair, int> which;
    const int k = ls.size();
    const FinSys& base = *c.sys;
    for (int x = 0; x < k; ++x) which[loc.reps[x]] = x;
    auto frac = [&](int s, int b) {
        // b/s = (b/1)(1/s); 1/s is the inverse class of s/1 in the localized carrier.
        int bs = loc.canonical[b];
        int ss = loc.canonical[s];
        for (int y = 0; y < k; ++y)
            if (ls.mul_i(ss, y) == loc.canonical[*base.one_index()]) return ls.mul_i(bs, y);
        throw AxiomViolation("denominator has no inverse after localization");
    };
    std::vector<IndexPair> gens;
    for (const auto& [b0, b1] : c.pairs())
        for (int s : loc.denominators) gens.push_back({frac(s, b0), frac(s, b1)});
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return generate_congruence(loc.sys, gens);
}

// ---------------------------------------------------------------------------

bool is_T_reversible(const FinSys& sys) {
    const int n = sys.size();
    for (int a1 : sys.tangible_indices())
        for (int a2 : sys.tangible_indices())
            for (int b = 0; b < n; ++b)
                if (sys.surpass_i(a1, sys.add_i(a2, b)) && !sys.surpass_i(a2, sys.add_i(a1, sys.neg_i(b))))
                    return false;
    return true;
}

namespace {

std::vector<int> additive_closure(const FinSys& sys, std::vector<int> gens) {
    std::set<int> out(gens.begin(), gens.end());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<int> snap(out.begin(), out.end());
        for (int a : snap)
            for (int b : snap) grew |= out.insert(sys.add_i(a, b)).second;
    }
    return {out.begin(), out.end()};
}

}  // namespace

bool is_T_submodule(const FinSys& sys, const std::vector<int>& members) {
    const int n = sys.size();
    std::vector<bool> in(n, false);
    for (int m : members) {
        if (m < 0 || m >= n) throw InvalidInput("submodule member out of range");
        in[m] = true;
    }
    for (int a : members) {
        for (int b : members)
            if (!in[sys.add_i(a, b)]) return false;
        for (int x = 0; x < n; ++x)
            if (sys.mul_defined(x, a) && !in[sys.mul_i(x, a)]) return false;
    }
    for (int t : sys.tangible_indices())
        if (!in[sys.add_i(t, sys.neg_i(t))]) return false;
    std::vector<int> tn0;
    for (int m : members)
        if (in_t0(sys, m)) tn0.push_back(m);
    if (tn0.empty()) return false;
    auto gen = additive_closure(sys, tn0);
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (gen != sorted) return false;
    for (int a : sys.tangible_indices())
        for (int b = 0; b < n; ++b)
            for (int v : members) {
                if (!sys.surpass_i(a, sys.add_i(b, v))) continue;
                bool witness = false;
                for (int w : tn0) witness |= sys.surpass_i(a, sys.add_i(b, w));
                if (!witness) return false;
            }
    return true;
}

std::vector<IndexPair> cong_of_submodule(const FinSys& sys, const std::vector<int>& members) {
    std::vector<int> tn0;
    for (int m : members)
        if (in_t0(sys, m)) tn0.push_back(m);
    std::vector<IndexPair> base;
    for (int a : tn0)
        for (int b : tn0)
            for (int v : tn0)
                if (sys.surpass_i(a, sys.add_i(b, v))) {
                    base.push_back({a, b});
                    break;
                }
    std::set<IndexPair> out(base.begin(), base.end());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<IndexPair> snap(out.begin(), out.end());
        for (const auto& [a, b] : snap)
            for (const auto& [c, d] : base) grew |= out.insert({sys.add_i(a, c), sys.add_i(b, d)}).second;
    }
    return {out.begin(), out.end()};
}

std::vector<int> submodule_of_cong(const FinSys& sys, const std::vector<IndexPair>& relation) {
    std::vector<int> gens;
    for (const auto& [a, b] : relation)
        if (in_t0(sys, a) && in_t0(sys, b)) gens.push_back(sys.add_i(a, sys.neg_i(b)));
    if (gens.empty()) return {};
    return additive_closure(sys, gens);
}

}  // namespace tsys
