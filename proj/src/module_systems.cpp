#include "tsys/module_systems.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace tsys {

namespace {

Elem sym(int i) { return Elem::symbol(i); }

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

std::vector<int> first_occurrence_labels(UnionFind& uf, std::size_t n) {
    std::vector<int> out(n), label(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto r = uf.find(i);
        if (label[r] < 0) label[r] = next++;
        out[i] = label[r];
    }
    return out;
}

bool same_ground(const FinPtr& a, const FinPtr& b) {
    if (a == b) return true;
    return a->spec().names == b->spec().names && a->spec().add == b->spec().add && a->spec().mul == b->spec().mul;
}

void require_same_ground(const ModSys& a, const ModSys& b) {
    if (!same_ground(a.ground(), b.ground())) throw InvalidInput("modules over different grounds");
}

bool ground_null(const FinSys& g, int b) {
    if (g.zero_index()) return g.surpass_i(*g.zero_index(), b);
    return g.quasi_zero_i(b);
}

// Additive generators with a breadth-first decomposition of every element.
struct Decomp {
    std::vector<int> gens;
    std::vector<int> parent;  // -1 at zero
    std::vector<int> via;     // position in gens
    std::vector<int> order;   // breadth-first, zero first
};

std::optional<Decomp> decompose_by(const ModSys& m, const std::vector<int>& gens) {
    const int n = m.size();
    Decomp d;
    d.gens = gens;
    d.parent.assign(n, -1);
    d.via.assign(n, -1);
    std::vector<bool> seen(n, false);
    seen[m.zero()] = true;
    d.order.push_back(m.zero());
    for (std::size_t i = 0; i < d.order.size(); ++i) {
        int x = d.order[i];
        for (std::size_t g = 0; g < gens.size(); ++g) {
            int y = m.add_i(x, gens[g]);
            if (seen[y]) continue;
            seen[y] = true;
            d.parent[y] = x;
            d.via[y] = static_cast<int>(g);
            d.order.push_back(y);
        }
    }
    if (static_cast<int>(d.order.size()) != n) return std::nullopt;
    return d;
}

Decomp decompose(const ModSys& m) {
    if (auto d = decompose_by(m, m.tangible_indices())) return *d;
    std::vector<int> all;
    for (int i = 0; i < m.size(); ++i)
        if (i != m.zero()) all.push_back(i);
    return *decompose_by(m, all);
}

// Positions in d.gens summing to x.
std::vector<int> decomposition(const Decomp& d, int x) {
    std::vector<int> out;
    while (d.parent[x] >= 0) {
        out.push_back(d.via[x]);
        x = d.parent[x];
    }
    return out;
}

void check_map(const MorphismTable& m) {
    if (!m.source || !m.target) throw InvalidInput("morphism needs source and target");
    if (static_cast<int>(m.map.size()) != m.source->size()) throw InvalidInput("morphism table must be total");
    for (int v : m.map)
        if (v < 0 || v >= m.target->size()) throw InvalidInput("morphism value out of range");
}

bool null_in(const FinSys& s, int b) {
    if (s.zero_index()) return s.surpass_i(*s.zero_index(), b);
    return s.quasi_zero_i(b);
}

// Clauses (i)-(vi); clause3 lists (f(ab), target side) pairs.
MorphismClass classify_core(const FinSys& s, const FinSys& t, const std::vector<int>& f,
                            const std::vector<IndexPair>& clause3, int bound) {
    MorphismClass out;
    const int n = s.size();
    std::set<std::string> viol, strict;
    auto compare = [&](const char* clause, int lhs, int rhs) {
        if (!t.surpass_i(lhs, rhs))
            viol.insert(clause);
        else if (lhs != rhs)
            strict.insert(clause);
    };
    for (int b = 0; b < n; ++b) compare("(i)", f[s.neg_i(b)], t.neg_i(f[b]));
    for (int b1 = 0; b1 < n; ++b1)
        for (int b2 = 0; b2 < n; ++b2) compare("(ii)", f[s.add_i(b1, b2)], t.add_i(f[b1], f[b2]));
    for (auto [lhs, rhs] : clause3) compare("(iii)", lhs, rhs);
    for (int b = 0; b < n; ++b)
        for (int b2 = 0; b2 < n; ++b2)
            if (s.surpass_i(b, b2) && !t.surpass_i(f[b], f[b2])) viol.insert("(iv)");
    for (int b = 0; b < n; ++b)
        if (null_in(s, b) && !null_in(t, f[b])) viol.insert("(v)");
    if (s.zero_index() && t.zero_index() && f[*s.zero_index()] != *t.zero_index()) viol.insert("(vi)");

    out.admissible = true;
    const auto ts = s.tangible_indices();
    std::map<int, int> image_of_sum;
    std::set<IndexPair> level;
    for (int a : ts) level.insert({a, f[a]});
    for (int k = 1; k <= bound && !level.empty(); ++k) {
        std::set<IndexPair> next;
        for (auto [sum, fsum] : level) {
            auto [it, fresh] = image_of_sum.emplace(sum, fsum);
            if (!fresh && it->second != fsum) out.admissible = false;
            if (k < bound)
                for (int a : ts) next.insert({s.add_i(sum, a), t.add_i(fsum, f[a])});
        }
        level = std::move(next);
    }

    out.violations.assign(viol.begin(), viol.end());
    out.strict.assign(strict.begin(), strict.end());
    if (!out.violations.empty())
        out.kind = MorphismKind::none;
    else if (out.strict.empty())
        out.kind = MorphismKind::homomorphism;
    else if (out.admissible)
        out.kind = MorphismKind::t_admissible;
    else
        out.kind = MorphismKind::preceq_morphism;
    return out;
}

FinSpec additive_spec(const std::vector<std::string>& names, std::vector<std::vector<int>> add, int zero,
                      std::vector<int> tangibles, std::vector<int> neg) {
    FinSpec s;
    s.names = names;
    s.add = std::move(add);
    s.zero = zero;
    s.tangibles = std::move(tangibles);
    s.neg = std::move(neg);
    s.kind = Kind::module;
    return s;
}

std::string join_names(const ModSys& m, const std::vector<int>& xs, const char* open, const char* close) {
    std::string out = open;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + m.name_of(xs[i]);
    return out + close;
}

}  // namespace

// ---------------------------------------------------------------------------

ModSys::ModSys(FinPtr ground, FinSpec additive, std::vector<std::vector<int>> act, std::string name)
    : ground_(std::move(ground)), act_(std::move(act)), name_(std::move(name)) {
    if (!ground_) throw InvalidInput("module needs a ground");
    if (!additive.zero) throw InvalidInput("module carrier needs a zero");
    additive.kind = Kind::module;
    additive.mul.clear();
    additive.one.reset();
    additive_ = std::make_shared<FinSys>(std::move(additive), name_);
    const int n = additive_->size();
    if (static_cast<int>(act_.size()) != ground_->size()) throw InvalidInput("action needs one row per ground element");
    for (const auto& row : act_) {
        if (static_cast<int>(row.size()) != n) throw InvalidInput("action row must cover the carrier");
        for (int v : row)
            if (v < 0 || v >= n) throw InvalidInput("action entry out of range");
    }
}

ModPtr ground_module(FinPtr ground) {
    if (!ground->zero_index()) throw InvalidInput("ground needs a zero");
    const int n = ground->size();
    std::vector<std::vector<int>> act(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int m = 0; m < n; ++m) {
            if (!ground->mul_defined(a, m)) throw InvalidInput("ground multiplication must be total");
            act[a][m] = ground->mul_i(a, m);
        }
    FinSpec s = ground->spec();
    return std::make_shared<ModSys>(ground, s, std::move(act), ground->name());
}

std::vector<int> sum_components(const std::vector<ModPtr>& mods, int index) {
    std::vector<int> out;
    for (const auto& m : mods) {
        out.push_back(index % m->size());
        index /= m->size();
    }
    return out;
}

int sum_index(const std::vector<ModPtr>& mods, const std::vector<int>& components) {
    int index = 0, stride = 1;
    for (std::size_t i = 0; i < mods.size(); ++i) {
        index += components[i] * stride;
        stride *= mods[i]->size();
    }
    return index;
}

ModPtr direct_sum(const std::vector<ModPtr>& mods) {
    if (mods.empty()) throw InvalidInput("direct sum of no modules");
    if (mods.size() == 1) return mods.front();
    std::size_t total = 1;
    for (const auto& m : mods) {
        require_same_ground(*mods.front(), *m);
        total *= static_cast<std::size_t>(m->size());
        if (total > 1'000'000) throw CarrierTooLarge("direct sum carrier exceeds 10^6 elements");
    }
    const int n = static_cast<int>(total);
    const auto& ground = mods.front()->ground();
    std::vector<std::vector<int>> comps(n);
    for (int i = 0; i < n; ++i) comps[i] = sum_components(mods, i);

    std::vector<std::string> names(n);
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> act(ground->size(), std::vector<int>(n));
    std::vector<int> neg(n);
    std::vector<int> c(mods.size());
    for (int i = 0; i < n; ++i) {
        names[i] = "(";
        for (std::size_t k = 0; k < mods.size(); ++k) names[i] += (k ? "," : "") + mods[k]->name_of(comps[i][k]);
        names[i] += ")";
        for (int j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < mods.size(); ++k) c[k] = mods[k]->add_i(comps[i][k], comps[j][k]);
            add[i][j] = sum_index(mods, c);
        }
        for (int a = 0; a < ground->size(); ++a) {
            for (std::size_t k = 0; k < mods.size(); ++k) c[k] = mods[k]->act_i(a, comps[i][k]);
            act[a][i] = sum_index(mods, c);
        }
        for (std::size_t k = 0; k < mods.size(); ++k) c[k] = mods[k]->neg_i(comps[i][k]);
        neg[i] = sum_index(mods, c);
    }
    std::vector<int> zeros;
    for (const auto& m : mods) zeros.push_back(m->zero());
    const int zero = sum_index(mods, zeros);
    std::vector<int> tangibles;
    for (std::size_t k = 0; k < mods.size(); ++k)
        for (int t : mods[k]->tangible_indices()) {
            auto v = zeros;
            v[k] = t;
            tangibles.push_back(sum_index(mods, v));
        }
    auto spec = additive_spec(names, std::move(add), zero, std::move(tangibles), std::move(neg));
    bool explicit_order = false;
    for (const auto& m : mods) explicit_order |= m->additive().explicit_surpass();
    if (explicit_order) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool le = true;
                for (std::size_t k = 0; k < mods.size() && le; ++k) le = mods[k]->surpass_i(comps[i][k], comps[j][k]);
                if (le) pairs.push_back({i, j});
            }
        spec.surpass = std::move(pairs);
    }
    std::string name;
    for (std::size_t k = 0; k < mods.size(); ++k) name += (k ? "(+)" : "") + mods[k]->name();
    return std::make_shared<ModSys>(ground, std::move(spec), std::move(act), name);
}

ModPtr free_module(FinPtr ground, int n) {
    if (n < 1) throw InvalidInput("free module needs rank >= 1");
    auto g = ground_module(ground);
    if (n == 1) return g;
    auto sum = direct_sum(std::vector<ModPtr>(n, g));
    return std::make_shared<ModSys>(ground, sum->additive().spec(), sum->action(),
                                    ground->name() + "^" + std::to_string(n));
}

Report check_module_axioms(const ModSys& m) {
    Report r;
    const FinSys& a = *m.ground();
    const int n = m.size(), na = a.size();
    r.checked = {"add-assoc", "add-comm", "add-zero", "act-distrib", "act-zero", "act-add",
                 "act-assoc", "neg-involution", "neg-additive", "neg-action"};
    for (int x = 0; x < n; ++x) {
        if (m.add_i(x, m.zero()) != x || m.add_i(m.zero(), x) != x) r.fail("add-zero", {sym(x)});
        if (m.neg_i(m.neg_i(x)) != x) r.fail("neg-involution", {sym(x)});
        for (int y = 0; y < n; ++y) {
            if (m.add_i(x, y) != m.add_i(y, x)) r.fail("add-comm", {sym(x), sym(y)});
            if (m.neg_i(m.add_i(x, y)) != m.add_i(m.neg_i(x), m.neg_i(y))) r.fail("neg-additive", {sym(x), sym(y)});
            for (int z = 0; z < n; ++z)
                if (m.add_i(m.add_i(x, y), z) != m.add_i(x, m.add_i(y, z))) r.fail("add-assoc", {sym(x), sym(y), sym(z)});
        }
    }
    for (int s = 0; s < na; ++s) {
        if (m.act_i(s, m.zero()) != m.zero()) r.fail("act-zero", {sym(s)});
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y)
                if (m.act_i(s, m.add_i(x, y)) != m.add_i(m.act_i(s, x), m.act_i(s, y)))
                    r.fail("act-distrib", {sym(s), sym(x), sym(y)});
            const int v = m.act_i(s, x);
            if (m.act_i(a.neg_i(s), x) != m.neg_i(v) || m.act_i(s, m.neg_i(x)) != m.neg_i(v))
                r.fail("neg-action", {sym(s), sym(x)});
            for (int s2 = 0; s2 < na; ++s2) {
                if (m.act_i(a.add_i(s, s2), x) != m.add_i(v, m.act_i(s2, x))) r.fail("act-add", {sym(s), sym(s2), sym(x)});
                if (a.mul_defined(s, s2) && m.act_i(a.mul_i(s, s2), x) != m.act_i(s, m.act_i(s2, x)))
                    r.fail("act-assoc", {sym(s), sym(s2), sym(x)});
            }
        }
    }
    if (a.one_index()) {
        r.checked.push_back("act-unit");
        for (int x = 0; x < n; ++x)
            if (m.act_i(*a.one_index(), x) != x) r.fail("act-unit", {sym(x)});
    }
    return r;
}

std::vector<int> null_set(const ModSys& m) {
    std::vector<int> out;
    for (int b = 0; b < m.size(); ++b)
        if (m.null_i(b)) out.push_back(b);
    return out;
}

std::vector<int> generated_submodule(const ModSys& m, const std::vector<int>& gens) {
    const int n = m.size(), na = m.ground()->size();
    std::vector<bool> in(n, false);
    std::vector<int> members{m.zero()};
    in[m.zero()] = true;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
        }
    };
    for (int g : gens) {
        if (g < 0 || g >= n) throw InvalidInput("generator out of range");
        push(g);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        const int x = members[i];
        push(m.neg_i(x));
        for (int s = 0; s < na; ++s) push(m.act_i(s, x));
        for (std::size_t j = 0; j <= i; ++j) push(m.add_i(x, members[j]));
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_simple(const ModSys& m) {
    for (int b = 0; b < m.size(); ++b)
        if (!m.null_i(b) && static_cast<int>(generated_submodule(m, {b}).size()) != m.size()) return false;
    return true;
}

// ---------------------------------------------------------------------------

const char* kind_name(MorphismKind k) {
    switch (k) {
        case MorphismKind::homomorphism: return "homomorphism";
        case MorphismKind::t_admissible: return "t-admissible";
        case MorphismKind::preceq_morphism: return "preceq-morphism";
        case MorphismKind::none: return "none";
    }
    return "none";
}

MorphismClass classify_morphism(const MorphismTable& m, int summand_bound) {
    check_map(m);
    require_same_ground(*m.source, *m.target);
    std::vector<IndexPair> clause3;
    for (int a : m.source->ground()->tangible_indices())
        for (int b = 0; b < m.source->size(); ++b)
            clause3.push_back({m.map[m.source->act_i(a, b)], m.target->act_i(a, m.map[b])});
    return classify_core(m.source->additive(), m.target->additive(), m.map, clause3, summand_bound);
}

MorphismClass classify_semiring_morphism(const FinSys& source, const FinSys& target, const std::vector<int>& map,
                                         int summand_bound) {
    if (static_cast<int>(map.size()) != source.size()) throw InvalidInput("morphism table must be total");
    for (int v : map)
        if (v < 0 || v >= target.size()) throw InvalidInput("morphism value out of range");
    std::vector<IndexPair> clause3;
    for (int a : source.tangible_indices())
        for (int b = 0; b < source.size(); ++b) {
            if (!source.mul_defined(a, b) || !target.mul_defined(map[a], map[b]))
                throw InvalidInput("semiring morphism needs total multiplication");
            clause3.push_back({map[source.mul_i(a, b)], target.mul_i(map[a], map[b])});
        }
    return classify_core(source, target, map, clause3, summand_bound);
}

Report derived_morphism_laws(const MorphismTable& m) {
    check_map(m);
    Report r;
    const ModSys& s = *m.source;
    const ModSys& t = *m.target;
    const auto& f = m.map;
    r.checked.push_back("partial-order");
    for (const ModSys* x : {&s, &t})
        for (int a = 0; a < x->size(); ++a)
            for (int b = 0; b < x->size(); ++b)
                if (a != b && x->surpass_i(a, b) && x->surpass_i(b, a)) r.fail("partial-order", {sym(a), sym(b)});
    if (!r.ok()) return r;

    r.checked.push_back("negation");
    for (int b = 0; b < s.size(); ++b)
        if (f[s.neg_i(b)] != t.neg_i(f[b])) r.fail("negation", {sym(b)});

    const FinSys& g = *s.ground();
    bool group = g.one_index().has_value();
    for (int a : g.tangible_indices()) {
        bool inv = false;
        for (int u : g.tangible_indices())
            inv |= g.mul_defined(a, u) && g.mul_i(a, u) == *g.one_index() && g.mul_i(u, a) == *g.one_index();
        group &= inv;
    }
    if (group) {
        r.checked.push_back("action");
        for (int a : g.tangible_indices())
            for (int b = 0; b < s.size(); ++b)
                if (f[s.act_i(a, b)] != t.act_i(a, f[b])) r.fail("action", {sym(a), sym(b)});
    }

    r.checked.push_back("convexity");
    for (int b0 = 0; b0 < s.size(); ++b0)
        for (int b1 = 0; b1 < s.size(); ++b1) {
            if (f[b0] != f[b1]) continue;
            for (int b = 0; b < s.size(); ++b)
                if (s.surpass_i(b0, b) && s.surpass_i(b, b1) && f[b] != f[b0])
                    r.fail("convexity", {sym(b0), sym(b), sym(b1)});
        }
    return r;
}

// ---------------------------------------------------------------------------

std::optional<int> HomTriple::find(const std::vector<int>& table) const {
    auto it = index_.find(table);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

HomTriple hom_triple(ModPtr m, ModPtr n, std::size_t limit) {
    require_same_ground(*m, *n);
    const FinSys& g = *m->ground();
    if (!g.commutative()) throw InvalidInput("Hom carries an action only over a commutative ground");
    const Decomp d = decompose(*m);
    const std::size_t k = d.gens.size();
    std::size_t space = 1;
    for (std::size_t i = 0; i < k; ++i) {
        space *= static_cast<std::size_t>(n->size());
        if (space > limit) throw CarrierTooLarge("Hom candidate space exceeds " + std::to_string(limit));
    }

    const int sm = m->size();
    const auto tangibles = g.tangible_indices();
    HomTriple h;
    h.source = m;
    h.target = n;
    std::vector<int> vals(k, 0), f(sm);
    for (std::size_t count = 0; count < space; ++count) {
        f[m->zero()] = n->zero();
        for (std::size_t i = 1; i < d.order.size(); ++i) {
            const int x = d.order[i];
            f[x] = n->add_i(f[d.parent[x]], vals[d.via[x]]);
        }
        bool ok = true;
        for (int x = 0; x < sm && ok; ++x) {
            ok = f[m->neg_i(x)] == n->neg_i(f[x]);
            for (int y = 0; y < sm && ok; ++y) ok = f[m->add_i(x, y)] == n->add_i(f[x], f[y]);
            for (int a : tangibles)
                if (ok) ok = f[m->act_i(a, x)] == n->act_i(a, f[x]);
        }
        if (ok) h.maps.push_back(f);
        for (std::size_t i = 0; i < k; ++i) {
            if (++vals[i] < n->size()) break;
            vals[i] = 0;
        }
    }
    std::sort(h.maps.begin(), h.maps.end());
    for (std::size_t i = 0; i < h.maps.size(); ++i) h.index_[h.maps[i]] = static_cast<int>(i);

    const int c = static_cast<int>(h.maps.size());
    auto lookup = [&](const std::vector<int>& t, const char* what) {
        auto it = h.index_.find(t);
        if (it == h.index_.end()) throw IllDefined(std::string("Hom is not closed under ") + what);
        return it->second;
    };
    std::vector<std::string> names(c);
    std::vector<std::vector<int>> add(c, std::vector<int>(c)), act(g.size(), std::vector<int>(c));
    std::vector<int> neg(c), tang;
    std::vector<int> t(sm);
    for (int i = 0; i < c; ++i) {
        const auto& fi = h.maps[i];
        names[i] = join_names(*n, fi, "[", "]");
        for (int j = 0; j < c; ++j) {
            for (int x = 0; x < sm; ++x) t[x] = n->add_i(fi[x], h.maps[j][x]);
            add[i][j] = lookup(t, "+");
        }
        for (int a = 0; a < g.size(); ++a) {
            for (int x = 0; x < sm; ++x) t[x] = n->act_i(a, fi[x]);
            act[a][i] = lookup(t, "the action");
        }
        for (int x = 0; x < sm; ++x) t[x] = n->neg_i(fi[x]);
        neg[i] = lookup(t, "(-)");
        bool zero_map = true, tangible = true;
        for (int x = 0; x < sm; ++x) zero_map &= fi[x] == n->zero();
        for (int x : m->tangible_indices()) tangible &= n->tangible_i(fi[x]);
        if (!zero_map && tangible) tang.push_back(i);
    }
    const int zero = lookup(std::vector<int>(sm, n->zero()), "zero");
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) {
            bool le = true;
            for (int x = 0; x < sm && le; ++x) le = n->surpass_i(h.maps[i][x], h.maps[j][x]);
            if (le) order.push_back({i, j});
        }
    auto spec = additive_spec(names, std::move(add), zero, std::move(tang), std::move(neg));
    spec.surpass = std::move(order);
    h.sys = std::make_shared<ModSys>(m->ground(), std::move(spec), std::move(act),
                                     "Hom(" + m->name() + "," + n->name() + ")");
    return h;
}

DualSystem dual_system(FinPtr ground, int n) {
    DualSystem out;
    auto gm = ground_module(ground);
    out.space = free_module(ground, n);
    out.dual = hom_triple(out.space, gm);
    const std::vector<ModPtr> copies(n, gm);
    const int s = out.space->size();
    std::vector<std::vector<int>> comps(s);
    for (int i = 0; i < s; ++i) comps[i] = sum_components(copies, i);
    std::set<int> hit;
    out.injective = true;
    for (int a = 0; a < s; ++a) {
        std::vector<int> table(s);
        for (int b = 0; b < s; ++b) {
            int v = *ground->zero_index();
            for (int i = 0; i < n; ++i) v = ground->add_i(v, ground->mul_i(comps[a][i], comps[b][i]));
            table[b] = v;
        }
        auto idx = out.dual.find(table);
        out.star.push_back(idx ? *idx : -1);
        if (!idx || !hit.insert(*idx).second) out.injective = false;
    }
    out.onto = hit.size() == out.dual.maps.size();
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void require_coefficients(std::size_t base, std::size_t k) {
    std::size_t space = 1;
    for (std::size_t i = 0; i < k; ++i) {
        space *= base;
        if (space > kMaxCoefficientSpace) throw CoefficientSpaceTooLarge("coefficient space exceeds 10^6 tuples");
    }
}

}  // namespace

bool span_check(const ModSys& m, const std::vector<int>& vs) {
    const FinSys& g = *m.ground();
    std::vector<int> coeffs = g.tangible_indices();
    if (g.zero_index()) coeffs.push_back(*g.zero_index());
    require_coefficients(coeffs.size(), vs.size());
    std::set<int> sums{m.zero()};
    for (int v : vs) {
        std::set<int> next;
        for (int s : sums)
            for (int t : coeffs) next.insert(m.add_i(s, m.act_i(t, v)));
        sums = std::move(next);
    }
    for (int b = 0; b < m.size(); ++b) {
        bool covered = false;
        for (int s : sums) covered |= m.surpass_i(b, s);
        if (!covered) return false;
    }
    return true;
}

bool independence_check(const ModSys& m, const std::vector<int>& vs) {
    const FinSys& g = *m.ground();
    require_coefficients(static_cast<std::size_t>(g.size()), vs.size());
    std::set<std::pair<int, bool>> states{{m.zero(), true}};
    for (int v : vs) {
        std::set<std::pair<int, bool>> next;
        for (auto [s, all_null] : states)
            for (int b = 0; b < g.size(); ++b) next.insert({m.add_i(s, m.act_i(b, v)), all_null && ground_null(g, b)});
        states = std::move(next);
    }
    for (auto [s, all_null] : states)
        if (m.null_i(s) && !all_null) return false;
    return true;
}

bool is_base(const ModSys& m, const std::vector<int>& vs) { return span_check(m, vs) && independence_check(m, vs); }

ModPtr symmetrize_module(const ModSys& m) {
    const FinSys& a = *m.ground();
    const int na = a.size(), n = m.size();
    if (!a.zero_index()) throw InvalidInput("ground needs a zero");
    const int za = *a.zero_index();
    FinSpec gs;
    gs.names.resize(na * na);
    gs.add.assign(na * na, std::vector<int>(na * na));
    gs.mul.assign(na * na, std::vector<int>(na * na));
    gs.neg.resize(na * na);
    for (int a0 = 0; a0 < na; ++a0)
        for (int a1 = 0; a1 < na; ++a1) {
            const int i = a0 * na + a1;
            gs.names[i] = "(" + a.name_of(a0) + "," + a.name_of(a1) + ")";
            gs.neg[i] = a1 * na + a0;
            for (int b0 = 0; b0 < na; ++b0)
                for (int b1 = 0; b1 < na; ++b1) {
                    const int j = b0 * na + b1;
                    gs.add[i][j] = a.add_i(a0, b0) * na + a.add_i(a1, b1);
                    gs.mul[i][j] = a.add_i(a.mul_i(a0, b0), a.mul_i(a1, b1)) * na +
                                   a.add_i(a.mul_i(a0, b1), a.mul_i(a1, b0));
                }
        }
    gs.zero = za * na + za;
    if (a.one_index()) gs.one = *a.one_index() * na + za;
    for (int t : a.tangible_indices()) {
        gs.tangibles.push_back(t * na + za);
        gs.tangibles.push_back(za * na + t);
    }
    auto ground = std::make_shared<FinSys>(gs, "sym(" + a.name() + ")");

    std::vector<std::string> names(n * n);
    std::vector<std::vector<int>> add(n * n, std::vector<int>(n * n)), act(na * na, std::vector<int>(n * n));
    std::vector<int> neg(n * n), tang;
    for (int x0 = 0; x0 < n; ++x0)
        for (int x1 = 0; x1 < n; ++x1) {
            const int i = x0 * n + x1;
            names[i] = "(" + m.name_of(x0) + "," + m.name_of(x1) + ")";
            neg[i] = x1 * n + x0;
            for (int y0 = 0; y0 < n; ++y0)
                for (int y1 = 0; y1 < n; ++y1) add[i][y0 * n + y1] = m.add_i(x0, y0) * n + m.add_i(x1, y1);
            for (int a0 = 0; a0 < na; ++a0)
                for (int a1 = 0; a1 < na; ++a1)
                    act[a0 * na + a1][i] = m.add_i(m.act_i(a0, x0), m.act_i(a1, x1)) * n +
                                           m.add_i(m.act_i(a0, x1), m.act_i(a1, x0));
        }
    for (int t : m.tangible_indices()) {
        tang.push_back(t * n + m.zero());
        tang.push_back(m.zero() * n + t);
    }
    auto spec = additive_spec(names, std::move(add), m.zero() * n + m.zero(), std::move(tang), std::move(neg));
    return std::make_shared<ModSys>(ground, std::move(spec), std::move(act), "sym(" + m.name() + ")");
}

bool is_symmetric_base(const ModSys& m, const std::vector<int>& vs) {
    auto mh = symmetrize_module(m);
    std::vector<int> embedded;
    for (int v : vs) embedded.push_back(v * m.size() + m.zero());
    return is_base(*mh, embedded);
}

// ---------------------------------------------------------------------------

std::size_t Tensor::add_vectors(std::size_t u, std::size_t v) const {
    std::size_t out = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        int c = static_cast<int>(u / stride[g] % bound[g]) + static_cast<int>(v / stride[g] % bound[g]);
        while (c >= bound[g]) c -= fold[g];
        out += static_cast<std::size_t>(c) * stride[g];
    }
    return out;
}

int Tensor::class_of_sum(const std::vector<IndexPair>& terms) const {
    std::size_t u = 0;
    for (auto [x, y] : terms) {
        if (x < 0 || x >= left->size() || y < 0 || y >= right->size()) throw InvalidInput("tensor term out of range");
        u = add_vectors(u, vec[x][y]);
    }
    return class_of[u];
}

namespace {

// Sum of mult copies of free vector v.
std::size_t scale(const Tensor& t, std::size_t v, int mult) {
    std::size_t out = 0;
    for (int i = 0; i < mult; ++i) out = t.add_vectors(out, v);
    return out;
}

// Image of free vector u under the coordinate map g -> image[g].
std::size_t push_forward(const Tensor& t, std::size_t u, const std::vector<std::size_t>& image) {
    std::size_t out = 0;
    for (std::size_t g = 0; g < t.gens.size(); ++g) {
        const int c = static_cast<int>(u / t.stride[g] % t.bound[g]);
        if (c) out = t.add_vectors(out, scale(t, image[g], c));
    }
    return out;
}

}  // namespace

Tensor tensor(ModPtr m1, ModPtr m2, bool negated) {
    require_same_ground(*m1, *m2);
    const FinSys& a = *m1->ground();
    if (!a.commutative()) throw InvalidInput("tensor needs a commutative ground");
    const Decomp d1 = decompose(*m1), d2 = decompose(*m2);
    Tensor t;
    t.left = m1;
    t.right = m2;
    t.negated = negated;
    for (int x : d1.gens)
        for (int y : d2.gens) t.gens.push_back({x, y});
    const std::size_t G = t.gens.size();
    t.stride.assign(G + 1, 1);
    for (std::size_t g = 0; g < G; ++g) {
        const int x = t.gens[g].first;
        std::vector<int> multiples{-1, x};  // multiples[k] = k x for k >= 1
        int bound = 0, fold = 0;
        for (int k = 2; !bound; ++k) {
            const int v = m1->add_i(multiples.back(), x);
            for (int j = 1; j < k; ++j)
                if (multiples[j] == v) {
                    bound = k;
                    fold = k - j;
                    break;
                }
            multiples.push_back(v);
        }
        t.bound.push_back(bound);
        t.fold.push_back(fold);
        t.stride[g + 1] = t.stride[g] * static_cast<std::size_t>(bound);
        if (t.stride[g + 1] > kMaxTensorFree) throw QuotientTooLarge("free tensor carrier exceeds the element bound");
    }
    const std::size_t total = t.stride[G];

    const int n1 = m1->size(), n2 = m2->size(), k2 = static_cast<int>(d2.gens.size());
    t.vec.assign(n1, std::vector<std::size_t>(n2, 0));
    for (int x = 0; x < n1; ++x) {
        const auto rx = decomposition(d1, x);
        for (int y = 0; y < n2; ++y) {
            std::size_t u = 0;
            for (int i : decomposition(d2, y))
                for (int j : rx) u = t.add_vectors(u, t.stride[static_cast<std::size_t>(j * k2 + i)]);
            t.vec[x][y] = u;
        }
    }

    UnionFind uf(total);
    std::deque<std::pair<std::size_t, std::size_t>> queue;
    auto merge = [&](std::size_t u, std::size_t v) {
        if (uf.unite(u, v)) queue.push_back({u, v});
    };
    for (int x = 0; x < n1; ++x)
        for (int x2 = 0; x2 < n1; ++x2)
            for (int y : d2.gens) merge(t.vec[m1->add_i(x, x2)][y], t.add_vectors(t.vec[x][y], t.vec[x2][y]));
    for (int x : d1.gens)
        for (int y = 0; y < n2; ++y)
            for (int y2 = 0; y2 < n2; ++y2) merge(t.vec[x][m2->add_i(y, y2)], t.add_vectors(t.vec[x][y], t.vec[x][y2]));
    for (int s : a.tangible_indices())
        for (int x = 0; x < n1; ++x)
            for (int y = 0; y < n2; ++y) merge(t.vec[m1->act_i(s, x)][y], t.vec[x][m2->act_i(s, y)]);
    if (negated)
        for (int x = 0; x < n1; ++x)
            for (int y = 0; y < n2; ++y) merge(t.vec[m1->neg_i(x)][y], t.vec[x][m2->neg_i(y)]);
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        for (std::size_t g = 0; g < G; ++g) merge(t.add_vectors(u, t.stride[g]), t.add_vectors(v, t.stride[g]));
    }
    t.class_of = first_occurrence_labels(uf, total);
    const int c = total ? *std::max_element(t.class_of.begin(), t.class_of.end()) + 1 : 0;
    std::vector<std::size_t> rep(c, total);
    for (std::size_t u = 0; u < total; ++u)
        if (rep[t.class_of[u]] == total) rep[t.class_of[u]] = u;

    std::vector<std::string> names(c);
    for (int k = 0; k < c; ++k) {
        std::string s;
        for (std::size_t g = 0; g < G; ++g) {
            const int mult = static_cast<int>(rep[k] / t.stride[g] % t.bound[g]);
            if (!mult) continue;
            if (!s.empty()) s += "+";
            if (mult > 1) s += std::to_string(mult) + "*";
            s += m1->name_of(t.gens[g].first) + "⊗" + m2->name_of(t.gens[g].second);
        }
        names[k] = s.empty() ? "0" : s;
    }
    std::vector<std::vector<int>> add(c, std::vector<int>(c)), act(a.size(), std::vector<int>(c));
    std::vector<int> neg(c);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) add[i][j] = t.class_of[t.add_vectors(rep[i], rep[j])];

    // Action through the right factor and negation through the left one, checked
    // constant on classes.
    const bool scan_all = total <= 200'000;
    auto induced = [&](const std::vector<std::size_t>& image, std::vector<int>& row, const char* what) {
        std::vector<int> value(c, -1);
        for (std::size_t u = 0; u < total; ++u) {
            if (!scan_all && rep[t.class_of[u]] != u) continue;
            const int v = t.class_of[push_forward(t, u, image)];
            int& slot = value[t.class_of[u]];
            if (slot < 0)
                slot = v;
            else if (slot != v)
                throw IllDefined(std::string("tensor ") + what + " is not constant on classes");
        }
        row = value;
    };
    std::vector<std::size_t> image(G);
    for (int s = 0; s < a.size(); ++s) {
        for (std::size_t g = 0; g < G; ++g) image[g] = t.vec[t.gens[g].first][m2->act_i(s, t.gens[g].second)];
        induced(image, act[s], "action");
    }
    for (std::size_t g = 0; g < G; ++g) image[g] = t.vec[m1->neg_i(t.gens[g].first)][t.gens[g].second];
    induced(image, neg, "negation");

    t.simple.assign(n1, std::vector<int>(n2));
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y) t.simple[x][y] = t.class_of[t.vec[x][y]];
    const int zero = t.class_of[0];
    std::set<int> tang;
    for (int x : m1->tangible_indices())
        for (int y : m2->tangible_indices())
            if (t.simple[x][y] != zero) tang.insert(t.simple[x][y]);
    auto spec = additive_spec(names, std::move(add), zero, {tang.begin(), tang.end()}, std::move(neg));
    t.sys = std::make_shared<ModSys>(m1->ground(), std::move(spec), std::move(act), m1->name() + "⊗" + m2->name());
    return t;
}

bool is_bilinear(const Tensor& t, const ModSys& n, const std::vector<std::vector<int>>& psi) {
    const ModSys& m1 = *t.left;
    const ModSys& m2 = *t.right;
    for (int x = 0; x < m1.size(); ++x)
        for (int y = 0; y < m2.size(); ++y) {
            for (int x2 = 0; x2 < m1.size(); ++x2)
                if (psi[m1.add_i(x, x2)][y] != n.add_i(psi[x][y], psi[x2][y])) return false;
            for (int y2 = 0; y2 < m2.size(); ++y2)
                if (psi[x][m2.add_i(y, y2)] != n.add_i(psi[x][y], psi[x][y2])) return false;
            for (int s : m1.ground()->tangible_indices())
                if (psi[m1.act_i(s, x)][y] != psi[x][m2.act_i(s, y)]) return false;
            if (t.negated && psi[m1.neg_i(x)][y] != psi[x][m2.neg_i(y)]) return false;
        }
    return true;
}

std::optional<std::vector<int>> induced_map(const Tensor& t, const ModSys& n, const std::vector<std::vector<int>>& psi) {
    const int c = t.sys->size();
    std::vector<int> value(c, -1);
    for (std::size_t u = 0; u < t.class_of.size(); ++u) {
        int v = n.zero();
        for (std::size_t g = 0; g < t.gens.size(); ++g) {
            const int mult = static_cast<int>(u / t.stride[g] % t.bound[g]);
            for (int i = 0; i < mult; ++i) v = n.add_i(v, psi[t.gens[g].first][t.gens[g].second]);
        }
        int& slot = value[t.class_of[u]];
        if (slot < 0)
            slot = v;
        else if (slot != v)
            return std::nullopt;
    }
    return value;
}

MorphismTable tensor_of_homomorphisms(const Tensor& source, const Tensor& target, const MorphismTable& f1,
                                      const MorphismTable& f2) {
    if (f1.source != source.left || f2.source != source.right || f1.target != target.left || f2.target != target.right)
        throw InvalidInput("maps do not match the tensor factors");
    if (classify_morphism(f1).kind != MorphismKind::homomorphism ||
        classify_morphism(f2).kind != MorphismKind::homomorphism)
        throw NotHomomorphism("tensor of maps needs homomorphisms");
    std::vector<std::vector<int>> psi(source.left->size(), std::vector<int>(source.right->size()));
    for (int x = 0; x < source.left->size(); ++x)
        for (int y = 0; y < source.right->size(); ++y) psi[x][y] = target.simple[f1.map[x]][f2.map[y]];
    auto table = induced_map(source, *target.sys, psi);
    if (!table) throw IllDefined("f1 (x) f2 is not single-valued");
    return {source.sys, target.sys, *table};
}

NonfunctorialityWitness nonfunctoriality_witness(FinPtr ground) {
    if (!ground->one_index()) throw NoUnit("witness needs a unit");
    const int na = ground->size(), z = *ground->zero_index(), one = *ground->one_index();
    auto m = free_module(ground, 2);
    const int x1 = one + z * na, x2 = z + one * na, s = m->add_i(x1, x2);
    NonfunctorialityWitness w;
    w.f.source = m;
    w.f.target = m;
    for (int b = 0; b < m->size(); ++b) w.f.map.push_back(b % na != z && b / na != z ? m->zero() : b);
    w.tensor = tensor(m, m, true);
    w.first = {{x1, s}, {x2, x2}};
    w.second = {{x1, x1}, {s, x2}};
    w.element = w.tensor.class_of_sum(w.first);
    if (w.tensor.class_of_sum(w.second) != w.element) throw IllDefined("regroupings name different tensors");
    auto value = [&](const std::vector<IndexPair>& terms) {
        int v = w.tensor.sys->zero();
        for (auto [x, y] : terms) v = w.tensor.sys->add_i(v, w.tensor.simple[w.f.map[x]][w.f.map[y]]);
        return v;
    };
    w.value_first = value(w.first);
    w.value_second = value(w.second);
    return w;
}

TensorPower tensor_power(ModPtr v, int k) {
    if (k < 1 || k > 3) throw InvalidInput("tensor power needs 1 <= k <= 3");
    TensorPower out;
    out.powers.push_back(v);
    for (int i = 2; i <= k; ++i) out.powers.push_back(tensor(v, out.powers.back(), true).sys);
    out.truncated = direct_sum(out.powers);
    return out;
}

AdjointCheck adjoint_check(ModPtr m1, ModPtr m2, ModPtr m3) {
    AdjointCheck out;
    const Tensor t = tensor(m1, m2, true);
    const HomTriple lhs = hom_triple(t.sys, m3);
    const HomTriple inner = hom_triple(m2, m3);
    const HomTriple rhs = hom_triple(m1, inner.sys);
    out.lhs = lhs.maps.size();
    out.rhs = rhs.maps.size();
    std::set<int> hit;
    bool ok = out.lhs == out.rhs;
    for (const auto& phi : lhs.maps) {
        std::vector<int> curried(m1->size());
        for (int x = 0; x < m1->size() && ok; ++x) {
            std::vector<int> row(m2->size());
            for (int y = 0; y < m2->size(); ++y) row[y] = phi[t.simple[x][y]];
            auto idx = inner.find(row);
            if (!idx) ok = false;
            else curried[x] = *idx;
        }
        if (!ok) break;
        auto idx = rhs.find(curried);
        if (!idx || !hit.insert(*idx).second) ok = false;
    }
    out.bijection = ok && hit.size() == out.rhs;
    return out;
}

Report check_twisted_action(const ModSys& m) {
    Report r;
    r.checked = {"scalar", "additive", "sum", "twist-assoc"};
    const FinSys& a = *m.ground();
    std::vector<int> t0 = a.tangible_indices();
    if (a.zero_index()) t0.push_back(*a.zero_index());
    auto tw = [&](int a0, int a1, int x) { return m.add_i(m.act_i(a0, x), m.neg_i(m.act_i(a1, x))); };
    for (int a0 : t0)
        for (int a1 : t0)
            for (int x = 0; x < m.size(); ++x) {
                const int v = tw(a0, a1, x);
                for (int s : a.tangible_indices())
                    if (m.act_i(s, v) != tw(a.mul_i(s, a0), a.mul_i(s, a1), x)) r.fail("scalar", {sym(s), sym(a0), sym(a1), sym(x)});
                for (int y = 0; y < m.size(); ++y)
                    if (tw(a0, a1, m.add_i(x, y)) != m.add_i(v, tw(a0, a1, y))) r.fail("additive", {sym(a0), sym(a1), sym(x), sym(y)});
                for (int b0 : t0)
                    for (int b1 : t0) {
                        if (tw(a.add_i(a0, b0), a.add_i(a1, b1), x) != m.add_i(v, tw(b0, b1, x)))
                            r.fail("sum", {sym(a0), sym(a1), sym(b0), sym(b1), sym(x)});
                        const int p0 = a.add_i(a.mul_i(a0, b0), a.mul_i(a1, b1));
                        const int p1 = a.add_i(a.mul_i(a0, b1), a.mul_i(a1, b0));
                        if (tw(p0, p1, x) != tw(a0, a1, tw(b0, b1, x)))
                            r.fail("twist-assoc", {sym(a0), sym(a1), sym(b0), sym(b1), sym(x)});
                    }
            }
    return r;
}

// ---------------------------------------------------------------------------

std::vector<int> t_kernel(const MorphismTable& f) {
    check_map(f);
    std::vector<int> out;
    for (int a : f.source->tangible_indices())
        if (f.target->null_i(f.map[a])) out.push_back(a);
    return out;
}

bool is_null_morphism(const MorphismTable& f) { return t_kernel(f) == f.source->tangible_indices(); }

std::vector<int> t_image(const MorphismTable& f) {
    check_map(f);
    std::vector<int> gens;
    for (int a : f.source->tangible_indices()) gens.push_back(f.map[a]);
    return generated_submodule(*f.target, gens);
}

IndexVerdict null_monic(const MorphismTable& f) {
    check_map(f);
    const ModSys& m = *f.source;
    auto t0 = m.tangible_indices();
    t0.push_back(m.zero());
    for (int a0 : t0)
        for (int a1 : t0)
            if (f.map[a0] == f.map[a1] && !m.null_i(m.add_i(a0, m.neg_i(a1)))) return {false, {a0, a1}};
    return {};
}

bool null_onto(const MorphismTable& f) {
    const ModSys& n = *f.target;
    std::vector<bool> hit(n.size(), false);
    const auto nulls = null_set(n);
    for (int u : t_image(f))
        for (int z : nulls) hit[n.add_i(u, z)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Exactness exactness(const MorphismTable& g, const MorphismTable& f) {
    check_map(g);
    check_map(f);
    if (g.target->size() != f.source->size()) throw InvalidInput("chain maps do not compose");
    Exactness out;
    out.chain = true;
    std::set<int> image;
    for (int k = 0; k < g.source->size(); ++k) {
        image.insert(g.map[k]);
        out.chain &= f.target->null_i(f.map[g.map[k]]);
    }
    out.image.assign(image.begin(), image.end());
    for (int b = 0; b < f.source->size(); ++b)
        if (f.target->null_i(f.map[b])) out.preimage.push_back(b);
    out.exact = out.image == out.preimage;
    return out;
}

int ModCongruence::num_classes() const { return cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1; }

std::vector<IndexPair> ModCongruence::pairs() const {
    std::vector<IndexPair> out;
    for (int a = 0; a < static_cast<int>(cls.size()); ++a)
        for (int b = 0; b < static_cast<int>(cls.size()); ++b)
            if (cls[a] == cls[b]) out.push_back({a, b});
    return out;
}

ModCongruence generate_module_congruence(ModPtr m, const std::vector<IndexPair>& gens) {
    const int n = m->size(), na = m->ground()->size();
    UnionFind uf(n);
    std::deque<IndexPair> queue;
    auto merge = [&](int a, int b) {
        if (uf.unite(a, b)) queue.push_back({a, b});
    };
    for (auto [a, b] : gens) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidInput("congruence generator out of range");
        merge(a, b);
    }
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        merge(m->neg_i(a), m->neg_i(b));
        for (int c = 0; c < n; ++c) merge(m->add_i(a, c), m->add_i(b, c));
        for (int s = 0; s < na; ++s) merge(m->act_i(s, a), m->act_i(s, b));
    }
    return {m, first_occurrence_labels(uf, n)};
}

ModPtr module_quotient(const ModCongruence& c) {
    const ModSys& m = *c.sys;
    const int k = c.num_classes(), na = m.ground()->size();
    std::vector<std::vector<int>> members(k);
    for (int x = 0; x < m.size(); ++x) members[c.cls[x]].push_back(x);
    std::vector<std::string> names(k);
    std::vector<std::vector<int>> add(k, std::vector<int>(k)), act(na, std::vector<int>(k));
    std::vector<int> neg(k);
    for (int i = 0; i < k; ++i) {
        const int r = members[i].front();
        names[i] = members[i].size() == 1 ? m.name_of(r) : join_names(m, members[i], "[", "]");
        for (int j = 0; j < k; ++j) add[i][j] = c.cls[m.add_i(r, members[j].front())];
        for (int s = 0; s < na; ++s) act[s][i] = c.cls[m.act_i(s, r)];
        neg[i] = c.cls[m.neg_i(r)];
    }
    const int zero = c.cls[m.zero()];
    std::set<int> tang;
    for (int t : m.tangible_indices())
        if (c.cls[t] != zero) tang.insert(c.cls[t]);
    auto spec = additive_spec(names, std::move(add), zero, {tang.begin(), tang.end()}, std::move(neg));
    return std::make_shared<ModSys>(m.ground(), std::move(spec), std::move(act), m.name() + "/C");
}

ModCongruence congruence_kernel(const MorphismTable& f) {
    check_map(f);
    if (classify_morphism(f).kind != MorphismKind::homomorphism) return tangible_kernel(f);
    UnionFind uf(f.source->size());
    std::vector<int> first(f.target->size(), -1);
    for (int x = 0; x < f.source->size(); ++x) {
        int& r = first[f.map[x]];
        if (r < 0) r = x;
        else uf.unite(r, x);
    }
    return {f.source, first_occurrence_labels(uf, f.source->size())};
}

ModCongruence tangible_kernel(const MorphismTable& f) {
    check_map(f);
    auto t0 = f.source->tangible_indices();
    t0.push_back(f.source->zero());
    std::vector<IndexPair> gens;
    for (int a0 : t0)
        for (int a1 : t0)
            if (a0 != a1 && f.map[a0] == f.map[a1]) gens.push_back({a0, a1});
    return generate_module_congruence(f.source, gens);
}

ModCongruence congruence_image(const MorphismTable& f, const ModCongruence& c) {
    check_map(f);
    if (c.sys->size() != f.source->size()) throw InvalidInput("congruence lives on another carrier");
    if (classify_morphism(f).kind != MorphismKind::homomorphism)
        throw NotHomomorphism("congruence image is defined for homomorphisms only");
    std::vector<IndexPair> gens;
    for (auto [x0, x1] : c.pairs()) gens.push_back({f.map[x0], f.map[x1]});
    return generate_module_congruence(f.target, gens);
}

Factorization factor_through(const MorphismTable& f) {
    Factorization out;
    out.kernel = congruence_kernel(f);
    auto q = module_quotient(out.kernel);
    out.projection = {f.source, q, out.kernel.cls};
    std::vector<int> value(q->size(), -1);
    for (int x = 0; x < f.source->size(); ++x) {
        int& slot = value[out.kernel.cls[x]];
        if (slot < 0)
            slot = f.map[x];
        else if (slot != f.map[x])
            throw IllDefined("map is not constant on its kernel classes");
    }
    out.monic = {q, f.target, value};
    out.recomposes = true;
    for (int x = 0; x < f.source->size(); ++x) out.recomposes &= out.monic.map[out.projection.map[x]] == f.map[x];
    return out;
}

bool cokernel_is_null(const MorphismTable& f) {
    std::vector<IndexPair> gens;
    for (int u : t_image(f)) gens.push_back({u, f.target->zero()});
    auto q = module_quotient(generate_module_congruence(f.target, gens));
    for (int b = 0; b < q->size(); ++b)
        if (!q->null_i(b)) return false;
    return true;
}

}  // namespace tsys
