#include "tsys/system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tsys {

Rational sample_rational(Rng& rng, const SampleConfig& cfg) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (coin(rng) < cfg.pool_rate) {
        std::uniform_int_distribution<long> p(-cfg.pool, cfg.pool);
        return Rational(p(rng));
    }
    std::uniform_int_distribution<long> q(1, cfg.max_den);
    long den = q(rng);
    std::uniform_int_distribution<long> p(-cfg.max_abs * den, cfg.max_abs * den);
    return Rational(p(rng), den);
}

// ---------------------------------------------------------------------------

bool System::surpass(const Elem& a, const Elem& b) const { return circ_surpass_search(*this, a, b); }

bool System::is_quasi_zero(const Elem& a) const {
    const auto* all = elements();
    if (!all) throw Unsupported(name() + ": quasi-zero membership needs a closed form");
    for (const auto& c : *all)
        if (quasi_zero(c) == a) return true;
    return false;
}

std::vector<Elem> System::sample(Rng& rng, std::size_t n) const {
    const auto* all = elements();
    if (!all) throw Unsupported(name() + ": no sampler");
    std::uniform_int_distribution<std::size_t> pick(0, all->size() - 1);
    std::vector<Elem> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back((*all)[pick(rng)]);
    return out;
}

std::vector<Elem> System::summand_candidates(const Elem&) const {
    const auto* all = elements();
    if (!all) throw Unsupported(name() + ": no summand candidates");
    return *all;
}

std::vector<Elem> System::height_candidates(const Elem&) const {
    const auto* all = elements();
    if (!all) throw Unsupported(name() + ": no height candidates");
    std::vector<Elem> out;
    for (const auto& e : *all)
        if (tangible(e)) out.push_back(e);
    return out;
}

std::optional<Elem> System::inverse(const Elem& a) const {
    const auto* all = elements();
    auto u = one();
    if (!all || !u) return std::nullopt;
    for (const auto& b : *all)
        if (mul(a, b) == *u && mul(b, a) == *u) return b;
    return std::nullopt;
}

std::string System::show(const Elem& a) const { return a.debug(); }

void System::require(const Elem& e) const {
    if (!contains(e)) throw InvalidElement(name() + ": element " + e.debug() + " is not in the carrier");
}

bool circ_surpass_search(const System& sys, const Elem& a, const Elem& b) {
    for (const auto& d : sys.summand_candidates(b))
        if (sys.is_quasi_zero(d) && sys.add(a, d) == b) return true;
    return false;
}

// ---------------------------------------------------------------------------

FinSys::FinSys(FinSpec spec, std::string name) : spec_(std::move(spec)), name_(std::move(name)) {
    const int n = static_cast<int>(spec_.names.size());
    if (n == 0) throw InvalidInput("finite system needs at least one element");
    auto in_range = [n](int i) { return i >= 0 && i < n; };
    auto square = [n](const std::vector<std::vector<int>>& t) {
        if (static_cast<int>(t.size()) != n) return false;
        for (const auto& row : t)
            if (static_cast<int>(row.size()) != n) return false;
        return true;
    };
    {
        std::set<std::string> seen(spec_.names.begin(), spec_.names.end());
        if (static_cast<int>(seen.size()) != n) throw InvalidInput("duplicate element names");
    }
    if (!square(spec_.add)) throw InvalidInput("add table must be " + std::to_string(n) + "x" + std::to_string(n));
    for (const auto& row : spec_.add)
        for (int v : row)
            if (!in_range(v)) throw InvalidInput("add table entry out of range");
    if (spec_.mul.empty() && spec_.kind == Kind::module) {
        spec_.mul.assign(n, std::vector<int>(n, -1));
    }
    if (!square(spec_.mul)) throw InvalidInput("mul table must be " + std::to_string(n) + "x" + std::to_string(n));
    for (const auto& row : spec_.mul)
        for (int v : row)
            if (!in_range(v) && !(spec_.kind == Kind::module && v == -1))
                throw InvalidInput("mul table entry out of range");
    if (spec_.zero && !in_range(*spec_.zero)) throw InvalidInput("zero out of range");
    if (spec_.one && !in_range(*spec_.one)) throw InvalidInput("one out of range");
    if (static_cast<int>(spec_.neg.size()) != n) throw InvalidInput("neg table must have " + std::to_string(n) + " entries");
    for (int v : spec_.neg)
        if (!in_range(v)) throw InvalidInput("neg table entry out of range");
    tangible_flags_.assign(n, false);
    for (int t : spec_.tangibles) {
        if (!in_range(t)) throw InvalidInput("tangible index out of range");
        tangible_flags_[t] = true;
    }
    if (spec_.surpass)
        for (auto [a, b] : *spec_.surpass)
            if (!in_range(a) || !in_range(b)) throw InvalidInput("surpass pair out of range");

    for (int i = 0; i < n; ++i) elems_.push_back(Elem::symbol(i));

    quasi_zero_flags_.assign(n, false);
    for (int c = 0; c < n; ++c) quasi_zero_flags_[add_i(c, neg_i(c))] = true;

    surpass_.assign(static_cast<std::size_t>(n) * n, false);
    if (spec_.surpass) {
        for (int i = 0; i < n; ++i) surpass_[i * n + i] = true;
        for (auto [a, b] : *spec_.surpass) surpass_[a * n + b] = true;
    } else {
        for (int a = 0; a < n; ++a)
            for (int d = 0; d < n; ++d)
                if (quasi_zero_flags_[d]) surpass_[a * n + add_i(a, d)] = true;
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (spec_.mul[a][b] != spec_.mul[b][a]) commutative_ = false;

    bool disjoint = true;
    for (int t = 0; t < n; ++t)
        if (tangible_flags_[t] && quasi_zero_flags_[t]) disjoint = false;
    std::vector<bool> reach(n, false);
    std::vector<int> frontier;
    for (int t = 0; t < n; ++t)
        if (tangible_flags_[t]) { reach[t] = true; frontier.push_back(t); }
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int t = 0; t < n; ++t)
            if (tangible_flags_[t] && !reach[add_i(x, t)]) {
                reach[add_i(x, t)] = true;
                frontier.push_back(add_i(x, t));
            }
    }
    bool generated = true;
    for (int x = 0; x < n; ++x)
        if (!reach[x] && !(spec_.zero && x == *spec_.zero)) generated = false;
    triple_ = disjoint && generated;
}

Elem FinSys::zero() const {
    if (!spec_.zero) throw InvalidInput(name_ + ": carrier has no zero");
    return Elem::symbol(*spec_.zero);
}

std::optional<Elem> FinSys::one() const {
    if (!spec_.one) return std::nullopt;
    return Elem::symbol(*spec_.one);
}

bool FinSys::contains(const Elem& e) const {
    return e.tag() == Tag::symbol && e.index() >= 0 && e.index() < size();
}

Elem FinSys::add(const Elem& a, const Elem& b) const {
    require(a);
    require(b);
    return Elem::symbol(add_i(a.index(), b.index()));
}

bool FinSys::mul_defined(int a, int b) const { return spec_.mul[a][b] >= 0; }

int FinSys::mul_i(int a, int b) const {
    int r = spec_.mul[a][b];
    if (r < 0) throw ActionOnly(name_ + ": product " + name_of(a) + "*" + name_of(b) + " is not defined");
    return r;
}

Elem FinSys::mul(const Elem& a, const Elem& b) const {
    require(a);
    require(b);
    return Elem::symbol(mul_i(a.index(), b.index()));
}

Elem FinSys::negate(const Elem& a) const {
    require(a);
    return Elem::symbol(neg_i(a.index()));
}

bool FinSys::tangible(const Elem& a) const {
    require(a);
    return tangible_i(a.index());
}

bool FinSys::surpass(const Elem& a, const Elem& b) const {
    require(a);
    require(b);
    return surpass_i(a.index(), b.index());
}

bool FinSys::is_quasi_zero(const Elem& a) const {
    require(a);
    return quasi_zero_i(a.index());
}

std::vector<Elem> FinSys::height_candidates(const Elem&) const {
    std::vector<Elem> out;
    for (int t : tangible_indices()) out.push_back(Elem::symbol(t));
    return out;
}

std::optional<Elem> FinSys::inverse(const Elem& a) const {
    require(a);
    if (!spec_.one) return std::nullopt;
    for (int b = 0; b < size(); ++b)
        if (mul_defined(a.index(), b) && mul_defined(b, a.index()) && mul_i(a.index(), b) == *spec_.one &&
            mul_i(b, a.index()) == *spec_.one)
            return Elem::symbol(b);
    return std::nullopt;
}

std::string FinSys::show(const Elem& a) const {
    require(a);
    return name_of(a.index());
}

std::optional<int> FinSys::find(const std::string& nm) const {
    for (int i = 0; i < size(); ++i)
        if (spec_.names[i] == nm) return i;
    return std::nullopt;
}

std::vector<int> FinSys::tangible_indices() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (tangible_flags_[i]) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------

FinPtr materialize(const System& sys, const std::vector<Elem>& members, const std::string& name) {
    std::map<Elem, int> index;
    for (const auto& m : members) {
        if (index.count(m)) throw InvalidInput("materialize: duplicate member " + sys.show(m));
        int k = static_cast<int>(index.size());
        index[m] = k;
    }
    auto idx = [&](const Elem& e) {
        auto it = index.find(e);
        if (it == index.end()) throw InvalidInput("materialize: member set not closed at " + sys.show(e));
        return it->second;
    };
    const int n = static_cast<int>(members.size());
    FinSpec s;
    s.kind = sys.kind();
    s.add.assign(n, std::vector<int>(n, 0));
    s.mul.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) {
        s.names.push_back(sys.show(members[i]));
        s.neg.push_back(idx(sys.negate(members[i])));
        if (sys.tangible(members[i])) s.tangibles.push_back(i);
        for (int j = 0; j < n; ++j) {
            s.add[i][j] = idx(sys.add(members[i], members[j]));
            try {
                s.mul[i][j] = idx(sys.mul(members[i], members[j]));
            } catch (const ActionOnly&) {
                if (sys.kind() == Kind::semiring) throw;
            }
        }
    }
    if (sys.has_zero() && index.count(sys.zero())) s.zero = index[sys.zero()];
    if (auto u = sys.one(); u && index.count(*u)) s.one = index[*u];
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && sys.surpass(members[i], members[j])) rel.emplace_back(i, j);
    s.surpass = rel;
    auto explicit_sys = std::make_shared<FinSys>(s, name);
    // Keep the derived tag when the relation coincides with the derived one.
    FinSpec derived = s;
    derived.surpass.reset();
    auto derived_sys = std::make_shared<FinSys>(derived, name);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (derived_sys->surpass_i(i, j) != explicit_sys->surpass_i(i, j)) return explicit_sys;
    return derived_sys;
}

FinPtr materialize(const System& sys) {
    const auto* all = sys.elements();
    if (!all) throw Unsupported(sys.name() + ": cannot materialize an infinite carrier");
    return materialize(sys, *all, sys.name());
}

FinPtr product_system(const FinSys& a, const FinSys& b) {
    const int na = a.size(), nb = b.size(), n = na * nb;
    auto code = [nb](int i, int j) { return i * nb + j; };
    FinSpec s;
    s.kind = (a.kind() == Kind::semiring && b.kind() == Kind::semiring) ? Kind::semiring : Kind::module;
    s.add.assign(n, std::vector<int>(n, 0));
    s.mul.assign(n, std::vector<int>(n, -1));
    s.neg.assign(n, 0);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            int x = code(i, j);
            s.names.push_back("(" + a.name_of(i) + "," + b.name_of(j) + ")");
            s.neg[x] = code(a.neg_i(i), b.neg_i(j));
            bool ta = a.tangible_i(i) || a.zero_index() == i;
            bool tb = b.tangible_i(j) || b.zero_index() == j;
            bool both_zero = a.zero_index() == i && b.zero_index() == j;
            if (ta && tb && !both_zero) s.tangibles.push_back(x);
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l) {
                    int y = code(k, l);
                    s.add[x][y] = code(a.add_i(i, k), b.add_i(j, l));
                    if (a.mul_defined(i, k) && b.mul_defined(j, l)) s.mul[x][y] = code(a.mul_i(i, k), b.mul_i(j, l));
                }
        }
    if (a.zero_index() && b.zero_index()) s.zero = code(*a.zero_index(), *b.zero_index());
    if (a.one_index() && b.one_index()) s.one = code(*a.one_index(), *b.one_index());
    if (a.explicit_surpass() || b.explicit_surpass()) {
        std::vector<std::pair<int, int>> rel;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && a.surpass_i(x / nb, y / nb) && b.surpass_i(x % nb, y % nb)) rel.emplace_back(x, y);
        s.surpass = rel;
    }
    return std::make_shared<FinSys>(s, a.name() + "x" + b.name());
}

}  // namespace tsys
