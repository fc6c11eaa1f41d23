#include "doctest.h"

#include "tsys/hyperfields.hpp"

#include <set>

using namespace tsys;

namespace {

using Set = std::set<int>;

// Independent closure: sets as std::set<int>, hypersum via the table.
struct Oracle {
    std::vector<std::vector<Set>> add;
    std::vector<std::vector<int>> mul;

    Set sum(const Set& x, const Set& y) const {
        Set out;
        for (int a : x)
            for (int b : y) out.insert(add[a][b].begin(), add[a][b].end());
        return out;
    }
    Set prod(const Set& x, const Set& y) const {
        Set out;
        for (int a : x)
            for (int b : y) out.insert(mul[a][b]);
        return out;
    }
    std::set<Set> closure(int n) const {
        std::set<Set> all;
        for (int a = 0; a < n; ++a) all.insert({a});
        for (bool grew = true; grew;) {
            grew = false;
            auto snap = all;
            for (const auto& x : snap)
                for (const auto& y : snap) {
                    grew |= all.insert(sum(x, y)).second;
                    grew |= all.insert(prod(x, y)).second;
                }
        }
        return all;
    }
};

Set to_set(ElemSet m) {
    Set s;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) s.insert(i);
    return s;
}

Oracle oracle_of(const Hyperfield& h) {
    Oracle o;
    o.mul = h.mul;
    o.add.assign(h.size(), std::vector<Set>(h.size()));
    for (int a = 0; a < h.size(); ++a)
        for (int b = 0; b < h.size(); ++b) o.add[a][b] = to_set(h.hyperadd[a][b]);
    return o;
}

void check_against_oracle(const Hyperfield& h, const SofH& s) {
    auto o = oracle_of(h);
    auto expect = o.closure(h.size());
    std::set<Set> got;
    for (auto m : s.sets) got.insert(to_set(m));
    CHECK(got == expect);
    const auto& sys = *s.sys;
    for (int i = 0; i < sys.size(); ++i)
        for (int j = 0; j < sys.size(); ++j) {
            CHECK(to_set(s.sets[sys.add_i(i, j)]) == o.sum(to_set(s.sets[i]), to_set(s.sets[j])));
            CHECK(to_set(s.sets[sys.mul_i(i, j)]) == o.prod(to_set(s.sets[i]), to_set(s.sets[j])));
        }
}

Elem T(long v) { return Elem::tangible(Rational(v)); }

}  // namespace

TEST_CASE("built-in hyperfields") {
    auto k = make_krasner();
    CHECK(k.show(k.hyperadd[1][1]) == "{0,1}");
    auto s = make_signs();
    CHECK(s.show(s.hyperadd[1][2]) == "{0,1,-1}");
    CHECK(check_hyperfield(k).ok());
    CHECK(check_hyperfield(s).ok());
    TropicalHyperfield th;
    CHECK(th.hyperadd(Rational(3), Rational(3)) == Elem::interval(Rational(3)));
    CHECK(th.hyperadd(Rational(3), Rational(1)) == T(3));
    CHECK(th.hyperadd(std::nullopt, Rational(1)) == T(1));
    CHECK(th.hyperadd(std::nullopt, std::nullopt) == Elem::zero());
    // Unique hypernegation in T: -inf is in a (+) b iff b = a.
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            CHECK(trop_member(std::nullopt, th.hyperadd(Rational(a), Rational(b))) == (a == b));

    Hyperfield broken = k;
    broken.hyperadd[1][1] = 2;  // {1}: no negative for 1
    CHECK_FALSE(check_hyperfield(broken).passed("unique-negation"));
}

TEST_CASE("S(Krasner)") {
    auto k = make_krasner();
    auto s = build_S_of_H(k);
    CHECK(s.sys->size() == 3);
    check_against_oracle(k, s);
    int one = *s.sys->find("{1}");
    CHECK(s.sys->name_of(s.sys->add_i(one, one)) == "{0,1}");
    CHECK(check_unique_negation(*s.sys).holds);
    CHECK(check_surpassing_axioms(*s.sys).ok());
    CHECK(check_structure(*s.sys).ok());
    // Inclusion coincides with the derived relation here.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(s.sys->surpass_i(i, j) == circ_surpass_search(*s.sys, Elem::symbol(i), Elem::symbol(j)));
    // Same shape as the supertropical chain {0, 1, e}.
    auto c = make_supertropical_chain();
    std::vector<int> iso{*s.sys->find("{0}"), *s.sys->find("{1}"), *s.sys->find("{0,1}")};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(iso[c->add_i(i, j)] == s.sys->add_i(iso[i], iso[j]));
            CHECK(iso[c->mul_i(i, j)] == s.sys->mul_i(iso[i], iso[j]));
        }
}

TEST_CASE("S(Signs)") {
    auto h = make_signs();
    auto s = build_S_of_H(h);
    // {0}, {1}, {-1}, {0,1,-1}.
    CHECK(s.sys->size() == 4);
    check_against_oracle(h, s);
    CHECK(s.sys->find("{0,1,-1}"));
    CHECK(check_unique_negation(*s.sys).holds);
    CHECK(check_surpassing_axioms(*s.sys).ok());
    CHECK(check_structure(*s.sys).ok());
    CHECK(characteristic_subtriple(*s.sys).tag == "sign-like");
}

TEST_CASE("S(tropical) and the supertropical semiring") {
    auto sT = make_S_of_tropical();
    auto st = make_supertropical();
    Rng rng(17);
    auto xs = st->sample(rng, 300), ys = st->sample(rng, 300);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto &x = xs[i], &y = ys[i];
        auto fx = supertropical_to_S(x), fy = supertropical_to_S(y);
        CHECK(S_to_supertropical(fx) == x);
        CHECK(supertropical_to_S(st->add(x, y)) == sT->add(fx, fy));
        CHECK(supertropical_to_S(st->mul(x, y)) == sT->mul(fx, fy));
        CHECK(supertropical_to_S(st->negate(x)) == sT->negate(fx));
        CHECK(st->tangible(x) == sT->tangible(fx));
        CHECK(st->surpass(x, y) == sT->surpass(fx, fy));
    }
    // Set-level oracle: v in X (+) Y iff v in x (+) y for members x, y, over a grid
    // in quarters; all test values are grid points.
    std::vector<TropVal> grid{std::nullopt};
    for (long k = -20; k <= 20; ++k) grid.push_back(Rational(k, 4));
    std::vector<Elem> elems{Elem::zero()};
    for (long k = -8; k <= 8; ++k) {
        elems.push_back(Elem::tangible(Rational(k, 4)));
        elems.push_back(Elem::interval(Rational(k, 4)));
    }
    TropicalHyperfield th;
    Rng r2(3);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int trial = 0; trial < 150; ++trial) {
        const Elem& X = elems[pick(r2)];
        const Elem& Y = elems[pick(r2)];
        Elem sum = sT->add(X, Y);
        for (const auto& v : grid) {
            bool in = false;
            for (const auto& x : grid) {
                if (!trop_member(x, X)) continue;
                for (const auto& y : grid)
                    if (trop_member(y, Y) && trop_member(v, th.hyperadd(x, y))) in = true;
            }
            CHECK(in == trop_member(v, sum));
        }
    }
    CHECK(check_surpassing_axioms(*sT, {Elem::zero(), T(0), T(1), Elem::interval(Rational(0)), Elem::interval(Rational(1))}).ok());
}

TEST_CASE("functors t, e, a, c") {
    auto b = make_boolean();
    auto p = functor_t(*b);
    CHECK(p.monoid == std::vector<int>{1});
    auto e = functor_e(p);
    for (int i = 0; i < e->size(); ++i) CHECK(e->neg_i(i) == i);
    CHECK(e->tangible_indices() == std::vector<int>{1});

    FinSpec z4;
    z4.names = {"0", "1", "2", "3"};
    z4.add.assign(4, std::vector<int>(4));
    z4.mul.assign(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            z4.add[i][j] = (i + j) % 4;
            z4.mul[i][j] = (i * j) % 4;
        }
    z4.zero = 0;
    z4.one = 1;
    z4.tangibles = {1, 3};
    z4.neg = {0, 3, 2, 1};
    CHECK_THROWS_AS(functor_t(FinSys(z4)), ZeroDivisor);

    auto k = make_krasner();
    auto a = functor_a(k), c = functor_c(k);
    CHECK(a.sets == c.sets);
    CHECK(a.sys->spec().add == c.sys->spec().add);
    CHECK(a.sys->spec().mul == c.sys->spec().mul);

    // |.| : Signs -> Krasner.
    auto sg = make_signs();
    std::vector<int> absval{0, 1, 1};
    REQUIRE(is_hyperfield_homomorphism(sg, k, absval));
    auto s1 = functor_a(sg);
    // {1} + {1} = {1} in Signs while 1 (+) 1 = {0,1} in Krasner.
    CHECK_THROWS_AS(functor_a_map(sg, s1, k, a, absval), IllDefined);
    auto img = image_set_map(sg, s1, a, absval);
    REQUIRE(img);
    const auto& A = *s1.sys;
    const auto& B = *a.sys;
    const auto& map = *img;
    for (int i = 0; i < A.size(); ++i) {
        CHECK(map[A.neg_i(i)] == B.neg_i(map[i]));
        for (int j = 0; j < A.size(); ++j) {
            CHECK(B.surpass_i(map[A.add_i(i, j)], B.add_i(map[i], map[j])));
            CHECK(map[A.mul_i(i, j)] == B.mul_i(map[i], map[j]));
        }
    }
    CHECK(B.name_of(map[*A.find("{0,1,-1}")]) == "{0,1}");
    // The identity is well defined.
    auto id = functor_a_map(sg, s1, sg, s1, {0, 1, 2});
    for (int i = 0; i < A.size(); ++i) CHECK(id[i] == i);
    CHECK_FALSE(is_hyperfield_homomorphism(sg, k, {0, 1, 0}));
    CHECK_THROWS_AS(functor_a_map(sg, s1, k, a, {0, 1, 0}), NotHomomorphism);
}

TEST_CASE("valuations") {
    auto mp = make_maxplus();
    Rng rng(8);
    auto dom = mp->sample(rng, 60);
    dom.push_back(Elem::zero());
    auto ident = [](const Elem& e) -> TropVal {
        if (e.is_zero()) return std::nullopt;
        return e.value();
    };
    CHECK(check_valuation(*mp, dom, ident).ok);
    auto r = check_valuation(*mp, dom, [](const Elem&) -> TropVal { return std::nullopt; });
    CHECK_FALSE(r.ok);
    bool nonconst = false;
    for (const auto& v : r.violations) nonconst |= v.rfind("nonconstant", 0) == 0;
    CHECK(nonconst);
    auto b = make_boolean();
    auto triv = [](const Elem& e) -> TropVal {
        if (e.index() == 0) return std::nullopt;
        return Rational(0);
    };
    CHECK(check_valuation(*b, *b->elements(), triv).ok);
    // A shift by 1 is not multiplicative.
    auto shift = [](const Elem& e) -> TropVal {
        if (e.is_zero()) return std::nullopt;
        return e.value() + Rational(1);
    };
    auto bad = check_valuation(*mp, dom, shift);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violations.front().rfind("multiplicative", 0) == 0);
}
