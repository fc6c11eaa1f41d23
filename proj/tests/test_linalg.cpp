#include "doctest.h"

#include "tsys/linalg.hpp"
#include "tsys/symmetrization.hpp"

#include <functional>

using namespace tsys;

namespace {

Elem T(long v) { return Elem::tangible(Rational(v)); }
Elem G(long v) { return Elem::ghost(Rational(v)); }
Elem S(int i) { return Elem::symbol(i); }
Elem P(const Elem& a, const Elem& b) { return Elem::pair(a, b); }

// Second implementation: recursive selection of columns, sign tracked by the
// parity of columns skipped so far.
Elem det_oracle(const System& sys, const std::vector<std::vector<Elem>>& a) {
    const std::size_t n = a.size();
    Elem total = sys.zero();
    std::vector<bool> used(n, false);
    std::function<void(std::size_t, Elem, bool)> go = [&](std::size_t row, Elem acc, bool odd) {
        if (row == n) {
            total = sys.add(total, odd ? sys.negate(acc) : acc);
            return;
        }
        std::size_t skipped = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c]) continue;
            used[c] = true;
            go(row + 1, row == 0 ? a[row][c] : sys.mul(acc, a[row][c]), odd != (skipped % 2 == 1));
            used[c] = false;
            ++skipped;
        }
    };
    go(0, Elem(), false);
    return total;
}

std::vector<std::vector<Elem>> random_matrix(const System& sys, Rng& rng, std::size_t n) {
    std::vector<std::vector<Elem>> m(n);
    for (auto& row : m) row = sys.sample(rng, n);
    return m;
}

// All tuples of length n over the carrier.
void for_tuples(const std::vector<Elem>& all, std::size_t n, const std::function<void(const std::vector<Elem>&)>& f) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<Elem> t;
        for (auto i : idx) t.push_back(all[i]);
        f(t);
        std::size_t k = 0;
        while (k < n && ++idx[k] == all.size()) idx[k++] = 0;
        if (k == n) return;
    }
}

}  // namespace

TEST_CASE("determinant examples") {
    auto st = make_supertropical();
    CHECK(neg_det(*st, Matrix({{T(7)}})) == T(7));
    Matrix a({{T(1), T(2)}, {T(3), T(4)}});
    CHECK(neg_det(*st, a) == G(5));
    CHECK(det_oracle(*st, a.rows) == G(5));
    auto sm = symmetrize(make_maxplus());
    auto z = Elem::zero();
    Matrix b({{P(T(1), z), P(T(2), z)}, {P(T(3), z), P(T(4), z)}});
    CHECK(neg_det(*sm, b) == P(T(5), T(5)));
    std::vector<std::vector<Elem>> big(9, std::vector<Elem>(9, T(0)));
    CHECK_THROWS_AS(neg_det(*st, Matrix(big)), DimensionTooLarge);
    CHECK_THROWS_AS(Matrix({{T(0), T(1)}}), InvalidInput);
}

TEST_CASE("determinant agrees with the recursive oracle") {
    Rng rng(13);
    for (SysPtr sys : {make_supertropical(), SysPtr(symmetrize(make_supertropical())), SysPtr(make_supertropical_chain())}) {
        INFO(sys->name());
        for (std::size_t n = 1; n <= 5; ++n)
            for (int trial = 0; trial < 20; ++trial) {
                auto m = random_matrix(*sys, rng, n);
                CHECK(neg_det(*sys, Matrix(m)) == det_oracle(*sys, m));
            }
    }
}

TEST_CASE("adjoint") {
    auto st = make_supertropical();
    Matrix a({{T(1), T(2)}, {T(3), T(4)}});
    CHECK(neg_adjoint(*st, a) == Matrix({{T(4), T(2)}, {T(3), T(1)}}));
    auto sm = symmetrize(make_maxplus());
    auto z = Elem::zero();
    auto e = [&](long v) { return P(T(v), z); };
    Matrix b({{e(1), e(2)}, {e(3), e(4)}});
    // [[d, (-)b], [(-)c, a]].
    CHECK(neg_adjoint(*sm, b) == Matrix({{e(4), P(z, T(2))}, {P(z, T(3)), e(1)}}));
    auto c = make_supertropical_chain();
    Matrix id({{S(1), S(0), S(0)}, {S(0), S(1), S(0)}, {S(0), S(0), S(1)}});
    CHECK(neg_adjoint(*c, id) == id);
    CHECK(neg_adjoint(*st, Matrix({{T(1), T(2)}, {T(3), T(4)}})).at(0, 1) == raw_minors(*st, a).at(1, 0));
}

TEST_CASE("Vandermonde identity") {
    auto st = make_supertropical();
    CHECK(vandermonde_identity_check(*st, {T(4)}));
    CHECK(vandermonde_product(*st, {T(4)}) == T(0));
    CHECK(neg_det(*st, vandermonde(*st, {T(1), T(3)})) == T(3));
    CHECK(vandermonde_product(*st, {T(1), T(3)}) == T(3));
    CHECK(neg_det(*st, vandermonde(*st, {T(2), T(2)})) == G(2));
    CHECK(vandermonde_product(*st, {T(2), T(2)}) == G(2));

    for (SysPtr sys : {SysPtr(make_boolean()), SysPtr(symmetrize(make_boolean()))}) {
        INFO(sys->name());
        for (std::size_t n = 1; n <= 3; ++n)
            for_tuples(*sys->elements(), n, [&](const std::vector<Elem>& t) { CHECK(vandermonde_identity_check(*sys, t)); });
    }
    Rng rng(31);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 200; ++trial) CHECK(vandermonde_identity_check(*st, st->sample(rng, n)));
}

TEST_CASE("Vandermonde orientation") {
    // With (a_j (-) a_i) for i > j in place of (a_i (-) a_j) the identity fails on
    // the symmetrized Boolean, where (-) is not the identity.
    auto sb = symmetrize(make_boolean());
    int mismatches = 0;
    for_tuples(*sb->elements(), 2, [&](const std::vector<Elem>& t) {
        Elem flipped = sb->add(t[0], sb->negate(t[1]));
        if (neg_det(*sb, vandermonde(*sb, t)) != flipped) ++mismatches;
    });
    CHECK(mismatches > 0);
}

TEST_CASE("Laplace expansion") {
    auto b = make_boolean();
    for_tuples(*b->elements(), 4, [&](const std::vector<Elem>& t) {
        Matrix m({{t[0], t[1]}, {t[2], t[3]}});
        CHECK(laplace_expansion_check(*b, m, 0));
        CHECK(laplace_expansion_check(*b, m, 1));
    });
    auto st = make_supertropical();
    CHECK(laplace_expansion_check(*st, Matrix({{T(3)}}), 0));
    Rng rng(6);
    for (SysPtr sys : {st, SysPtr(symmetrize(make_boolean())), SysPtr(symmetrize(make_supertropical()))}) {
        for (int trial = 0; trial < 30; ++trial) {
            Matrix m(random_matrix(*sys, rng, 3));
            for (std::size_t i = 0; i < 3; ++i) CHECK(laplace_expansion_check(*sys, m, i));
        }
    }
}

TEST_CASE("symmetrized determinant reconstructs the supertropical one") {
    auto st = make_supertropical();
    auto ss = symmetrize(st);
    Rng rng(12);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 40; ++trial) {
            auto m = random_matrix(*st, rng, n);
            std::vector<std::vector<Elem>> e(n);
            for (std::size_t i = 0; i < n; ++i)
                for (const auto& x : m[i]) e[i].push_back(embed(*st, x));
            Elem d = neg_det(*ss, Matrix(e));
            CHECK(st->add(d.pos(), d.neg()) == neg_det(*st, Matrix(m)));
        }
}
