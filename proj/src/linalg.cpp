#include "tsys/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace tsys {

Matrix::Matrix(std::vector<std::vector<Elem>> r) : rows(std::move(r)) {
    if (rows.empty()) throw InvalidInput("matrix must have at least one row");
    for (const auto& row : rows)
        if (row.size() != rows.size()) throw InvalidInput("matrix must be square");
}

namespace {

void require_total(const System& sys) {
    if (sys.kind() != Kind::semiring) throw ActionOnly(sys.name() + ": determinants need a total multiplication");
}

Elem unit(const System& sys) {
    auto u = sys.one();
    if (!u) throw NoUnit(sys.name() + " has no unit");
    return *u;
}

void check_entries(const System& sys, const Matrix& a) {
    for (const auto& row : a.rows)
        for (const auto& e : row) sys.require(e);
}

}  // namespace

Elem neg_det(const System& sys, const Matrix& a) {
    const std::size_t n = a.n();
    if (n > kMaxDetDim) throw DimensionTooLarge("dimension " + std::to_string(n) + " exceeds " + std::to_string(kMaxDetDim));
    require_total(sys);
    check_entries(sys, a);
    std::vector<std::size_t> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    Elem total = sys.zero();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (pi[i] > pi[j]) ++inversions;
        Elem term = a.at(0, pi[0]);
        for (std::size_t i = 1; i < n; ++i) term = sys.mul(term, a.at(i, pi[i]));
        if (inversions % 2) term = sys.negate(term);
        total = sys.add(total, term);
    } while (std::next_permutation(pi.begin(), pi.end()));
    return total;
}

Matrix minor_matrix(const Matrix& a, std::size_t i, std::size_t j) {
    if (a.n() < 2) throw InvalidInput("minor of a 1x1 matrix");
    Matrix m;
    for (std::size_t r = 0; r < a.n(); ++r) {
        if (r == i) continue;
        std::vector<Elem> row;
        for (std::size_t c = 0; c < a.n(); ++c)
            if (c != j) row.push_back(a.at(r, c));
        m.rows.push_back(std::move(row));
    }
    return m;
}

Matrix raw_minors(const System& sys, const Matrix& a) {
    if (a.n() > kMaxDetDim) throw DimensionTooLarge("dimension " + std::to_string(a.n()) + " exceeds " + std::to_string(kMaxDetDim));
    Matrix m;
    for (std::size_t i = 0; i < a.n(); ++i) {
        std::vector<Elem> row;
        for (std::size_t j = 0; j < a.n(); ++j) row.push_back(neg_det(sys, minor_matrix(a, i, j)));
        m.rows.push_back(std::move(row));
    }
    return m;
}

Matrix neg_adjoint(const System& sys, const Matrix& a) {
    if (a.n() < 2) throw InvalidInput("adjoint needs n >= 2");
    Matrix raw = raw_minors(sys, a);
    Matrix adj = raw;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) {
            Elem v = raw.at(j, i);
            adj.rows[i][j] = (i + j) % 2 ? sys.negate(v) : v;
        }
    return adj;
}

Matrix vandermonde(const System& sys, const std::vector<Elem>& a) {
    if (a.empty()) throw InvalidInput("vandermonde needs at least one argument");
    require_total(sys);
    const Elem u = unit(sys);
    Matrix v;
    for (const auto& x : a) {
        sys.require(x);
        std::vector<Elem> row{u};
        for (std::size_t j = 1; j < a.size(); ++j) row.push_back(sys.mul(row.back(), x));
        v.rows.push_back(std::move(row));
    }
    return v;
}

Elem vandermonde_product(const System& sys, const std::vector<Elem>& a) {
    Elem p = unit(sys);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) p = sys.mul(p, sys.add(a[i], sys.negate(a[j])));
    return p;
}

bool vandermonde_identity_check(const System& sys, const std::vector<Elem>& a) {
    return neg_det(sys, vandermonde(sys, a)) == vandermonde_product(sys, a);
}

bool laplace_expansion_check(const System& sys, const Matrix& a, std::size_t row) {
    if (row >= a.n()) throw InvalidInput("row index out of range");
    if (a.n() == 1) return neg_det(sys, a) == a.at(0, 0);
    Matrix adj = neg_adjoint(sys, a);
    Elem sum = sys.zero();
    for (std::size_t j = 0; j < a.n(); ++j) sum = sys.add(sum, sys.mul(a.at(row, j), adj.at(j, row)));
    return sum == neg_det(sys, a);
}

}  // namespace tsys
