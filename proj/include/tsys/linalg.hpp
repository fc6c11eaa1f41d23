#pragma once

// Square matrices over a carrier with negation: (-)-determinant as a signed
// permutation sum, (-)-adjoint, Vandermonde matrices.

#include "tsys/system.hpp"

namespace tsys {

struct Matrix {
    std::vector<std::vector<Elem>> rows;

    Matrix() = default;
    explicit Matrix(std::vector<std::vector<Elem>> r);
    std::size_t n() const { return rows.size(); }
    const Elem& at(std::size_t i, std::size_t j) const { return rows[i][j]; }
    bool operator==(const Matrix& o) const { return rows == o.rows; }
};

constexpr std::size_t kMaxDetDim = 8;

// sum over pi of (-)^pi prod_i a_{i,pi(i)}.
Elem neg_det(const System& sys, const Matrix& a);
// Delete row i and column j.
Matrix minor_matrix(const Matrix& a, std::size_t i, std::size_t j);
// m_{i,j} = |minor(i,j)|, no sign folded in.
Matrix raw_minors(const System& sys, const Matrix& a);
// adj_{i,j} = (-)^{i+j} |minor(j,i)|; for n = 2, [[d,(-)b],[(-)c,a]].
Matrix neg_adjoint(const System& sys, const Matrix& a);
// V_{i,j} = a_i^j, rows indexed by the arguments.
Matrix vandermonde(const System& sys, const std::vector<Elem>& a);
// prod_{i>j} (a_i (-) a_j); one for n <= 1.
Elem vandermonde_product(const System& sys, const std::vector<Elem>& a);
bool vandermonde_identity_check(const System& sys, const std::vector<Elem>& a);
// |A| = sum_j a_{i,j} adj_{j,i} along row i.
bool laplace_expansion_check(const System& sys, const Matrix& a, std::size_t row);

}  // namespace tsys
