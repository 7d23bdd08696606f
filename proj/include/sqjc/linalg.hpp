// linalg.hpp -- dense complex matrices, ladder operators, matrix exponential.
//
// Everything here works on small dense matrices (truncated Fock spaces of a
// few hundred levels), where accuracy matters more than asymptotic speed.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sqjc {

using cplx = std::complex<double>;

// Dense row-major complex matrix.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cplx* row(std::size_t i) { return data_.data() + i * cols_; }
    const cplx* row(std::size_t i) const { return data_.data() + i * cols_; }

    CMatrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    double max_abs_diff(const CMatrix& other) const;
    // max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const;
    // max column sum of absolute values (induced 1-norm)
    double one_norm() const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(cplx s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// Dense matrix product.
CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

std::vector<cplx> matvec(const CMatrix& m, const std::vector<cplx>& v);

// Truncated ladder operators over |0..dim-1>: <n-1|a|n> = sqrt(n).
CMatrix annihilation_matrix(std::size_t dim);
CMatrix creation_matrix(std::size_t dim);
CMatrix number_matrix(std::size_t dim);

// Solve a x = b by LU with partial pivoting (b may hold many right-hand sides).
CMatrix lu_solve(CMatrix a, CMatrix b);

// Matrix exponential by scaling-and-squaring with diagonal Pade approximants.
CMatrix expm(const CMatrix& a);

// exp(alpha a† - alpha* a) |v>, exploiting the tridiagonal generator: the
// scaled generator is applied by short Taylor series, then composed.  The
// vector keeps its dimension; callers pad beforehand to absorb displacement.
std::vector<cplx> apply_displacement(std::vector<cplx> v, cplx alpha);

} // namespace sqjc
