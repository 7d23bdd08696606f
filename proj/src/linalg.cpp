// linalg.cpp
#include "sqjc/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "sqjc/errors.hpp"

namespace sqjc {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = std::conj((*this)(i, j));
    return m;
}

cplx CMatrix::trace() const {
    cplx t = 0.0;
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k)
        m = std::max(m, std::abs(data_[k] - other.data_[k]));
    return m;
}

double CMatrix::hermiticity_defect() const {
    if (rows_ != cols_) throw DimensionMismatch("hermiticity_defect: not square");
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

double CMatrix::one_norm() const {
    double best = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("operator+=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("operator-=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (cplx& v : data_) v *= s;
    return *this;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
    CMatrix c(a.rows(), b.cols());
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    // i-k-j order keeps both b and c rows contiguous.
    for (std::size_t i = 0; i < n; ++i) {
        cplx* ci = c.row(i);
        for (std::size_t p = 0; p < k; ++p) {
            const cplx aip = a(i, p);
            if (aip == cplx(0.0, 0.0)) continue;
            const cplx* bp = b.row(p);
            for (std::size_t j = 0; j < m; ++j) ci[j] += aip * bp[j];
        }
    }
    return c;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) { return matmul(a, b); }

std::vector<cplx> matvec(const CMatrix& m, const std::vector<cplx>& v) {
    if (m.cols() != v.size()) throw DimensionMismatch("matvec: shape mismatch");
    std::vector<cplx> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cplx s = 0.0;
        const cplx* mi = m.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) s += mi[j] * v[j];
        r[i] = s;
    }
    return r;
}

CMatrix annihilation_matrix(std::size_t dim) {
    CMatrix a(dim, dim);
    for (std::size_t n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

CMatrix creation_matrix(std::size_t dim) {
    CMatrix a(dim, dim);
    for (std::size_t n = 1; n < dim; ++n) a(n, n - 1) = std::sqrt(double(n));
    return a;
}

CMatrix number_matrix(std::size_t dim) {
    CMatrix a(dim, dim);
    for (std::size_t n = 0; n < dim; ++n) a(n, n) = double(n);
    return a;
}

CMatrix lu_solve(CMatrix a, CMatrix b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n) throw DimensionMismatch("lu_solve: shape mismatch");

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best == 0.0) throw NonConvergence("lu_solve: singular matrix");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(piv, j));
        }
        const cplx akk = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx f = a(i, k) / akk;
            a(i, k) = f;
            if (f == cplx(0.0, 0.0)) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(k, j);
        }
    }

    // back substitution
    for (std::size_t col = 0; col < b.cols(); ++col) {
        for (std::size_t ii = n; ii-- > 0;) {
            cplx s = b(ii, col);
            for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * b(j, col);
            b(ii, col) = s / a(ii, ii);
        }
    }
    return b;
}

namespace {

// (p,p) diagonal Pade numerator/denominator split, as in Higham's method:
// exp(A) ~ (V - U)^{-1} (V + U) with U odd and V even polynomial parts.
void pade_uv(const CMatrix& a, const double* b, int order, CMatrix& u, CMatrix& v) {
    const std::size_t n = a.rows();
    const CMatrix a2 = a * a;
    if (order == 3) {
        CMatrix t = b[3] * a2;
        for (std::size_t i = 0; i < n; ++i) t(i, i) += b[1];
        u = a * t;
        v = b[2] * a2;
        for (std::size_t i = 0; i < n; ++i) v(i, i) += b[0];
        return;
    }
    const CMatrix a4 = a2 * a2;
    if (order == 5) {
        CMatrix t = b[5] * a4 + b[3] * a2;
        for (std::size_t i = 0; i < n; ++i) t(i, i) += b[1];
        u = a * t;
        v = b[4] * a4 + b[2] * a2;
        for (std::size_t i = 0; i < n; ++i) v(i, i) += b[0];
        return;
    }
    const CMatrix a6 = a4 * a2;
    if (order == 7) {
        CMatrix t = b[7] * a6 + b[5] * a4 + b[3] * a2;
        for (std::size_t i = 0; i < n; ++i) t(i, i) += b[1];
        u = a * t;
        v = b[6] * a6 + b[4] * a4 + b[2] * a2;
        for (std::size_t i = 0; i < n; ++i) v(i, i) += b[0];
        return;
    }
    if (order == 9) {
        const CMatrix a8 = a6 * a2;
        CMatrix t = b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2;
        for (std::size_t i = 0; i < n; ++i) t(i, i) += b[1];
        u = a * t;
        v = b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2;
        for (std::size_t i = 0; i < n; ++i) v(i, i) += b[0];
        return;
    }
    // order 13
    CMatrix w = b[13] * a6 + b[11] * a4 + b[9] * a2;
    CMatrix t = a6 * w;
    t += b[7] * a6 + b[5] * a4 + b[3] * a2;
    for (std::size_t i = 0; i < n; ++i) t(i, i) += b[1];
    u = a * t;
    w = b[12] * a6 + b[10] * a4 + b[8] * a2;
    v = a6 * w;
    v += b[6] * a6 + b[4] * a4 + b[2] * a2;
    for (std::size_t i = 0; i < n; ++i) v(i, i) += b[0];
}

} // namespace

CMatrix expm(const CMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("expm: not square");
    const std::size_t n = a.rows();
    if (n == 0) return CMatrix();

    static const double b3[] = {120., 60., 12., 1.};
    static const double b5[] = {30240., 15120., 3360., 420., 30., 1.};
    static const double b7[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
    static const double b9[] = {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                                2162160., 110880., 3960., 90., 1.};
    static const double b13[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                                 1187353796428800.,  129060195264000.,   10559470521600.,
                                 670442572800.,      33522128640.,       1323241920.,
                                 40840800.,          960960.,            16380.,
                                 182.,               1.};

    const double l1 = a.one_norm();
    CMatrix u, v;
    int squarings = 0;

    if (l1 < 1.495585217958292e-2) {
        pade_uv(a, b3, 3, u, v);
    } else if (l1 < 2.539398330063230e-1) {
        pade_uv(a, b5, 5, u, v);
    } else if (l1 < 9.504178996162932e-1) {
        pade_uv(a, b7, 7, u, v);
    } else if (l1 < 2.097847961257068) {
        pade_uv(a, b9, 9, u, v);
    } else {
        const double theta13 = 5.371920351148152;
        std::frexp(l1 / theta13, &squarings);
        if (squarings < 0) squarings = 0;
        CMatrix as = a;
        as *= cplx(std::ldexp(1.0, -squarings), 0.0);
        pade_uv(as, b13, 13, u, v);
    }

    CMatrix numer = v + u;
    CMatrix denom = v - u;
    CMatrix r = lu_solve(std::move(denom), std::move(numer));
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

std::vector<cplx> apply_displacement(std::vector<cplx> v, cplx alpha) {
    const std::size_t dim = v.size();
    if (dim == 0 || alpha == cplx(0.0, 0.0)) return v;

    // generator X = alpha a† - alpha* a; tridiagonal with zero diagonal;
    // crude norm bound 2|alpha|sqrt(dim) sets the number of halvings.
    const double bound = 2.0 * std::abs(alpha) * std::sqrt(double(dim));
    int s = 0;
    while (bound / std::ldexp(1.0, s) > 1.0) ++s;
    const cplx ah = alpha * cplx(std::ldexp(1.0, -s), 0.0);
    const cplx ahc = std::conj(ah);

    std::vector<double> sq(dim);
    for (std::size_t n = 0; n < dim; ++n) sq[n] = std::sqrt(double(n));

    std::vector<cplx> term(dim), next(dim);
    const long reps = 1L << s;
    for (long rep = 0; rep < reps; ++rep) {
        term = v;
        // Taylor sum of exp(X/2^s) acting on v
        for (int k = 1; k <= 64; ++k) {
            double mx = 0.0;
            for (std::size_t n = 0; n < dim; ++n) {
                cplx x = 0.0;
                if (n > 0) x += ah * sq[n] * term[n - 1];
                if (n + 1 < dim) x -= ahc * sq[n + 1] * term[n + 1];
                next[n] = x / double(k);
                mx = std::max(mx, std::abs(next[n]));
            }
            term.swap(next);
            for (std::size_t n = 0; n < dim; ++n) v[n] += term[n];
            if (mx < 1e-18) break;
        }
    }
    return v;
}

} // namespace sqjc
