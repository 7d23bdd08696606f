// entanglement.cpp
#include "sqjc/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "sqjc/errors.hpp"

namespace sqjc {

namespace {

constexpr double kOffDiagTol = 1e-12;  // relative to the Frobenius norm
constexpr double kNoiseFloor = 1e-10;  // eigenvalues above -this count as zero

double off_diagonal_norm(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
}

// One cyclic Jacobi pass; returns the number of rotations applied.
// Rotations zero A(p,q) via the phased rotation built from the real 2x2
// problem with off-diagonal |A(p,q)|.
std::size_t jacobi_sweep(CMatrix& a, CMatrix* vecs, double skip_below) {
    const std::size_t n = a.rows();
    std::size_t rotations = 0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const cplx apq = a(p, q);
            const double h = std::abs(apq);
            if (h <= skip_below) continue;
            ++rotations;

            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double tau = (aqq - app) / (2.0 * h);
            const double sign = tau >= 0.0 ? 1.0 : -1.0;
            const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const cplx phase = apq / h;          // e^{i phi}
            const cplx sp = s * phase;           // s e^{i phi}
            const cplx spc = std::conj(sp);      // s e^{-i phi}

            // columns: col_p' = c col_p - s e^{-i phi} col_q
            //          col_q' = s e^{+i phi} col_p + c col_q
            for (std::size_t k = 0; k < n; ++k) {
                const cplx akp = a(k, p);
                const cplx akq = a(k, q);
                a(k, p) = c * akp - spc * akq;
                a(k, q) = sp * akp + c * akq;
            }
            // rows: row_p' = c row_p - s e^{+i phi} row_q
            //       row_q' = s e^{-i phi} row_p + c row_q
            for (std::size_t k = 0; k < n; ++k) {
                const cplx apk = a(p, k);
                const cplx aqk = a(q, k);
                a(p, k) = c * apk - sp * aqk;
                a(q, k) = spc * apk + c * aqk;
            }
            // pin the rotated pair to exact values
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            a(p, p) = cplx(app - t * h, 0.0);
            a(q, q) = cplx(aqq + t * h, 0.0);

            if (vecs) {
                CMatrix& v = *vecs;
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp - spc * vkq;
                    v(k, q) = sp * vkp + c * vkq;
                }
            }
        }
    }
    return rotations;
}

void jacobi_diagonalize(CMatrix& a, CMatrix* vecs) {
    const std::size_t n = a.rows();
    if (n == 0) return;

    const double scale = a.frobenius_norm();
    if (scale == 0.0) return;
    const double target = kOffDiagTol * scale;
    // elements this small cannot push the off-norm past the target even if
    // every pair carried one
    const double skip_below = target / double(n);

    for (int sweep = 0; sweep < 60; ++sweep) {
        if (off_diagonal_norm(a) <= target) return;
        if (jacobi_sweep(a, vecs, skip_below) == 0) return;
    }
    if (off_diagonal_norm(a) > target)
        throw NonConvergence("jacobi_diagonalize: sweep limit reached");
}

void check_and_symmetrize(CMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("hermitian eigensolver: not square");
    const double defect = a.hermiticity_defect();
    const double scale = std::max(1.0, a.max_abs());
    if (defect > 1e-10 * scale)
        throw NotHermitian("hermitian eigensolver: Hermiticity defect above 1e-10");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        a(i, i) = cplx(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }
}

double negativity_from_spectrum(const std::vector<double>& eigenvalues) {
    double neg = 0.0;
    for (double ev : eigenvalues)
        if (ev <= -kNoiseFloor) neg -= ev;
    return neg;
}

// Gram-Schmidt over the field-space columns; near-dependent directions
// (residual below 1e-13 of the original norm) are dropped.
std::vector<std::vector<cplx>> orthonormal_basis(const std::vector<const std::vector<cplx>*>& vs) {
    std::vector<std::vector<cplx>> basis;
    for (const auto* vp : vs) {
        std::vector<cplx> w = *vp;
        double orig = 0.0;
        for (const cplx& x : w) orig += std::norm(x);
        orig = std::sqrt(orig);
        if (orig < 1e-300) continue;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                cplx proj = 0.0;
                for (std::size_t i = 0; i < w.size(); ++i) proj += std::conj(b[i]) * w[i];
                for (std::size_t i = 0; i < w.size(); ++i) w[i] -= proj * b[i];
            }
        }
        double res = 0.0;
        for (const cplx& x : w) res += std::norm(x);
        res = std::sqrt(res);
        if (res < 1e-13 * orig) continue;
        for (cplx& x : w) x /= res;
        basis.push_back(std::move(w));
    }
    return basis;
}

} // namespace

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : eigenvalues) s += v;
    return s;
}

CMatrix partial_transpose_atom(const JointDensity& joint) {
    const std::size_t n = joint.n_max();
    const CMatrix& m = joint.matrix();
    CMatrix pt(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            pt(i, j) = m(i, j);                     // ee
            pt(n + i, n + j) = m(n + i, n + j);     // gg
            pt(i, n + j) = m(n + i, j);             // eg <- ge
            pt(n + i, j) = m(i, n + j);             // ge <- eg
        }
    return pt;
}

Spectrum hermitian_eigenvalues(const CMatrix& m) {
    CMatrix a = m;
    check_and_symmetrize(a);
    jacobi_diagonalize(a, nullptr);
    Spectrum sp;
    sp.eigenvalues.resize(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) sp.eigenvalues[i] = a(i, i).real();
    std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end());
    return sp;
}

EigenSystem hermitian_eigensystem(const CMatrix& m) {
    CMatrix a = m;
    check_and_symmetrize(a);
    CMatrix v = CMatrix::identity(a.rows());
    jacobi_diagonalize(a, &v);

    std::vector<std::size_t> order(a.rows());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenSystem es;
    es.eigenvalues.resize(a.rows());
    es.eigenvectors = CMatrix(a.rows(), a.rows());
    for (std::size_t k = 0; k < order.size(); ++k) {
        es.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < a.rows(); ++i) es.eigenvectors(i, k) = v(i, order[k]);
    }
    return es;
}

double negativity(const JointDensity& joint) {
    const CMatrix pt = partial_transpose_atom(joint);
    const Spectrum sp = hermitian_eigenvalues(pt);
    return negativity_from_spectrum(sp.eigenvalues);
}

double negativity_of_field(const DensityMatrix& rho_field, double t) {
    if (!rho_field.has_components()) return negativity(evolve_joint(rho_field, t));

    const std::size_t n = rho_field.dim();
    const EvolutionBlocks blocks = evolution_blocks(t, n);

    std::vector<EvolvedComponent> evolved;
    evolved.reserve(rho_field.components().size());
    for (const auto& comp : rho_field.components())
        evolved.push_back(evolve_component(comp.state, blocks));

    std::vector<const std::vector<cplx>*> span;
    for (const auto& ec : evolved) {
        span.push_back(&ec.excited);
        span.push_back(&ec.ground);
    }
    const auto basis = orthonormal_basis(span);
    const std::size_t k = basis.size();
    if (k == 0) return 0.0;

    // The partial transpose maps span(basis) (x) C^2 to itself and kills the
    // complement, so its nonzero spectrum lives in the reduced 2k x 2k block:
    //   ee = sum w u~ u~†,  eg = sum w v~ u~†,  ge = sum w u~ v~†,  gg = sum w v~ v~†
    CMatrix red(2 * k, 2 * k);
    for (std::size_t c = 0; c < evolved.size(); ++c) {
        const double w = rho_field.components()[c].weight;
        std::vector<cplx> ur(k), vr(k);
        for (std::size_t b = 0; b < k; ++b) {
            cplx su = 0.0, sv = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                su += std::conj(basis[b][i]) * evolved[c].excited[i];
                sv += std::conj(basis[b][i]) * evolved[c].ground[i];
            }
            ur[b] = su;
            vr[b] = sv;
        }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                red(i, j) += w * ur[i] * std::conj(ur[j]);
                red(i, k + j) += w * vr[i] * std::conj(ur[j]);
                red(k + i, j) += w * ur[i] * std::conj(vr[j]);
                red(k + i, k + j) += w * vr[i] * std::conj(vr[j]);
            }
    }
    const Spectrum sp = hermitian_eigenvalues(red);
    return negativity_from_spectrum(sp.eigenvalues);
}

TimeSeries negativity_series(const DensityMatrix& rho_field, const TimeGrid& grid) {
    grid.validate();
    TimeSeries out;
    out.times = grid.points;
    out.values.resize(grid.count());
    for (std::size_t i = 0; i < grid.count(); ++i)
        out.values[i] = negativity_of_field(rho_field, grid.points[i]);
    return out;
}

double log_negativity(double negativity) { return std::log2(2.0 * negativity + 1.0); }

} // namespace sqjc
