// observables.cpp
#include "sqjc/observables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sqjc/errors.hpp"

namespace sqjc {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_mscs(const FieldParams& p, const char* who) {
    if (p.kind != FieldKind::MSCS) {
        std::ostringstream os;
        os << who << ": kind must be MSCS";
        throw DegenerateInput(os.str());
    }
}

// Field parameters advanced by the free evolution: alpha -> alpha e^{-i wt},
// zeta phase theta -> theta - 2wt.
FieldParams rotated_params(const FieldParams& p, double omega_t) {
    return FieldParams::mscs_fixed(p.n_c, p.n_s, p.q, std::arg(p.alpha) - omega_t,
                                   p.zeta.theta - 2.0 * omega_t);
}

double real_expectation(const DensityMatrix& rho, const CMatrix& op) {
    // tr(rho op)
    cplx s = 0.0;
    const std::size_t n = rho.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += rho.matrix()(i, j) * op(j, i);
    return s.real();
}

} // namespace

std::pair<double, double> quadrature_means_mscs(const FieldParams& params, double omega_t) {
    require_mscs(params, "quadrature_means_mscs");
    const double amp = std::abs(params.alpha);
    const double phi = std::arg(params.alpha);
    return {params.q * amp * std::cos(omega_t - phi), -params.q * amp * std::sin(omega_t - phi)};
}

std::pair<double, double> quadrature_variances_mscs(const FieldParams& params, double omega_t) {
    require_mscs(params, "quadrature_variances_mscs");
    const double ch = std::cosh(params.zeta.r);
    const double sh = std::sinh(params.zeta.r);
    const double base = ch * ch + sh * sh;
    const double cross = 2.0 * ch * sh * std::cos(2.0 * omega_t - params.zeta.theta);
    const double q = params.q;
    return {q / 4.0 + (1.0 - q) / 4.0 * (base - cross),
            q / 4.0 + (1.0 - q) / 4.0 * (base + cross)};
}

QuadratureReport quadratures_mscs(const FieldParams& params, double omega_t) {
    QuadratureReport r;
    r.omega_t = omega_t;
    std::tie(r.mean_x1, r.mean_x2) = quadrature_means_mscs(params, omega_t);
    std::tie(r.var_x1, r.var_x2) = quadrature_variances_mscs(params, omega_t);
    r.product = std::sqrt(r.var_x1 * r.var_x2);
    return r;
}

QuadratureOracleReport quadrature_trace_oracle(const FieldParams& params, double omega_t,
                                               std::size_t n_max, double tail_tol) {
    require_mscs(params, "quadrature_trace_oracle");
    const DensityMatrix rho = mscs_density(rotated_params(params, omega_t), n_max, tail_tol);

    const CMatrix a = annihilation_matrix(n_max);
    const CMatrix ad = a.adjoint();
    CMatrix x1 = a + ad;
    x1 *= cplx(0.5, 0.0);
    CMatrix x2 = a - ad;
    x2 *= cplx(0.0, -0.5);

    QuadratureOracleReport rep;
    rep.mean_x1 = real_expectation(rho, x1);
    rep.mean_x2 = real_expectation(rho, x2);
    rep.var_x1 = real_expectation(rho, x1 * x1) - rep.mean_x1 * rep.mean_x1;
    rep.var_x2 = real_expectation(rho, x2 * x2) - rep.mean_x2 * rep.mean_x2;

    const double amp = std::abs(params.alpha);
    const double phi = std::arg(params.alpha);
    const double q = params.q;
    const double c = std::cos(omega_t - phi), s = std::sin(omega_t - phi);
    // squeezed vacuum has zero mean field, so the displacement between the
    // component means is the coherent mean itself
    rep.mean_shift_x1 = q * (1.0 - q) * amp * amp * c * c;
    rep.mean_shift_x2 = q * (1.0 - q) * amp * amp * s * s;

    std::tie(rep.closed_var_x1, rep.closed_var_x2) = quadrature_variances_mscs(params, omega_t);
    rep.defect_x1 = std::abs(rep.var_x1 - (rep.closed_var_x1 + rep.mean_shift_x1));
    rep.defect_x2 = std::abs(rep.var_x2 - (rep.closed_var_x2 + rep.mean_shift_x2));
    return rep;
}

double mandel_q(const Pcd& pcd) {
    const double mean = pcd.mean();
    if (mean <= 0.0) throw DegenerateInput("mandel_q: mean photon number is zero");
    const double f2 = pcd.second_factorial_moment();
    return (f2 - mean * mean) / mean;
}

WignerGridSpec default_wigner_grid() { return WignerGridSpec{}; }

double PhaseSpaceGrid::integral() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s * spec.step * spec.step;
}

double PhaseSpaceGrid::min_value() const {
    return values.empty() ? 0.0 : *std::min_element(values.begin(), values.end());
}

double wigner_mscs_point(const FieldParams& params, cplx point) {
    require_mscs(params, "wigner_mscs_point");
    const double q = params.q;
    const double r = params.zeta.r;

    double w = 0.0;
    if (q > 0.0) w += q * (2.0 / kPi) * std::exp(-2.0 * std::norm(point - params.alpha));
    if (q < 1.0) {
        // rotate into the squeeze frame
        const cplx rotated = point * std::polar(1.0, -0.5 * params.zeta.theta);
        const double x = rotated.real(), y = rotated.imag();
        w += (1.0 - q) * (2.0 / kPi) *
             std::exp(-2.0 * (x * x * std::exp(2.0 * r) + y * y * std::exp(-2.0 * r)));
    }
    return w;
}

double wigner_mscs_point_variant(const FieldParams& params, cplx point) {
    require_mscs(params, "wigner_mscs_point_variant");
    const double q = params.q;
    double w = 0.0;
    if (q > 0.0) w += q * (2.0 / kPi) * std::exp(-2.0 * std::norm(point - params.alpha));
    if (q < 1.0) {
        const cplx arg = point * std::cosh(params.zeta.r) -
                         std::conj(point) * std::polar(std::sinh(params.zeta.r), params.zeta.theta);
        w += (1.0 - q) * (2.0 / kPi) * std::exp(-std::norm(arg));
    }
    return w;
}

PhaseSpaceGrid wigner_mscs(const FieldParams& params, const WignerGridSpec& spec) {
    require_mscs(params, "wigner_mscs");
    if (spec.step <= 0.0 || spec.re_max <= spec.re_min || spec.im_max <= spec.im_min)
        throw DegenerateInput("wigner_mscs: malformed grid spec");

    PhaseSpaceGrid g;
    g.spec = spec;
    g.n_re = std::size_t((spec.re_max - spec.re_min) / spec.step + 0.5) + 1;
    g.n_im = std::size_t((spec.im_max - spec.im_min) / spec.step + 0.5) + 1;
    g.values.resize(g.n_re * g.n_im);
    for (std::size_t j = 0; j < g.n_im; ++j)
        for (std::size_t i = 0; i < g.n_re; ++i)
            g.values[j * g.n_re + i] =
                wigner_mscs_point(params, cplx(g.re_at(i), g.im_at(j)));

    const double mass = g.integral();
    if (mass < 0.999) {
        std::ostringstream os;
        os << "wigner_mscs: grid captures only " << mass << " of the quasi-probability mass";
        throw GridTooSmall(os.str());
    }
    return g;
}

double wigner_parity_oracle(const DensityMatrix& rho, cplx point) {
    const std::size_t n = rho.dim();
    // displaced support reach: (sqrt(n) + |a|)^2 plus margin
    const double reach = std::sqrt(double(n)) + std::abs(point);
    const std::size_t dim = std::size_t(std::ceil(reach * reach)) + 40;

    double series = 0.0;
    if (rho.has_components()) {
        for (const auto& comp : rho.components()) {
            std::vector<cplx> v(dim, cplx(0.0, 0.0));
            std::copy(comp.state.amplitudes.begin(), comp.state.amplitudes.end(), v.begin());
            v = apply_displacement(std::move(v), -point); // D†(a) = D(-a)
            double s = 0.0;
            for (std::size_t k = 0; k < dim; ++k)
                s += (k % 2 == 0 ? 1.0 : -1.0) * std::norm(v[k]);
            series += comp.weight * s;
        }
    } else {
        // dense fallback: displace each basis column
        CMatrix padded(dim, dim);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) padded(i, j) = rho.matrix()(i, j);
        for (std::size_t k = 0; k < dim; ++k) {
            std::vector<cplx> e(dim, cplx(0.0, 0.0));
            e[k] = 1.0;
            e = apply_displacement(std::move(e), point); // column of D(a)
            cplx val = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                if (e[i] == cplx(0.0, 0.0)) continue;
                cplx row = 0.0;
                for (std::size_t j = 0; j < dim; ++j) row += padded(i, j) * e[j];
                val += std::conj(e[i]) * row;
            }
            series += (k % 2 == 0 ? 1.0 : -1.0) * val.real();
        }
    }
    return (2.0 / kPi) * series;
}

} // namespace sqjc
