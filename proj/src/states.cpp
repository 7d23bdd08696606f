// states.cpp
#include "sqjc/states.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>

#include "sqjc/entanglement.hpp"
#include "sqjc/errors.hpp"

namespace sqjc {

namespace {

FockVector component_state(const FieldParams& p, bool coherent_part, std::size_t n_max,
                           double tail_tol) {
    if (coherent_part) return coherent_amplitudes(p.alpha, n_max, tail_tol);
    return squeezed_vacuum_amplitudes(p.zeta, n_max, tail_tol);
}

double log_poisson(double n_c, std::size_t n) {
    if (n_c == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return -n_c + double(n) * std::log(n_c) - std::lgamma(double(n) + 1.0);
}

} // namespace

FieldParams FieldParams::pscs(double n_c, double n_s, double alpha_phase, double theta) {
    FieldParams p;
    p.kind = FieldKind::PSCS;
    p.n_c = n_c;
    p.n_s = n_s;
    p.alpha = std::polar(std::sqrt(n_c), alpha_phase);
    p.zeta = SqueezeParam::from_mean_photons(n_s, theta);
    p.q = 1.0;
    p.validate();
    return p;
}

FieldParams FieldParams::mscs_derived(double n_c, double n_s, double theta) {
    FieldParams p = mscs_fixed(n_c, n_s, 1.0, 0.0, theta);
    p.q = mixing_weight(std::sqrt(n_c), p.zeta);
    p.validate();
    return p;
}

FieldParams FieldParams::mscs_fixed(double n_c, double n_s, double q, double alpha_phase,
                                    double theta) {
    FieldParams p;
    p.kind = FieldKind::MSCS;
    p.n_c = n_c;
    p.n_s = n_s;
    p.alpha = std::polar(std::sqrt(n_c), alpha_phase);
    p.zeta = SqueezeParam::from_mean_photons(n_s, theta);
    p.q = q;
    p.validate();
    return p;
}

void FieldParams::validate() const {
    if (n_c < 0.0 || n_s < 0.0) throw DegenerateInput("FieldParams: negative photon number");
    if (q < 0.0 || q > 1.0) throw DegenerateInput("FieldParams: q outside [0,1]");
    if (std::abs(std::norm(alpha) - n_c) > 1e-12 * std::max(1.0, n_c))
        throw DegenerateInput("FieldParams: |alpha|^2 != n_c");
    if (std::abs(zeta.mean_photons() - n_s) > 1e-12 * std::max(1.0, n_s))
        throw DegenerateInput("FieldParams: sinh^2 r != n_s");
}

double Pcd::sum() const {
    double s = 0.0;
    for (double p : probabilities) s += p;
    return s;
}

double Pcd::mean() const {
    double s = 0.0;
    for (std::size_t n = 0; n < probabilities.size(); ++n) s += double(n) * probabilities[n];
    return s;
}

double Pcd::second_moment() const {
    double s = 0.0;
    for (std::size_t n = 0; n < probabilities.size(); ++n)
        s += double(n) * double(n) * probabilities[n];
    return s;
}

double Pcd::second_factorial_moment() const {
    double s = 0.0;
    for (std::size_t n = 0; n < probabilities.size(); ++n)
        s += double(n) * (double(n) - 1.0) * probabilities[n];
    return s;
}

DensityMatrix::DensityMatrix(CMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols()) throw DimensionMismatch("DensityMatrix: not square");
}

DensityMatrix::DensityMatrix(std::vector<Component> comps, std::size_t dim)
    : matrix_(dim, dim), components_(std::move(comps)) {
    for (const Component& c : components_) {
        if (c.state.n_max() != dim) throw DimensionMismatch("DensityMatrix: component dim");
        for (std::size_t i = 0; i < dim; ++i) {
            if (c.state.amplitudes[i] == cplx(0.0, 0.0)) continue;
            const cplx wi = c.weight * c.state.amplitudes[i];
            for (std::size_t j = 0; j < dim; ++j)
                matrix_(i, j) += wi * std::conj(c.state.amplitudes[j]);
        }
    }
}

double DensityMatrix::trace_real() const { return matrix_.trace().real(); }

double DensityMatrix::purity() const {
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    double s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) s += std::norm(matrix_(i, j));
    return s;
}

std::vector<double> DensityMatrix::diagonal() const {
    std::vector<double> d(dim());
    for (std::size_t i = 0; i < dim(); ++i) d[i] = matrix_(i, i).real();
    return d;
}

void DensityMatrix::check_invariants(double tail_tol, bool check_psd) const {
    if (matrix_.hermiticity_defect() > 1e-12)
        throw NotHermitian("DensityMatrix: Hermiticity defect above 1e-12");
    const double tr = trace_real();
    if (tr > 1.0 + 1e-12 || tr < 1.0 - tail_tol) {
        std::ostringstream os;
        os << "DensityMatrix: trace " << tr << " outside [1 - " << tail_tol << ", 1]";
        throw TruncationError(os.str());
    }
    if (check_psd) {
        const Spectrum sp = hermitian_eigenvalues(matrix_);
        if (!sp.eigenvalues.empty() && sp.eigenvalues.front() < -1e-10)
            throw NonConvergence("DensityMatrix: negative eigenvalue beyond tolerance");
    }
}

double mixing_weight(double alpha_r, const SqueezeParam& zeta) {
    if (alpha_r < 0.0) throw DegenerateInput("mixing_weight: alpha_r must be >= 0");
    if (zeta.r == 0.0 && alpha_r == 0.0) {
        std::cerr << "mixing_weight: 0/0 corner (r = 0, alpha = 0), returning q = 1\n";
        return 1.0;
    }
    const double sech = 1.0 / std::cosh(zeta.r);
    const double e = std::exp(-alpha_r * alpha_r * (1.0 + std::tanh(zeta.r)));
    return sech * (1.0 - e) / (1.0 - sech * e);
}

DensityMatrix pscs_density(const FieldParams& params, std::size_t n_max, double tail_tol) {
    if (params.kind != FieldKind::PSCS) throw DegenerateInput("pscs_density: kind must be PSCS");
    std::vector<DensityMatrix::Component> comps;
    comps.push_back({1.0, squeezed_coherent_amplitudes(params.alpha, params.zeta, n_max, tail_tol)});
    return DensityMatrix(std::move(comps), n_max);
}

DensityMatrix mscs_density(const FieldParams& params, std::size_t n_max, double tail_tol) {
    if (params.kind != FieldKind::MSCS) throw DegenerateInput("mscs_density: kind must be MSCS");
    std::vector<DensityMatrix::Component> comps;
    if (params.q > 0.0)
        comps.push_back({params.q, component_state(params, true, n_max, tail_tol)});
    if (params.q < 1.0)
        comps.push_back({1.0 - params.q, component_state(params, false, n_max, tail_tol)});
    return DensityMatrix(std::move(comps), n_max);
}

Pcd pscs_pcd_amplitude(const FieldParams& params, std::size_t n_max, double tail_tol) {
    if (params.kind != FieldKind::PSCS)
        throw DegenerateInput("pscs_pcd_amplitude: kind must be PSCS");
    const FockVector v = squeezed_coherent_amplitudes(params.alpha, params.zeta, n_max, tail_tol);
    Pcd p;
    p.probabilities.resize(n_max);
    for (std::size_t n = 0; n < n_max; ++n) p.probabilities[n] = std::norm(v.amplitudes[n]);
    return p;
}

Pcd mscs_pcd(const FieldParams& params, std::size_t n_max) {
    if (params.kind != FieldKind::MSCS) throw DegenerateInput("mscs_pcd: kind must be MSCS");
    Pcd p;
    p.probabilities.resize(n_max);
    const double q = params.q;
    const double n_s = params.n_s;
    const double log_ratio = n_s > 0.0 ? std::log(n_s / (1.0 + n_s)) : 0.0;
    for (std::size_t n = 0; n < n_max; ++n) {
        double val = q > 0.0 ? q * std::exp(log_poisson(params.n_c, n)) : 0.0;
        if (n % 2 == 0 && q < 1.0) {
            if (n_s > 0.0) {
                const double m = double(n) / 2.0;
                const double lsq = -0.5 * std::log1p(n_s) + std::lgamma(double(n) + 1.0) -
                                   double(n) * std::log(2.0) -
                                   2.0 * std::lgamma(m + 1.0) + m * log_ratio;
                val += (1.0 - q) * std::exp(lsq);
            } else if (n == 0) {
                val += 1.0 - q; // vacuum
            }
        }
        p.probabilities[n] = val;
    }
    return p;
}

double mean_photon_mscs(const FieldParams& params) {
    if (params.kind != FieldKind::MSCS) throw DegenerateInput("mean_photon_mscs: kind must be MSCS");
    return params.q * params.n_c + (1.0 - params.q) * params.n_s;
}

Pcd pscs_pcd_hermite(const FieldParams& params, std::size_t n_max,
                     HermitePcdPrefactor prefactor) {
    const double n_s = params.n_s;
    const double n_c = params.n_c;
    Pcd p;
    p.probabilities.resize(n_max);
    if (n_s <= 0.0) {
        // nu -> 0 limit of the power-n form is the Poisson distribution
        for (std::size_t n = 0; n < n_max; ++n)
            p.probabilities[n] = std::exp(log_poisson(n_c, n));
        return p;
    }
    const double mu = std::sqrt(1.0 + n_s);
    const double nu = std::sqrt(n_s);
    const double beta = std::sqrt(n_c) * (mu + nu);
    const double x = beta / std::sqrt(2.0 * mu * nu);
    const double log_pref = std::log(nu / (2.0 * mu));
    const double expo = -beta * beta * (1.0 - nu / mu);
    for (std::size_t n = 0; n < n_max; ++n) {
        const SignedLog h = hermite_log(unsigned(n), x);
        if (h.sign == 0.0) {
            p.probabilities[n] = 0.0;
            continue;
        }
        const double pref_exp = prefactor == HermitePcdPrefactor::Squared ? 2.0 : double(n);
        const double lp = -std::lgamma(double(n) + 1.0) - std::log(mu) + pref_exp * log_pref +
                          2.0 * h.log_abs + expo;
        p.probabilities[n] = std::exp(lp);
    }
    return p;
}

PcdFormDeviation pscs_pcd_form_deviation(const FieldParams& params, std::size_t n_max) {
    const Pcd ref = pscs_pcd_amplitude(params, n_max);
    const Pcd sq = pscs_pcd_hermite(params, n_max, HermitePcdPrefactor::Squared);
    const Pcd pn = pscs_pcd_hermite(params, n_max, HermitePcdPrefactor::PowerN);
    PcdFormDeviation d{0.0, 0.0};
    for (std::size_t n = 0; n < n_max; ++n) {
        d.squared_prefactor =
            std::max(d.squared_prefactor, std::abs(sq.probabilities[n] - ref.probabilities[n]));
        d.power_n_prefactor =
            std::max(d.power_n_prefactor, std::abs(pn.probabilities[n] - ref.probabilities[n]));
    }
    return d;
}

} // namespace sqjc
