// fock.cpp
#include "sqjc/fock.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sqjc/errors.hpp"

namespace sqjc {

namespace {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void throw_truncation(const char* what, double tail, double tol) {
    std::ostringstream os;
    os << what << ": tail mass " << tail << " exceeds tolerance " << tol;
    throw TruncationError(os.str());
}

} // namespace

SqueezeParam SqueezeParam::from_mean_photons(double n_s, double theta) {
    if (n_s < 0.0) throw DegenerateInput("SqueezeParam: n_s must be >= 0");
    SqueezeParam z;
    z.r = std::asinh(std::sqrt(n_s));
    z.theta = theta;
    return z;
}

double SqueezeParam::mean_photons() const {
    const double s = std::sinh(r);
    return s * s;
}

double FockVector::norm_sq() const {
    double s = 0.0;
    for (const cplx& c : amplitudes) s += std::norm(c);
    return s;
}

double FockVector::tail_mass() const {
    return std::max(0.0, 1.0 - norm_sq());
}

void FockVector::check_finite() const {
    for (const cplx& c : amplitudes)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw NonConvergence("FockVector: non-finite amplitude");
}

cplx inner_product(const FockVector& bra, const FockVector& ket) {
    const std::size_t n = std::min(bra.n_max(), ket.n_max());
    cplx s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::conj(bra.amplitudes[i]) * ket.amplitudes[i];
    return s;
}

FockVector coherent_amplitudes(cplx alpha, std::size_t n_max, double tail_tol) {
    if (n_max == 0) throw DegenerateInput("coherent_amplitudes: n_max must be positive");
    FockVector v;
    v.amplitudes.resize(n_max);
    const double mag = std::abs(alpha);
    if (mag == 0.0) {
        v.amplitudes[0] = 1.0;
        return v;
    }
    const double phase = std::arg(alpha);
    const double log_mag = std::log(mag);
    for (std::size_t n = 0; n < n_max; ++n) {
        const double lm = -0.5 * mag * mag + double(n) * log_mag - 0.5 * std::lgamma(double(n) + 1.0);
        v.amplitudes[n] = std::polar(std::exp(lm), phase * double(n));
    }
    v.check_finite();
    const double tail = v.tail_mass();
    if (tail > tail_tol) throw_truncation("coherent_amplitudes", tail, tail_tol);
    return v;
}

FockVector squeezed_vacuum_amplitudes(const SqueezeParam& zeta, std::size_t n_max,
                                      double tail_tol) {
    if (n_max == 0) throw DegenerateInput("squeezed_vacuum_amplitudes: n_max must be positive");
    if (zeta.r < 0.0) throw DegenerateInput("squeezed_vacuum_amplitudes: r must be >= 0");
    FockVector v;
    v.amplitudes.resize(n_max);
    if (zeta.r == 0.0) {
        v.amplitudes[0] = 1.0;
        return v;
    }
    const double tau = std::tanh(zeta.r);
    const double log_tau = std::log(tau);
    const double log_mu = std::log(std::cosh(zeta.r));
    for (std::size_t m = 0; 2 * m < n_max; ++m) {
        const double dm = double(m);
        const double lm = -0.5 * log_mu + dm * log_tau + 0.5 * std::lgamma(2.0 * dm + 1.0) -
                          dm * std::log(2.0) - std::lgamma(dm + 1.0);
        // (-e^{i theta})^m carries the sign and phase
        const double ph = dm * (zeta.theta + kPi);
        v.amplitudes[2 * m] = std::polar(std::exp(lm), ph);
    }
    v.check_finite();
    const double tail = v.tail_mass();
    if (tail > tail_tol) throw_truncation("squeezed_vacuum_amplitudes", tail, tail_tol);
    return v;
}

FockVector squeezed_coherent_amplitudes(cplx alpha, const SqueezeParam& zeta,
                                        std::size_t n_max, double tail_tol) {
    if (n_max == 0) throw DegenerateInput("squeezed_coherent_amplitudes: n_max must be positive");
    if (zeta.r < 0.0) throw DegenerateInput("squeezed_coherent_amplitudes: r must be >= 0");

    FockVector v;
    v.amplitudes.resize(n_max);

    const double mu = std::cosh(zeta.r);
    const double tau = std::tanh(zeta.r);
    const cplx eith = std::polar(1.0, zeta.theta);

    // c_0 = <0|D(alpha)S(zeta)|0> = exp(-ln(mu)/2 - |alpha|^2/2 - (alpha*)^2 e^{i theta} tau / 2)
    const cplx ac = std::conj(alpha);
    const cplx log_c0 = cplx(-0.5 * std::log(mu) - 0.5 * std::norm(alpha), 0.0) -
                        0.5 * tau * eith * ac * ac;
    v.amplitudes[0] = std::exp(log_c0);

    const cplx drive = alpha * mu + ac * tau * mu * eith; // alpha mu + alpha* nu e^{i theta}
    const cplx down = tau * mu * eith;                    // nu e^{i theta}
    for (std::size_t n = 0; n + 1 < n_max; ++n) {
        cplx next = drive * v.amplitudes[n];
        if (n > 0) next -= down * std::sqrt(double(n)) * v.amplitudes[n - 1];
        v.amplitudes[n + 1] = next / (mu * std::sqrt(double(n) + 1.0));
    }

    v.check_finite();
    const double nrm = v.norm_sq();
    if (nrm > 1.0 + std::max(tail_tol, 1e-12))
        throw NonConvergence("squeezed_coherent_amplitudes: norm grew past 1");
    const double tail = std::max(0.0, 1.0 - nrm);
    if (tail > tail_tol) throw_truncation("squeezed_coherent_amplitudes", tail, tail_tol);
    return v;
}

double hermite_poly(unsigned n, double x) {
    double h0 = 1.0;
    if (n == 0) return h0;
    double h1 = 2.0 * x;
    for (unsigned k = 1; k < n; ++k) {
        const double h2 = 2.0 * x * h1 - 2.0 * double(k) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

SignedLog hermite_log(unsigned n, double x) {
    double h0 = 1.0, h1 = 2.0 * x;
    double log_scale = 0.0;
    if (n == 0) return {0.0, 1.0};
    for (unsigned k = 1; k < n; ++k) {
        double h2 = 2.0 * x * h1 - 2.0 * double(k) * h0;
        h0 = h1;
        h1 = h2;
        const double m = std::max(std::abs(h0), std::abs(h1));
        if (m > 1e120) {
            h0 /= m;
            h1 /= m;
            log_scale += std::log(m);
        }
    }
    if (h1 == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
    return {std::log(std::abs(h1)) + log_scale, h1 > 0.0 ? 1.0 : -1.0};
}

FockVector oracle_state_vector(cplx alpha, const SqueezeParam& zeta, std::size_t n_max,
                               std::size_t padding, double tail_tol) {
    if (n_max == 0) throw DegenerateInput("oracle_state_vector: n_max must be positive");
    const std::size_t dim = n_max + padding;

    std::vector<cplx> v(dim, cplx(0.0, 0.0));
    v[0] = 1.0;

    if (zeta.r != 0.0) {
        const CMatrix a = annihilation_matrix(dim);
        const CMatrix a2 = a * a;
        const cplx z = std::polar(zeta.r, zeta.theta);
        CMatrix gen = std::conj(z) * a2 - z * a2.adjoint();
        gen *= cplx(0.5, 0.0);
        v = matvec(expm(gen), v);
    }
    if (alpha != cplx(0.0, 0.0)) {
        const CMatrix a = annihilation_matrix(dim);
        const CMatrix gen = alpha * a.adjoint() - std::conj(alpha) * a;
        v = matvec(expm(gen), v);
    }

    FockVector out;
    out.amplitudes.assign(v.begin(), v.begin() + n_max);
    out.check_finite();
    const double tail = out.tail_mass();
    if (tail > tail_tol) throw_truncation("oracle_state_vector", tail, tail_tol);
    return out;
}

std::size_t default_n_max(double n_c, double n_s, double tail_tol) {
    if (n_c < 0.0 || n_s < 0.0) throw DegenerateInput("default_n_max: negative photon number");
    const double base = n_c + n_s + 10.0 * std::sqrt(n_c + n_s + 1.0);
    std::size_t n = std::size_t(std::ceil(base)) + 20;

    if (n_s > 1e-15) {
        // Squeezed-vacuum tail bound: P(2m) <= tau^{2m} / (mu sqrt(pi m)) and the
        // remaining mass is below P(2m) (1 + n_s).  Find the first m below
        // tail_tol/4, then shift by the coherent spread.
        const double mu = std::sqrt(1.0 + n_s);
        const double log_tau2 = std::log(n_s / (1.0 + n_s));
        const double target = std::log(std::max(tail_tol, 1e-300) / 4.0);
        std::size_t m = 1;
        while (true) {
            const double log_tail = -std::log(mu) - 0.5 * std::log(kPi * double(m)) +
                                    double(m) * log_tau2 + std::log1p(n_s);
            if (log_tail < target) break;
            if (++m > 200000)
                throw TruncationError("default_n_max: squeezed tail does not close");
        }
        const std::size_t shift = std::size_t(std::ceil(n_c + 10.0 * std::sqrt(n_c + 1.0))) + 10;
        n = std::max(n, 2 * m + shift);
    }
    return n;
}

} // namespace sqjc
