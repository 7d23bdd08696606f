// fock.hpp -- pure field states in a truncated number basis.
//
// Builders return amplitude vectors with a certified tail: the mass left
// outside the retained basis must stay below the caller's tolerance, or a
// TruncationError is raised.  All factorial-weighted magnitudes are formed
// in log space so photon numbers beyond ~170 stay finite.
#pragma once

#include <cstddef>
#include <vector>

#include "sqjc/linalg.hpp"

namespace sqjc {

inline constexpr double kDefaultTailTol = 1e-10;

// Squeeze parameter zeta = r e^{i theta}, r >= 0.
struct SqueezeParam {
    double r = 0.0;
    double theta = 0.0;

    // r = asinh(sqrt(n_s)) so that sinh^2 r equals the mean photon number.
    static SqueezeParam from_mean_photons(double n_s, double theta = 0.0);
    double mean_photons() const;
};

// Amplitudes of a pure state over |0 .. n_max-1>.
struct FockVector {
    std::vector<cplx> amplitudes;

    std::size_t n_max() const { return amplitudes.size(); }
    double norm_sq() const;
    // Mass outside the retained basis, assuming the untruncated state is
    // normalized (true for every builder in this header).
    double tail_mass() const;
    void check_finite() const;
};

cplx inner_product(const FockVector& bra, const FockVector& ket);

// <n|alpha> = exp(-|alpha|^2/2) alpha^n / sqrt(n!)
FockVector coherent_amplitudes(cplx alpha, std::size_t n_max,
                               double tail_tol = kDefaultTailTol);

// S(zeta)|0>: only even levels populated,
// c_{2m} = (1/sqrt(cosh r)) (-e^{i theta} tanh r)^m sqrt((2m)!) / (2^m m!).
FockVector squeezed_vacuum_amplitudes(const SqueezeParam& zeta, std::size_t n_max,
                                      double tail_tol = kDefaultTailTol);

// D(alpha) S(zeta)|0> via the three-term recurrence implied by
// [(a - alpha) cosh r + (a† - alpha*) e^{i theta} sinh r] |alpha,zeta> = 0,
// seeded with the closed-form ground amplitude.
FockVector squeezed_coherent_amplitudes(cplx alpha, const SqueezeParam& zeta,
                                        std::size_t n_max,
                                        double tail_tol = kDefaultTailTol);

// Physicists' Hermite polynomial H_n(x) by the recurrence
// H_{n+1} = 2x H_n - 2n H_{n-1}.  Overflows double around n ~ 150 for
// moderate x; use hermite_log where that matters.
double hermite_poly(unsigned n, double x);

// Sign and log magnitude, safe for large n.
struct SignedLog {
    double log_abs;   // -inf when the value is exactly zero
    double sign;      // -1, 0, +1
};
SignedLog hermite_log(unsigned n, double x);

// Ground truth for the amplitude builders: S(zeta)|0> and D(alpha)(.) from
// explicit matrix exponentials of (zeta* a^2 - zeta a†^2)/2 and
// (alpha a† - alpha* a) on a padded space, truncated back to n_max.
FockVector oracle_state_vector(cplx alpha, const SqueezeParam& zeta,
                               std::size_t n_max, std::size_t padding = 40,
                               double tail_tol = kDefaultTailTol);

// Basis size that certifies the tail for a displaced/squeezed state with the
// given mean photon numbers.  The squeezed component decays geometrically
// (ratio tanh^2 r per photon pair), so the Poisson-style window alone is not
// enough once n_s grows; the bound below accounts for both.
std::size_t default_n_max(double n_c, double n_s, double tail_tol = kDefaultTailTol);

} // namespace sqjc
