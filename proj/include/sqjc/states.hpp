// states.hpp -- field density operators, mixing weight, photon counting.
#pragma once

#include <cstddef>
#include <vector>

#include "sqjc/fock.hpp"
#include "sqjc/linalg.hpp"

namespace sqjc {

enum class FieldKind { PSCS, MSCS };

// Physical parameters of the radiation field.  The amplitude and squeeze
// magnitude are derived from the mean photon numbers, so |alpha|^2 == n_c and
// sinh^2 r == n_s hold by construction.
struct FieldParams {
    FieldKind kind = FieldKind::PSCS;
    double n_c = 0.0;
    double n_s = 0.0;
    cplx alpha = 0.0;
    SqueezeParam zeta;
    double q = 1.0; // mixing weight; meaningful for MSCS only

    static FieldParams pscs(double n_c, double n_s, double alpha_phase = 0.0,
                            double theta = 0.0);
    // q from the equal-coherent-overlap rule (real alpha).
    static FieldParams mscs_derived(double n_c, double n_s, double theta = 0.0);
    static FieldParams mscs_fixed(double n_c, double n_s, double q,
                                  double alpha_phase = 0.0, double theta = 0.0);

    void validate() const;
};

// Photon counting distribution P(n), n = 0 .. n_max-1.
struct Pcd {
    std::vector<double> probabilities;

    double sum() const;
    double mean() const;
    double second_moment() const;
    // <n(n-1)>
    double second_factorial_moment() const;
    std::size_t n_max() const { return probabilities.size(); }
};

// Hermitian unit-trace matrix over a truncated basis.  States assembled from
// pure components keep the (weight, amplitudes) list around; the low-rank
// evolution and entanglement paths use it, everything else sees the matrix.
class DensityMatrix {
public:
    struct Component {
        double weight;
        FockVector state;
    };

    explicit DensityMatrix(CMatrix m);
    DensityMatrix(std::vector<Component> comps, std::size_t dim);

    std::size_t dim() const { return matrix_.rows(); }
    const CMatrix& matrix() const { return matrix_; }
    bool has_components() const { return !components_.empty(); }
    const std::vector<Component>& components() const { return components_; }

    double trace_real() const;
    double purity() const; // tr(rho^2)
    std::vector<double> diagonal() const;

    // Hermiticity, trace window, optionally positive semidefiniteness
    // (the PSD check decomposes the matrix and is priced accordingly).
    void check_invariants(double tail_tol = kDefaultTailTol, bool check_psd = false) const;

private:
    CMatrix matrix_;
    std::vector<Component> components_;
};

// Weight of the coherent component that gives the mixed state the same
// coherent-state overlap as the pure squeezed coherent state:
//   q = sech r [1 - exp(-a^2 (1+tanh r))] / [1 - sech r exp(-a^2 (1+tanh r))]
// At r = 0 this is exactly 1 for any a > 0; at a = 0 it is 0 for any r > 0.
// Both zero is a 0/0 corner: returns 1 (the r = 0 rule) and warns on stderr.
double mixing_weight(double alpha_r, const SqueezeParam& zeta);

DensityMatrix pscs_density(const FieldParams& params, std::size_t n_max,
                           double tail_tol = kDefaultTailTol);
DensityMatrix mscs_density(const FieldParams& params, std::size_t n_max,
                           double tail_tol = kDefaultTailTol);

// PSCS counting distribution as |<n|alpha,zeta>|^2 from the amplitude vector.
Pcd pscs_pcd_amplitude(const FieldParams& params, std::size_t n_max,
                       double tail_tol = kDefaultTailTol);

// MSCS counting distribution: q Poisson(n_c) everywhere, plus the squeezed
// even-level term (1-q)/sqrt(1+n_s) (n!/(2^n ((n/2)!)^2)) (n_s/(1+n_s))^{n/2}.
Pcd mscs_pcd(const FieldParams& params, std::size_t n_max);

// q n_c + (1-q) n_s
double mean_photon_mscs(const FieldParams& params);

// Hermite-polynomial closed form of the PSCS counting distribution.  Two
// prefactor conventions circulate: one fixes the exponent of (nu/2mu) at 2,
// the other scales it with n.  Only the power-n variant agrees with the
// amplitude-based distribution; both are kept for the diagnostic report.
enum class HermitePcdPrefactor { Squared, PowerN };
Pcd pscs_pcd_hermite(const FieldParams& params, std::size_t n_max,
                     HermitePcdPrefactor prefactor);

struct PcdFormDeviation {
    double squared_prefactor; // max |closed form - amplitude form|
    double power_n_prefactor;
};
PcdFormDeviation pscs_pcd_form_deviation(const FieldParams& params, std::size_t n_max);

} // namespace sqjc
