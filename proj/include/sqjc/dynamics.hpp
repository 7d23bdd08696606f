// dynamics.hpp -- resonant Jaynes-Cummings evolution of atom (x) field states.
//
// Everything is parameterized by the dimensionless time lambda*t.  The atom
// starts excited; the composite basis is atom-major, excited block first:
// index (s, n) -> s * n_max + n with s = 0 excited, s = 1 ground.
#pragma once

#include <cstddef>
#include <vector>

#include "sqjc/linalg.hpp"
#include "sqjc/states.hpp"

namespace sqjc {

struct TimeGrid {
    std::vector<double> points;

    static TimeGrid uniform(double t_max, std::size_t count, double t_min = 0.0);
    void validate() const; // strictly increasing, first point >= 0
    std::size_t count() const { return points.size(); }
};

struct TimeSeries {
    std::vector<double> times;
    std::vector<double> values;
};

// Diagonal data of the four propagator blocks.  In the number basis the
// excited-sector cosine is diag(cos(t sqrt(n+1))), the ground-sector cosine
// diag(cos(t sqrt(n))); the off-diagonal blocks are one-step raising and
// lowering shifts with amplitudes -i sin(t sqrt(n)).  The n = 0 entry of
// sin(t sqrt(n))/sqrt(n) is its limit t.
struct EvolutionBlocks {
    std::size_t n_max = 0;
    std::vector<double> cos_excited; // cos(t sqrt(n+1))
    std::vector<double> cos_ground;  // cos(t sqrt(n))
    std::vector<double> sin_excited; // sin(t sqrt(n+1))
    std::vector<double> sinc_ground; // sin(t sqrt(n))/sqrt(n), entry 0 = t

    CMatrix cos_excited_matrix() const;  // C
    CMatrix cos_ground_matrix() const;   // C'
    CMatrix sin_raising_matrix() const;  // S: entries (n+1, n) = -i sin(t sqrt(n+1))
    CMatrix sin_lowering_matrix() const; // S': entries (n-1, n) = -i sin(t sqrt(n))
    // [[C, S'], [S, C']] on the 2 n_max composite space
    CMatrix unitary() const;
};

EvolutionBlocks evolution_blocks(double t, std::size_t n_max);

// Joint atom-field density matrix, atom-major blocks [[ee, eg], [ge, gg]].
class JointDensity {
public:
    JointDensity(CMatrix m, std::size_t n_max);

    std::size_t n_max() const { return n_max_; }
    std::size_t dim() const { return 2 * n_max_; }
    const CMatrix& matrix() const { return matrix_; }

    cplx block_entry(std::size_t s, std::size_t n, std::size_t sp, std::size_t m) const {
        return matrix_(s * n_max_ + n, sp * n_max_ + m);
    }

    double trace_real() const { return matrix_.trace().real(); }
    void check_invariants(double tail_tol = kDefaultTailTol, bool check_psd = false) const;

private:
    CMatrix matrix_;
    std::size_t n_max_;
};

// U(t) (rho_F (x) |e><e|) U†(t).  The blocks reduce to
//   ee = C rho C,  ge = S rho C,  eg = ge†,  gg = S rho S†,
// evaluated through the diagonal/shift structure of the propagator.
JointDensity evolve_joint(const DensityMatrix& rho_field, double t);

// Trace over the field; returns the 2x2 atomic state.
DensityMatrix reduce_to_atom(const JointDensity& joint);

// W(t) = sum_n P(n) cos(2 t sqrt(n+1))
TimeSeries inversion_series(const Pcd& pcd, const TimeGrid& grid);

// Split-series form for the mixed state: even levels pair with
// cos(2t sqrt(2n+1)), odd levels with cos(2t sqrt(2n+2)); each weight is
// evaluated directly from the closed-form counting distribution.
TimeSeries inversion_mscs_closed(const FieldParams& params, const TimeGrid& grid,
                                 std::size_t n_max);

// W(t) = tr(rho_atom(t) sigma_z) through the full joint evolution; the oracle
// the series forms are checked against.
TimeSeries inversion_trace(const DensityMatrix& rho_field, const TimeGrid& grid);

// One pure field component pushed through U(t): excited part C psi, ground
// part S psi.  Feeds the low-rank entanglement path.
struct EvolvedComponent {
    std::vector<cplx> excited;
    std::vector<cplx> ground;
};
EvolvedComponent evolve_component(const FockVector& psi, const EvolutionBlocks& blocks);

} // namespace sqjc
