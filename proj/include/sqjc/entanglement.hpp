// entanglement.hpp -- partial transpose, Hermitian spectra, negativity.
#pragma once

#include <cstddef>
#include <vector>

#include "sqjc/dynamics.hpp"
#include "sqjc/linalg.hpp"

namespace sqjc {

// Real eigenvalues in ascending order.
struct Spectrum {
    std::vector<double> eigenvalues;
    double sum() const;
};

// Swap the atom indices, leave field indices alone:
// (s,n),(s',m) -> (s',n),(s,m).  On the block layout this exchanges the two
// off-diagonal blocks.  Involutive and trace preserving.
CMatrix partial_transpose_atom(const JointDensity& joint);

// All eigenvalues of a Hermitian matrix by cyclic Jacobi rotations with a
// relative off-diagonal tolerance of 1e-12.  The input is checked for
// Hermiticity (defect <= 1e-10 relative to scale) and symmetrized first.
Spectrum hermitian_eigenvalues(const CMatrix& m);

struct EigenSystem {
    std::vector<double> eigenvalues; // ascending
    CMatrix eigenvectors;            // columns, matching order
};
EigenSystem hermitian_eigensystem(const CMatrix& m);

// N = sum of |negative eigenvalues| of the partial transpose.  Eigenvalues in
// (-1e-10, 0) count as truncation noise and are dropped.
double negativity(const JointDensity& joint);

// Negativity of the evolved state at time t.  States carrying their pure
// components are handled in the exact invariant subspace spanned by the
// evolved components (the partial transpose annihilates its complement), so
// only a <= 2*rank-dimensional Hermitian problem is solved.  Other states go
// through the dense path.
double negativity_of_field(const DensityMatrix& rho_field, double t);

TimeSeries negativity_series(const DensityMatrix& rho_field, const TimeGrid& grid);

// log2(2N + 1), reported alongside N where requested.
double log_negativity(double negativity);

} // namespace sqjc
