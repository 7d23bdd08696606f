// dynamics.cpp
#include "sqjc/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "sqjc/entanglement.hpp"
#include "sqjc/errors.hpp"

namespace sqjc {

TimeGrid TimeGrid::uniform(double t_max, std::size_t count, double t_min) {
    if (count < 2) throw DegenerateInput("TimeGrid: need at least 2 points");
    if (!(t_max > t_min)) throw DegenerateInput("TimeGrid: t_max must exceed t_min");
    TimeGrid g;
    g.points.resize(count);
    const double dt = (t_max - t_min) / double(count - 1);
    for (std::size_t i = 0; i < count; ++i) g.points[i] = t_min + dt * double(i);
    return g;
}

void TimeGrid::validate() const {
    if (points.empty()) throw DegenerateInput("TimeGrid: empty");
    if (points.front() < 0.0) throw DegenerateInput("TimeGrid: negative start");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i] > points[i - 1])) throw DegenerateInput("TimeGrid: not increasing");
}

EvolutionBlocks evolution_blocks(double t, std::size_t n_max) {
    if (t < 0.0) throw DegenerateInput("evolution_blocks: t must be >= 0");
    EvolutionBlocks b;
    b.n_max = n_max;
    b.cos_excited.resize(n_max);
    b.cos_ground.resize(n_max);
    b.sin_excited.resize(n_max);
    b.sinc_ground.resize(n_max);
    for (std::size_t n = 0; n < n_max; ++n) {
        const double re = std::sqrt(double(n) + 1.0);
        const double rg = std::sqrt(double(n));
        b.cos_excited[n] = std::cos(t * re);
        b.cos_ground[n] = std::cos(t * rg);
        b.sin_excited[n] = std::sin(t * re);
        b.sinc_ground[n] = n == 0 ? t : std::sin(t * rg) / rg;
    }
    return b;
}

CMatrix EvolutionBlocks::cos_excited_matrix() const {
    CMatrix m(n_max, n_max);
    for (std::size_t n = 0; n < n_max; ++n) m(n, n) = cos_excited[n];
    return m;
}

CMatrix EvolutionBlocks::cos_ground_matrix() const {
    CMatrix m(n_max, n_max);
    for (std::size_t n = 0; n < n_max; ++n) m(n, n) = cos_ground[n];
    return m;
}

CMatrix EvolutionBlocks::sin_raising_matrix() const {
    CMatrix m(n_max, n_max);
    for (std::size_t n = 0; n + 1 < n_max; ++n) m(n + 1, n) = cplx(0.0, -sin_excited[n]);
    return m;
}

CMatrix EvolutionBlocks::sin_lowering_matrix() const {
    CMatrix m(n_max, n_max);
    for (std::size_t n = 1; n < n_max; ++n)
        m(n - 1, n) = cplx(0.0, -std::sqrt(double(n)) * sinc_ground[n]);
    return m;
}

CMatrix EvolutionBlocks::unitary() const {
    const CMatrix c = cos_excited_matrix();
    const CMatrix cp = cos_ground_matrix();
    const CMatrix s = sin_raising_matrix();
    const CMatrix sp = sin_lowering_matrix();
    CMatrix u(2 * n_max, 2 * n_max);
    for (std::size_t i = 0; i < n_max; ++i)
        for (std::size_t j = 0; j < n_max; ++j) {
            u(i, j) = c(i, j);
            u(i, n_max + j) = sp(i, j);
            u(n_max + i, j) = s(i, j);
            u(n_max + i, n_max + j) = cp(i, j);
        }
    return u;
}

JointDensity::JointDensity(CMatrix m, std::size_t n_max) : matrix_(std::move(m)), n_max_(n_max) {
    if (matrix_.rows() != 2 * n_max_ || matrix_.cols() != 2 * n_max_)
        throw DimensionMismatch("JointDensity: matrix must be 2 n_max square");
}

void JointDensity::check_invariants(double tail_tol, bool check_psd) const {
    if (matrix_.hermiticity_defect() > 1e-12)
        throw NotHermitian("JointDensity: Hermiticity defect above 1e-12");
    const double tr = trace_real();
    if (tr > 1.0 + 1e-12 || tr < 1.0 - tail_tol) {
        std::ostringstream os;
        os << "JointDensity: trace " << tr << " outside [1 - " << tail_tol << ", 1]";
        throw TruncationError(os.str());
    }
    if (check_psd) {
        const Spectrum sp = hermitian_eigenvalues(matrix_);
        if (!sp.eigenvalues.empty() && sp.eigenvalues.front() < -1e-10)
            throw NonConvergence("JointDensity: negative eigenvalue beyond tolerance");
    }
}

JointDensity evolve_joint(const DensityMatrix& rho_field, double t) {
    const std::size_t n = rho_field.dim();
    const EvolutionBlocks b = evolution_blocks(t, n);
    const CMatrix& rho = rho_field.matrix();

    CMatrix m(2 * n, 2 * n);
    const std::vector<double>& ce = b.cos_excited;
    const std::vector<double>& se = b.sin_excited;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // ee = C rho C
            m(i, j) = ce[i] * rho(i, j) * ce[j];
            // ge = S rho C; eg fills in as its adjoint
            if (i >= 1) {
                const cplx v = cplx(0.0, -se[i - 1]) * rho(i - 1, j) * ce[j];
                m(n + i, j) = v;
                m(j, n + i) = std::conj(v);
            }
            // gg = S rho S†
            if (i >= 1 && j >= 1) m(n + i, n + j) = se[i - 1] * rho(i - 1, j - 1) * se[j - 1];
        }
    }
    return JointDensity(std::move(m), n);
}

DensityMatrix reduce_to_atom(const JointDensity& joint) {
    const std::size_t n = joint.n_max();
    CMatrix atom(2, 2);
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t sp = 0; sp < 2; ++sp) {
            cplx sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += joint.block_entry(s, k, sp, k);
            atom(s, sp) = sum;
        }
    return DensityMatrix(std::move(atom));
}

TimeSeries inversion_series(const Pcd& pcd, const TimeGrid& grid) {
    grid.validate();
    TimeSeries out;
    out.times = grid.points;
    out.values.resize(grid.count());
    for (std::size_t i = 0; i < grid.count(); ++i) {
        const double t2 = 2.0 * grid.points[i];
        double w = 0.0;
        for (std::size_t n = 0; n < pcd.n_max(); ++n)
            w += pcd.probabilities[n] * std::cos(t2 * std::sqrt(double(n) + 1.0));
        out.values[i] = w;
    }
    return out;
}

TimeSeries inversion_mscs_closed(const FieldParams& params, const TimeGrid& grid,
                                 std::size_t n_max) {
    if (params.kind != FieldKind::MSCS)
        throw DegenerateInput("inversion_mscs_closed: kind must be MSCS");
    grid.validate();

    const double q = params.q;
    const double n_c = params.n_c;
    const double n_s = params.n_s;
    const double log_nc = n_c > 0.0 ? std::log(n_c) : 0.0;
    const double log_ratio = n_s > 0.0 ? std::log(n_s / (1.0 + n_s)) : 0.0;

    // weights of the split series, evaluated in log space term by term
    std::vector<double> even_w, odd_w;
    std::vector<double> even_root, odd_root;
    for (std::size_t k = 0; k < n_max; ++k) {
        if (k % 2 == 0) {
            const double m = double(k) / 2.0;
            double w = 0.0;
            if (q > 0.0 && n_c > 0.0)
                w += q * std::exp(-n_c + double(k) * log_nc - std::lgamma(double(k) + 1.0));
            else if (q > 0.0 && k == 0)
                w += q;
            if (q < 1.0) {
                if (n_s > 0.0)
                    w += (1.0 - q) * std::exp(-0.5 * std::log1p(n_s) +
                                              std::lgamma(double(k) + 1.0) -
                                              double(k) * std::log(2.0) -
                                              2.0 * std::lgamma(m + 1.0) + m * log_ratio);
                else if (k == 0)
                    w += 1.0 - q;
            }
            even_w.push_back(w);
            even_root.push_back(std::sqrt(double(k) + 1.0));
        } else {
            double w = 0.0;
            if (q > 0.0 && n_c > 0.0)
                w = q * std::exp(-n_c + double(k) * log_nc - std::lgamma(double(k) + 1.0));
            odd_w.push_back(w);
            odd_root.push_back(std::sqrt(double(k) + 1.0));
        }
    }

    TimeSeries out;
    out.times = grid.points;
    out.values.resize(grid.count());
    for (std::size_t i = 0; i < grid.count(); ++i) {
        const double t2 = 2.0 * grid.points[i];
        double w = 0.0;
        for (std::size_t k = 0; k < even_w.size(); ++k) w += even_w[k] * std::cos(t2 * even_root[k]);
        for (std::size_t k = 0; k < odd_w.size(); ++k) w += odd_w[k] * std::cos(t2 * odd_root[k]);
        out.values[i] = w;
    }
    return out;
}

TimeSeries inversion_trace(const DensityMatrix& rho_field, const TimeGrid& grid) {
    grid.validate();
    TimeSeries out;
    out.times = grid.points;
    out.values.resize(grid.count());
    for (std::size_t i = 0; i < grid.count(); ++i) {
        const JointDensity joint = evolve_joint(rho_field, grid.points[i]);
        const DensityMatrix atom = reduce_to_atom(joint);
        out.values[i] = (atom.matrix()(0, 0) - atom.matrix()(1, 1)).real();
    }
    return out;
}

EvolvedComponent evolve_component(const FockVector& psi, const EvolutionBlocks& blocks) {
    const std::size_t n = blocks.n_max;
    if (psi.n_max() != n) throw DimensionMismatch("evolve_component: dimension mismatch");
    EvolvedComponent ec;
    ec.excited.resize(n);
    ec.ground.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        ec.excited[k] = blocks.cos_excited[k] * psi.amplitudes[k];
        ec.ground[k] = k >= 1 ? cplx(0.0, -blocks.sin_excited[k - 1]) * psi.amplitudes[k - 1]
                              : cplx(0.0, 0.0);
    }
    return ec;
}

} // namespace sqjc
