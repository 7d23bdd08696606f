#include <cmath>

#include <doctest.h>

#include "sqjc/errors.hpp"
#include "sqjc/states.hpp"

using namespace sqjc;

TEST_CASE("mixing weight limits") {
    const SqueezeParam none{};
    CHECK(mixing_weight(3.0, none) == 1.0);
    const SqueezeParam some = SqueezeParam::from_mean_photons(2.0);
    CHECK(mixing_weight(0.0, some) == 0.0);
    // 0/0 corner resolves to the r = 0 rule
    CHECK(mixing_weight(0.0, none) == 1.0);
}

TEST_CASE("mixing weight reproduces the n_c = 20 table") {
    // with a^2 = 20 the exponential corrections sit at ~1e-15, so the values
    // are sech r = 1/sqrt(1+n_s) to all shown digits
    const double expected[] = {1.0,
                               1.0 / std::sqrt(2.0),
                               1.0 / std::sqrt(3.0),
                               1.0 / std::sqrt(6.0),
                               1.0 / 3.0,
                               1.0 / std::sqrt(11.0)};
    const double ns[] = {0.0, 1.0, 2.0, 5.0, 8.0, 10.0};
    for (int i = 0; i < 6; ++i) {
        const SqueezeParam z = SqueezeParam::from_mean_photons(ns[i]);
        CHECK(mixing_weight(std::sqrt(20.0), z) == doctest::Approx(expected[i]).epsilon(1e-9));
    }
}

TEST_CASE("mixing weight decreases monotonically in r at fixed amplitude") {
    double prev = 2.0;
    for (double r = 0.05; r < 3.0; r += 0.15) {
        const double q = mixing_weight(2.5, SqueezeParam{r, 0.0});
        CHECK(q < prev);
        CHECK(q > 0.0);
        prev = q;
    }
}

TEST_CASE("pscs density is a unit-trace rank-1 projector") {
    const FieldParams p = FieldParams::pscs(0.0, 0.0);
    const DensityMatrix triv = pscs_density(p, 4);
    CHECK(std::abs(triv.matrix()(0, 0) - 1.0) == 0.0);
    CHECK(std::abs(triv.matrix()(1, 1)) == 0.0);

    const FieldParams p2 = FieldParams::pscs(20.0, 5.0);
    const std::size_t n_max = default_n_max(20.0, 5.0);
    const DensityMatrix rho = pscs_density(p2, n_max);
    rho.check_invariants();
    // projector: purity equals trace squared
    CHECK(rho.purity() == doctest::Approx(rho.trace_real() * rho.trace_real()).epsilon(1e-10));
    // diagonal equals the amplitude-based counting distribution
    const Pcd pcd = pscs_pcd_amplitude(p2, n_max);
    const auto diag = rho.diagonal();
    for (std::size_t n = 0; n < n_max; n += 7)
        CHECK(diag[n] == doctest::Approx(pcd.probabilities[n]).epsilon(1e-12));
}

TEST_CASE("mscs density limits and purity") {
    const std::size_t n_max = default_n_max(20.0, 5.0);
    const FieldParams coh = FieldParams::mscs_fixed(20.0, 5.0, 1.0);
    const DensityMatrix rho_coh = mscs_density(coh, n_max);
    const FockVector a = coherent_amplitudes(std::sqrt(20.0), n_max);
    CHECK(std::abs(rho_coh.matrix()(20, 21) -
                   a.amplitudes[20] * std::conj(a.amplitudes[21])) < 1e-15);

    const FieldParams sq = FieldParams::mscs_fixed(20.0, 5.0, 0.0);
    const DensityMatrix rho_sq = mscs_density(sq, n_max);
    const FockVector zv = squeezed_vacuum_amplitudes(SqueezeParam::from_mean_photons(5.0), n_max);
    CHECK(std::abs(rho_sq.matrix()(2, 4) - zv.amplitudes[2] * std::conj(zv.amplitudes[4])) <
          1e-15);

    // purity of the mixture: q^2 + (1-q)^2 + 2q(1-q)|<alpha|zeta>|^2
    const FieldParams mix = FieldParams::mscs_fixed(20.0, 5.0, 0.41);
    const DensityMatrix rho = mscs_density(mix, n_max);
    rho.check_invariants();
    const double ov = std::norm(inner_product(a, zv));
    const double q = 0.41;
    CHECK(rho.purity() ==
          doctest::Approx(q * q + (1 - q) * (1 - q) + 2 * q * (1 - q) * ov).epsilon(1e-10));
}

TEST_CASE("mscs pcd: closed cases against the density diagonal") {
    const FieldParams p = FieldParams::mscs_fixed(20.0, 1.0, 0.70);
    const std::size_t n_max = default_n_max(20.0, 1.0);
    const Pcd pcd = mscs_pcd(p, n_max);

    // P(0) = 0.70 e^{-20} + 0.30/sqrt(2) = 0.21213203...
    CHECK(pcd.probabilities[0] == doctest::Approx(0.2121320358).epsilon(1e-9));
    // odd levels carry only the Poisson part
    CHECK(pcd.probabilities[7] ==
          doctest::Approx(0.70 * std::exp(-20.0 + 7.0 * std::log(20.0) - std::lgamma(8.0)))
              .epsilon(1e-12));

    const auto diag = mscs_density(p, n_max).diagonal();
    double dmax = 0.0;
    for (std::size_t n = 0; n < n_max; ++n)
        dmax = std::max(dmax, std::abs(diag[n] - pcd.probabilities[n]));
    CHECK(dmax < 1e-12);
}

TEST_CASE("mscs pcd: q = 1 is Poisson") {
    const FieldParams p = FieldParams::mscs_fixed(20.0, 0.0, 1.0);
    const Pcd pcd = mscs_pcd(p, 120);
    CHECK(pcd.probabilities[20] == doctest::Approx(0.0888353173921).epsilon(1e-10));
    CHECK(pcd.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pcds across the preset parameter grid are normalized and nonnegative") {
    for (double n_c : {10.0, 20.0}) {
        for (double n_s : {0.0, 1.0, 2.0, 5.0, 8.0, 10.0}) {
            const std::size_t n_max = default_n_max(n_c, n_s);
            const Pcd ps = pscs_pcd_amplitude(FieldParams::pscs(n_c, n_s), n_max);
            const Pcd ms = mscs_pcd(FieldParams::mscs_derived(n_c, n_s), n_max);
            for (const Pcd* pcd : {&ps, &ms}) {
                CHECK(pcd->sum() == doctest::Approx(1.0).epsilon(1e-9));
                double lowest = 0.0;
                for (double v : pcd->probabilities) lowest = std::min(lowest, v);
                CHECK(lowest >= 0.0);
            }
        }
    }
}

TEST_CASE("pscs pcd closed Hermite form: power-n prefactor matches, squared does not") {
    const FieldParams p = FieldParams::pscs(20.0, 1.0);
    const std::size_t n_max = default_n_max(20.0, 1.0);
    const PcdFormDeviation dev = pscs_pcd_form_deviation(p, n_max);
    CHECK(dev.power_n_prefactor < 1e-10);
    CHECK(dev.squared_prefactor > 1e-3); // the fixed-exponent variant is far off
}

TEST_CASE("pscs pcd: n_s = 0 reduces to Poisson and localization shows at n_s = 1") {
    const std::size_t n_max = default_n_max(20.0, 1.0);
    const Pcd poisson = pscs_pcd_amplitude(FieldParams::pscs(20.0, 0.0), n_max);
    const Pcd squeezed = pscs_pcd_amplitude(FieldParams::pscs(20.0, 1.0), n_max);
    double peak0 = 0.0, peak1 = 0.0;
    for (double v : poisson.probabilities) peak0 = std::max(peak0, v);
    for (double v : squeezed.probabilities) peak1 = std::max(peak1, v);
    CHECK(peak0 == doctest::Approx(0.0888353173921).epsilon(1e-10));
    CHECK(peak1 >= 1.8 * peak0);
}

TEST_CASE("mscs pcd keeps the coherent peak flat (no localization)") {
    const std::size_t n_max = default_n_max(20.0, 1.0);
    const Pcd base = mscs_pcd(FieldParams::mscs_derived(20.0, 0.0), n_max);
    const Pcd mixed = mscs_pcd(FieldParams::mscs_derived(20.0, 1.0), n_max);
    // peak of the coherent structure: window n_c +- 3 sqrt(n_c)
    const std::size_t lo = 20 - 13, hi = 20 + 14;
    double peak0 = 0.0, peak1 = 0.0;
    for (std::size_t n = lo; n <= hi; ++n) {
        peak0 = std::max(peak0, base.probabilities[n]);
        peak1 = std::max(peak1, mixed.probabilities[n]);
    }
    CHECK(peak1 <= 1.05 * peak0);
}

TEST_CASE("mean photon number of the mixture") {
    const FieldParams p = FieldParams::mscs_fixed(20.0, 5.0, 0.41);
    CHECK(mean_photon_mscs(p) == doctest::Approx(11.15).epsilon(1e-14));
    CHECK(mean_photon_mscs(FieldParams::mscs_fixed(20.0, 5.0, 1.0)) == 20.0);
    CHECK(mean_photon_mscs(FieldParams::mscs_fixed(20.0, 5.0, 0.0)) == 5.0);

    // against the trace of n rho
    const std::size_t n_max = default_n_max(20.0, 5.0);
    const DensityMatrix rho = mscs_density(p, n_max);
    double tr = 0.0;
    for (std::size_t n = 0; n < n_max; ++n) tr += double(n) * rho.matrix()(n, n).real();
    CHECK(tr == doctest::Approx(11.15).epsilon(1e-8));
}

TEST_CASE("field params validate their invariants") {
    CHECK_THROWS_AS(FieldParams::mscs_fixed(10.0, 1.0, 1.5), DegenerateInput);
    CHECK_THROWS_AS(FieldParams::pscs(-1.0, 0.0), DegenerateInput);
    const FieldParams p = FieldParams::pscs(12.0, 3.0, 0.7, 0.3);
    CHECK(std::norm(p.alpha) == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(p.zeta.mean_photons() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("density matrix invariant checks flag tampering") {
    const FieldParams p = FieldParams::mscs_derived(10.0, 1.0);
    const std::size_t n_max = default_n_max(10.0, 1.0);
    const DensityMatrix good = mscs_density(p, n_max);
    CHECK_NOTHROW(good.check_invariants(kDefaultTailTol, true));

    CMatrix bad = good.matrix();
    bad(3, 5) += cplx(0.0, 1e-6);
    CHECK_THROWS_AS(DensityMatrix(bad).check_invariants(), NotHermitian);

    CMatrix scaled = good.matrix();
    scaled *= cplx(0.9, 0.0);
    CHECK_THROWS_AS(DensityMatrix(scaled).check_invariants(), TruncationError);
}
