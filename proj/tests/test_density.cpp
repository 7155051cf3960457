#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "diskharm/density.hpp"

using namespace diskharm;
using std::numbers::pi;

namespace {

const RadialGrid kGrid{10.0, 400};
const SpectralGrid kSpec{20.0, 200};

SampleSet small_set() {
    return SampleSet::uniform({{0.5, 1.2}, {2.1, 0.4}, {4.0, 1.6}, {1.0, 0.8}, {5.5, 1.1}});
}

}  // namespace

TEST_CASE("kernel normalization gives unit mass") {
    auto k = RadialKernel::power_cosh(4.0);
    CHECK(k.normalization == doctest::Approx((4.0 - 1.0) / (2 * pi)));
    // 2 pi Int k(cosh tau) sinh tau dtau = 1
    auto w = kGrid.trapezoid_weights();
    auto taus = kGrid.nodes();
    auto profile = k.radial_profile(kGrid);
    double mass = 0.0;
    for (std::size_t j = 0; j < profile.size(); ++j)
        mass += profile[j] * std::sinh(taus[j]) * w[j];
    CHECK(2 * pi * mass == doctest::Approx(1.0).epsilon(1e-3));  // trapezoid O(h^2)
    CHECK_THROWS_AS(RadialKernel::power_cosh(1.0), std::invalid_argument);
}

TEST_CASE("sample sets validate and normalize weights") {
    CHECK_THROWS_AS(SampleSet::uniform({}), std::invalid_argument);
    CHECK_THROWS_AS(SampleSet::weighted({{0.0, 1.0}}, {-1.0}), std::invalid_argument);
    auto s = SampleSet::weighted({{0.0, 1.0}, {1.0, 2.0}}, {2.0, 6.0});
    CHECK(s.weights[0] == doctest::Approx(0.25));
    CHECK(s.weights[1] == doctest::Approx(0.75));
}

TEST_CASE("data coefficients of single samples") {
    SpectralGrid sg{10.0, 40};
    auto origin = SampleSet::uniform({{0.9, 0.0}});
    auto g0 = data_coefficients(origin, 0, sg);
    auto g2 = data_coefficients(origin, 2, sg);
    for (std::size_t i = 0; i < g0.size(); ++i) {
        CHECK(g0[i] == std::complex<double>(1.0, 0.0));
        CHECK(std::abs(g2[i]) == 0.0);
    }

    // one sample off the origin: gamma = -e^{-i phi} P^{-1}(cosh tau), the
    // sign coming from the law-of-cosines expansion at order 1
    auto one = SampleSet::uniform({{0.4, 1.2}});
    auto g1 = data_coefficients(one, 1, sg);
    auto kappas = sg.nodes();
    for (std::size_t i = 0; i < g1.size(); ++i) {
        auto expected = -std::polar(conical_p(-1, kappas[i], 1.2), -0.4);
        CHECK(std::abs(g1[i] - expected) < 1e-14);
    }
}

TEST_CASE("kde_direct is Moebius invariant through the coset chart") {
    auto samples = small_set();
    auto k = RadialKernel::power_cosh(3.0);
    double at_chart = kde_direct(samples, k, 0.7, 0.9);
    double at_point = kde_direct(samples, k, disk_from_coset(0.7, 0.9));
    CHECK(at_chart == doctest::Approx(at_point).epsilon(1e-12));
}

TEST_CASE("spectral estimator matches direct summation") {
    auto samples = small_set();
    auto k = RadialKernel::power_cosh(4.0);
    DensityPlan plan(kGrid, kSpec, 24);
    auto d = kde_spectral(samples, k, plan);

    std::vector<double> phis{0.0, 1.3, 2.9, 4.4};
    std::vector<double> taus{0.2, 0.7, 1.3, 2.0};
    auto synth = d.synthesize_grid(phis, taus, /*clip_negative=*/false);
    double sup_direct = 0.0, sup_err = 0.0;
    for (std::size_t a = 0; a < phis.size(); ++a)
        for (std::size_t j = 0; j < taus.size(); ++j) {
            double direct = kde_direct(samples, k, phis[a], taus[j]);
            sup_direct = std::max(sup_direct, std::abs(direct));
            sup_err = std::max(sup_err, std::abs(direct - synth.at(a, j)));
        }
    CHECK(sup_err < 0.02 * sup_direct);
    CHECK(d.mass() == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("binned estimator equals the exact one for on-node samples") {
    // place samples exactly on histogram bin centers and radial nodes
    const int n_phi = 64;
    double dtau = kGrid.step();
    auto samples = SampleSet::uniform({{2 * pi * 5 / n_phi, 40 * dtau},
                                       {2 * pi * 20 / n_phi, 25 * dtau},
                                       {2 * pi * 43 / n_phi, 60 * dtau}});
    auto k = RadialKernel::power_cosh(4.0);
    DensityPlan plan(kGrid, kSpec, 8);
    auto exact = kde_spectral(samples, k, plan);
    auto hist = PolarHistogram::bin(samples, n_phi, kGrid);
    auto binned = kde_spectral_binned(hist, k, plan);
    for (int m = 0; m <= 8; ++m)
        for (std::size_t i = 0; i < exact.spectrum(m).size(); ++i)
            CHECK(std::abs(exact.spectrum(m)[i] - binned.spectrum(m)[i]) < 1e-12);
}

TEST_CASE("kernel_weights at m = 0 is the zonal MFT of the kernel") {
    auto k = RadialKernel::power_cosh(3.0);
    MftPlan plan(kGrid, kSpec);
    auto via_plan = plan.forward({kGrid, k.radial_profile(kGrid)});
    auto direct = kernel_weights(k, 0, kSpec, kGrid);
    for (std::size_t i = 0; i < direct.values.size(); ++i)
        CHECK(direct.values[i] == doctest::Approx(via_plan.values[i]).epsilon(1e-12));
}

TEST_CASE("normalization scales the density to unit mass") {
    auto samples = small_set();
    DensityPlan plan(kGrid, kSpec, 4);
    auto d = kde_spectral(samples, RadialKernel::power_cosh(4.0), plan);
    d.normalize();
    CHECK(d.mass() == doctest::Approx(1.0).epsilon(1e-12));

    RadialFunction f{kGrid, std::vector<double>(kGrid.n_tau, 1e-3)};
    density_normalize(f);
    double mass = 0.0;
    auto w = kGrid.trapezoid_weights();
    auto taus = kGrid.nodes();
    for (std::size_t j = 0; j < f.values.size(); ++j)
        mass += f.values[j] * std::sinh(taus[j]) * w[j];
    CHECK(2 * pi * mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rotating all samples leaves the zonal spectrum unchanged") {
    auto samples = small_set();
    auto rotated = samples;
    for (auto& p : rotated.points) p.phi += 1.234;
    DensityPlan plan(kGrid, kSpec, 6);
    auto k = RadialKernel::power_cosh(4.0);
    auto a = kde_spectral(samples, k, plan).zonal_spectrum();
    auto b = kde_spectral(rotated, k, plan).zonal_spectrum();
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(std::abs(a.values[i] - b.values[i]) < 1e-12);
}
