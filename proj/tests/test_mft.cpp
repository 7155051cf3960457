#include <doctest.h>

#include <cmath>
#include <vector>

#include "diskharm/mft.hpp"

using namespace diskharm;

namespace {

RadialFunction cosh_power(const RadialGrid& grid, double s) {
    RadialFunction f{grid, {}};
    for (double tau : grid.nodes()) f.values.push_back(std::pow(std::cosh(tau), -s));
    return f;
}

// Relative L2 error in the transform's own space, i.e. against sinh(tau) dtau.
double weighted_rel_l2(const RadialFunction& a, const RadialFunction& b) {
    auto w = a.grid.trapezoid_weights();
    auto taus = a.grid.nodes();
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < a.values.size(); ++j) {
        double m = w[j] * std::sinh(taus[j]);
        double d = a.values[j] - b.values[j];
        num += d * d * m;
        den += a.values[j] * a.values[j] * m;
    }
    return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS((RadialGrid{-1.0, 100}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((RadialGrid{10.0, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SpectralGrid{0.0, 100}.validate()), std::invalid_argument);
}

TEST_CASE("round-trip recovers cosh powers on the default grids") {
    MftPlan plan({}, {});
    for (double s : {2.0, 3.0, 4.0}) {
        auto f = cosh_power(plan.radial_grid(), s);
        auto back = plan.inverse(plan.forward(f));
        CHECK(weighted_rel_l2(f, back) < 1e-3);
    }
}

TEST_CASE("plan and one-shot transforms agree") {
    RadialGrid rg{8.0, 200};
    SpectralGrid sg{12.0, 120};
    MftPlan plan(rg, sg);
    auto f = cosh_power(rg, 3.0);
    auto c1 = plan.forward(f);
    auto c2 = mft_forward(f, sg);
    for (std::size_t i = 0; i < c1.values.size(); ++i) CHECK(c1.values[i] == c2.values[i]);
}

TEST_CASE("Parseval: self inner product of (cosh)^(-2) equals 1/3") {
    MftPlan plan({}, {});
    auto c = plan.forward(cosh_power(plan.radial_grid(), 2.0));
    CHECK(parseval_inner(c, c) == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
    CHECK(parseval_distance(c, c) == 0.0);
}

TEST_CASE("heat multiplier is the identity at t = 0 and a semigroup") {
    SpectralGrid sg{10.0, 64};
    Spectrum c{sg, std::vector<double>(64)};
    for (int i = 0; i < 64; ++i) c.values[i] = std::cos(0.3 * i);

    auto c0 = heat_multiplier(c, 0.0);
    for (std::size_t i = 0; i < c.values.size(); ++i) CHECK(c0.values[i] == c.values[i]);

    auto two_hops = heat_multiplier(heat_multiplier(c, 0.2), 0.5);
    auto one_hop = heat_multiplier(c, 0.7);
    for (std::size_t i = 0; i < c.values.size(); ++i)
        CHECK(two_hops.values[i] == doctest::Approx(one_hop.values[i]).epsilon(1e-14));
    CHECK_THROWS_AS(heat_multiplier(c, -0.1), std::invalid_argument);
}

TEST_CASE("truncation is reported for slowly decaying input") {
    RadialGrid rg{4.0, 200};  // far too short for (cosh)^(-2)
    MftPlan plan(rg, {});
    TransformReport report;
    plan.forward(cosh_power(rg, 2.0), &report);
    CHECK(report.truncated);
    CHECK(report.tail_magnitude > 0.0);
}
