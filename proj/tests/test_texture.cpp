#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "diskharm/texture.hpp"

using namespace diskharm;

namespace {

const RadialGrid kGrid{8.0, 200};
const SpectralGrid kSpec{15.0, 100};

GrayImage noise_image(int size, double amplitude, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-amplitude, amplitude);
    GrayImage img{size, size, std::vector<double>(static_cast<std::size_t>(size) * size, 0.5)};
    for (auto& p : img.pixels) p = std::clamp(p + dist(rng), 0.0, 1.0);
    return img;
}

}  // namespace

TEST_CASE("edge filter arithmetic on handmade blocks") {
    GrayImage flat{3, 3, std::vector<double>(9, 0.25)};
    for (const auto& e : dihedral_edge_filter(flat)) {
        CHECK(e.dx == 0.0);
        CHECK(e.dy == 0.0);
        CHECK(e.r == 0.0);
    }

    // single 2x2 image: tl=1, tr=1, br=0, bl=0
    GrayImage step{2, 2, {1.0, 1.0, 0.0, 0.0}};
    auto resp = dihedral_edge_filter(step);
    REQUIRE(resp.size() == 1);
    CHECK(resp[0].dx == doctest::Approx(1.0));
    CHECK(resp[0].dy == doctest::Approx(0.0));
    CHECK(resp[0].r == doctest::Approx(std::tanh(1.0)));
    CHECK(resp[0].phi_angle == doctest::Approx(0.0));

    CHECK_THROWS_AS(dihedral_edge_filter(GrayImage{1, 1, {0.0}}), std::invalid_argument);
}

TEST_CASE("zonal descriptor is rotation invariant") {
    auto responses = dihedral_edge_filter(noise_image(16, 0.3, 5));
    auto rotated = responses;
    for (auto& e : rotated) e.phi_angle = wrap_angle(e.phi_angle + 0.77);

    DensityPlan plan(kGrid, kSpec, 4);
    auto k = RadialKernel::power_cosh(4.0);
    auto a = zonal_descriptor(texture_density(responses, k, plan)).zonal;
    auto b = zonal_descriptor(texture_density(rotated, k, plan)).zonal;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(std::abs(a.values[i] - b.values[i]) < 1e-10);
}

TEST_CASE("distance matrix is a metric table") {
    DensityPlan plan(kGrid, kSpec, 0);
    auto k = RadialKernel::power_cosh(4.0);
    std::vector<TextureDescriptor> descriptors;
    for (unsigned seed : {1u, 2u, 3u, 4u}) {
        auto resp = dihedral_edge_filter(noise_image(16, 0.1 * (seed + 1), seed));
        descriptors.push_back(zonal_descriptor(texture_density(resp, k, plan)));
    }
    auto D = descriptor_distance_matrix(descriptors);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(D.at(i, i) == 0.0);
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(D.at(i, j) == D.at(j, i));
            CHECK(D.at(i, j) == doctest::Approx(parseval_distance(descriptors[i].zonal,
                                                                  descriptors[j].zonal)));
            for (std::size_t l = 0; l < 4; ++l)
                CHECK(D.at(i, j) <= D.at(i, l) + D.at(l, j) + 1e-12);
        }
    }
}

TEST_CASE("classical MDS recovers an exact 1-D configuration") {
    // points at 0, 1, 3 on a line
    Matrix D(3, 3);
    D.at(0, 1) = D.at(1, 0) = 1.0;
    D.at(0, 2) = D.at(2, 0) = 3.0;
    D.at(1, 2) = D.at(2, 1) = 2.0;
    auto X = classical_mds(D, 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double dx = X.at(i, 0) - X.at(j, 0), dy = X.at(i, 1) - X.at(j, 1);
            CHECK(std::hypot(dx, dy) == doctest::Approx(D.at(i, j)).epsilon(1e-9));
        }
    // sign convention: the largest-magnitude coordinate on each axis is positive
    double peak = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        if (std::abs(X.at(i, 0)) > std::abs(peak)) peak = X.at(i, 0);
    CHECK(peak > 0.0);
}

TEST_CASE("MDS edge cases") {
    Matrix zero(3, 3);
    auto X = classical_mds(zero, 2);
    for (double v : X.data) CHECK(std::abs(v) < 1e-12);

    Matrix dup(3, 3);  // two coincident points
    dup.at(0, 2) = dup.at(2, 0) = 1.0;
    dup.at(1, 2) = dup.at(2, 1) = 1.0;
    auto Y = classical_mds(dup, 1);
    CHECK(Y.at(0, 0) == doctest::Approx(Y.at(1, 0)).epsilon(1e-10));

    Matrix bad(2, 2);
    bad.at(0, 0) = 1.0;
    CHECK_THROWS_AS(classical_mds(bad, 1), std::invalid_argument);
}

TEST_CASE("texture_rank orders noise amplitudes and ignores input order") {
    std::vector<GrayImage> images{noise_image(24, 0.05, 11), noise_image(24, 0.2, 12),
                                  noise_image(24, 0.45, 13)};
    std::vector<std::string> ids{"smooth", "mid", "rough"};
    DensityPlan plan(kGrid, kSpec, 0);
    auto k = RadialKernel::power_cosh(4.0);

    auto ranking = texture_rank(images, ids, k, plan);
    std::vector<std::string> got;
    for (int idx : ranking.order) got.push_back(ids[idx]);
    bool ascending = got == std::vector<std::string>{"smooth", "mid", "rough"};
    bool descending = got == std::vector<std::string>{"rough", "mid", "smooth"};
    CHECK((ascending || descending));

    // permute the inputs: the id sequence must not change
    std::vector<GrayImage> perm_images{images[2], images[0], images[1]};
    std::vector<std::string> perm_ids{ids[2], ids[0], ids[1]};
    auto perm = texture_rank(perm_images, perm_ids, k, plan);
    std::vector<std::string> got_perm;
    for (int idx : perm.order) got_perm.push_back(perm_ids[idx]);
    CHECK(got_perm == got);
}
