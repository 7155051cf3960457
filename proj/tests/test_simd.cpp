#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "diskharm/simd.hpp"

using namespace diskharm;

namespace {

std::vector<double> random_vec(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("dot/dot3/axpy match a plain serial reference") {
    std::mt19937 rng(7);
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4},
                          std::size_t{17}, std::size_t{64}, std::size_t{1001}}) {
        auto a = random_vec(rng, n), b = random_vec(rng, n), c = random_vec(rng, n);

        double ref = 0.0, ref3 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            ref += a[i] * b[i];
            ref3 += a[i] * b[i] * c[i];
        }
        CHECK(simd::dot(a.data(), b.data(), n) == doctest::Approx(ref).epsilon(1e-12));
        CHECK(simd::dot3(a.data(), b.data(), c.data(), n) ==
              doctest::Approx(ref3).epsilon(1e-12));

        auto y = random_vec(rng, n);
        auto y_ref = y;
        for (std::size_t i = 0; i < n; ++i) y_ref[i] += 0.37 * a[i];
        simd::axpy(0.37, a.data(), y.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(y[i] == doctest::Approx(y_ref[i]));
    }
}

TEST_CASE("matvec matches row-by-row dot products") {
    std::mt19937 rng(11);
    const std::size_t rows = 13, cols = 37;
    auto mat = random_vec(rng, rows * cols);
    auto x = random_vec(rng, cols);
    std::vector<double> out(rows);
    simd::matvec(mat.data(), rows, cols, x.data(), out.data());
    for (std::size_t i = 0; i < rows; ++i)
        CHECK(out[i] ==
              doctest::Approx(simd::dot(mat.data() + i * cols, x.data(), cols)).epsilon(1e-13));
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("AVX2 kernels agree with the scalar reference within a few ulps") {
    if (simd::active_isa() != simd::Isa::avx2) return;  // CPU lacks AVX2+FMA
    const auto& sc = simd::detail::scalar_kernels();
    const auto& vx = simd::detail::avx2_kernels();
    std::mt19937 rng(23);
    for (std::size_t n : {std::size_t{5}, std::size_t{32}, std::size_t{255}, std::size_t{4096}}) {
        auto a = random_vec(rng, n), b = random_vec(rng, n), c = random_vec(rng, n);
        CHECK(vx.dot(a.data(), b.data(), n) ==
              doctest::Approx(sc.dot(a.data(), b.data(), n)).epsilon(1e-13));
        CHECK(vx.dot3(a.data(), b.data(), c.data(), n) ==
              doctest::Approx(sc.dot3(a.data(), b.data(), c.data(), n)).epsilon(1e-13));
        auto y1 = c, y2 = c;
        sc.axpy(1.7, a.data(), y1.data(), n);
        vx.axpy(1.7, a.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));
    }
}
#endif

TEST_CASE("isa_name covers the active ISA") {
    auto name = simd::isa_name(simd::active_isa());
    CHECK((name == "scalar" || name == "avx2" || name == "neon"));
}
