#include "diskharm/simd.hpp"

namespace diskharm::simd::detail {
namespace {

// Four independent accumulators, matching the lane structure of the vector
// variants; keeps scalar and vector results within a few ulps of each other.
double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    for (; i < n; ++i) s0 += a[i] * b[i];
    return (s0 + s2) + (s1 + s3);
}

double dot3_scalar(const double* a, const double* b, const double* c, std::size_t n) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i] * b[i] * c[i];
        s1 += a[i + 1] * b[i + 1] * c[i + 1];
        s2 += a[i + 2] * b[i + 2] * c[i + 2];
        s3 += a[i + 3] * b[i + 3] * c[i + 3];
    }
    for (; i < n; ++i) s0 += a[i] * b[i] * c[i];
    return (s0 + s2) + (s1 + s3);
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{dot_scalar, dot3_scalar, axpy_scalar};
    return k;
}

}  // namespace diskharm::simd::detail
