#include "diskharm/simd.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace diskharm::simd::detail {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0), acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    // lane order mirrors the scalar reference: (0+2)+(1+3)
    float64x2_t acc = vaddq_f64(acc0, acc1);
    double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot3_neon(const double* a, const double* b, const double* c, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0), acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float64x2_t ab0 = vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        float64x2_t ab1 = vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
        acc0 = vfmaq_f64(acc0, ab0, vld1q_f64(c + i));
        acc1 = vfmaq_f64(acc1, ab1, vld1q_f64(c + i + 2));
    }
    float64x2_t acc = vaddq_f64(acc0, acc1);
    double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; i < n; ++i) s += a[i] * b[i] * c[i];
    return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const Kernels& neon_kernels() {
    static const Kernels k{dot_neon, dot3_neon, axpy_neon};
    return k;
}

}  // namespace diskharm::simd::detail

#endif  // aarch64
