#pragma once

#include <cstddef>
#include <string_view>

// Runtime-dispatched inner-loop kernels. The transforms and the conical
// quadrature spend nearly all their time in weighted reductions over
// contiguous double arrays; these are the only routines with ISA-specific
// variants. Scalar versions are the reference; vector versions must agree
// within a few ulps (see tests/test_simd.cpp).

namespace diskharm::simd {

enum class Isa { scalar, avx2, neon };

// Selected once at startup: best ISA the CPU supports, unless the
// DISKHARM_ISA environment variable ("scalar", "avx2", "neon") forces one.
Isa active_isa();
std::string_view isa_name(Isa isa);

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);

// sum_i a[i]*b[i]*c[i]
double dot3(const double* a, const double* b, const double* c, std::size_t n);

// y[i] += alpha*x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// out[i] = rows-by-cols row-major matrix times x
void matvec(const double* mat, std::size_t rows, std::size_t cols,
            const double* x, double* out);

namespace detail {
struct Kernels {
    double (*dot)(const double*, const double*, std::size_t);
    double (*dot3)(const double*, const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
};
const Kernels& scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
const Kernels& avx2_kernels();
#endif
#if defined(__aarch64__)
const Kernels& neon_kernels();
#endif
}  // namespace detail

}  // namespace diskharm::simd
