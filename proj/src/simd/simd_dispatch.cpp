#include "diskharm/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace diskharm::simd {

namespace {

using detail::Kernels;

Isa detect_isa() {
    if (const char* env = std::getenv("DISKHARM_ISA")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
#if defined(__x86_64__) || defined(_M_X64)
        if (std::strcmp(env, "avx2") == 0) return Isa::avx2;
#endif
#if defined(__aarch64__)
        if (std::strcmp(env, "neon") == 0) return Isa::neon;
#endif
        return Isa::scalar;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return Isa::avx2;
#endif
#if defined(__aarch64__)
    return Isa::neon;
#endif
    return Isa::scalar;
}

const Kernels& kernels_for(Isa isa) {
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: return detail::avx2_kernels();
#endif
#if defined(__aarch64__)
        case Isa::neon: return detail::neon_kernels();
#endif
        default: return detail::scalar_kernels();
    }
}

const Kernels& active_kernels() {
    static const Kernels& k = kernels_for(active_isa());
    return k;
}

}  // namespace

Isa active_isa() {
    static const Isa isa = detect_isa();
    return isa;
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
        default: return "scalar";
    }
}

double dot(const double* a, const double* b, std::size_t n) {
    return active_kernels().dot(a, b, n);
}

double dot3(const double* a, const double* b, const double* c, std::size_t n) {
    return active_kernels().dot3(a, b, c, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    active_kernels().axpy(alpha, x, y, n);
}

void matvec(const double* mat, std::size_t rows, std::size_t cols,
            const double* x, double* out) {
    const auto& k = active_kernels();
    for (std::size_t r = 0; r < rows; ++r) out[r] = k.dot(mat + r * cols, x, cols);
}

}  // namespace diskharm::simd
