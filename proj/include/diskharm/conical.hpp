#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskharm/matrix.hpp"

// Conical (Mehler) functions P^m_{-1/2 + i kappa}(cosh tau), evaluated from
// the circular integral representation
//
//   P^m_a(cosh tau) = G(a, m) / (2 pi) * Int_0^{2pi} u(theta)^a e^{i m theta} dtheta,
//   u(theta) = sinh(tau) cos(theta) + cosh(tau),  a = -1/2 + i kappa,
//
// with G the Gamma-function ratio Gamma(a+m+1)/Gamma(a+1), computed as an
// exact finite product. The quadrature is a periodic trapezoid rule in the
// variable sigma defined by u = exp(tau cos sigma); equispaced sampling in
// theta loses all accuracy once kappa*tau is large because the phase
// kappa*log(u) piles up near theta = pi, while in sigma the phase is
// kappa*tau*cos(sigma), whose Fourier spectrum cuts off at |kappa*tau|.

namespace diskharm {

struct QuadratureConfig {
    int n_theta = 256;        // periodic-trapezoid node count (even, >= 16)
    double tolerance = 1e-8;  // residual-imaginary-part failure threshold

    void validate() const;
};

// Quadrature failure: the imaginary part of a value that must be real
// exceeded the configured tolerance, or a truncated series did not converge.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, std::ptrdiff_t kappa_index = -1,
                    std::ptrdiff_t tau_index = -1)
        : std::runtime_error(what), kappa_index(kappa_index), tau_index(tau_index) {}

    std::ptrdiff_t kappa_index;
    std::ptrdiff_t tau_index;
};

// P^m_{-1/2+i kappa}(cosh tau). Requires kappa >= 0 and tau >= 0.
double conical_p(int m, double kappa, double tau, const QuadratureConfig& cfg = {});

// Element [i][j] = conical_p(m, kappas[i], taus[j]); identical bits to the
// scalar calls (both route through the same evaluation path).
Matrix conical_p_grid(int m, std::span<const double> kappas, std::span<const double> taus,
                      const QuadratureConfig& cfg = {});

// Batched variant sharing the per-(kappa, tau) trigonometric work across
// orders; out[k] corresponds to ms[k]. This is what the transform caches use.
std::vector<Matrix> conical_p_multi(std::span<const int> ms, std::span<const double> kappas,
                                    std::span<const double> taus,
                                    const QuadratureConfig& cfg = {});

// Truncated addition series
//   sum_{m=-m_max}^{m_max} (-1)^m P^{-m}_a(cosh tau_l) P^m_a(cosh tau_0) e^{-i m theta},
// equal in the limit to P_a(cosh tau_l cosh tau_0 - sinh tau_l sinh tau_0 cos theta).
double addition_series(double kappa, double tau_l, double tau_0, double theta, int m_max,
                       const QuadratureConfig& cfg = {});

// Gamma(a+m+1)/Gamma(a+1) for a = -1/2 + i kappa, as an exact product.
std::complex<double> conical_prefactor(int m, double kappa);

}  // namespace diskharm
