#pragma once

#include <vector>

#include "diskharm/conical.hpp"
#include "diskharm/matrix.hpp"

// Forward/inverse Mehler-Fock transform on sampled radial functions,
// Parseval inner products and the heat-semigroup multiplier.
//
// Forward:  c(kappa) = Int_0^inf f(tau) P_{-1/2+i kappa}(cosh tau) sinh(tau) dtau
// Inverse:  f(tau)   = Int_0^inf kappa tanh(pi kappa) P_{-1/2+i kappa}(cosh tau) c(kappa) dkappa
//
// Both integrals are composite trapezoid rules on uniform grids; the conical
// values are evaluated once per grid pair and cached in an MftPlan.

namespace diskharm {

struct RadialGrid {
    double tau_max = 12.0;
    int n_tau = 800;

    void validate() const;
    double step() const { return tau_max / (n_tau - 1); }
    double node(int j) const { return j * step(); }
    std::vector<double> nodes() const;
    std::vector<double> trapezoid_weights() const;

    friend bool operator==(const RadialGrid&, const RadialGrid&) = default;
};

struct SpectralGrid {
    double kappa_max = 20.0;
    int n_kappa = 400;

    void validate() const;
    double step() const { return kappa_max / (n_kappa - 1); }
    double node(int i) const { return i * step(); }
    std::vector<double> nodes() const;
    std::vector<double> trapezoid_weights() const;

    friend bool operator==(const SpectralGrid&, const SpectralGrid&) = default;
};

struct RadialFunction {
    RadialGrid grid;
    std::vector<double> values;  // f(tau_j), length n_tau

    void validate() const;
};

struct Spectrum {
    SpectralGrid grid;
    std::vector<double> values;  // c(kappa_i), length n_kappa

    void validate() const;
};

// Set when the integrand has not decayed at the truncation boundary.
struct TransformReport {
    bool truncated = false;
    double tail_magnitude = 0.0;
};

// Node count resolving the full oscillation bandwidth kappa_max * tau_max
// (plus angular order m) of these grids, never below the stock default.
QuadratureConfig default_quadrature(const RadialGrid& rgrid, const SpectralGrid& sgrid,
                                    int m_max = 0);

// Shared, immutable after construction. Builds the m = 0 conical table once;
// forward, inverse and the density module all reuse it.
class MftPlan {
  public:
    MftPlan(RadialGrid rgrid, SpectralGrid sgrid);  // default_quadrature node count
    MftPlan(RadialGrid rgrid, SpectralGrid sgrid, QuadratureConfig cfg,
            double truncation_tolerance = 1e-4);

    Spectrum forward(const RadialFunction& f, TransformReport* report = nullptr) const;
    RadialFunction inverse(const Spectrum& c, TransformReport* report = nullptr) const;

    const RadialGrid& radial_grid() const { return rgrid_; }
    const SpectralGrid& spectral_grid() const { return sgrid_; }
    const QuadratureConfig& quadrature() const { return cfg_; }

    // conical_table().at(i, j) = P_{-1/2 + i kappa_i}(cosh tau_j)
    const Matrix& conical_table() const { return table_; }
    // kappa tanh(pi kappa) * trapezoid weight, per kappa node
    const std::vector<double>& plancherel_weights() const { return plancherel_w_; }
    const std::vector<double>& sinh_tau() const { return sinh_tau_; }

  private:
    RadialGrid rgrid_;
    SpectralGrid sgrid_;
    QuadratureConfig cfg_;
    double truncation_tol_;
    Matrix table_;
    std::vector<double> sinh_tau_, tau_w_, plancherel_w_;
};

// One-shot variants; prefer an MftPlan when transforming more than once.
Spectrum mft_forward(const RadialFunction& f, const SpectralGrid& sgrid,
                     const QuadratureConfig& cfg = {}, TransformReport* report = nullptr);
RadialFunction mft_inverse(const Spectrum& c, const RadialGrid& rgrid,
                           const QuadratureConfig& cfg = {}, TransformReport* report = nullptr);

// Int c1 c2 kappa tanh(pi kappa) dkappa over the common grid.
double parseval_inner(const Spectrum& c1, const Spectrum& c2);
double parseval_distance(const Spectrum& c1, const Spectrum& c2);

// c'(kappa) = exp(-(1/4 + kappa^2) t) c(kappa), t >= 0.
Spectrum heat_multiplier(const Spectrum& c, double t);

}  // namespace diskharm
