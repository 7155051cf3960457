#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "diskharm/hypgeo.hpp"
#include "diskharm/matrix.hpp"
#include "diskharm/mft.hpp"

// Kernel density estimation on the hyperbolic disk.
//
// The estimator is a weighted sum of radial kernel bumps k(cosh d(z, z_l)).
// In the spectral form the kernel and the data separate: expanding the
// zonal inversion of k with the conical addition formula gives, per angular
// order m, the coefficient
//
//   S_m(kappa) = c_k(kappa) * sum_l w_l e^{-i m phi_l} P^{-m}_kappa(cosh tau_l)
//
// with c_k the zonal MFT of the kernel, and the synthesis
//
//   D(tau_0, phi_0) = sum_m e^{i m phi_0}
//                     Int kappa tanh(pi kappa) S_m(kappa) P^m_kappa(cosh tau_0) dkappa.
//
// Real densities satisfy S_{-m} = conj(S_m) pattern-wise, so only m >= 0 is
// stored and the m != 0 terms enter the synthesis with twice the real part.

namespace diskharm {

struct RadialKernel {
    enum class Family { power_cosh };

    Family family = Family::power_cosh;
    double s = 4.0;                 // exponent, > 1
    double normalization = 0.0;     // (s-1)/(2 pi): unit mass under sinh(tau) dtau dphi

    static RadialKernel power_cosh(double s);

    // kernel value at hyperbolic distance d given cosh(d)
    double value(double cosh_dist) const;
    // sampled radial profile k(cosh tau_j) on the grid
    std::vector<double> radial_profile(const RadialGrid& grid) const;
};

struct SampleSet {
    std::vector<CosetCoords> points;  // (phi_l, tau_l)
    std::vector<double> weights;      // nonnegative, normalized to sum 1

    // uniform weights 1/L
    static SampleSet uniform(std::vector<CosetCoords> points);
    static SampleSet weighted(std::vector<CosetCoords> points, std::vector<double> weights);

    void validate() const;
};

class DiskDensity;

// Shared read-only tables for spectral KDE: the zonal transform plan plus
// P^{-m} grids on the radial grid for m = 0..m_max (used by the binned path).
class DensityPlan {
  public:
    DensityPlan(RadialGrid rgrid, SpectralGrid sgrid, int m_max);  // default_quadrature
    DensityPlan(RadialGrid rgrid, SpectralGrid sgrid, int m_max, QuadratureConfig cfg);

    const MftPlan& mft() const { return *mft_; }
    std::shared_ptr<const MftPlan> mft_ptr() const { return mft_; }
    int m_max() const { return m_max_; }
    // table(m).at(i, j) = P^{-m}_{kappa_i}(cosh tau_j), m in [0, m_max]
    const Matrix& negative_order_table(int m) const { return p_neg_.at(m); }

  private:
    std::shared_ptr<const MftPlan> mft_;
    int m_max_;
    std::vector<Matrix> p_neg_;
};

// Per-angular-order spectra of a density on the disk.
class DiskDensity {
  public:
    DiskDensity(std::shared_ptr<const MftPlan> plan,
                std::vector<std::vector<std::complex<double>>> spectra);

    int m_max() const { return static_cast<int>(spectra_.size()) - 1; }
    const MftPlan& plan() const { return *plan_; }
    const std::vector<std::complex<double>>& spectrum(int m) const { return spectra_.at(m); }
    std::vector<std::complex<double>>& spectrum(int m) { return spectra_.at(m); }

    // m = 0 spectrum as a real Spectrum (the zonal component).
    Spectrum zonal_spectrum() const;

    // Density value at one point; negative synthesis ringing is clipped at 0
    // unless clip_negative is false.
    double synthesize(double phi, double tau, bool clip_negative = true) const;

    // Batch synthesis on an outer product of angles and radii;
    // out.at(a, j) = value at (phis[a], taus[j]). Far cheaper than per-point
    // calls: the conical evaluations share their trigonometric work.
    Matrix synthesize_grid(std::span<const double> phis, std::span<const double> taus,
                           bool clip_negative = true) const;

    // Radial profile of the m = 0 component on the plan's radial grid.
    std::vector<double> zonal_profile() const;

    // Scale so the density integrates to 1 under sinh(tau) dtau dphi.
    // Returns the scale factor applied. Throws on (near-)zero mass.
    double normalize();
    double mass() const;

  private:
    std::shared_ptr<const MftPlan> plan_;
    std::vector<std::vector<std::complex<double>>> spectra_;  // [m][kappa]
};

// w_{kappa m} = Int k(cosh tau) P^m_kappa(cosh tau) sinh(tau) dtau on the grid.
// For m = 0 this is exactly the MFT of the kernel profile.
Spectrum kernel_weights(const RadialKernel& k, int m, const SpectralGrid& sgrid,
                        const RadialGrid& rgrid, const QuadratureConfig& cfg = {});

// Aggregated data coefficients sum_l w_l e^{-i m phi_l} P^{-m}_kappa(cosh tau_l).
std::vector<std::complex<double>> data_coefficients(const SampleSet& samples, int m,
                                                    const SpectralGrid& sgrid,
                                                    const QuadratureConfig& cfg = {});

// Per-sample gamma_{kappa m l} = e^{-i m phi_l} P^{-m}_kappa(cosh tau_l);
// out.at? column l, row kappa index.
std::vector<std::vector<std::complex<double>>> data_coefficients_per_sample(
    const SampleSet& samples, int m, const SpectralGrid& sgrid, const QuadratureConfig& cfg = {});

// Direct estimator sum_l w_l k(relative cosh to query). Moebius-invariant.
double kde_direct(const SampleSet& samples, const RadialKernel& k, const DiskPoint& query);
double kde_direct(const SampleSet& samples, const RadialKernel& k, double phi, double tau);

// Separated (spectral) estimator.
DiskDensity kde_spectral(const SampleSet& samples, const RadialKernel& k,
                         const DensityPlan& plan);
DiskDensity kde_spectral(const SampleSet& samples, const RadialKernel& k, int m_max,
                         const RadialGrid& rgrid, const SpectralGrid& sgrid,
                         const QuadratureConfig& cfg = {});

// Weighted polar histogram: bin (a, j) holds the total weight of samples with
// angle nearest to 2 pi a / n_phi and radius nearest to tau_j. Large sample
// sets (image pipelines) are binned first; the data coefficients then reduce
// to an angular DFT followed by matrix products against the cached tables.
struct PolarHistogram {
    int n_phi = 128;
    RadialGrid rgrid;
    Matrix weight;  // n_phi x n_tau, sums to 1

    static PolarHistogram bin(const SampleSet& samples, int n_phi, const RadialGrid& rgrid);
};

DiskDensity kde_spectral_binned(const PolarHistogram& hist, const RadialKernel& k,
                                const DensityPlan& plan);

// Normalize a sampled zonal pdf under 2 pi sinh(tau) dtau; returns the scale.
double density_normalize(RadialFunction& f);
// Same for a spectral density (delegates to DiskDensity::normalize).
double density_normalize(DiskDensity& d);

}  // namespace diskharm
