#include "diskharm/density.hpp"

#include <cmath>
#include <numbers>

#include "diskharm/simd.hpp"

namespace diskharm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<int> negative_orders(int m_max) {
    std::vector<int> ms(m_max + 1);
    for (int m = 0; m <= m_max; ++m) ms[m] = -m;
    return ms;
}

// Gamma_m(kappa) spectra for m = 0..m_max from exact sample positions.
std::vector<std::vector<std::complex<double>>> gamma_spectra(const SampleSet& samples, int m_max,
                                                             const SpectralGrid& sgrid,
                                                             const QuadratureConfig& cfg) {
    auto kappas = sgrid.nodes();
    std::vector<double> taus(samples.points.size());
    for (std::size_t l = 0; l < taus.size(); ++l) taus[l] = samples.points[l].tau;
    auto ms = negative_orders(m_max);
    auto tables = conical_p_multi(ms, kappas, taus, cfg);

    std::vector<std::vector<std::complex<double>>> gam(
        m_max + 1, std::vector<std::complex<double>>(kappas.size()));
    for (int m = 0; m <= m_max; ++m) {
        const Matrix& p = tables[m];
        const double sgn = (m % 2 == 0) ? 1.0 : -1.0;  // from the law-of-cosines expansion
        for (std::size_t i = 0; i < kappas.size(); ++i) {
            std::complex<double> acc = 0.0;
            for (std::size_t l = 0; l < taus.size(); ++l) {
                double phase = -m * samples.points[l].phi;
                acc += samples.weights[l] * p.at(i, l) *
                       std::complex<double>(std::cos(phase), std::sin(phase));
            }
            gam[m][i] = sgn * acc;
        }
    }
    return gam;
}

DiskDensity assemble(std::shared_ptr<const MftPlan> plan, const RadialKernel& k,
                     std::vector<std::vector<std::complex<double>>> gam) {
    // zonal kernel spectrum c_k
    RadialFunction profile{plan->radial_grid(), k.radial_profile(plan->radial_grid())};
    Spectrum ck = plan->forward(profile);
    for (auto& spec : gam)
        for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= ck.values[i];
    return DiskDensity(std::move(plan), std::move(gam));
}

}  // namespace

RadialKernel RadialKernel::power_cosh(double s) {
    if (!(s > 1)) throw std::invalid_argument("RadialKernel: s must exceed 1");
    return {Family::power_cosh, s, (s - 1.0) / kTwoPi};
}

double RadialKernel::value(double cosh_dist) const {
    if (cosh_dist < 1.0) throw std::invalid_argument("RadialKernel: cosh argument below 1");
    return normalization * std::pow(cosh_dist, -s);
}

std::vector<double> RadialKernel::radial_profile(const RadialGrid& grid) const {
    auto taus = grid.nodes();
    std::vector<double> v(taus.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = value(std::cosh(taus[j]));
    return v;
}

SampleSet SampleSet::uniform(std::vector<CosetCoords> points) {
    SampleSet s{std::move(points), {}};
    s.weights.assign(s.points.size(), s.points.empty() ? 0.0 : 1.0 / s.points.size());
    s.validate();
    return s;
}

SampleSet SampleSet::weighted(std::vector<CosetCoords> points, std::vector<double> weights) {
    SampleSet s{std::move(points), std::move(weights)};
    double total = 0.0;
    for (double w : s.weights) {
        if (w < 0 || !std::isfinite(w))
            throw std::invalid_argument("SampleSet: weights must be nonnegative");
        total += w;
    }
    if (!(total > 0)) throw std::invalid_argument("SampleSet: weights sum to zero");
    for (double& w : s.weights) w /= total;
    s.validate();
    return s;
}

void SampleSet::validate() const {
    if (points.size() != weights.size())
        throw std::invalid_argument("SampleSet: weight count mismatch");
    if (points.empty()) throw std::invalid_argument("SampleSet: empty");
    for (const auto& p : points)
        if (p.tau < 0 || !std::isfinite(p.tau) || !std::isfinite(p.phi))
            throw std::invalid_argument("SampleSet: invalid coordinates");
}

DensityPlan::DensityPlan(RadialGrid rgrid, SpectralGrid sgrid, int m_max)
    : DensityPlan(rgrid, sgrid, m_max, default_quadrature(rgrid, sgrid, m_max)) {}

DensityPlan::DensityPlan(RadialGrid rgrid, SpectralGrid sgrid, int m_max, QuadratureConfig cfg)
    : mft_(std::make_shared<MftPlan>(rgrid, sgrid, cfg)), m_max_(m_max) {
    if (m_max < 0) throw std::invalid_argument("DensityPlan: m_max must be nonnegative");
    auto ms = negative_orders(m_max);
    p_neg_ = conical_p_multi(ms, sgrid.nodes(), rgrid.nodes(), cfg);
}

DiskDensity::DiskDensity(std::shared_ptr<const MftPlan> plan,
                         std::vector<std::vector<std::complex<double>>> spectra)
    : plan_(std::move(plan)), spectra_(std::move(spectra)) {
    if (spectra_.empty()) throw std::invalid_argument("DiskDensity: no spectra");
    for (const auto& s : spectra_)
        if (s.size() != static_cast<std::size_t>(plan_->spectral_grid().n_kappa))
            throw std::invalid_argument("DiskDensity: spectrum length mismatch");
}

Spectrum DiskDensity::zonal_spectrum() const {
    Spectrum s{plan_->spectral_grid(), std::vector<double>(spectra_[0].size())};
    for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] = spectra_[0][i].real();
    return s;
}

Matrix DiskDensity::synthesize_grid(std::span<const double> phis, std::span<const double> taus,
                                    bool clip_negative) const {
    const auto& sgrid = plan_->spectral_grid();
    auto kappas = sgrid.nodes();
    const auto& pw = plan_->plancherel_weights();
    const int mm = m_max();

    std::vector<int> ms(mm + 1);
    for (int m = 0; m <= mm; ++m) ms[m] = m;
    auto tables = conical_p_multi(ms, kappas, taus, plan_->quadrature());

    // f_m(tau_j) = sum_i pw_i S_m(kappa_i) P^m(kappa_i, tau_j)
    std::vector<std::vector<std::complex<double>>> fm(
        mm + 1, std::vector<std::complex<double>>(taus.size()));
    for (int m = 0; m <= mm; ++m) {
        const Matrix& p = tables[m];
        for (std::size_t j = 0; j < taus.size(); ++j) {
            std::complex<double> acc = 0.0;
            for (std::size_t i = 0; i < kappas.size(); ++i)
                acc += pw[i] * spectra_[m][i] * p.at(i, j);
            fm[m][j] = acc;
        }
    }

    Matrix out(phis.size(), taus.size());
    for (std::size_t a = 0; a < phis.size(); ++a) {
        for (std::size_t j = 0; j < taus.size(); ++j) {
            double v = fm[0][j].real();
            for (int m = 1; m <= mm; ++m) {
                double c = std::cos(m * phis[a]), s = std::sin(m * phis[a]);
                v += 2.0 * (c * fm[m][j].real() - s * fm[m][j].imag());
            }
            out.at(a, j) = clip_negative ? std::max(0.0, v) : v;
        }
    }
    return out;
}

double DiskDensity::synthesize(double phi, double tau, bool clip_negative) const {
    const double phis[1] = {phi};
    const double taus[1] = {tau};
    return synthesize_grid(phis, taus, clip_negative).at(0, 0);
}

std::vector<double> DiskDensity::zonal_profile() const {
    // inverse zonal MFT of the m = 0 spectrum on the plan's radial grid
    RadialFunction f = plan_->inverse(zonal_spectrum());
    return f.values;
}

double DiskDensity::mass() const {
    auto f0 = zonal_profile();
    auto w = plan_->radial_grid().trapezoid_weights();
    const auto& sh = plan_->sinh_tau();
    double mass = 0.0;
    for (std::size_t j = 0; j < f0.size(); ++j) mass += f0[j] * sh[j] * w[j];
    return kTwoPi * mass;
}

double DiskDensity::normalize() {
    double m = mass();
    if (!(std::abs(m) > 1e-12)) throw std::invalid_argument("DiskDensity: zero mass");
    double scale = 1.0 / m;
    for (auto& spec : spectra_)
        for (auto& v : spec) v *= scale;
    return scale;
}

Spectrum kernel_weights(const RadialKernel& k, int m, const SpectralGrid& sgrid,
                        const RadialGrid& rgrid, const QuadratureConfig& cfg) {
    sgrid.validate();
    rgrid.validate();
    auto taus = rgrid.nodes();
    auto p = conical_p_grid(m, sgrid.nodes(), taus, cfg);
    auto w = rgrid.trapezoid_weights();
    auto profile = k.radial_profile(rgrid);
    for (std::size_t j = 0; j < taus.size(); ++j) profile[j] *= std::sinh(taus[j]) * w[j];

    Spectrum out{sgrid, std::vector<double>(sgrid.n_kappa)};
    simd::matvec(p.data.data(), p.rows, p.cols, profile.data(), out.values.data());
    return out;
}

std::vector<std::complex<double>> data_coefficients(const SampleSet& samples, int m,
                                                    const SpectralGrid& sgrid,
                                                    const QuadratureConfig& cfg) {
    samples.validate();
    sgrid.validate();
    auto per = data_coefficients_per_sample(samples, m, sgrid, cfg);
    std::vector<std::complex<double>> out(sgrid.n_kappa, 0.0);
    for (std::size_t l = 0; l < per.size(); ++l)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += samples.weights[l] * per[l][i];
    return out;
}

std::vector<std::vector<std::complex<double>>> data_coefficients_per_sample(
    const SampleSet& samples, int m, const SpectralGrid& sgrid, const QuadratureConfig& cfg) {
    samples.validate();
    sgrid.validate();
    auto kappas = sgrid.nodes();
    std::vector<double> taus(samples.points.size());
    for (std::size_t l = 0; l < taus.size(); ++l) taus[l] = samples.points[l].tau;
    auto p = conical_p_grid(-m, kappas, taus, cfg);

    std::vector<std::vector<std::complex<double>>> out(
        samples.points.size(), std::vector<std::complex<double>>(kappas.size()));
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t l = 0; l < taus.size(); ++l) {
        double phase = -m * samples.points[l].phi;
        std::complex<double> rot = sgn * std::complex<double>(std::cos(phase), std::sin(phase));
        for (std::size_t i = 0; i < kappas.size(); ++i) out[l][i] = rot * p.at(i, l);
    }
    return out;
}

double kde_direct(const SampleSet& samples, const RadialKernel& k, double phi, double tau) {
    samples.validate();
    double acc = 0.0;
    for (std::size_t l = 0; l < samples.points.size(); ++l) {
        const auto& p = samples.points[l];
        acc += samples.weights[l] * k.value(relative_cosh(p.tau, p.phi, tau, phi));
    }
    return acc;
}

double kde_direct(const SampleSet& samples, const RadialKernel& k, const DiskPoint& query) {
    auto q = coset_from_disk(query);
    return kde_direct(samples, k, q.phi, q.tau);
}

DiskDensity kde_spectral(const SampleSet& samples, const RadialKernel& k,
                         const DensityPlan& plan) {
    samples.validate();
    auto gam = gamma_spectra(samples, plan.m_max(), plan.mft().spectral_grid(),
                             plan.mft().quadrature());
    return assemble(plan.mft_ptr(), k, std::move(gam));
}

DiskDensity kde_spectral(const SampleSet& samples, const RadialKernel& k, int m_max,
                         const RadialGrid& rgrid, const SpectralGrid& sgrid,
                         const QuadratureConfig& cfg) {
    samples.validate();
    auto plan = std::make_shared<MftPlan>(rgrid, sgrid, cfg);
    auto gam = gamma_spectra(samples, m_max, sgrid, cfg);
    return assemble(std::move(plan), k, std::move(gam));
}

PolarHistogram PolarHistogram::bin(const SampleSet& samples, int n_phi, const RadialGrid& rgrid) {
    samples.validate();
    rgrid.validate();
    if (n_phi < 1) throw std::invalid_argument("PolarHistogram: n_phi must be positive");
    PolarHistogram h{n_phi, rgrid, Matrix(n_phi, rgrid.n_tau)};
    const double dtau = rgrid.step();
    for (std::size_t l = 0; l < samples.points.size(); ++l) {
        const auto& p = samples.points[l];
        int a = static_cast<int>(std::lround(wrap_angle(p.phi) * n_phi / kTwoPi)) % n_phi;
        int j = static_cast<int>(std::lround(p.tau / dtau));
        j = std::min(j, rgrid.n_tau - 1);
        h.weight.at(a, j) += samples.weights[l];
    }
    return h;
}

DiskDensity kde_spectral_binned(const PolarHistogram& hist, const RadialKernel& k,
                                const DensityPlan& plan) {
    if (!(hist.rgrid == plan.mft().radial_grid()))
        throw std::invalid_argument("kde_spectral_binned: grid mismatch");
    const int n_tau = hist.rgrid.n_tau;
    const int n_kappa = plan.mft().spectral_grid().n_kappa;
    const int mm = plan.m_max();

    std::vector<std::vector<std::complex<double>>> gam(
        mm + 1, std::vector<std::complex<double>>(n_kappa));
    std::vector<double> hre(n_tau), him(n_tau);
    for (int m = 0; m <= mm; ++m) {
        // angular DFT of the histogram at order m
        std::fill(hre.begin(), hre.end(), 0.0);
        std::fill(him.begin(), him.end(), 0.0);
        for (int a = 0; a < hist.n_phi; ++a) {
            double phase = -m * kTwoPi * a / hist.n_phi;
            double c = std::cos(phase), s = std::sin(phase);
            const double* row = hist.weight.row(a);
            simd::axpy(c, row, hre.data(), n_tau);
            simd::axpy(s, row, him.data(), n_tau);
        }
        const Matrix& p = plan.negative_order_table(m);
        const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        for (int i = 0; i < n_kappa; ++i)
            gam[m][i] = {sgn * simd::dot(p.row(i), hre.data(), n_tau),
                         sgn * simd::dot(p.row(i), him.data(), n_tau)};
    }
    return assemble(plan.mft_ptr(), k, std::move(gam));
}

double density_normalize(RadialFunction& f) {
    f.validate();
    auto w = f.grid.trapezoid_weights();
    auto taus = f.grid.nodes();
    double mass = 0.0;
    for (std::size_t j = 0; j < f.values.size(); ++j)
        mass += f.values[j] * std::sinh(taus[j]) * w[j];
    mass *= kTwoPi;
    if (!(std::abs(mass) > 1e-12)) throw std::invalid_argument("density_normalize: zero mass");
    double scale = 1.0 / mass;
    for (double& v : f.values) v *= scale;
    return scale;
}

double density_normalize(DiskDensity& d) { return d.normalize(); }

}  // namespace diskharm
