#include "diskharm/mft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "diskharm/simd.hpp"

namespace diskharm {

namespace {

std::vector<double> uniform_nodes(double maxval, int n) {
    std::vector<double> v(n);
    double h = maxval / (n - 1);
    for (int i = 0; i < n; ++i) v[i] = i * h;
    return v;
}

std::vector<double> trapezoid(double maxval, int n) {
    std::vector<double> w(n, maxval / (n - 1));
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

void check_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite value");
}

}  // namespace

void RadialGrid::validate() const {
    if (!(tau_max > 0) || n_tau < 32)
        throw std::invalid_argument("RadialGrid: need tau_max > 0 and n_tau >= 32");
}
std::vector<double> RadialGrid::nodes() const { return uniform_nodes(tau_max, n_tau); }
std::vector<double> RadialGrid::trapezoid_weights() const { return trapezoid(tau_max, n_tau); }

void SpectralGrid::validate() const {
    if (!(kappa_max > 0) || n_kappa < 32)
        throw std::invalid_argument("SpectralGrid: need kappa_max > 0 and n_kappa >= 32");
}
std::vector<double> SpectralGrid::nodes() const { return uniform_nodes(kappa_max, n_kappa); }
std::vector<double> SpectralGrid::trapezoid_weights() const { return trapezoid(kappa_max, n_kappa); }

void RadialFunction::validate() const {
    grid.validate();
    if (values.size() != static_cast<std::size_t>(grid.n_tau))
        throw std::invalid_argument("RadialFunction: length does not match grid");
    check_finite(values, "RadialFunction");
}

void Spectrum::validate() const {
    grid.validate();
    if (values.size() != static_cast<std::size_t>(grid.n_kappa))
        throw std::invalid_argument("Spectrum: length does not match grid");
    check_finite(values, "Spectrum");
}

QuadratureConfig default_quadrature(const RadialGrid& rgrid, const SpectralGrid& sgrid,
                                    int m_max) {
    rgrid.validate();
    sgrid.validate();
    int need = static_cast<int>(rgrid.tau_max * sgrid.kappa_max) + m_max + 64;
    QuadratureConfig cfg;
    cfg.n_theta = std::max(cfg.n_theta, (need + 31) / 32 * 32);
    return cfg;
}

MftPlan::MftPlan(RadialGrid rgrid, SpectralGrid sgrid)
    : MftPlan(rgrid, sgrid, default_quadrature(rgrid, sgrid)) {}

MftPlan::MftPlan(RadialGrid rgrid, SpectralGrid sgrid, QuadratureConfig cfg,
                 double truncation_tolerance)
    : rgrid_(rgrid), sgrid_(sgrid), cfg_(cfg), truncation_tol_(truncation_tolerance) {
    rgrid_.validate();
    sgrid_.validate();
    cfg_.validate();
    auto taus = rgrid_.nodes();
    auto kappas = sgrid_.nodes();
    table_ = conical_p_grid(0, kappas, taus, cfg_);
    sinh_tau_.resize(taus.size());
    for (std::size_t j = 0; j < taus.size(); ++j) sinh_tau_[j] = std::sinh(taus[j]);
    tau_w_ = rgrid_.trapezoid_weights();
    auto kw = sgrid_.trapezoid_weights();
    plancherel_w_.resize(kappas.size());
    for (std::size_t i = 0; i < kappas.size(); ++i)
        plancherel_w_[i] = kappas[i] * std::tanh(std::numbers::pi * kappas[i]) * kw[i];
}

Spectrum MftPlan::forward(const RadialFunction& f, TransformReport* report) const {
    f.validate();
    if (!(f.grid == rgrid_)) throw std::invalid_argument("MftPlan::forward: grid mismatch");
    const std::size_t nt = f.values.size();
    std::vector<double> g(nt);
    for (std::size_t j = 0; j < nt; ++j) g[j] = f.values[j] * sinh_tau_[j] * tau_w_[j];

    if (report) {
        double tail = std::abs(f.values.back() * sinh_tau_.back());
        report->tail_magnitude = tail;
        report->truncated = tail > truncation_tol_;
    }

    Spectrum c{sgrid_, std::vector<double>(sgrid_.n_kappa)};
    simd::matvec(table_.data.data(), table_.rows, table_.cols, g.data(), c.values.data());
    return c;
}

RadialFunction MftPlan::inverse(const Spectrum& c, TransformReport* report) const {
    c.validate();
    if (!(c.grid == sgrid_)) throw std::invalid_argument("MftPlan::inverse: grid mismatch");
    const std::size_t nk = c.values.size();

    if (report) {
        double tail = std::abs(c.values.back()) * sgrid_.kappa_max;
        report->tail_magnitude = tail;
        report->truncated = tail > truncation_tol_;
    }

    RadialFunction f{rgrid_, std::vector<double>(rgrid_.n_tau, 0.0)};
    for (std::size_t i = 0; i < nk; ++i)
        simd::axpy(plancherel_w_[i] * c.values[i], table_.row(i), f.values.data(), table_.cols);
    return f;
}

Spectrum mft_forward(const RadialFunction& f, const SpectralGrid& sgrid,
                     const QuadratureConfig& cfg, TransformReport* report) {
    return MftPlan(f.grid, sgrid, cfg).forward(f, report);
}

RadialFunction mft_inverse(const Spectrum& c, const RadialGrid& rgrid,
                           const QuadratureConfig& cfg, TransformReport* report) {
    return MftPlan(rgrid, c.grid, cfg).inverse(c, report);
}

double parseval_inner(const Spectrum& c1, const Spectrum& c2) {
    c1.validate();
    c2.validate();
    if (!(c1.grid == c2.grid)) throw std::invalid_argument("parseval_inner: grid mismatch");
    auto kappas = c1.grid.nodes();
    auto kw = c1.grid.trapezoid_weights();
    for (std::size_t i = 0; i < kappas.size(); ++i)
        kw[i] *= kappas[i] * std::tanh(std::numbers::pi * kappas[i]);
    return simd::dot3(c1.values.data(), c2.values.data(), kw.data(), kw.size());
}

double parseval_distance(const Spectrum& c1, const Spectrum& c2) {
    if (!(c1.grid == c2.grid)) throw std::invalid_argument("parseval_distance: grid mismatch");
    Spectrum d{c1.grid, c1.values};
    for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= c2.values[i];
    return std::sqrt(std::max(0.0, parseval_inner(d, d)));
}

Spectrum heat_multiplier(const Spectrum& c, double t) {
    c.validate();
    if (t < 0) throw std::invalid_argument("heat_multiplier: t must be nonnegative");
    Spectrum out = c;
    auto kappas = c.grid.nodes();
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] *= std::exp(-(0.25 + kappas[i] * kappas[i]) * t);
    return out;
}

}  // namespace diskharm
