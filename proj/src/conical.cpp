#include "diskharm/conical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "diskharm/parallel.hpp"
#include "diskharm/simd.hpp"

namespace diskharm {

namespace {

constexpr double kPi = std::numbers::pi;

// Midpoint nodes in sigma on (0, pi) for one tau. The integral becomes
//   (1/pi) Int_0^pi u^{-1/2} e^{i kappa log u} cos(m theta) (dtheta/dsigma) dsigma
// and the K-point midpoint rule here equals the 2K-point periodic trapezoid
// rule on the full circle (the integrand extends evenly and analytically).
struct SigmaNodes {
    bool at_origin = false;        // tau == 0: u == 1, integral collapses
    std::vector<double> log_u;     // tau * cos(sigma_j)
    std::vector<double> weight;    // u^{-1/2} * (dtheta/dsigma) / K
    std::vector<double> cos_theta;

    SigmaNodes(double tau, int n_theta) {
        const int K = n_theta / 2;
        if (tau == 0.0) {
            at_origin = true;
            return;
        }
        log_u.resize(K);
        weight.resize(K);
        cos_theta.resize(K);
        const double sinh_tau = std::sinh(tau);
        for (int j = 0; j < K; ++j) {
            double half = kPi * (j + 0.5) / (2.0 * K);  // sigma_j / 2
            double sh = std::sin(half), ch = std::cos(half);
            double omc = 2.0 * sh * sh;  // 1 - cos sigma
            double opc = 2.0 * ch * ch;  // 1 + cos sigma
            double lu = tau * (1.0 - omc);
            // 1 -+ cos(theta) via expm1; plain subtraction cancels near the ends
            double one_m = -std::exp(tau) * std::expm1(-tau * omc) / sinh_tau;
            double one_p = std::exp(-tau) * std::expm1(tau * opc) / sinh_tau;
            double sin_theta = std::sqrt(std::max(one_m * one_p, 0.0));
            double sin_sigma = 2.0 * sh * ch;
            double jac = tau * sin_sigma * std::exp(lu) / (sinh_tau * sin_theta);
            log_u[j] = lu;
            weight[j] = std::exp(-0.5 * lu) * jac / K;
            cos_theta[j] = 1.0 - one_m;
        }
    }

    std::size_t size() const { return log_u.size(); }
};

// cos(m theta) columns, built once per tau by the Chebyshev recurrence
// T_m(cos theta) and shared by every (kappa, m) pair.
struct ChebTable {
    std::vector<std::vector<double>> t;  // t[m][j] = cos(m * theta_j)

    ChebTable(const SigmaNodes& nodes, int m_max) {
        const std::size_t K = nodes.size();
        t.resize(m_max + 1);
        t[0].assign(K, 1.0);
        if (m_max >= 1) t[1] = nodes.cos_theta;
        for (int m = 2; m <= m_max; ++m) {
            t[m].resize(K);
            const double* f = nodes.cos_theta.data();
            const double* a = t[m - 1].data();
            const double* b = t[m - 2].data();
            double* out = t[m].data();
            for (std::size_t j = 0; j < K; ++j) out[j] = 2.0 * f[j] * a[j] - b[j];
        }
    }
};

// weight * cos/sin(kappa log u) for one kappa.
struct KappaRow {
    std::vector<double> wc, ws;

    KappaRow(const SigmaNodes& nodes, double kappa) {
        const std::size_t K = nodes.size();
        wc.resize(K);
        ws.resize(K);
        for (std::size_t j = 0; j < K; ++j) {
            double phase = kappa * nodes.log_u[j];
            wc[j] = nodes.weight[j] * std::cos(phase);
            ws[j] = nodes.weight[j] * std::sin(phase);
        }
    }
};

std::complex<double> raw_integral(const KappaRow& row, const std::vector<double>& cheb) {
    const std::size_t K = cheb.size();
    return {simd::dot(row.wc.data(), cheb.data(), K),
            simd::dot(row.ws.data(), cheb.data(), K)};
}

double finalize(int m, double kappa, std::complex<double> integral, double tolerance,
                std::ptrdiff_t ik, std::ptrdiff_t jt) {
    const std::complex<double> prefactor = conical_prefactor(m, kappa);
    std::complex<double> v = prefactor * integral;
    // Achievable absolute accuracy: the quadrature's rounding noise (~eps on
    // an O(1) integrand, growing with the order through the Chebyshev
    // recurrence) amplified by the prefactor, which is huge for large |m| at
    // small tau. Residuals below that floor are rounding, not a resolution
    // failure; genuine under-resolution is caught by the bandwidth check.
    double noise_floor = std::abs(prefactor) * 64.0 * (1.0 + std::abs(m)) *
                         std::numeric_limits<double>::epsilon();
    if (std::abs(v.imag()) > tolerance * std::max(1.0, std::abs(v.real())) + noise_floor)
        throw QuadratureError("conical_p: residual imaginary part exceeds tolerance "
                              "(n_theta too small for this kappa*tau)",
                              ik, jt);
    return v.real();
}

void check_args(double kappa, double tau) {
    if (kappa < 0) throw std::invalid_argument("conical_p: kappa must be nonnegative");
    if (tau < 0) throw std::invalid_argument("conical_p: tau must be nonnegative");
    if (!std::isfinite(kappa) || !std::isfinite(tau))
        throw std::invalid_argument("conical_p: non-finite argument");
}

}  // namespace

void QuadratureConfig::validate() const {
    if (n_theta < 16 || n_theta % 2 != 0)
        throw std::invalid_argument("QuadratureConfig: n_theta must be even and >= 16");
    if (!(tolerance > 0))
        throw std::invalid_argument("QuadratureConfig: tolerance must be positive");
}

std::complex<double> conical_prefactor(int m, double kappa) {
    const std::complex<double> alpha(-0.5, kappa);
    std::complex<double> g(1.0, 0.0);
    if (m >= 0) {
        for (int j = 1; j <= m; ++j) g *= alpha + static_cast<double>(j);
        return g;
    }
    for (int j = 0; j < -m; ++j) g *= alpha - static_cast<double>(j);
    return 1.0 / g;
}

std::vector<Matrix> conical_p_multi(std::span<const int> ms, std::span<const double> kappas,
                                    std::span<const double> taus, const QuadratureConfig& cfg) {
    cfg.validate();
    int m_abs_max = 0;
    for (int m : ms) m_abs_max = std::max(m_abs_max, std::abs(m));
    for (double k : kappas) check_args(k, 0.0);
    for (double t : taus) check_args(0.0, t);

    std::vector<Matrix> out(ms.size(), Matrix(kappas.size(), taus.size()));

    parallel_for(taus.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t jt = lo; jt < hi; ++jt) {
            SigmaNodes nodes(taus[jt], cfg.n_theta);
            if (nodes.at_origin) {
                // u == 1: the theta integral is exactly 2 pi for m = 0, else 0
                for (std::size_t k = 0; k < ms.size(); ++k)
                    for (std::size_t ik = 0; ik < kappas.size(); ++ik)
                        out[k].at(ik, jt) = (ms[k] == 0) ? 1.0 : 0.0;
                continue;
            }
            ChebTable cheb(nodes, m_abs_max);
            for (std::size_t ik = 0; ik < kappas.size(); ++ik) {
                // The integrand oscillates with total bandwidth kappa*tau + m;
                // the trapezoid rule only converges past that, so refuse to
                // return aliased garbage (the even part of which the residual
                // check below cannot see).
                if (cfg.n_theta < kappas[ik] * taus[jt] + m_abs_max + 32)
                    throw QuadratureError("conical_p: n_theta below the oscillation "
                                          "bandwidth kappa*tau + m",
                                          static_cast<std::ptrdiff_t>(ik),
                                          static_cast<std::ptrdiff_t>(jt));
                KappaRow row(nodes, kappas[ik]);
                for (std::size_t k = 0; k < ms.size(); ++k) {
                    auto integral = raw_integral(row, cheb.t[std::abs(ms[k])]);
                    out[k].at(ik, jt) = finalize(ms[k], kappas[ik], integral, cfg.tolerance,
                                                 static_cast<std::ptrdiff_t>(ik),
                                                 static_cast<std::ptrdiff_t>(jt));
                }
            }
        }
    });
    return out;
}

Matrix conical_p_grid(int m, std::span<const double> kappas, std::span<const double> taus,
                      const QuadratureConfig& cfg) {
    const int ms[1] = {m};
    return std::move(conical_p_multi(ms, kappas, taus, cfg).front());
}

double conical_p(int m, double kappa, double tau, const QuadratureConfig& cfg) {
    check_args(kappa, tau);
    const double ks[1] = {kappa};
    const double ts[1] = {tau};
    return conical_p_grid(m, ks, ts, cfg).at(0, 0);
}

double addition_series(double kappa, double tau_l, double tau_0, double theta, int m_max,
                       const QuadratureConfig& cfg) {
    cfg.validate();
    if (m_max < 0) throw std::invalid_argument("addition_series: m_max must be nonnegative");
    check_args(kappa, tau_l);
    check_args(kappa, tau_0);

    // P^{-m}(x_l) P^m(x_0) is symmetric in m -> the +-m pair contributes
    // 2 (-1)^m cos(m theta) P^{-m}(x_l) P^m(x_0); the series is real term
    // by term and sums to P at the law-of-cosines argument.
    std::vector<int> ms(2 * m_max + 1);
    for (int m = -m_max; m <= m_max; ++m) ms[m + m_max] = m;
    const double ks[1] = {kappa};
    const double ts[2] = {tau_l, tau_0};
    auto tables = conical_p_multi(ms, ks, std::span<const double>(ts, 2), cfg);

    auto p_l = [&](int m) { return tables[m + m_max].at(0, 0); };
    auto p_0 = [&](int m) { return tables[m + m_max].at(0, 1); };

    double sum = p_l(0) * p_0(0);
    double last_mag = std::abs(sum);
    for (int m = 1; m <= m_max; ++m) {
        double pair = 2.0 * p_l(-m) * p_0(m);  // cos(m theta) can vanish by accident
        sum += (m % 2 == 0 ? 1.0 : -1.0) * std::cos(m * theta) * pair;
        last_mag = std::abs(pair);
    }
    if (m_max > 0 && last_mag > cfg.tolerance)
        throw QuadratureError("addition_series: series not converged at m_max");
    return sum;
}

}  // namespace diskharm
