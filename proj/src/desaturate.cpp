#include "diskharm/desaturate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diskharm/parallel.hpp"
#include "diskharm/simd.hpp"

namespace diskharm {

namespace {

constexpr double kChromaEps = 1e-12;

double chroma(const Lab& p) { return std::hypot(p.a, p.b); }

// 99th percentile by sorted rank; deterministic.
double chroma_reference(const ColorImage& img) {
    std::vector<double> c(img.lab.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = chroma(img.lab[i]);
    std::sort(c.begin(), c.end());
    auto idx = static_cast<std::size_t>(std::llround(0.99 * (c.size() - 1)));
    return c[idx];
}

}  // namespace

ColorImage ColorImage::from_rgb(const RgbImage& img) {
    ColorImage out;
    out.width = img.width;
    out.height = img.height;
    out.srgb = img.pixels;
    out.lab.resize(img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const auto& p = img.pixels[i];
        out.lab[i] = srgb_to_cielab(p[0], p[1], p[2]);
    }
    return out;
}

RgbImage ColorImage::to_rgb() const {
    return {width, height, srgb};
}

std::vector<double> desaturation_schedule(double dt, int steps) {
    if (steps < 1 || dt < 0.0) throw std::invalid_argument("bad desaturation schedule");
    std::vector<double> out(steps, dt);
    out.back() = 2.0 * dt;
    return out;
}

double mean_chroma(const ColorImage& img) {
    if (img.lab.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& p : img.lab) sum += chroma(p);
    return sum / static_cast<double>(img.lab.size());
}

std::vector<ColorImage> desaturate(const ColorImage& img, const std::vector<double>& time_steps,
                                   const DesaturateConfig& cfg) {
    if (img.width <= 0 || img.height <= 0 || img.lab.size() != img.srgb.size() ||
        img.lab.size() != static_cast<std::size_t>(img.width) * img.height)
        throw std::invalid_argument("desaturate: malformed image");
    if (cfg.window < 2) throw std::invalid_argument("desaturate: window must be >= 2");
    if (time_steps.empty()) throw std::invalid_argument("desaturate: empty schedule");

    const double c_ref = chroma_reference(img);
    if (c_ref < kChromaEps) {
        // grayscale fixed point
        return std::vector<ColorImage>(time_steps.size(), img);
    }

    const RadialGrid& rg = cfg.rgrid;
    const std::size_t n_tau = static_cast<std::size_t>(rg.n_tau);
    const double inv_step = 1.0 / rg.step();
    const std::size_t npix = img.lab.size();

    // nearest radial node per pixel
    std::vector<int> node(npix);
    std::vector<double> pixel_chroma(npix);
    for (std::size_t i = 0; i < npix; ++i) {
        double c = chroma(img.lab[i]);
        pixel_chroma[i] = c;
        double r = std::min(c / c_ref, cfg.radius_clamp);
        double tau = 2.0 * std::atanh(r);
        node[i] = static_cast<int>(
            std::clamp<long>(std::lround(tau * inv_step), 0, rg.n_tau - 1));
    }

    MftPlan plan(rg, cfg.sgrid, cfg.quad);
    Spectrum ck = plan.forward({rg, cfg.kernel.radial_profile(rg)});
    const Matrix& p0 = plan.conical_table();  // n_kappa x n_tau
    const auto& pw = plan.plancherel_weights();
    const std::size_t n_kappa = static_cast<std::size_t>(cfg.sgrid.n_kappa);
    const auto kappas = cfg.sgrid.nodes();

    std::vector<ColorImage> outputs;
    outputs.reserve(time_steps.size());
    double time = 0.0;
    Matrix flow(n_tau, n_tau);  // symmetric P0^T diag(...) P0, rebuilt per step
    for (double dt : time_steps) {
        time += dt;
        std::fill(flow.data.begin(), flow.data.end(), 0.0);
        for (std::size_t i = 0; i < n_kappa; ++i) {
            double diag = pw[i] * std::exp(-(0.25 + kappas[i] * kappas[i]) * time) * ck.values[i];
            const double* row = p0.row(i);
            for (std::size_t j = 0; j < n_tau; ++j)
                simd::axpy(diag * row[j], row, flow.row(j), n_tau);
        }

        ColorImage out = img;
        parallel_for(static_cast<std::size_t>(img.height), [&](std::size_t y0, std::size_t y1) {
            std::vector<double> density(n_tau);
            std::vector<std::pair<int, double>> hist;
            for (std::size_t y = y0; y < y1; ++y) {
                for (int x = 0; x < img.width; ++x) {
                    std::size_t idx = y * img.width + x;
                    if (pixel_chroma[idx] < kChromaEps) continue;  // hue undefined; keep

                    // window clipped at the borders
                    int x_lo = std::max(0, x - cfg.window / 2);
                    int y_lo = std::max<int>(0, static_cast<int>(y) - cfg.window / 2);
                    int x_hi = std::min(img.width, x_lo + cfg.window);
                    int y_hi = std::min(img.height, y_lo + cfg.window);
                    x_lo = std::max(0, x_hi - cfg.window);
                    y_lo = std::max(0, y_hi - cfg.window);

                    hist.clear();
                    double w = 1.0 / (static_cast<double>(x_hi - x_lo) * (y_hi - y_lo));
                    for (int wy = y_lo; wy < y_hi; ++wy)
                        for (int wx = x_lo; wx < x_hi; ++wx) {
                            int n = node[static_cast<std::size_t>(wy) * img.width + wx];
                            auto it = std::find_if(hist.begin(), hist.end(),
                                                   [n](const auto& e) { return e.first == n; });
                            if (it == hist.end()) hist.emplace_back(n, w);
                            else it->second += w;
                        }

                    std::fill(density.begin(), density.end(), 0.0);
                    for (const auto& [n, hw] : hist)
                        simd::axpy(hw, flow.row(static_cast<std::size_t>(n)), density.data(),
                                   n_tau);

                    // mode, ties toward smaller tau
                    std::size_t best = 0;
                    for (std::size_t j = 1; j < n_tau; ++j)
                        if (density[j] > density[best]) best = j;

                    double new_c = std::tanh(0.5 * rg.node(static_cast<int>(best))) * c_ref;
                    if (std::abs(new_c - pixel_chroma[idx]) < kChromaEps) continue;
                    double scale = new_c / pixel_chroma[idx];
                    Lab& p = out.lab[idx];
                    p.a *= scale;
                    p.b *= scale;
                    out.srgb[idx] = cielab_to_srgb(p);
                }
            }
        });
        outputs.push_back(std::move(out));
    }
    return outputs;
}

}  // namespace diskharm
