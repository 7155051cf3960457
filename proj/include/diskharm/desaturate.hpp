#pragma once

#include <vector>

#include "diskharm/density.hpp"
#include "diskharm/image.hpp"
#include "diskharm/mft.hpp"

// Color desaturation by heat flow on local saturation distributions.
//
// Chroma C = sqrt(a^2 + b^2) in CIELAB is mapped onto the hyperbolic radius
// tau = 2 atanh(min(C / C_ref, 0.999)) with C_ref the image's 99th chroma
// percentile. For every pixel, the window's tau values form a radial
// histogram; its zonal KDE flows under the heat semigroup (cumulative times,
// always starting from the original distribution), and the pixel's chroma is
// re-assigned to the mode of the flowed density. L and hue are untouched.

namespace diskharm {

// sRGB image with its CIELAB values alongside.
struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<std::array<std::uint8_t, 3>> srgb;
    std::vector<Lab> lab;

    static ColorImage from_rgb(const RgbImage& img);
    RgbImage to_rgb() const;
};

struct DesaturateConfig {
    int window = 10;                        // square window edge, clipped at borders
    RadialKernel kernel = RadialKernel::power_cosh(4.0);
    RadialGrid rgrid{8.0, 400};
    SpectralGrid sgrid{20.0, 200};
    QuadratureConfig quad{};
    double radius_clamp = 0.999;            // keeps mapped points inside the open disk
};

// Time increments: `steps - 1` equal increments dt, then one final 2 dt.
std::vector<double> desaturation_schedule(double dt = 0.05, int steps = 16);

// One output image per schedule entry, flowed to the cumulative time.
// Grayscale input (all chroma ~ 0) is a fixed point: outputs copy the input.
std::vector<ColorImage> desaturate(const ColorImage& img, const std::vector<double>& time_steps,
                                   const DesaturateConfig& cfg = {});

// Mean chroma over the image, for monitoring the flow.
double mean_chroma(const ColorImage& img);

}  // namespace diskharm
