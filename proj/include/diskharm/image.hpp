#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

namespace diskharm {

class ImageError : public std::runtime_error {
  public:
    explicit ImageError(const std::string& what) : std::runtime_error(what) {}
};

// Row-major grayscale image with values in [0, 1].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels;

    double at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    double& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

// 8-bit sRGB image.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::array<std::uint8_t, 3>> pixels;  // row-major

    const std::array<std::uint8_t, 3>& at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::array<std::uint8_t, 3>& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
};

struct Lab {
    double L;  // [0, 100]
    double a;
    double b;
};

// sRGB (8-bit, D65 white, 2 degree observer) <-> CIELAB.
Lab srgb_to_cielab(std::uint8_t r, std::uint8_t g, std::uint8_t b);
// Out-of-gamut results are clamped per channel.
std::array<std::uint8_t, 3> cielab_to_srgb(const Lab& lab);

// PNG plus binary PPM (P6) / PGM (P5). Format chosen by extension on write,
// sniffed on read. Color inputs are converted to luma for load_gray.
GrayImage load_gray(const std::filesystem::path& path);
RgbImage load_rgb(const std::filesystem::path& path);
void save_png(const std::filesystem::path& path, const RgbImage& img);
void save_png_gray(const std::filesystem::path& path, const GrayImage& img);

}  // namespace diskharm
