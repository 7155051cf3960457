#include <doctest.h>

#include <cmath>
#include <random>

#include "diskharm/desaturate.hpp"

using namespace diskharm;

namespace {

// small grids keep the per-pixel flow cheap in unit tests
DesaturateConfig test_config() {
    DesaturateConfig cfg;
    cfg.window = 4;
    cfg.rgrid = {6.0, 160};
    cfg.sgrid = {12.0, 80};
    return cfg;
}

ColorImage two_tone(int size) {
    RgbImage img;
    img.width = img.height = size;
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
            if (x < size / 2) img.pixels.push_back({200, 80, 80});
            else img.pixels.push_back({90, 90, 180});
        }
    return ColorImage::from_rgb(img);
}

}  // namespace

TEST_CASE("schedule shape: equal increments with a doubled final step") {
    auto s = desaturation_schedule(0.1, 16);
    REQUIRE(s.size() == 16);
    for (int i = 0; i < 15; ++i) CHECK(s[i] == 0.1);
    CHECK(s[15] == 0.2);
    CHECK_THROWS_AS(desaturation_schedule(-0.1, 16), std::invalid_argument);
}

TEST_CASE("grayscale images are a fixed point, bit-exactly") {
    RgbImage gray;
    gray.width = gray.height = 8;
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> dist(0, 255);
    for (int i = 0; i < 64; ++i) {
        auto v = static_cast<std::uint8_t>(dist(rng));
        gray.pixels.push_back({v, v, v});
    }
    auto img = ColorImage::from_rgb(gray);
    auto outputs = desaturate(img, desaturation_schedule(0.05, 4), test_config());
    REQUIRE(outputs.size() == 4);
    for (const auto& out : outputs)
        for (std::size_t i = 0; i < out.srgb.size(); ++i) CHECK(out.srgb[i] == gray.pixels[i]);
}

TEST_CASE("a zero schedule repeats the t = 0 mode image") {
    auto img = two_tone(8);
    auto outputs = desaturate(img, {0.0, 0.0, 0.0}, test_config());
    REQUIRE(outputs.size() == 3);
    for (std::size_t k = 1; k < outputs.size(); ++k)
        for (std::size_t i = 0; i < img.srgb.size(); ++i)
            CHECK(outputs[k].srgb[i] == outputs[0].srgb[i]);
}

TEST_CASE("mean saturation is non-increasing along the flow") {
    auto img = two_tone(12);
    auto outputs = desaturate(img, desaturation_schedule(0.05, 6), test_config());
    double prev = mean_chroma(outputs[0]);
    for (std::size_t k = 1; k < outputs.size(); ++k) {
        double cur = mean_chroma(outputs[k]);
        CHECK(cur <= prev + 1e-9);
        prev = cur;
    }
}

TEST_CASE("L and hue are preserved exactly in the CIELAB representation") {
    auto img = two_tone(8);
    auto outputs = desaturate(img, desaturation_schedule(0.05, 2), test_config());
    for (const auto& out : outputs)
        for (std::size_t i = 0; i < img.lab.size(); ++i) {
            CHECK(out.lab[i].L == img.lab[i].L);
            double c_in = std::hypot(img.lab[i].a, img.lab[i].b);
            double c_out = std::hypot(out.lab[i].a, out.lab[i].b);
            if (c_in > 1e-9 && c_out > 1e-9) {
                double hue_in = std::atan2(img.lab[i].b, img.lab[i].a);
                double hue_out = std::atan2(out.lab[i].b, out.lab[i].a);
                CHECK(std::abs(std::remainder(hue_in - hue_out, 2 * 3.141592653589793)) < 1e-12);
            }
        }
}

TEST_CASE("input validation") {
    auto img = two_tone(8);
    DesaturateConfig bad = test_config();
    bad.window = 1;
    CHECK_THROWS_AS(desaturate(img, {0.1}, bad), std::invalid_argument);
    CHECK_THROWS_AS(desaturate(img, {}, test_config()), std::invalid_argument);
}
