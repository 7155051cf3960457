#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "diskharm/image.hpp"

using namespace diskharm;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const char* suffix) {
    return fs::temp_directory_path() /
           ("diskharm-img-" + std::to_string(std::random_device{}()) + suffix);
}

}  // namespace

TEST_CASE("CIELAB anchors: white and black") {
    auto white = srgb_to_cielab(255, 255, 255);
    CHECK(white.L == doctest::Approx(100.0).epsilon(1e-4));
    CHECK(std::abs(white.a) < 0.01);
    CHECK(std::abs(white.b) < 0.01);

    auto black = srgb_to_cielab(0, 0, 0);
    CHECK(black.L == doctest::Approx(0.0));
    CHECK(black.a == doctest::Approx(0.0));
    CHECK(black.b == doctest::Approx(0.0));
}

TEST_CASE("CIELAB round-trip of random pixels within one 8-bit count") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> dist(0, 255);
    for (int i = 0; i < 1000; ++i) {
        std::uint8_t r = dist(rng), g = dist(rng), b = dist(rng);
        auto back = cielab_to_srgb(srgb_to_cielab(r, g, b));
        CHECK(std::abs(back[0] - r) <= 1);
        CHECK(std::abs(back[1] - g) <= 1);
        CHECK(std::abs(back[2] - b) <= 1);
    }
}

TEST_CASE("out-of-gamut CIELAB values clamp instead of wrapping") {
    auto blue = cielab_to_srgb({50.0, 300.0, -300.0});  // Z blows up, R/G go negative
    CHECK(blue[0] == 0);
    CHECK(blue[1] == 0);
    CHECK(blue[2] == 255);

    auto red = cielab_to_srgb({50.0, 300.0, 300.0});  // X blows up, Z collapses
    CHECK(red[0] == 255);
    CHECK(red[2] == 0);
}

TEST_CASE("PNG write/read round-trips the pixel content") {
    RgbImage img;
    img.width = 7;
    img.height = 5;
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> dist(0, 255);
    for (int i = 0; i < 35; ++i)
        img.pixels.push_back({static_cast<std::uint8_t>(dist(rng)),
                              static_cast<std::uint8_t>(dist(rng)),
                              static_cast<std::uint8_t>(dist(rng))});
    auto path = temp_file(".png");
    save_png(path, img);
    auto back = load_rgb(path);
    REQUIRE(back.width == img.width);
    REQUIRE(back.height == img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) CHECK(back.pixels[i] == img.pixels[i]);
    fs::remove(path);
}

TEST_CASE("binary PPM and PGM load, with comments in the header") {
    auto ppm = temp_file(".ppm");
    {
        std::ofstream out(ppm, std::ios::binary);
        out << "P6\n# a comment\n2 1\n255\n";
        const unsigned char px[6] = {255, 0, 0, 0, 0, 255};
        out.write(reinterpret_cast<const char*>(px), 6);
    }
    auto img = load_rgb(ppm);
    REQUIRE(img.width == 2);
    CHECK(img.at(0, 0)[0] == 255);
    CHECK(img.at(1, 0)[2] == 255);
    fs::remove(ppm);

    auto pgm = temp_file(".pgm");
    {
        std::ofstream out(pgm, std::ios::binary);
        out << "P5\n3 1\n255\n";
        const unsigned char px[3] = {0, 128, 255};
        out.write(reinterpret_cast<const char*>(px), 3);
    }
    auto gray = load_gray(pgm);
    REQUIRE(gray.width == 3);
    CHECK(gray.at(0, 0) == doctest::Approx(0.0));
    CHECK(gray.at(2, 0) == doctest::Approx(1.0));
    fs::remove(pgm);
}

TEST_CASE("corrupt input raises ImageError") {
    auto bad = temp_file(".png");
    std::ofstream(bad) << "this is not an image";
    CHECK_THROWS_AS(load_rgb(bad), ImageError);
    fs::remove(bad);
    CHECK_THROWS_AS(load_rgb("/nonexistent.png"), ImageError);
}
