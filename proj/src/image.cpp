#include "diskharm/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>

namespace diskharm {

namespace {

// --- CIELAB, D65 white under the 2 degree observer ---

constexpr double kXn = 0.95047;
constexpr double kYn = 1.00000;
constexpr double kZn = 1.08883;

double srgb_decode(std::uint8_t c) {
    double v = c / 255.0;
    return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

std::uint8_t srgb_encode(double v) {
    v = v <= 0.0031308 ? 12.92 * v : 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
    return static_cast<std::uint8_t>(std::clamp(std::lround(v * 255.0), 0L, 255L));
}

double lab_f(double t) {
    constexpr double delta = 6.0 / 29.0;
    return t > delta * delta * delta ? std::cbrt(t) : t / (3.0 * delta * delta) + 4.0 / 29.0;
}

double lab_finv(double t) {
    constexpr double delta = 6.0 / 29.0;
    return t > delta ? t * t * t : 3.0 * delta * delta * (t - 4.0 / 29.0);
}

}  // namespace

Lab srgb_to_cielab(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
    double r = srgb_decode(r8), g = srgb_decode(g8), b = srgb_decode(b8);
    double x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
    double y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
    double z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b;
    double fx = lab_f(x / kXn), fy = lab_f(y / kYn), fz = lab_f(z / kZn);
    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

std::array<std::uint8_t, 3> cielab_to_srgb(const Lab& lab) {
    double fy = (lab.L + 16.0) / 116.0;
    double x = kXn * lab_finv(fy + lab.a / 500.0);
    double y = kYn * lab_finv(fy);
    double z = kZn * lab_finv(fy - lab.b / 200.0);
    double r = 3.2404542 * x - 1.5371385 * y - 0.4985314 * z;
    double g = -0.9692660 * x + 1.8760108 * y + 0.0415560 * z;
    double b = 0.0556434 * x - 0.2040259 * y + 1.0572252 * z;
    return {srgb_encode(r), srgb_encode(g), srgb_encode(b)};
}

namespace {

// --- PNG ---

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriter() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

RgbImage read_png(const std::filesystem::path& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw ImageError("cannot open: " + path.string());
    PngReader r;
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (r.png) r.info = png_create_info_struct(r.png);
    if (!r.info) throw ImageError("libpng init failed");
    if (setjmp(png_jmpbuf(r.png))) throw ImageError("corrupt PNG: " + path.string());
    png_init_io(r.png, fp.get());
    png_read_info(r.png, r.info);

    // Normalize everything to 8-bit RGB.
    png_set_expand(r.png);
    png_set_strip_16(r.png);
    png_set_strip_alpha(r.png);
    png_set_gray_to_rgb(r.png);
    png_read_update_info(r.png, r.info);

    RgbImage img;
    img.width = static_cast<int>(png_get_image_width(r.png, r.info));
    img.height = static_cast<int>(png_get_image_height(r.png, r.info));
    if (png_get_rowbytes(r.png, r.info) != static_cast<std::size_t>(img.width) * 3)
        throw ImageError("unexpected PNG layout: " + path.string());
    img.pixels.resize(static_cast<std::size_t>(img.width) * img.height);
    std::vector<png_bytep> rows(img.height);
    for (int y = 0; y < img.height; ++y)
        rows[y] = reinterpret_cast<png_bytep>(img.pixels[static_cast<std::size_t>(y) * img.width].data());
    png_read_image(r.png, rows.data());
    png_read_end(r.png, nullptr);
    return img;
}

void write_png(const std::filesystem::path& path, int width, int height, int channels,
               const std::uint8_t* data) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw ImageError("cannot open for writing: " + path.string());
    PngWriter w;
    w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (w.png) w.info = png_create_info_struct(w.png);
    if (!w.info) throw ImageError("libpng init failed");
    if (setjmp(png_jmpbuf(w.png))) throw ImageError("PNG write failed: " + path.string());
    png_init_io(w.png, fp.get());
    png_set_IHDR(w.png, w.info, width, height, 8,
                 channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y)
        rows[y] = const_cast<png_bytep>(data + static_cast<std::size_t>(y) * width * channels);
    png_write_image(w.png, rows.data());
    png_write_end(w.png, nullptr);
}

// --- binary PNM (P5/P6, maxval 255) ---

int pnm_token(std::istream& in) {
    // Skips whitespace and '#' comments between header fields.
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
        } else if (!std::isspace(c)) {
            in.unget();
            int v;
            if (!(in >> v)) break;
            return v;
        }
    }
    throw ImageError("truncated PNM header");
}

RgbImage read_pnm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ImageError("cannot open: " + path.string());
    char magic[2];
    in.read(magic, 2);
    bool color = magic[1] == '6';
    if (!in || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '6'))
        throw ImageError("not a binary PGM/PPM: " + path.string());
    int width = pnm_token(in), height = pnm_token(in), maxval = pnm_token(in);
    if (width <= 0 || height <= 0 || maxval != 255)
        throw ImageError("unsupported PNM header in " + path.string());
    in.get();  // single whitespace byte before raster
    RgbImage img;
    img.width = width;
    img.height = height;
    img.pixels.resize(static_cast<std::size_t>(width) * height);
    if (color) {
        in.read(reinterpret_cast<char*>(img.pixels.data()), img.pixels.size() * 3);
    } else {
        std::vector<std::uint8_t> gray(img.pixels.size());
        in.read(reinterpret_cast<char*>(gray.data()), gray.size());
        for (std::size_t i = 0; i < gray.size(); ++i)
            img.pixels[i] = {gray[i], gray[i], gray[i]};
    }
    if (!in) throw ImageError("truncated raster in " + path.string());
    return img;
}

bool is_png_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ImageError("cannot open: " + path.string());
    unsigned char sig[8] = {};
    in.read(reinterpret_cast<char*>(sig), 8);
    return in && !png_sig_cmp(sig, 0, 8);
}

}  // namespace

RgbImage load_rgb(const std::filesystem::path& path) {
    return is_png_file(path) ? read_png(path) : read_pnm(path);
}

GrayImage load_gray(const std::filesystem::path& path) {
    RgbImage rgb = load_rgb(path);
    GrayImage g;
    g.width = rgb.width;
    g.height = rgb.height;
    g.pixels.resize(rgb.pixels.size());
    for (std::size_t i = 0; i < rgb.pixels.size(); ++i) {
        const auto& p = rgb.pixels[i];
        // Rec. 709 luma on the stored (gamma-encoded) values.
        g.pixels[i] = (0.2126 * p[0] + 0.7152 * p[1] + 0.0722 * p[2]) / 255.0;
    }
    return g;
}

void save_png(const std::filesystem::path& path, const RgbImage& img) {
    if (img.width <= 0 || img.height <= 0) throw ImageError("empty image");
    write_png(path, img.width, img.height, 3, img.pixels[0].data());
}

void save_png_gray(const std::filesystem::path& path, const GrayImage& img) {
    if (img.width <= 0 || img.height <= 0) throw ImageError("empty image");
    std::vector<std::uint8_t> bytes(img.pixels.size());
    for (std::size_t i = 0; i < bytes.size(); ++i)
        bytes[i] = static_cast<std::uint8_t>(
            std::clamp(std::lround(img.pixels[i] * 255.0), 0L, 255L));
    write_png(path, img.width, img.height, 1, bytes.data());
}

}  // namespace diskharm
