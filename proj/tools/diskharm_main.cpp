#include <algorithm>
#include <cctype>
#include <fstream>
#include <numbers>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diskharm/config.hpp"
#include "diskharm/conical.hpp"
#include "diskharm/csv.hpp"
#include "diskharm/density.hpp"
#include "diskharm/desaturate.hpp"
#include "diskharm/image.hpp"
#include "diskharm/mft.hpp"
#include "diskharm/parallel.hpp"
#include "diskharm/texture.hpp"

namespace fs = std::filesystem;
using namespace diskharm;

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitQuadrature = 3;

void warn_truncation(const TransformReport& report, const char* what) {
    if (report.truncated)
        std::cerr << "warning: " << what << " integrand not decayed at the grid boundary (tail "
                  << report.tail_magnitude << ")\n";
}

// Density section of the kde/texture outputs: spectra, zonal profile and a
// polar contour grid for plotting.
void dump_density(const DiskDensity& d, const fs::path& dir, const std::string& stem) {
    write_density_csv(dir / (stem + "_spectra.csv"), d);
    write_radial_csv(dir / (stem + "_zonal.csv"),
                     {d.plan().radial_grid(), d.zonal_profile()});
    const int n_phi = 64;
    std::vector<double> phis(n_phi);
    for (int a = 0; a < n_phi; ++a) phis[a] = 2.0 * std::numbers::pi * a / n_phi;
    auto taus = d.plan().radial_grid().nodes();
    write_contour_csv(dir / (stem + "_contour.csv"), d.synthesize_grid(phis, taus));
}

int cmd_mft(const RunConfig& cfg, const fs::path& input, fs::path output, bool inverse) {
    MftPlan plan(cfg.radial_grid(), cfg.spectral_grid(), cfg.quadrature());
    TransformReport report;
    if (inverse) {
        Spectrum c = read_spectrum_csv(input);
        if (!(c.grid == plan.spectral_grid())) {
            std::cerr << "error: spectrum grid in " << input
                      << " does not match the configured grid\n";
            return kExitBadInput;
        }
        if (output.empty()) output = fs::path(cfg.out_dir) / input.stem().concat("_radial.csv");
        write_radial_csv(output, plan.inverse(c, &report));
        warn_truncation(report, "inverse");
    } else {
        RadialFunction f = read_radial_csv(input);
        if (!(f.grid == plan.radial_grid())) {
            std::cerr << "error: radial grid in " << input
                      << " does not match the configured grid\n";
            return kExitBadInput;
        }
        if (output.empty()) output = fs::path(cfg.out_dir) / input.stem().concat("_spectrum.csv");
        write_spectrum_csv(output, plan.forward(f, &report));
        warn_truncation(report, "forward");
    }
    std::cout << output.string() << "\n";
    return 0;
}

int cmd_conical(const RunConfig& cfg, int m, double kappa, double tau) {
    double value = conical_p(m, kappa, tau, cfg.quadrature());
    std::printf("%.15g\n", value);
    return 0;
}

int cmd_kde(const RunConfig& cfg, const fs::path& input) {
    SampleSet samples = read_samples_csv(input);
    DensityPlan plan(cfg.radial_grid(), cfg.spectral_grid(), cfg.m_max, cfg.quadrature());
    DiskDensity d = kde_spectral(samples, cfg.kernel(), plan);
    d.normalize();
    dump_density(d, cfg.out_dir, input.stem().string() + "_kde");
    return 0;
}

int cmd_texture(const RunConfig& cfg, const fs::path& input_dir) {
    std::vector<GrayImage> images;
    std::vector<std::string> ids;
    std::vector<std::string> unreadable;
    std::vector<fs::path> files;
    if (!fs::is_directory(input_dir)) {
        std::cerr << "error: not a directory: " << input_dir << "\n";
        return kExitBadInput;
    }
    for (const auto& entry : fs::directory_iterator(input_dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (ext == ".png" || ext == ".ppm" || ext == ".pgm" || ext == ".pnm")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        try {
            images.push_back(load_gray(path));
            ids.push_back(path.stem().string());
        } catch (const ImageError& e) {
            unreadable.push_back(std::string(e.what()));
        }
    }
    if (!unreadable.empty()) {
        std::cerr << "error: unreadable images:\n";
        for (const auto& msg : unreadable) std::cerr << "  " << msg << "\n";
        return kExitBadInput;
    }
    if (images.size() < 2) {
        std::cerr << "error: need at least 2 images in " << input_dir << "\n";
        return kExitBadInput;
    }

    DensityPlan plan(cfg.radial_grid(), cfg.spectral_grid(), cfg.m_max, cfg.quadrature());
    TextureRanking ranking = texture_rank(images, ids, cfg.kernel(), plan, cfg.gain);

    write_matrix_csv(fs::path(cfg.out_dir) / "distances.csv", ranking.distances);
    write_matrix_csv(fs::path(cfg.out_dir) / "embedding.csv", ranking.embedding);
    {
        std::ofstream out(fs::path(cfg.out_dir) / "ranking.csv");
        for (int idx : ranking.order)
            out << ids[idx] << ',' << ranking.embedding.at(idx, 0) << "\n";
        if (!out) throw CsvError("write failed: ranking.csv");
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto responses = dihedral_edge_filter(images[i], cfg.gain);
        dump_density(texture_density(responses, cfg.kernel(), plan), cfg.out_dir,
                     ids[i] + "_density");
    }
    for (int idx : ranking.order)
        std::cout << ids[idx] << " " << ranking.embedding.at(idx, 0) << "\n";
    return 0;
}

int cmd_desaturate(const RunConfig& cfg, const fs::path& input) {
    ColorImage img = ColorImage::from_rgb(load_rgb(input));
    DesaturateConfig dcfg;
    dcfg.window = cfg.window;
    dcfg.kernel = cfg.kernel();
    dcfg.rgrid = cfg.radial_grid();
    dcfg.sgrid = cfg.spectral_grid();
    dcfg.quad = cfg.quadrature();
    auto outputs = desaturate(img, cfg.schedule(), dcfg);
    std::string stem = input.stem().string();
    for (std::size_t k = 0; k < outputs.size(); ++k) {
        fs::path out = fs::path(cfg.out_dir) / (stem + "_t" + std::to_string(k) + ".png");
        save_png(out, outputs[k].to_rgb());
        std::cout << out.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic analysis on the hyperbolic disk"};
    app.require_subcommand(1);

    // Common flags. Precedence: explicit CLI flag > config file > default.
    std::string config_path, out_dir;
    int threads = -1;
    unsigned seed = 0;
    app.add_option("--config", config_path, "JSON config file")->expected(1);
    auto* out_dir_opt = app.add_option("--out-dir", out_dir, "output directory");
    auto* threads_opt = app.add_option("--threads", threads, "worker threads (0 = all cores)");
    auto* seed_opt = app.add_option("--seed", seed, "RNG seed for data generation");

    auto* mft_cmd = app.add_subcommand("mft", "forward/inverse Mehler-Fock transform")->fallthrough();
    std::string mft_in, mft_out;
    bool inverse = false;
    mft_cmd->add_option("--input", mft_in, "radial (forward) or spectrum (inverse) CSV")
        ->required();
    mft_cmd->add_option("--output", mft_out, "output CSV path");
    mft_cmd->add_flag("--inverse", inverse, "apply the inverse transform");

    auto* conical_cmd = app.add_subcommand("conical", "evaluate a conical function")->fallthrough();
    int m = 0;
    double kappa = 0.0, tau = 0.0;
    conical_cmd->add_option("--m", m, "order")->required();
    conical_cmd->add_option("--kappa", kappa, "spectral parameter")->required();
    conical_cmd->add_option("--tau", tau, "radial argument")->required();

    auto* kde_cmd = app.add_subcommand("kde", "spectral kernel density estimate")->fallthrough();
    std::string kde_in;
    kde_cmd->add_option("--input", kde_in, "samples CSV (phi,tau,weight rows)")->required();

    auto* texture_cmd = app.add_subcommand("texture", "texture roughness ordering")->fallthrough();
    std::string texture_dir;
    texture_cmd->add_option("--input-dir", texture_dir, "directory of grayscale images")
        ->required();

    auto* desat_cmd = app.add_subcommand("desaturate", "heat-flow desaturation sequence")->fallthrough();
    std::string desat_in;
    desat_cmd->add_option("--input", desat_in, "RGB image (PNG or PPM)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg;
        if (!config_path.empty()) apply_config_file(cfg, config_path);
        if (out_dir_opt->count()) cfg.out_dir = out_dir;
        if (threads_opt->count()) cfg.threads = threads;
        if (seed_opt->count()) cfg.seed = seed;
        cfg.validate();
        set_max_threads(static_cast<unsigned>(cfg.threads));
        fs::create_directories(cfg.out_dir);

        if (mft_cmd->parsed()) return cmd_mft(cfg, mft_in, mft_out, inverse);
        if (conical_cmd->parsed()) return cmd_conical(cfg, m, kappa, tau);
        if (kde_cmd->parsed()) return cmd_kde(cfg, kde_in);
        if (texture_cmd->parsed()) return cmd_texture(cfg, texture_dir);
        if (desat_cmd->parsed()) return cmd_desaturate(cfg, desat_in);
    } catch (const QuadratureError& e) {
        std::cerr << "error: quadrature failure: " << e.what() << "\n";
        return kExitQuadrature;
    } catch (const CsvError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ImageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
