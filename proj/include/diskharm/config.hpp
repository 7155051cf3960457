#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskharm/conical.hpp"
#include "diskharm/density.hpp"
#include "diskharm/mft.hpp"

namespace diskharm {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Run parameters shared by the CLI commands. JSON files use the same names.
struct RunConfig {
    double tau_max = 12.0;
    int n_tau = 800;
    double kappa_max = 20.0;
    int n_kappa = 400;
    std::string kernel_family = "power_cosh";
    double kernel_s = 4.0;
    int m_max = 32;
    double gain = 1.0;
    int window = 10;
    double dt = 0.05;
    int time_steps = 16;
    int n_theta = 0;  // 0: derive from the grids and m_max (default_quadrature)
    double quad_tolerance = 1e-8;
    int threads = 1;
    std::string out_dir = ".";
    unsigned seed = 42;

    void validate() const;

    RadialGrid radial_grid() const { return {tau_max, n_tau}; }
    SpectralGrid spectral_grid() const { return {kappa_max, n_kappa}; }
    QuadratureConfig quadrature() const {
        if (n_theta == 0) {
            QuadratureConfig q = default_quadrature(radial_grid(), spectral_grid(), m_max);
            q.tolerance = quad_tolerance;
            return q;
        }
        return {n_theta, quad_tolerance};
    }
    RadialKernel kernel() const;
    std::vector<double> schedule() const;  // time_steps-1 increments dt, final 2 dt
};

// Merge a JSON file into cfg; keys absent from the file keep their current
// values, unknown keys are rejected.
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);

}  // namespace diskharm
