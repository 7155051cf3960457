#include "diskharm/config.hpp"

#include <fstream>

#include <json.hpp>

#include "diskharm/desaturate.hpp"

namespace diskharm {

void RunConfig::validate() const {
    radial_grid().validate();
    spectral_grid().validate();
    quadrature().validate();
    if (kernel_family != "power_cosh") throw ConfigError("unknown kernel_family " + kernel_family);
    if (!(kernel_s > 1.0)) throw ConfigError("kernel_s must be > 1");
    if (m_max < 0) throw ConfigError("m_max must be >= 0");
    if (!(gain > 0.0)) throw ConfigError("gain must be positive");
    if (window < 2) throw ConfigError("window must be >= 2");
    if (dt < 0.0) throw ConfigError("dt must be >= 0");
    if (time_steps < 1) throw ConfigError("time_steps must be >= 1");
    if (threads < 0) throw ConfigError("threads must be >= 0");
}

RadialKernel RunConfig::kernel() const { return RadialKernel::power_cosh(kernel_s); }

std::vector<double> RunConfig::schedule() const { return desaturation_schedule(dt, time_steps); }

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object: " + path.string());
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "tau_max") cfg.tau_max = value.get<double>();
            else if (key == "n_tau") cfg.n_tau = value.get<int>();
            else if (key == "kappa_max") cfg.kappa_max = value.get<double>();
            else if (key == "n_kappa") cfg.n_kappa = value.get<int>();
            else if (key == "kernel_family") cfg.kernel_family = value.get<std::string>();
            else if (key == "kernel_s") cfg.kernel_s = value.get<double>();
            else if (key == "m_max") cfg.m_max = value.get<int>();
            else if (key == "gain") cfg.gain = value.get<double>();
            else if (key == "window") cfg.window = value.get<int>();
            else if (key == "dt") cfg.dt = value.get<double>();
            else if (key == "time_steps") cfg.time_steps = value.get<int>();
            else if (key == "n_theta") cfg.n_theta = value.get<int>();
            else if (key == "quad_tolerance") cfg.quad_tolerance = value.get<double>();
            else if (key == "threads") cfg.threads = value.get<int>();
            else if (key == "out_dir") cfg.out_dir = value.get<std::string>();
            else if (key == "seed") cfg.seed = value.get<unsigned>();
            else throw ConfigError("unknown config key '" + key + "' in " + path.string());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("bad value type in " + path.string() + ": " + e.what());
    }
}

}  // namespace diskharm
