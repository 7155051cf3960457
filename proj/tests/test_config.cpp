#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "diskharm/config.hpp"

using namespace diskharm;
namespace fs = std::filesystem;

namespace {

fs::path write_json(const std::string& body) {
    auto p = fs::temp_directory_path() /
             ("diskharm-cfg-" + std::to_string(std::random_device{}()) + ".json");
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST_CASE("defaults validate and derive the library types") {
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.radial_grid().n_tau == 800);
    CHECK(cfg.spectral_grid().kappa_max == 20.0);
    CHECK(cfg.kernel().s == 4.0);
    auto sched = cfg.schedule();
    REQUIRE(sched.size() == 16);
    CHECK(sched[0] == 0.05);
    CHECK(sched.back() == 0.10);
}

TEST_CASE("config files override only the keys they contain") {
    auto p = write_json(R"({"n_tau": 256, "kernel_s": 2.5, "out_dir": "/tmp/x"})");
    RunConfig cfg;
    apply_config_file(cfg, p);
    CHECK(cfg.n_tau == 256);
    CHECK(cfg.kernel_s == 2.5);
    CHECK(cfg.out_dir == "/tmp/x");
    CHECK(cfg.kappa_max == 20.0);  // untouched
    fs::remove(p);
}

TEST_CASE("unknown keys, bad types and bad values are rejected") {
    RunConfig cfg;
    auto unknown = write_json(R"({"n_taus": 256})");
    CHECK_THROWS_AS(apply_config_file(cfg, unknown), ConfigError);
    fs::remove(unknown);

    auto bad_type = write_json(R"({"n_tau": "many"})");
    CHECK_THROWS_AS(apply_config_file(cfg, bad_type), ConfigError);
    fs::remove(bad_type);

    auto bad_json = write_json("{nope");
    CHECK_THROWS_AS(apply_config_file(cfg, bad_json), ConfigError);
    fs::remove(bad_json);

    CHECK_THROWS_AS(apply_config_file(cfg, "/nonexistent/config.json"), ConfigError);

    RunConfig invalid;
    invalid.kernel_s = 0.5;
    CHECK_THROWS_AS(invalid.validate(), ConfigError);
    invalid = RunConfig{};
    invalid.window = 1;
    CHECK_THROWS_AS(invalid.validate(), ConfigError);
}
