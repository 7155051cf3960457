#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "diskharm/density.hpp"
#include "diskharm/matrix.hpp"
#include "diskharm/mft.hpp"

// File formats.
//
// Radial functions and spectra:
//   # kind=spectrum, n=<int>, max=<float>        (or kind=radial)
//   index,coordinate,value                       one row per node, 17 sig digits
//
// Sample sets: one "phi,tau,weight" row per sample.
// Disk densities: "m,kappa_index,kappa,value_re,value_im" rows.
// Contour dumps: "phi_index,tau_index,value" rows.

namespace diskharm {

class CsvError : public std::runtime_error {
  public:
    explicit CsvError(const std::string& what) : std::runtime_error(what) {}
};

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s);
Spectrum read_spectrum_csv(const std::filesystem::path& path);

void write_radial_csv(const std::filesystem::path& path, const RadialFunction& f);
RadialFunction read_radial_csv(const std::filesystem::path& path);

void write_samples_csv(const std::filesystem::path& path, const SampleSet& samples);
SampleSet read_samples_csv(const std::filesystem::path& path);

void write_density_csv(const std::filesystem::path& path, const DiskDensity& d);

// Plain rectangular matrix, one CSV row per matrix row.
void write_matrix_csv(const std::filesystem::path& path, const Matrix& m);

// Polar grid dump of a synthesized density (phi_index, tau_index, value).
void write_contour_csv(const std::filesystem::path& path, const Matrix& values);

}  // namespace diskharm
