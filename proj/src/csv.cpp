#include "diskharm/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace diskharm {

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw CsvError("cannot open for writing: " + path.string());
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CsvError("cannot open: " + path.string());
    return in;
}

std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

double parse_double(const std::string& tok, const std::filesystem::path& path) {
    try {
        size_t pos = 0;
        double v = std::stod(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw CsvError("malformed number '" + tok + "' in " + path.string());
    }
}

struct Header {
    std::string kind;
    int n = 0;
    double maxval = 0.0;
};

// "# kind=spectrum, n=400, max=20"
Header parse_header(const std::string& line, const std::filesystem::path& path) {
    Header h;
    if (line.empty() || line[0] != '#') throw CsvError("missing header line in " + path.string());
    for (auto& field : split(line.substr(1))) {
        auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        std::string key = field.substr(0, eq);
        key.erase(0, key.find_first_not_of(' '));
        key.erase(key.find_last_not_of(' ') + 1);
        std::string val = field.substr(eq + 1);
        if (key == "kind") h.kind = val;
        else if (key == "n") h.n = static_cast<int>(parse_double(val, path));
        else if (key == "max") h.maxval = parse_double(val, path);
    }
    if (h.kind.empty() || h.n <= 0 || !(h.maxval > 0))
        throw CsvError("incomplete header in " + path.string());
    return h;
}

void write_series(const std::filesystem::path& path, const std::string& kind, int n, double maxval,
                  const std::vector<double>& coords, const std::vector<double>& values) {
    auto out = open_out(path);
    out << "# kind=" << kind << ", n=" << n << ", max=" << fmt17(maxval) << "\n";
    for (int i = 0; i < n; ++i)
        out << i << ',' << fmt17(coords[i]) << ',' << fmt17(values[i]) << "\n";
    if (!out) throw CsvError("write failed: " + path.string());
}

std::vector<double> read_series(const std::filesystem::path& path, const std::string& kind,
                                Header& h) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw CsvError("empty file: " + path.string());
    h = parse_header(line, path);
    if (h.kind != kind)
        throw CsvError("expected kind=" + kind + ", got kind=" + h.kind + " in " + path.string());
    std::vector<double> values;
    values.reserve(h.n);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto toks = split(line);
        if (toks.size() != 3) throw CsvError("expected 3 columns in " + path.string());
        values.push_back(parse_double(toks[2], path));
    }
    if (values.size() != static_cast<std::size_t>(h.n))
        throw CsvError("row count does not match header n in " + path.string());
    return values;
}

}  // namespace

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s) {
    s.validate();
    write_series(path, "spectrum", s.grid.n_kappa, s.grid.kappa_max, s.grid.nodes(), s.values);
}

Spectrum read_spectrum_csv(const std::filesystem::path& path) {
    Header h;
    auto values = read_series(path, "spectrum", h);
    Spectrum s{SpectralGrid{h.maxval, h.n}, std::move(values)};
    s.validate();
    return s;
}

void write_radial_csv(const std::filesystem::path& path, const RadialFunction& f) {
    f.validate();
    write_series(path, "radial", f.grid.n_tau, f.grid.tau_max, f.grid.nodes(), f.values);
}

RadialFunction read_radial_csv(const std::filesystem::path& path) {
    Header h;
    auto values = read_series(path, "radial", h);
    RadialFunction f{RadialGrid{h.maxval, h.n}, std::move(values)};
    f.validate();
    return f;
}

void write_samples_csv(const std::filesystem::path& path, const SampleSet& samples) {
    auto out = open_out(path);
    for (std::size_t l = 0; l < samples.points.size(); ++l)
        out << fmt17(samples.points[l].phi) << ',' << fmt17(samples.points[l].tau) << ','
            << fmt17(samples.weights[l]) << "\n";
    if (!out) throw CsvError("write failed: " + path.string());
}

SampleSet read_samples_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::vector<CosetCoords> points;
    std::vector<double> weights;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto toks = split(line);
        if (toks.size() != 3) throw CsvError("expected phi,tau,weight rows in " + path.string());
        points.push_back({parse_double(toks[0], path), parse_double(toks[1], path)});
        weights.push_back(parse_double(toks[2], path));
    }
    if (points.empty()) throw CsvError("no samples in " + path.string());
    return SampleSet::weighted(std::move(points), std::move(weights));
}

void write_density_csv(const std::filesystem::path& path, const DiskDensity& d) {
    auto out = open_out(path);
    auto kappas = d.plan().spectral_grid().nodes();
    for (int m = 0; m <= d.m_max(); ++m) {
        const auto& spec = d.spectrum(m);
        for (std::size_t i = 0; i < spec.size(); ++i)
            out << m << ',' << i << ',' << fmt17(kappas[i]) << ',' << fmt17(spec[i].real()) << ','
                << fmt17(spec[i].imag()) << "\n";
    }
    if (!out) throw CsvError("write failed: " + path.string());
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& m) {
    auto out = open_out(path);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) out << (j ? "," : "") << fmt17(m.at(i, j));
        out << "\n";
    }
    if (!out) throw CsvError("write failed: " + path.string());
}

void write_contour_csv(const std::filesystem::path& path, const Matrix& values) {
    auto out = open_out(path);
    for (std::size_t a = 0; a < values.rows; ++a)
        for (std::size_t j = 0; j < values.cols; ++j)
            out << a << ',' << j << ',' << fmt17(values.at(a, j)) << "\n";
    if (!out) throw CsvError("write failed: " + path.string());
}

}  // namespace diskharm
