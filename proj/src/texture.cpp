#include "diskharm/texture.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "diskharm/hypgeo.hpp"

namespace diskharm {

std::vector<EdgeResponse> dihedral_edge_filter(const GrayImage& img, double gain) {
    if (img.width < 2 || img.height < 2)
        throw std::invalid_argument("dihedral_edge_filter: image smaller than 2x2");
    std::vector<EdgeResponse> out;
    out.reserve(static_cast<std::size_t>(img.width - 1) * (img.height - 1));
    for (int y = 0; y + 1 < img.height; ++y) {
        for (int x = 0; x + 1 < img.width; ++x) {
            double tl = img.at(x, y), tr = img.at(x + 1, y);
            double br = img.at(x + 1, y + 1), bl = img.at(x, y + 1);
            EdgeResponse e;
            e.dx = 0.5 * (tl + tr - br - bl);
            e.dy = 0.5 * (tl - tr - br + bl);
            e.rho = std::hypot(e.dx, e.dy);
            e.phi_angle = e.rho > 0.0 ? wrap_angle(std::atan2(e.dy, e.dx)) : 0.0;
            e.r = std::tanh(gain * e.rho);
            out.push_back(e);
        }
    }
    return out;
}

DiskDensity texture_density(const std::vector<EdgeResponse>& responses, const RadialKernel& k,
                            const DensityPlan& plan, int n_phi) {
    if (responses.empty()) throw std::invalid_argument("texture_density: no responses");
    std::vector<CosetCoords> points;
    points.reserve(responses.size());
    for (const auto& e : responses) points.push_back({e.phi_angle, 2.0 * std::atanh(e.r)});
    auto samples = SampleSet::uniform(std::move(points));
    auto hist = PolarHistogram::bin(samples, n_phi, plan.mft().radial_grid());
    DiskDensity d = kde_spectral_binned(hist, k, plan);
    d.normalize();
    return d;
}

TextureDescriptor zonal_descriptor(const DiskDensity& d, std::string id) {
    return {std::move(id), d.zonal_spectrum()};
}

Matrix descriptor_distance_matrix(const std::vector<TextureDescriptor>& descriptors) {
    const std::size_t n = descriptors.size();
    if (n < 2) throw std::invalid_argument("descriptor_distance_matrix: need >= 2 descriptors");
    for (const auto& d : descriptors)
        if (!(d.zonal.grid == descriptors[0].zonal.grid))
            throw std::invalid_argument("descriptor_distance_matrix: spectral grid mismatch");
    Matrix D(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double dist = parseval_distance(descriptors[i].zonal, descriptors[j].zonal);
            D.at(i, j) = dist;
            D.at(j, i) = dist;
        }
    return D;
}

Matrix classical_mds(const Matrix& distances, int dim) {
    const auto n = static_cast<Eigen::Index>(distances.rows);
    if (distances.cols != distances.rows || n < 2)
        throw std::invalid_argument("classical_mds: need a square matrix, n >= 2");
    if (dim < 1 || dim > n) throw std::invalid_argument("classical_mds: bad dim");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (distances.at(i, i) != 0.0)
            throw std::invalid_argument("classical_mds: nonzero diagonal");
        for (Eigen::Index j = 0; j < i; ++j)
            if (distances.at(i, j) != distances.at(j, i))
                throw std::invalid_argument("classical_mds: asymmetric matrix");
    }

    Eigen::MatrixXd D2(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            double d = distances.at(i, j);
            D2(i, j) = d * d;
        }
    Eigen::MatrixXd J = Eigen::MatrixXd::Identity(n, n) -
                        Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
    Eigen::MatrixXd B = -0.5 * J * D2 * J;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(B);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("classical_mds: eigendecomposition failed");
    // ascending order; walk the top `dim` from the back
    const auto& vals = eig.eigenvalues();
    double scale = std::max(1.0, std::abs(vals(n - 1)));
    Matrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) {
        double lambda = vals(n - 1 - a);
        if (lambda < -1e-12 * scale)
            throw std::invalid_argument("classical_mds: fewer nonnegative eigenvalues than dim");
        double root = std::sqrt(std::max(lambda, 0.0));
        Eigen::VectorXd axis = eig.eigenvectors().col(n - 1 - a) * root;
        Eigen::Index peak = 0;
        for (Eigen::Index i = 1; i < n; ++i)
            if (std::abs(axis(i)) > std::abs(axis(peak))) peak = i;
        if (axis(peak) < 0.0) axis = -axis;
        for (Eigen::Index i = 0; i < n; ++i) out.at(i, a) = axis(i);
    }
    return out;
}

TextureRanking texture_rank(const std::vector<GrayImage>& images,
                            const std::vector<std::string>& ids, const RadialKernel& k,
                            const DensityPlan& plan, double gain, int n_phi) {
    if (images.size() < 2) throw std::invalid_argument("texture_rank: need >= 2 images");
    if (ids.size() != images.size())
        throw std::invalid_argument("texture_rank: ids/images size mismatch");

    TextureRanking result;
    result.descriptors.reserve(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto responses = dihedral_edge_filter(images[i], gain);
        auto d = texture_density(responses, k, plan, n_phi);
        result.descriptors.push_back(zonal_descriptor(d, ids[i]));
    }
    result.distances = descriptor_distance_matrix(result.descriptors);
    result.embedding = classical_mds(result.distances, 2);

    result.order.resize(images.size());
    std::iota(result.order.begin(), result.order.end(), 0);
    // tie-break on id so the ranking does not depend on input order
    std::sort(result.order.begin(), result.order.end(), [&](int i, int j) {
        double ci = result.embedding.at(i, 0), cj = result.embedding.at(j, 0);
        if (ci != cj) return ci < cj;
        return ids[i] < ids[j];
    });
    return result;
}

}  // namespace diskharm
