#pragma once

#include <string>
#include <vector>

#include "diskharm/density.hpp"
#include "diskharm/image.hpp"
#include "diskharm/matrix.hpp"

// Texture roughness ordering: dihedral 2x2 edge filters -> polar responses on
// the hyperbolic disk -> spectral KDE -> zonal (m = 0) descriptor -> Parseval
// distances -> classical MDS -> rank along the first axis.

namespace diskharm {

struct EdgeResponse {
    double dx;
    double dy;
    double rho;        // sqrt(dx^2 + dy^2)
    double phi_angle;  // atan2(dy, dx) wrapped to [0, 2pi)
    double r;          // tanh(gain * rho), in [0, 1)
};

struct TextureDescriptor {
    std::string id;
    Spectrum zonal;
};

// 2x2 blocks at stride 1, pixels (tl, tr, br, bl) clockwise from top-left:
//   dx = (tl + tr - br - bl) / 2,   dy = (tl - tr - br + bl) / 2.
std::vector<EdgeResponse> dihedral_edge_filter(const GrayImage& img, double gain = 1.0);

// Normalized spectral KDE of the responses as points (phi_angle, 2 atanh r).
// Responses are binned to a polar histogram first; n_phi angular bins.
DiskDensity texture_density(const std::vector<EdgeResponse>& responses, const RadialKernel& k,
                            const DensityPlan& plan, int n_phi = 128);

TextureDescriptor zonal_descriptor(const DiskDensity& d, std::string id = {});

// Entry (i, j) = parseval_distance between descriptors i and j.
Matrix descriptor_distance_matrix(const std::vector<TextureDescriptor>& descriptors);

// Torgerson classical MDS of a symmetric zero-diagonal distance matrix.
// Throws std::invalid_argument if fewer than dim of the top eigenvalues are
// nonnegative. Each axis is sign-normalized: largest-magnitude coordinate
// positive.
Matrix classical_mds(const Matrix& distances, int dim);

struct TextureRanking {
    std::vector<TextureDescriptor> descriptors;  // input order
    Matrix distances;                            // n x n
    Matrix embedding;                            // n x 2
    std::vector<int> order;                      // input indices sorted along axis 1
};

TextureRanking texture_rank(const std::vector<GrayImage>& images,
                            const std::vector<std::string>& ids, const RadialKernel& k,
                            const DensityPlan& plan, double gain = 1.0, int n_phi = 128);

}  // namespace diskharm
