#pragma once

#include <complex>
#include <stdexcept>

// SU(1,1), its Moebius action on the open unit disk, Cartan coordinates and
// the invariant hyperbolic distance. Everything here is an immutable value;
// all operations are pure.

namespace diskharm {

using complexd = std::complex<double>;

constexpr double kUnitDeterminantTol = 1e-12;   // |a|^2-|b|^2 = 1 tolerance
constexpr double kBoundaryMargin = 1e-9;        // points with |z| >= 1-margin rejected
constexpr double kRotationTauTol = 1e-14;       // tau below this treated as a pure rotation

// Group element (a, b; conj(b), conj(a)) with |a|^2 - |b|^2 = 1.
class MoebiusElement {
  public:
    MoebiusElement(complexd a, complexd b);
    static MoebiusElement identity() { return {complexd{1.0, 0.0}, complexd{0.0, 0.0}}; }

    complexd a() const { return a_; }
    complexd b() const { return b_; }

    MoebiusElement inverse() const { return {std::conj(a_), -b_}; }

  private:
    complexd a_, b_;
};

// Point of the open unit disk.
class DiskPoint {
  public:
    DiskPoint() : z_(0.0, 0.0) {}
    explicit DiskPoint(complexd z);

    complexd z() const { return z_; }

  private:
    complexd z_;
};

// Cartan coordinates (phi, tau, psi) of g = k(phi) a(tau) k(psi).
struct CartanAngles {
    double phi;   // in [0, 2pi)
    double tau;   // >= 0
    double psi;   // in [0, 2pi)
};

// Reduce an angle to [0, 2pi).
double wrap_angle(double angle);

DiskPoint moebius_apply(const MoebiusElement& m, const DiskPoint& z);
MoebiusElement compose(const MoebiusElement& m1, const MoebiusElement& m2);

// Matrix of the Cartan decomposition with the given coordinates.
MoebiusElement cartan_compose(double phi, double tau, double psi);

// Canonical Cartan coordinates of m: tau = 2 acosh|a|, phi/psi from the
// arguments of a and b. psi = 0 whenever tau < kRotationTauTol (rotation
// ambiguity at the origin). cartan_compose of the result is m up to sign,
// which is the same Moebius map.
CartanAngles cartan_decompose(const MoebiusElement& m);

// Orbit of the origin: z = tanh(tau/2) e^{i phi}.
DiskPoint disk_from_coset(double phi, double tau);

// Inverse of disk_from_coset: tau = 2 atanh|z|, phi = arg z (0 at z = 0).
struct CosetCoords {
    double phi;
    double tau;
};
CosetCoords coset_from_disk(const DiskPoint& z);

// d(w, z) = 2 atanh |(z-w)/(1 - conj(z) w)|.
double hyperbolic_distance(const DiskPoint& w, const DiskPoint& z);

// cosh of the hyperbolic distance between coset points (phi_l, tau_l)
// and (phi_0, tau_0), by the hyperbolic law of cosines:
//   cosh tau_l cosh tau_0 - sinh tau_l sinh tau_0 cos(phi_l - phi_0)
double relative_cosh(double tau_l, double phi_l, double tau_0, double phi_0);

}  // namespace diskharm
