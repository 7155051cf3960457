#include "diskharm/hypgeo.hpp"

#include <cmath>
#include <numbers>

namespace diskharm {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_angle(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w < 0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;  // fmod rounding at the seam
    return w;
}

MoebiusElement::MoebiusElement(complexd a, complexd b) : a_(a), b_(b) {
    double det = std::norm(a) - std::norm(b);
    if (std::abs(det - 1.0) > kUnitDeterminantTol)
        throw std::invalid_argument("MoebiusElement: |a|^2 - |b|^2 != 1");
}

DiskPoint::DiskPoint(complexd z) : z_(z) {
    if (std::abs(z) >= 1.0 - kBoundaryMargin)
        throw std::invalid_argument("DiskPoint: |z| too close to the boundary");
}

DiskPoint moebius_apply(const MoebiusElement& m, const DiskPoint& z) {
    complexd w = (m.a() * z.z() + m.b()) / (std::conj(m.b()) * z.z() + std::conj(m.a()));
    // isometries preserve the open disk; clamp only against rounding at the margin
    double r = std::abs(w);
    if (r >= 1.0 - kBoundaryMargin) w *= (1.0 - kBoundaryMargin) / r * (1.0 - 1e-15);
    return DiskPoint(w);
}

MoebiusElement compose(const MoebiusElement& m1, const MoebiusElement& m2) {
    // top row of the 2x2 product; bottom row is the conjugate pattern
    complexd a = m1.a() * m2.a() + m1.b() * std::conj(m2.b());
    complexd b = m1.a() * m2.b() + m1.b() * std::conj(m2.a());
    return {a, b};
}

MoebiusElement cartan_compose(double phi, double tau, double psi) {
    if (tau < 0) throw std::invalid_argument("cartan_compose: tau must be nonnegative");
    complexd a = std::cosh(tau / 2) * std::exp(complexd(0.0, (phi + psi) / 2));
    complexd b = std::sinh(tau / 2) * std::exp(complexd(0.0, (phi - psi) / 2));
    return {a, b};
}

CartanAngles cartan_decompose(const MoebiusElement& m) {
    double absa = std::abs(m.a());
    double tau = 2.0 * std::acosh(std::max(1.0, absa));
    if (tau < kRotationTauTol) {
        // pure rotation: a = e^{i phi/2}, psi = 0 by convention
        return {wrap_angle(2.0 * std::arg(m.a())), 0.0, 0.0};
    }
    double sum = std::arg(m.a());   // (phi + psi)/2 in (-pi, pi]
    double dif = std::arg(m.b());   // (phi - psi)/2
    return {wrap_angle(sum + dif), tau, wrap_angle(sum - dif)};
}

DiskPoint disk_from_coset(double phi, double tau) {
    if (tau < 0) throw std::invalid_argument("disk_from_coset: tau must be nonnegative");
    return DiskPoint(std::tanh(tau / 2) * std::exp(complexd(0.0, phi)));
}

CosetCoords coset_from_disk(const DiskPoint& z) {
    double r = std::abs(z.z());
    if (r == 0.0) return {0.0, 0.0};
    return {wrap_angle(std::arg(z.z())), 2.0 * std::atanh(r)};
}

double hyperbolic_distance(const DiskPoint& w, const DiskPoint& z) {
    complexd num = z.z() - w.z();
    complexd den = 1.0 - std::conj(z.z()) * w.z();
    return 2.0 * std::atanh(std::abs(num / den));
}

double relative_cosh(double tau_l, double phi_l, double tau_0, double phi_0) {
    if (tau_l < 0 || tau_0 < 0)
        throw std::invalid_argument("relative_cosh: tau must be nonnegative");
    return std::cosh(tau_l) * std::cosh(tau_0) -
           std::sinh(tau_l) * std::sinh(tau_0) * std::cos(phi_l - phi_0);
}

}  // namespace diskharm
