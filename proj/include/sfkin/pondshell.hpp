#pragma once

// Dressed kinematics of an electron in a plane-wave field: the lightlike
// ponderomotive 4-potential U = (Up, Up*khat), the dressed mass-shell
// invariant (p + U/c).(p + U/c) = (mc)^2 (1 + z_f), minimum energy,
// kinetic energy and its nonrelativistic limit, and the multi-pole shell
// residual. Natural units m = c = hbar = 1 unless an explicit mass is given.

#include <cmath>
#include <stdexcept>

#include "minkowski.hpp"
#include "planewave.hpp"

namespace sfkin {

/// Free 4-momentum plus the ponderomotive 4-potential it is dressed with.
struct DressedMomentum {
    FourVector free_p;
    FourVector pond_U;

    FourVector total() const { return free_p + pond_U; }
};

struct ShellReport {
    double dressed_invariant = 0.0;
    double expected = 0.0;  // (mc)^2 (1 + z_f)
    double residual = 0.0;  // dressed_invariant - expected
    double e_min = 0.0;
    double z_f = 0.0;
};

/// U = (Up/omega) * k = (Up, Up*khat): lightlike, parallel to k, with the
/// ponderomotive potential as its time part.
inline FourVector ponderomotive_four_potential(const PlaneWaveField& f) {
    if (!(f.omega() > 0.0)) throw std::invalid_argument("ponderomotive_four_potential: omega must be positive");
    const double up = ponderomotive_potential(f);
    return {up, f.khat() * up};
}

/// Dressed shell invariant of a free on-shell momentum in a field. The input
/// must satisfy p.p = (mc)^2; a momentum off the free shell signals that the
/// caller mixed up free and dressed momenta, and is rejected.
inline ShellReport dressed_shell_invariant(FourVector p, const PlaneWaveField& f, double m = 1.0) {
    if (!(m > 0.0)) throw std::invalid_argument("dressed_shell_invariant: mass must be positive");
    const double m2 = m * m;
    const double pp = inner(p, p);
    if (std::abs(pp - m2) > 1e-9 * m2)
        throw std::invalid_argument("dressed_shell_invariant: momentum is off the free mass shell");

    const FourVector u = ponderomotive_four_potential(f) * m;  // Up scales with mc^2
    const double zf_val = zf(f);
    ShellReport r;
    r.z_f = zf_val;
    r.dressed_invariant = inner(p + u, p + u);
    r.expected = m2 * (1.0 + zf_val);
    r.residual = r.dressed_invariant - r.expected;
    r.e_min = m + ponderomotive_potential(f) * m;
    return r;
}

/// E_min = mc^2 + Up. Also checks that Eq-level algebra holds numerically:
/// sqrt((mc^2)^2 + 2 Up mc^2 + Up^2) is a perfect square equal to mc^2 + Up.
inline double minimum_energy(const PlaneWaveField& f, double m = 1.0) {
    if (!(m > 0.0)) throw std::invalid_argument("minimum_energy: mass must be positive");
    const double up = ponderomotive_potential(f) * m;
    const double emin = m + up;
    const double root = std::sqrt(m * m + 2.0 * up * m + up * up);
    if (std::abs(root - emin) > 1e-12 * emin)
        throw std::logic_error("minimum_energy: perfect-square identity violated");
    return emin;
}

/// Total energy on the dressed shell at momentum magnitude |p|.
inline double dressed_energy(double p_mag, double up, double m = 1.0) {
    return std::sqrt(m * m + 2.0 * up * m + p_mag * p_mag);
}

/// Kinetic energy T = E - E_min. Zero exactly at |p| = Up/c; negative for
/// sub-minimal momenta (the shell admits them formally and we keep that
/// semantics rather than erroring). Evaluated as
///   T = (p^2 - Up^2) / (E + mc^2 + Up),
/// which is the same quantity without the cancellation of the direct
/// E - E_min difference in the nonrelativistic regime.
inline double kinetic_energy(double p_mag, double up, double m = 1.0) {
    if (!(m > 0.0)) throw std::invalid_argument("kinetic_energy: mass must be positive");
    const double e = dressed_energy(p_mag, up, m);
    return (p_mag * p_mag - up * up) / (e + m + up);
}

inline double kinetic_energy(Vec3 p3, const PlaneWaveField& f, double m = 1.0) {
    const double up = ponderomotive_potential(f) * m;
    return kinetic_energy(p3.norm(), up, m);
}

/// Nonrelativistic limit T = p^2 / 2m.
inline double kinetic_energy_nr(Vec3 p3, double m = 1.0) {
    if (!(m > 0.0)) throw std::invalid_argument("kinetic_energy_nr: mass must be positive");
    return p3.dot(p3) / (2.0 * m);
}

inline double kinetic_energy_nr(double p_mag, double m = 1.0) {
    if (!(m > 0.0)) throw std::invalid_argument("kinetic_energy_nr: mass must be positive");
    return p_mag * p_mag / (2.0 * m);
}

/// Multi-pole shell residual (p - n k).(p - n k) - (mc)^2 (1 + z_f), with
/// hbar = 1 so the photon 4-momentum is k itself. Pure residual evaluation:
/// no pole structure beyond n = 0 is interpreted here.
inline double multipole_residual(FourVector p, int n, const PlaneWaveField& f, double m = 1.0) {
    const FourVector q = p - f.k_four() * static_cast<double>(n);
    return inner(q, q) - m * m * (1.0 + zf(f));
}

}  // namespace sfkin
