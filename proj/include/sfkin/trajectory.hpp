#pragma once

// Classical motion of a charged particle in a plane-wave pulse, used as the
// independent dynamical oracle for the dressed energy-momentum assignments.
//
// The covariant phase phi = k.x is the integration variable; along any
// plane-wave trajectory k.p is an exact constant, so both the proper-time
// measure dtau/dphi = m/(k.p) and the 1/(k.p) lab weight are constant and
// cycle averages reduce to plain phase averages over whole carrier periods.
//
// Charge is measured in units of |e|; the electron is charge = -1.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "minkowski.hpp"
#include "planewave.hpp"

namespace sfkin {

inline constexpr double electron_charge = -1.0;

struct TrajectoryState {
    double phase = 0.0;
    FourVector position;
    FourVector momentum;  // kinetic 4-momentum m c u
};

struct Trajectory {
    std::vector<TrajectoryState> states;
    double step = 0.0;  // uniform phase step
};

/// Closed-form kinetic 4-momentum in a plane wave. p0 is the momentum at a
/// reference phase where A vanishes (the drift momentum). Identity:
///   p(phi) = p0 - q A + (2 q p0.A - q^2 A.A) / (2 k.p0) * k,
/// on-shell pointwise and with k.p conserved exactly.
inline FourVector exact_momentum(const PlaneWaveField& f, FourVector p0, double phi,
                                 double charge = electron_charge) {
    const FourVector k = f.k_four();
    const double kp0 = inner(k, p0);
    if (std::abs(kp0) <= 1e-300 || std::abs(kp0) < 1e-12 * f.omega() * std::abs(p0.t))
        throw std::domain_error("exact_momentum: k.p0 = 0 (particle co-moving with the wave)");
    const FourVector a = potential_at(f, phi);
    const double p0a = inner(p0, a);
    const double aa = inner(a, a);
    const double lam = (2.0 * charge * p0a - charge * charge * aa) / (2.0 * kp0);
    return p0 - a * charge + k * lam;
}

/// dA/dphi, analytic in envelope and carrier.
inline FourVector potential_derivative(const PlaneWaveField& f, double phi) {
    const Envelope& e = f.envelope();
    const double denv = e.derivative(phi);
    const double env = e.value(phi);
    const double c = std::cos(phi), s = std::sin(phi);
    Vec3 da = f.eps1() * (f.a0() * (denv * c - env * s));
    if (f.polarization() == Polarization::circular)
        da = da + f.eps2() * (f.a0() * (denv * s + env * c));
    return {0.0, da};
}

/// Fixed-step RK4 integration of dp/dphi = q [k (A'.p) - A' (k.p)] / (k.p),
/// dx/dphi = p / (k.p), from phi0 to phi1. p_init is the kinetic momentum
/// at phi0 (equal to the drift momentum when the envelope vanishes there).
inline Trajectory integrate(const PlaneWaveField& f, FourVector p_init, double phi0, double phi1,
                            double step, double charge = electron_charge,
                            FourVector x_init = FourVector{}) {
    if (!(step > 0.0)) throw std::invalid_argument("integrate: step must be positive");
    if (!(phi1 > phi0)) throw std::invalid_argument("integrate: empty phase range");
    const FourVector k = f.k_four();
    const double kp0 = inner(k, p_init);
    if (std::abs(kp0) <= 1e-300 || std::abs(kp0) < 1e-12 * f.omega() * std::abs(p_init.t))
        throw std::domain_error("integrate: k.p0 = 0 (particle co-moving with the wave)");

    const auto dp = [&](double phi, const FourVector& p) {
        const FourVector ap = potential_derivative(f, phi);
        const double kp = inner(k, p);
        return (k * inner(ap, p) - ap * kp) * (charge / kp);
    };
    const auto dx = [&](const FourVector& p) { return p * (1.0 / inner(k, p)); };

    const auto n_steps = static_cast<std::size_t>(std::ceil((phi1 - phi0) / step - 1e-9));
    Trajectory traj;
    traj.step = step;
    traj.states.reserve(n_steps + 1);
    double phi = phi0;
    FourVector x = x_init;
    FourVector p = p_init;
    traj.states.push_back({phi, x, p});
    for (std::size_t i = 0; i < n_steps; ++i) {
        const double h = step;
        const FourVector k1p = dp(phi, p);
        const FourVector k1x = dx(p);
        const FourVector k2p = dp(phi + 0.5 * h, p + k1p * (0.5 * h));
        const FourVector k2x = dx(p + k1p * (0.5 * h));
        const FourVector k3p = dp(phi + 0.5 * h, p + k2p * (0.5 * h));
        const FourVector k3x = dx(p + k2p * (0.5 * h));
        const FourVector k4p = dp(phi + h, p + k3p * h);
        const FourVector k4x = dx(p + k3p * h);
        p = p + (k1p + k2p * 2.0 + k3p * 2.0 + k4p) * (h / 6.0);
        x = x + (k1x + k2x * 2.0 + k3x * 2.0 + k4x) * (h / 6.0);
        phi = phi0 + (i + 1) * step;
        traj.states.push_back({phi, x, p});
    }
    return traj;
}

/// Cycle-averaged kinetic 4-momentum over `cycles` whole carrier periods on
/// the unit-envelope plateau of the field used to produce the trajectory.
/// Plane-wave measure: dt/dphi = p0_lab / (k.p) with k.p constant, so the
/// cycle average is the uniform phase average over whole periods.
inline FourVector cycle_averaged_four_momentum(const Trajectory& traj, const PlaneWaveField& f,
                                               int cycles) {
    if (cycles < 1) throw std::invalid_argument("cycle_averaged_four_momentum: cycles must be >= 1");
    if (!f.envelope().has_periodic_region())
        throw std::domain_error("cycle_averaged_four_momentum: envelope has no periodic plateau");
    if (f.envelope().kind() == Envelope::Kind::flat_top && cycles > f.envelope().plateau_whole_cycles())
        throw std::domain_error("cycle_averaged_four_momentum: plateau shorter than requested cycles");
    if (traj.states.size() < 2) throw std::domain_error("cycle_averaged_four_momentum: empty trajectory");

    const double phi_start = traj.states.front().phase;
    const double plateau_begin = std::max(f.envelope().plateau_begin(), phi_start);
    const double span = two_pi * cycles;
    const double step = traj.step;
    const auto i0 = static_cast<std::size_t>(std::llround((plateau_begin - phi_start) / step));
    const auto count = static_cast<std::size_t>(std::llround(span / step));
    if (std::abs(count * step - span) > 1e-9)
        throw std::domain_error("cycle_averaged_four_momentum: step does not divide the carrier period");
    if (i0 + count >= traj.states.size())
        throw std::domain_error("cycle_averaged_four_momentum: trajectory does not cover the requested cycles");

    // Uniform mean over exactly `count` samples spanning whole periods
    // (trapezoid rule on a periodic integrand).
    FourVector acc;
    for (std::size_t i = i0; i < i0 + count; ++i) acc = acc + traj.states[i].momentum;
    return acc * (1.0 / static_cast<double>(count));
}

/// Maximum on-shell violation |p.p - m^2| along a trajectory.
inline double max_on_shell_violation(const Trajectory& traj, double m = 1.0) {
    double worst = 0.0;
    for (const auto& s : traj.states)
        worst = std::max(worst, std::abs(inner(s.momentum, s.momentum) - m * m));
    return worst;
}

/// Maximum drift of the light-front invariant k.p along a trajectory,
/// relative to its initial value.
inline double max_lightfront_drift(const Trajectory& traj, const PlaneWaveField& f) {
    const FourVector k = f.k_four();
    const double kp0 = inner(k, traj.states.front().momentum);
    double worst = 0.0;
    for (const auto& s : traj.states)
        worst = std::max(worst, std::abs(inner(k, s.momentum) - kp0));
    return worst / std::abs(kp0);
}

/// Nonrelativistic quiver oracle: integrate m dv/dt = |q| E0 cos(omega t)
/// over one period from rest (zero-mean velocity) and return the
/// cycle-averaged kinetic energy <m v^2 / 2>. Equals e^2 E0^2 / (4 m omega^2),
/// the ponderomotive potential of the matching plane wave. Natural units,
/// |q| = 1. Enforces the nonrelativistic regime e E0/(m omega c) < 0.01.
inline double quiver_energy_nr(double e0, double omega, double m = 1.0, int steps_per_period = 4096) {
    if (!(omega > 0.0) || !(m > 0.0)) throw std::invalid_argument("quiver_energy_nr: omega, m must be positive");
    if (!(e0 >= 0.0)) throw std::invalid_argument("quiver_energy_nr: E0 must be non-negative");
    if (e0 / (m * omega) >= 0.01)
        throw std::domain_error("quiver_energy_nr: e E0/(m omega c) >= 0.01, outside the nonrelativistic regime");
    const double period = two_pi / omega;
    const double h = period / steps_per_period;
    const auto accel = [&](double t) { return (e0 / m) * std::cos(omega * t); };
    double v = 0.0;
    double t = 0.0;
    double acc_ke = 0.0;
    for (int i = 0; i < steps_per_period; ++i) {
        acc_ke += 0.5 * m * v * v;  // left-endpoint sample; periodic, so exact mean
        const double k1 = accel(t);
        const double k2 = accel(t + 0.5 * h);
        const double k3 = k2;
        const double k4 = accel(t + h);
        v += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = period * (i + 1) / steps_per_period;
    }
    return acc_ke / steps_per_period;
}

}  // namespace sfkin
