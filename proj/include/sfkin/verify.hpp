#pragma once

// Seeded, deterministic verification suite: the property checks behind the
// `verify` subcommand and the acceptance runner. Each check reports its
// worst observed error against the tolerance it was run at.
//
// Relative errors for cancellation-prone comparisons (gauge-transformed
// A.A, boosted inner products) are anchored to the Euclidean component
// scale of the vectors involved, the same scale convention classify() uses;
// a plain ratio against the tiny difference of large squares would measure
// rounding of the inputs, not the identity under test.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "minkowski.hpp"
#include "planewave.hpp"
#include "pondshell.hpp"
#include "relmass.hpp"
#include "trajectory.hpp"

namespace sfkin::verify {

struct CheckResult {
    std::string id;       // stable identifier, e.g. "A1"
    std::string name;
    bool pass = false;
    double worst = 0.0;   // worst observed error (same units as tolerance)
    double tolerance = 0.0;
    std::string detail;
};

namespace detail {

inline Vec3 random_direction(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    while (true) {
        const Vec3 v{n(rng), n(rng), n(rng)};
        if (v.dot(v) > 1e-6) return v.normalized();
    }
}

inline LorentzBoost random_boost(std::mt19937_64& rng, double vmax = 0.99) {
    std::uniform_real_distribution<double> u(0.0, vmax);
    return LorentzBoost(random_direction(rng) * u(rng));
}

inline FourVector random_onshell_momentum(std::mt19937_64& rng, double m = 1.0, double pmax = 2.0) {
    std::uniform_real_distribution<double> u(-pmax, pmax);
    const Vec3 p{u(rng), u(rng), u(rng)};
    return {std::sqrt(m * m + p.dot(p)), p};
}

inline PlaneWaveField random_field(std::mt19937_64& rng, bool random_direction_too = true) {
    std::uniform_real_distribution<double> uo(0.5, 2.0);
    std::uniform_real_distribution<double> ua(0.5, 2.0);
    std::bernoulli_distribution circ(0.5);
    const Vec3 dir = random_direction_too ? random_direction(rng) : Vec3{0, 0, 1};
    return PlaneWaveField(uo(rng), dir, circ(rng) ? Polarization::circular : Polarization::linear,
                          ua(rng));
}

inline GaugeGenerator random_gauge(std::mt19937_64& rng, int max_harmonics = 16) {
    std::uniform_int_distribution<int> nh(1, max_harmonics);
    std::uniform_int_distribution<int> harm(0, 16);
    std::uniform_real_distribution<double> c(-10.0, 10.0);
    std::vector<GaugeGenerator::Harmonic> terms;
    const int count = nh(rng);
    terms.reserve(count);
    for (int i = 0; i < count; ++i) terms.push_back({harm(rng), c(rng), c(rng)});
    return GaugeGenerator(std::move(terms));
}

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(1e-300, std::abs(b));
}

inline double max_abs_component(FourVector v) {
    return std::max(std::max(std::abs(v.t), std::abs(v.x)), std::max(std::abs(v.y), std::abs(v.z)));
}

inline double rel_vec_diff(FourVector a, FourVector b) {
    return max_abs_component(a - b) / std::max(1.0, max_abs_component(b));
}

}  // namespace detail

// ---- A1: gauge invariance of <|A.A|> ------------------------------------

inline CheckResult check_gauge_invariance(std::mt19937_64& rng, int cases = 1000) {
    CheckResult r{"A1", "gauge invariance of cycle-averaged |A.A|", false, 0.0, 1e-12, ""};
    constexpr int grid = 512;
    for (int it = 0; it < cases; ++it) {
        const PlaneWaveField f = detail::random_field(rng);
        const GaugeGenerator g = detail::random_gauge(rng);
        const FourVector k = f.k_four();
        const PotentialFn base = [&f](double phi) { return potential_at(f, phi); };
        const PotentialFn transformed = apply_gauge(base, k, g);

        double avg_base = 0.0, avg_tr = 0.0, scale = 0.0;
        for (int i = 0; i < grid; ++i) {
            const double phi = two_pi * i / grid;
            const FourVector a = base(phi);
            const FourVector at = transformed(phi);
            avg_base += std::abs(inner(a, a));
            avg_tr += std::abs(inner(at, at));
            scale += at.euclidean_sq();
        }
        avg_base /= grid;
        avg_tr /= grid;
        scale = avg_base + scale / grid;
        const double err = std::abs(avg_tr - avg_base) / scale;
        r.worst = std::max(r.worst, err);
    }
    r.pass = r.worst <= r.tolerance;
    r.detail = std::to_string(cases) + " random (field, gauge) pairs";
    return r;
}

// ---- A2: Lorentz invariance of the dressed shell -------------------------

inline CheckResult check_lorentz_dressed_shell(std::mt19937_64& rng, int cases = 1000) {
    CheckResult r{"A2", "Lorentz invariance of the dressed shell invariant", false, 0.0, 1e-9, ""};
    const FourVector rest{1.0, 0.0, 0.0, 0.0};
    for (int it = 0; it < cases; ++it) {
        const PlaneWaveField f = detail::random_field(rng);
        const FourVector u = ponderomotive_four_potential(f);
        const double expected = 1.0 + zf(f);
        // The shell anchors to the frame where the electron entered at rest;
        // boosting p and U together must leave the invariant on m^2(1+z_f).
        const LorentzBoost b = detail::random_boost(rng, 0.99);
        const FourVector p = b.apply(rest);
        const FourVector dressed = p + b.apply(u);
        const double inv = inner(dressed, dressed);
        r.worst = std::max(r.worst, detail::rel_diff(inv, expected));
    }
    r.pass = r.worst <= r.tolerance;
    r.detail = std::to_string(cases) + " random boosts, |v| <= 0.99";
    return r;
}

// ---- A3: minimum-energy identity ------------------------------------------

inline CheckResult check_minimum_energy_identity() {
    CheckResult r{"A3", "minimum-energy perfect square and E(|p|) scan", false, 0.0, 1e-12, ""};
    for (int i = 0; i <= 90; ++i) {
        const double up = std::pow(10.0, -6.0 + 9.0 * i / 90.0);
        const double root = std::sqrt(1.0 + 2.0 * up + up * up);
        r.worst = std::max(r.worst, detail::rel_diff(root, 1.0 + up));
    }
    // E(|p|) from the shell attains mc^2 + Up exactly at |p| = Up/c.
    const double up = 0.25;
    const double emin = 1.0 + up;
    bool scan_ok = detail::rel_diff(dressed_energy(up, up), emin) <= 1e-12;
    double prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double pmag = 2.0 * up * i / 200.0;
        const double e = dressed_energy(pmag, up);
        if (i > 0 && e <= prev) scan_ok = false;                 // strictly increasing
        if (pmag < up && e >= emin) scan_ok = false;             // below only below
        if (pmag > up && e <= emin) scan_ok = false;             // above only above
        prev = e;
    }
    r.pass = (r.worst <= r.tolerance) && scan_ok;
    r.detail = "Up/mc^2 log-spaced in [1e-6,1e3]; scan at Up = 0.25";
    return r;
}

// ---- A4: dynamical oracle for the quasi-momentum --------------------------

inline CheckResult check_dynamical_quasimomentum() {
    CheckResult r{"A4", "cycle-averaged trajectory momentum = (mc^2+Up, Up khat/c)", false, 0.0, 1e-6, ""};
    const FourVector rest{1.0, 0.0, 0.0, 0.0};
    for (const double a0 : {0.1, 1.0, 2.0}) {
        for (const Polarization pol : {Polarization::linear, Polarization::circular}) {
            const Envelope env = Envelope::flat_top(4, 8);
            const PlaneWaveField f(1.0, {0, 0, 1}, pol, a0, env);
            const double step = two_pi / 1000.0;
            const Trajectory traj = integrate(f, rest, 0.0, env.support_end(), step);
            const FourVector avg = cycle_averaged_four_momentum(traj, f, 8);
            const double up = ponderomotive_potential(f);
            const FourVector expected{1.0 + up, f.khat() * up};
            r.worst = std::max(r.worst, detail::rel_vec_diff(avg, expected));
            const double inv = inner(avg, avg);
            r.worst = std::max(r.worst, detail::rel_diff(inv, 1.0 + zf(f)));
        }
    }
    r.pass = r.worst <= r.tolerance;
    r.detail = "flat-top, a0 in {0.1,1,2}, linear+circular, rest start";
    return r;
}

// ---- A5: pulse-exit restoration of the free shell --------------------------

inline CheckResult check_pulse_exit() {
    CheckResult r{"A5", "pulse exit restores the initial momentum", false, 0.0, 1e-6, ""};
    const FourVector rest{1.0, 0.0, 0.0, 0.0};
    const FourVector moving{std::sqrt(1.0 + 0.25), 0.3, -0.2, 0.3};
    double worst_exact = 0.0;
    for (const Envelope& env : {Envelope::sin2(16), Envelope::gaussian(2.5, 3.0)}) {
        for (const FourVector& p0 : {rest, moving}) {
            const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, 1.0, env);
            const double end = env.support_end();
            worst_exact = std::max(worst_exact, detail::rel_vec_diff(exact_momentum(f, p0, end), p0));
            const Trajectory traj = integrate(f, p0, 0.0, end, two_pi / 1000.0);
            r.worst = std::max(r.worst, detail::rel_vec_diff(traj.states.back().momentum, p0));
        }
    }
    r.pass = (r.worst <= r.tolerance) && (worst_exact <= 1e-10);
    r.detail = "exact-solution exit error " + std::to_string(worst_exact) + " (tol 1e-10)";
    return r;
}

// ---- A6: integrator order and on-shell conservation ------------------------

inline CheckResult check_integrator_order() {
    CheckResult r{"A6", "RK4 convergence ratio 16 +- 3, on-shell violation <= 1e-9", false, 0.0, 0.0, ""};
    const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, 1.0);
    const FourVector drift{1.0, 0.0, 0.0, 0.0};
    const double phi_end = 3.0 * two_pi;
    const FourVector p_start = exact_momentum(f, drift, 0.0);

    // Order is measured on the accumulated position: the momentum equation
    // is linear in p and its terminal error superconverges, while the
    // position error grows secularly at the nominal h^4.
    const auto terminal_position = [&](double step) {
        const Trajectory t = integrate(f, p_start, 0.0, phi_end, step);
        return t.states.back().position;
    };
    const FourVector x_ref = terminal_position(two_pi / 4096.0);
    const double e1 = detail::max_abs_component(terminal_position(two_pi / 64.0) - x_ref);
    const double e2 = detail::max_abs_component(terminal_position(two_pi / 128.0) - x_ref);
    const double ratio = e1 / e2;

    const Envelope env = Envelope::flat_top(4, 8);
    const PlaneWaveField fp(1.0, {0, 0, 1}, Polarization::circular, 2.0, env);
    const Trajectory t = integrate(fp, drift, 0.0, env.support_end(), two_pi / 1000.0);
    const double onshell = max_on_shell_violation(t, 1.0);

    r.worst = std::abs(ratio - 16.0);
    r.tolerance = 3.0;
    r.pass = (r.worst <= r.tolerance) && (onshell <= 1e-9);
    r.detail = "halving ratio " + std::to_string(ratio) + ", on-shell violation " + std::to_string(onshell);
    return r;
}

// ---- A7: coupling-constant identity ----------------------------------------

inline CheckResult check_zf_identity() {
    CheckResult r{"A7", "z_f from Up equals z_f from photon density", false, 0.0, 1e-10, ""};
    for (int i = 0; i <= 10; ++i) {
        const double intensity = std::pow(10.0, 10.0 + i);
        for (const double lam_um : {0.2, 0.5, 1.0, 2.0, 5.0, 10.0}) {
            for (const Polarization pol : {Polarization::linear, Polarization::circular}) {
                const LaserParams p(intensity, lam_um * 1e-6, pol);
                const double z1 = zf(from_laser_params(p));
                const double z2 = zf_photon_density(p);
                r.worst = std::max(r.worst, detail::rel_diff(z1, z2));
            }
        }
    }
    r.pass = r.worst <= r.tolerance;
    r.detail = "intensity 1e10-1e20 W/cm^2 x wavelength 0.2-10 um";
    return r;
}

// ---- A8: nonrelativistic limit of the kinetic energy ------------------------

inline CheckResult check_nonrelativistic_limit() {
    CheckResult r{"A8", "T -> p^2/2m with linearly shrinking deviation", false, 0.0, 2e-4, ""};
    bool scaling_ok = true;
    for (const double kappa : {0.0, 0.25, 0.5}) {  // Up = kappa * p^2
        double prev_dev = -1.0;
        for (int i = 0; i <= 4; ++i) {
            const double p2 = 1e-8 * std::pow(10.0, i);  // up to 1e-4
            const double up = kappa * p2;
            const double t = kinetic_energy(std::sqrt(p2), up);
            const double dev = std::abs(t - 0.5 * p2) / (0.5 * p2);
            r.worst = std::max(r.worst, dev);
            // deviation should grow ~10x per decade once clear of rounding
            if (p2 >= 1e-6 && prev_dev > 0.0) {
                const double growth = dev / prev_dev;
                if (growth < 8.0 || growth > 12.0) scaling_ok = false;
            }
            if (p2 >= 1e-7) prev_dev = dev;
        }
    }
    r.pass = (r.worst <= r.tolerance) && scaling_ok;
    r.detail = scaling_ok ? "deviation linear in max(Up, p^2)" : "deviation not linear in smallness parameter";
    return r;
}

// ---- A9: quiver-energy identification ---------------------------------------

inline CheckResult check_quiver_energy() {
    CheckResult r{"A9", "nonrelativistic quiver energy equals Up", false, 0.0, 1e-9, ""};
    const double e0 = 1e-3;  // e E0/(m omega c) = 1e-3 with m = omega = 1
    const double quiver = quiver_energy_nr(e0, 1.0, 1.0);
    const double closed = e0 * e0 / 4.0;
    const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, e0);
    const double up = ponderomotive_potential(f);
    r.worst = std::max(detail::rel_diff(quiver, closed), detail::rel_diff(quiver, up));
    r.pass = r.worst <= r.tolerance;
    r.detail = "eE0/(m omega c) = 1e-3";
    return r;
}

// ---- A10: relativistic-mass demonstrator -------------------------------------

inline CheckResult check_relativistic_mass(std::mt19937_64& rng, int frames = 100) {
    CheckResult r{"A10", "sqrt(p.p) frame-invariant, m*gamma frame-dependent", false, 0.0, 1e-12, ""};
    std::vector<LorentzBoost> boosts;
    boosts.reserve(frames);
    for (int i = 0; i < frames; ++i) boosts.push_back(detail::random_boost(rng, 0.99));
    const Vec3 v{0.3, -0.1, 0.2};
    const CovarianceReport rep = covariance_report(1.0, v, boosts);

    double lo = rep.invariant_mass_per_frame.front(), hi = lo;
    double glo = rep.m_gamma_per_frame.front(), ghi = glo;
    for (std::size_t i = 0; i < rep.invariant_mass_per_frame.size(); ++i) {
        lo = std::min(lo, rep.invariant_mass_per_frame[i]);
        hi = std::max(hi, rep.invariant_mass_per_frame[i]);
        glo = std::min(glo, rep.m_gamma_per_frame[i]);
        ghi = std::max(ghi, rep.m_gamma_per_frame[i]);
    }
    r.worst = (hi - lo) / lo;
    const bool mgamma_varies = (ghi - glo) > 1e-6;
    const bool covariant = rep.covariance_residual <= 1e-10;
    r.pass = (r.worst <= r.tolerance) && mgamma_varies && covariant;
    r.detail = "m*gamma spread " + std::to_string(ghi - glo) + ", covariance residual " +
               std::to_string(rep.covariance_residual);
    return r;
}

// ---- A11: shell-form discrimination -------------------------------------------

inline CheckResult check_shell_form_discrimination() {
    CheckResult r{"A11", "(mc)^2(1+z_f) is not a simple mass-shift shell", false, 0.0, 1e-12, ""};
    bool nonzero = true;
    for (const double z : {0.1, 0.5, 1.0}) {
        const double expected = 1.0 + z;          // (mc)^2 (1+z_f), m = 1
        const double dm = std::sqrt(z);           // dm^2 c^2 = z_f (mc)^2
        const double simple = (1.0 + dm) * (1.0 + dm);
        const double diff = expected - simple;
        const double closed = -2.0 * dm;          // m^2(1+z) - (m+dm)^2 with dm^2 = z m^2
        if (std::abs(diff) < 1e-3) nonzero = false;
        r.worst = std::max(r.worst, detail::rel_diff(diff, closed));
    }
    r.pass = (r.worst <= r.tolerance) && nonzero;
    r.detail = "z_f in {0.1, 0.5, 1}";
    return r;
}

// ---- Additional module properties (verify command) ----------------------------

inline CheckResult check_boost_invariance(std::mt19937_64& rng, int cases = 1000) {
    CheckResult r{"P1", "boosts preserve inner products and compose with inverses", false, 0.0, 1e-12, ""};
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int it = 0; it < cases; ++it) {
        const FourVector a{u(rng), u(rng), u(rng), u(rng)};
        const FourVector b{u(rng), u(rng), u(rng), u(rng)};
        const LorentzBoost lb = detail::random_boost(rng, 0.95);
        const double before = inner(a, b);
        const double after = inner(lb.apply(a), lb.apply(b));
        const double scale = std::max(1.0, std::sqrt(a.euclidean_sq() * b.euclidean_sq()) *
                                               lb.gamma() * lb.gamma());
        r.worst = std::max(r.worst, std::abs(after - before) / scale);
        const FourVector round_trip = lb.inverse().apply(lb.apply(a));
        r.worst = std::max(r.worst, detail::rel_vec_diff(round_trip, a) / (lb.gamma() * lb.gamma()));
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

inline CheckResult check_transversality(std::mt19937_64& rng, int cases = 200) {
    CheckResult r{"P2", "k.A = 0 and k.k = 0 within component scale", false, 0.0, 1e-12, ""};
    std::uniform_real_distribution<double> uphi(0.0, two_pi);
    for (int it = 0; it < cases; ++it) {
        const PlaneWaveField f = detail::random_field(rng);
        const FourVector k = f.k_four();
        r.worst = std::max(r.worst, std::abs(inner(k, k)) / k.euclidean_sq());
        for (int j = 0; j < 8; ++j) {
            const FourVector a = potential_at(f, uphi(rng));
            const double scale = std::sqrt(k.euclidean_sq() * std::max(a.euclidean_sq(), 1e-30));
            r.worst = std::max(r.worst, std::abs(inner(k, a)) / scale);
        }
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

inline CheckResult check_cycle_average_closed_form(std::mt19937_64& rng, int cases = 100) {
    CheckResult r{"P3", "cycle average matches closed form A0^2/2 (linear), A0^2 (circular)", false, 0.0, 1e-10, ""};
    for (int it = 0; it < cases; ++it) {
        const PlaneWaveField f = detail::random_field(rng);
        const double closed = f.polarization() == Polarization::linear ? f.a0() * f.a0() / 2.0
                                                                       : f.a0() * f.a0();
        r.worst = std::max(r.worst, detail::rel_diff(cycle_average_abs_AA(f), closed));
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

inline CheckResult check_lorentz_invariance_up(std::mt19937_64& rng, int cases = 200) {
    CheckResult r{"P4", "boosted A.A samples leave the cycle average unchanged", false, 0.0, 1e-12, ""};
    constexpr int grid = 256;
    for (int it = 0; it < cases; ++it) {
        const PlaneWaveField f = detail::random_field(rng);
        const LorentzBoost b = detail::random_boost(rng, 0.9);
        double avg = 0.0, avg_boosted = 0.0, scale = 0.0;
        for (int i = 0; i < grid; ++i) {
            const FourVector a = potential_at(f, two_pi * i / grid);
            const FourVector ab = b.apply(a);
            avg += std::abs(inner(a, a));
            avg_boosted += std::abs(inner(ab, ab));
            scale += ab.euclidean_sq();
        }
        r.worst = std::max(r.worst, std::abs(avg_boosted - avg) / (avg + scale));
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

inline CheckResult check_lightfront_conservation() {
    CheckResult r{"P5", "k.p conserved along integrated trajectories", false, 0.0, 1e-10, ""};
    const Envelope env = Envelope::flat_top(4, 8);
    for (const double a0 : {0.5, 2.0}) {
        const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, a0, env);
        const Trajectory t = integrate(f, {1, 0, 0, 0}, 0.0, env.support_end(), two_pi / 1000.0);
        r.worst = std::max(r.worst, max_lightfront_drift(t, f));
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

inline CheckResult check_shell_route_equivalence(std::mt19937_64& rng, int cases = 500) {
    CheckResult r{"P6", "general-frame expansion equals rest-frame dressed shell", false, 0.0, 1e-12, ""};
    for (int it = 0; it < cases; ++it) {
        const PlaneWaveField f = detail::random_field(rng);
        const FourVector p = detail::random_onshell_momentum(rng);
        const FourVector u = ponderomotive_four_potential(f);
        const double up = ponderomotive_potential(f);
        const double lhs = 2.0 * inner(p, u);
        const double rhs = 2.0 * up * inner(p, f.k_four()) / f.omega();
        r.worst = std::max(r.worst, detail::rel_diff(lhs, rhs));
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

inline CheckResult check_multipole_pole(std::mt19937_64& rng, int cases = 200) {
    CheckResult r{"P7", "constructed pole momenta zero the multipole residual", false, 0.0, 1e-12, ""};
    std::uniform_real_distribution<double> uperp(-1.0, 1.0);
    std::uniform_int_distribution<int> un(-3, 3);
    for (int it = 0; it < cases; ++it) {
        const PlaneWaveField f = detail::random_field(rng, /*random_direction_too=*/false);
        const int n = un(rng);
        const double m2z = 1.0 + zf(f);
        const double qx = uperp(rng), qy = uperp(rng);
        const double qplus = 4.0 + std::abs(uperp(rng));  // clear of qplus = 2 n omega
        const double qminus = (m2z + qx * qx + qy * qy) / (qplus - 2.0 * n * f.omega());
        const FourVector q{0.5 * (qplus + qminus), qx, qy, 0.5 * (qplus - qminus)};
        const double res = multipole_residual(q, n, f);
        // near the pole q+ = 2 n omega the components blow up; anchor to
        // their Euclidean scale so the check measures the identity, not
        // rounding of large inputs
        const FourVector shifted = q - f.k_four() * n;
        const double scale = std::max(m2z, shifted.euclidean_sq());
        r.worst = std::max(r.worst, std::abs(res) / scale);
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

inline CheckResult check_charge_sign(std::mt19937_64& rng) {
    CheckResult r{"P8", "sign flip of the charge mirrors the transverse momentum", false, 0.0, 1e-12, ""};
    const PlaneWaveField f = detail::random_field(rng, false);
    const FourVector p0{1, 0, 0, 0};
    for (int i = 1; i < 16; ++i) {
        const double phi = two_pi * i / 16.0;
        const FourVector pe = exact_momentum(f, p0, phi, -1.0);
        const FourVector pp = exact_momentum(f, p0, phi, +1.0);
        const Vec3 de = pe.spatial() - f.khat() * pe.spatial().dot(f.khat());
        const Vec3 dp = pp.spatial() - f.khat() * pp.spatial().dot(f.khat());
        const Vec3 sum = de + dp;
        r.worst = std::max(r.worst, sum.norm() / std::max(1.0, de.norm()));
        // time parts agree: the drift correction is quadratic in the charge
        r.worst = std::max(r.worst, detail::rel_diff(pe.t, pp.t));
    }
    r.pass = r.worst <= r.tolerance;
    return r;
}

// ---- suites -------------------------------------------------------------------

inline std::vector<CheckResult> run_acceptance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;
    out.push_back(check_gauge_invariance(rng));
    out.push_back(check_lorentz_dressed_shell(rng));
    out.push_back(check_minimum_energy_identity());
    out.push_back(check_dynamical_quasimomentum());
    out.push_back(check_pulse_exit());
    out.push_back(check_integrator_order());
    out.push_back(check_zf_identity());
    out.push_back(check_nonrelativistic_limit());
    out.push_back(check_quiver_energy());
    out.push_back(check_relativistic_mass(rng));
    out.push_back(check_shell_form_discrimination());
    return out;
}

inline std::vector<CheckResult> run_all(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out = run_acceptance(seed);
    out.push_back(check_boost_invariance(rng));
    out.push_back(check_transversality(rng));
    out.push_back(check_cycle_average_closed_form(rng));
    out.push_back(check_lorentz_invariance_up(rng));
    out.push_back(check_lightfront_conservation());
    out.push_back(check_shell_route_equivalence(rng));
    out.push_back(check_multipole_pole(rng));
    out.push_back(check_charge_sign(rng));
    return out;
}

}  // namespace sfkin::verify
