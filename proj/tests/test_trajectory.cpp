#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sfkin/planewave.hpp"
#include "sfkin/trajectory.hpp"

using namespace sfkin;

namespace {

std::mt19937_64 rng(550123);

Vec3 random_direction() {
    std::normal_distribution<double> n(0.0, 1.0);
    while (true) {
        const Vec3 v{n(rng), n(rng), n(rng)};
        if (v.dot(v) > 1e-6) return v.normalized();
    }
}

double max_comp(FourVector v) {
    return std::max(std::max(std::abs(v.t), std::abs(v.x)), std::max(std::abs(v.y), std::abs(v.z)));
}

}  // namespace

TEST_CASE("exact momentum: zero field returns the drift momentum") {
    const PlaneWaveField off(1.0, {0, 0, 1}, Polarization::linear, 0.0);
    const FourVector p0{std::sqrt(2.0), 1, 0, 0};
    const FourVector p = exact_momentum(off, p0, 5.0);
    CHECK(max_comp(p - p0) == 0.0);
}

TEST_CASE("exact momentum stays on-shell and conserves k.p") {
    std::uniform_real_distribution<double> u(0.5, 2.0);
    std::uniform_real_distribution<double> uphi(0.0, 20.0 * two_pi);
    std::uniform_real_distribution<double> up3(-1.5, 1.5);
    std::bernoulli_distribution circ(0.5);
    for (int i = 0; i < 500; ++i) {
        const PlaneWaveField f(u(rng), random_direction(),
                               circ(rng) ? Polarization::circular : Polarization::linear, u(rng));
        const Vec3 p3{up3(rng), up3(rng), up3(rng)};
        const FourVector p0{std::sqrt(1.0 + p3.dot(p3)), p3};
        const FourVector p = exact_momentum(f, p0, uphi(rng));
        CHECK(inner(p, p) == doctest::Approx(1.0).epsilon(1e-11));
        CHECK(inner(f.k_four(), p) == doctest::Approx(inner(f.k_four(), p0)).epsilon(1e-12));
    }
}

TEST_CASE("exact momentum rejects k.p0 = 0") {
    const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, 1.0);
    // lightlike co-moving momentum: k.p0 = omega (p0 - pz) = 0
    CHECK_THROWS_AS(exact_momentum(f, {1, 0, 0, 1}, 1.0), std::domain_error);
}

TEST_CASE("cycle-averaged exact momentum realizes the quasi-momentum (closed-form oracle)") {
    // rest electron, linear a0 = 1, monochromatic: average over one period
    // is (1 + Up, Up khat) with Up = 0.25
    const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, 1.0);
    const FourVector rest{1, 0, 0, 0};
    constexpr int n = 20000;
    FourVector acc;
    for (int i = 0; i < n; ++i) acc = acc + exact_momentum(f, rest, two_pi * i / n);
    const FourVector avg = acc * (1.0 / n);
    CHECK(avg.t == doctest::Approx(1.25).epsilon(1e-9));
    CHECK(std::abs(avg.x) <= 1e-9);
    CHECK(std::abs(avg.y) <= 1e-9);
    CHECK(avg.z == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("integrator: zero field keeps the momentum constant") {
    const PlaneWaveField off(1.0, {0, 0, 1}, Polarization::linear, 0.0);
    const FourVector p0{std::sqrt(1.25), 0.5, 0, 0};
    const Trajectory t = integrate(off, p0, 0.0, two_pi, two_pi / 100.0);
    for (const auto& s : t.states) CHECK(max_comp(s.momentum - p0) <= 1e-13);
}

TEST_CASE("integrator input validation") {
    const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, 1.0);
    CHECK_THROWS_AS(integrate(f, {1, 0, 0, 0}, 0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate(f, {1, 0, 0, 0}, 0.0, 1.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(integrate(f, {1, 0, 0, 1}, 0.0, 1.0, 0.1), std::domain_error);
}

TEST_CASE("integrator converges at 4th order (terminal position)") {
    // momentum terminal error superconverges (the equation is linear in p),
    // so the order is read off the accumulated position instead
    const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::circular, 1.0);
    const FourVector drift{1, 0, 0, 0};
    const double phi_end = 3.0 * two_pi;
    const FourVector start = exact_momentum(f, drift, 0.0);

    const auto xend = [&](double step) {
        const Trajectory t = integrate(f, start, 0.0, phi_end, step);
        return t.states.back().position;
    };
    const FourVector ref = xend(two_pi / 4096.0);
    const double e1 = max_comp(xend(two_pi / 64.0) - ref);
    const double e2 = max_comp(xend(two_pi / 128.0) - ref);
    CHECK(e1 / e2 > 13.0);
    CHECK(e1 / e2 < 19.0);
}

TEST_CASE("on-shell and light-front invariants hold along trajectories") {
    const Envelope env = Envelope::flat_top(4, 6);
    for (const double a0 : {0.5, 1.0, 2.0}) {
        const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, a0, env);
        const Trajectory t = integrate(f, {1, 0, 0, 0}, 0.0, env.support_end(), two_pi / 1000.0);
        CHECK(max_on_shell_violation(t) <= 1e-9);
        CHECK(max_lightfront_drift(t, f) <= 1e-10);
    }
}

TEST_CASE("pulse exit restores the initial momentum") {
    const FourVector rest{1, 0, 0, 0};
    for (const Envelope& env : {Envelope::sin2(12), Envelope::gaussian(2.0, 3.0)}) {
        const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, 1.0, env);
        const double end = env.support_end();
        CHECK(max_comp(exact_momentum(f, rest, end) - rest) <= 1e-10);
        const Trajectory t = integrate(f, rest, 0.0, end, two_pi / 1000.0);
        CHECK(max_comp(t.states.back().momentum - rest) <= 1e-6);
    }
}

TEST_CASE("cycle-averaged trajectory momentum: flat-top oracle") {
    const FourVector rest{1, 0, 0, 0};

    // zero field: average is the rest momentum
    const Envelope env0 = Envelope::flat_top(4, 4);
    const PlaneWaveField off(1.0, {0, 0, 1}, Polarization::linear, 0.0, env0);
    const Trajectory t0 = integrate(off, rest, 0.0, env0.support_end(), two_pi / 200.0);
    CHECK(max_comp(cycle_averaged_four_momentum(t0, off, 4) - rest) <= 1e-12);

    const Envelope env = Envelope::flat_top(4, 8);
    const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, 1.0, env);
    const Trajectory t = integrate(f, rest, 0.0, env.support_end(), two_pi / 1000.0);
    const FourVector avg = cycle_averaged_four_momentum(t, f, 8);
    const double up = ponderomotive_potential(f);
    CHECK(avg.t == doctest::Approx(1.0 + up).epsilon(1e-6));
    CHECK(avg.z == doctest::Approx(up).epsilon(1e-6));
    CHECK(std::abs(avg.x) <= 1e-6);

    // dressed invariant of the averaged momentum
    CHECK(inner(avg, avg) == doctest::Approx(1.0 + zf(f)).epsilon(1e-6));

    // average minus drift is lightlike along k
    const FourVector q = avg - rest;
    CHECK(std::abs(inner(q, q)) <= 1e-6);

    // insufficient coverage is rejected
    CHECK_THROWS_AS(cycle_averaged_four_momentum(t, f, 9), std::domain_error);
    const PlaneWaveField pulse(1.0, {0, 0, 1}, Polarization::linear, 1.0, Envelope::sin2(8));
    const Trajectory tp = integrate(pulse, rest, 0.0, two_pi * 8, two_pi / 200.0);
    CHECK_THROWS_AS(cycle_averaged_four_momentum(tp, pulse, 2), std::domain_error);
}

TEST_CASE("charge sign flip mirrors the transverse momentum") {
    const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, 1.0);
    const FourVector rest{1, 0, 0, 0};
    const FourVector pe = exact_momentum(f, rest, 1.1, -1.0);
    const FourVector pp = exact_momentum(f, rest, 1.1, +1.0);
    CHECK(pe.x == doctest::Approx(-pp.x).epsilon(1e-14));
    CHECK(pe.t == doctest::Approx(pp.t).epsilon(1e-14));
}

TEST_CASE("nonrelativistic quiver energy equals Up") {
    CHECK(quiver_energy_nr(0.0, 1.0) == 0.0);
    const double q = quiver_energy_nr(1e-3, 1.0);
    CHECK(q == doctest::Approx(2.5e-7).epsilon(1e-9));

    // cross-module: matching plane wave has the same Up
    const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, 1e-3);
    CHECK(q == doctest::Approx(ponderomotive_potential(f)).epsilon(1e-9));

    // regime enforcement
    CHECK_THROWS_AS(quiver_energy_nr(0.5, 1.0), std::domain_error);
}
