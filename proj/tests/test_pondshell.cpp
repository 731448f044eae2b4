#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sfkin/minkowski.hpp"
#include "sfkin/planewave.hpp"
#include "sfkin/pondshell.hpp"

using namespace sfkin;

namespace {

std::mt19937_64 rng(90210);

Vec3 random_direction() {
    std::normal_distribution<double> n(0.0, 1.0);
    while (true) {
        const Vec3 v{n(rng), n(rng), n(rng)};
        if (v.dot(v) > 1e-6) return v.normalized();
    }
}

PlaneWaveField random_field() {
    std::uniform_real_distribution<double> u(0.5, 2.0);
    std::bernoulli_distribution circ(0.5);
    return PlaneWaveField(u(rng), random_direction(),
                          circ(rng) ? Polarization::circular : Polarization::linear, u(rng));
}

}  // namespace

TEST_CASE("ponderomotive 4-potential is (Up, Up khat) and lightlike") {
    const PlaneWaveField off(1.0, {0, 0, 1}, Polarization::linear, 0.0);
    CHECK(ponderomotive_four_potential(off).euclidean_sq() == 0.0);

    // linear a0 = 1 along z: Up = 0.25
    const PlaneWaveField lin(1.0, {0, 0, 1}, Polarization::linear, 1.0);
    const FourVector u = ponderomotive_four_potential(lin);
    CHECK(u.t == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(u.x == 0.0);
    CHECK(u.y == 0.0);
    CHECK(u.z == doctest::Approx(0.25).epsilon(1e-10));

    for (int i = 0; i < 200; ++i) {
        const PlaneWaveField f = random_field();
        const FourVector uu = ponderomotive_four_potential(f);
        CHECK(std::abs(inner(uu, uu)) <= 1e-12 * std::max(uu.euclidean_sq(), 1e-30));
        // non-negative multiple of k
        CHECK(uu.t >= 0.0);
        CHECK(uu.t * f.omega() == doctest::Approx(inner(FourVector{uu.t, {0, 0, 0}}, f.k_four())).epsilon(1e-12));
    }
}

TEST_CASE("dressed shell invariant") {
    const FourVector rest{1, 0, 0, 0};

    const PlaneWaveField off(1.0, {0, 0, 1}, Polarization::linear, 0.0);
    CHECK(dressed_shell_invariant(rest, off).dressed_invariant == doctest::Approx(1.0).epsilon(1e-12));

    // z_f = 0.5: linear a0 = 1
    const PlaneWaveField lin(1.0, {0, 0, 1}, Polarization::linear, 1.0);
    const ShellReport r = dressed_shell_invariant(rest, lin);
    CHECK(r.z_f == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(r.dressed_invariant == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(r.expected == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(std::abs(r.residual) <= 1e-12 * r.expected);
    CHECK(r.e_min == doctest::Approx(1.25).epsilon(1e-10));

    // evaluated after a common boost of p and U: same invariant
    std::uniform_real_distribution<double> uv(-0.57, 0.57);
    for (int i = 0; i < 300; ++i) {
        const LorentzBoost b(Vec3{uv(rng), uv(rng), uv(rng)});
        const FourVector pb = b.apply(rest);
        const FourVector ub = b.apply(ponderomotive_four_potential(lin));
        CHECK(inner(pb + ub, pb + ub) == doctest::Approx(1.5).epsilon(1e-9));
    }

    // off-shell momentum is caller confusion, not a shell input
    CHECK_THROWS_AS(dressed_shell_invariant({2, 0, 0, 0}, lin), std::invalid_argument);
}

TEST_CASE("minimum energy") {
    const PlaneWaveField off(1.0, {0, 0, 1}, Polarization::linear, 0.0);
    CHECK(minimum_energy(off) == doctest::Approx(1.0).epsilon(1e-14));
    const PlaneWaveField lin(1.0, {0, 0, 1}, Polarization::linear, 1.0);
    CHECK(minimum_energy(lin) == doctest::Approx(1.25).epsilon(1e-10));

    // perfect-square identity across a wide Up range
    for (int i = 0; i <= 60; ++i) {
        const double up = std::pow(10.0, -3.0 + 6.0 * i / 60.0);
        const double root = std::sqrt(1.0 + 2.0 * up + up * up);
        CHECK(root == doctest::Approx(1.0 + up).epsilon(1e-12));
    }
}

TEST_CASE("kinetic energy") {
    // zero exactly at |p| = Up/c
    CHECK(kinetic_energy(0.25, 0.25) == 0.0);
    CHECK(kinetic_energy(0.0, 0.0) == 0.0);

    // nonrelativistic value against the direct E - Emin oracle
    const double up = 1e-6, pmag = 1e-3;
    const double t = kinetic_energy(pmag, up);
    const double t_oracle = std::sqrt(1.0 + 2.0 * up + pmag * pmag) - (1.0 + up);
    CHECK(t == doctest::Approx(t_oracle).epsilon(1e-6));
    CHECK(t == doctest::Approx(0.5 * pmag * pmag).epsilon(1e-3));

    // negative below the minimal momentum; strictly increasing in |p|^2;
    // convex in |p| (E(|p|) = sqrt(B + p^2) has positive second derivative)
    CHECK(kinetic_energy(0.1, 0.25) < 0.0);
    double prev_t = kinetic_energy(0.0, 0.25);
    for (int i = 1; i <= 50; ++i) {
        const double p2 = 4.0 * i / 50.0;
        const double ti = kinetic_energy(std::sqrt(p2), 0.25);
        CHECK(ti > prev_t);
        prev_t = ti;
    }
    const double h = 0.05;
    for (int i = 1; i <= 40; ++i) {
        const double pm = 2.0 * i / 40.0;
        const double second_diff = kinetic_energy(pm + h, 0.25) - 2.0 * kinetic_energy(pm, 0.25) +
                                   kinetic_energy(pm - h, 0.25);
        CHECK(second_diff > 0.0);
    }
}

TEST_CASE("nonrelativistic limit shrinks with the smallness parameters") {
    CHECK(kinetic_energy_nr(Vec3{0, 0, 0}) == 0.0);
    CHECK(kinetic_energy_nr(1e-3) == doctest::Approx(5e-7).epsilon(1e-12));

    double prev_dev = 1e9;
    for (int i = 0; i >= -4; --i) {
        const double p2 = std::pow(10.0, -2.0 + i);  // 1e-2 down to 1e-6
        const double upv = 0.5 * p2;
        const double dev = std::abs(kinetic_energy(std::sqrt(p2), upv) - 0.5 * p2) / (0.5 * p2);
        CHECK(dev < prev_dev);
        prev_dev = dev;
    }
}

TEST_CASE("multipole residual") {
    const PlaneWaveField off(1.0, {0, 0, 1}, Polarization::linear, 0.0);
    CHECK(std::abs(multipole_residual({1, 0, 0, 0}, 0, off)) <= 1e-12);

    // n = 0 with the dressed rest momentum reproduces the dressed shell
    const PlaneWaveField lin(1.0, {0, 0, 1}, Polarization::linear, 1.0);
    const FourVector dressed = FourVector{1, 0, 0, 0} + ponderomotive_four_potential(lin);
    CHECK(std::abs(multipole_residual(dressed, 0, lin)) <= 1e-12);

    // pole momenta built from the closed-form light-front solution
    std::uniform_real_distribution<double> uperp(-1.0, 1.0);
    for (int n = -3; n <= 3; ++n) {
        const PlaneWaveField f(0.7, {0, 0, 1}, Polarization::circular, 1.3);
        const double m2z = 1.0 + zf(f);
        const double qx = uperp(rng), qy = uperp(rng);
        const double qplus = 5.0;
        const double qminus = (m2z + qx * qx + qy * qy) / (qplus - 2.0 * n * f.omega());
        const FourVector q{0.5 * (qplus + qminus), qx, qy, 0.5 * (qplus - qminus)};
        CHECK(std::abs(multipole_residual(q, n, f)) <= 1e-12 * m2z);
    }
}

TEST_CASE("dressed shell is not a simple mass shift") {
    for (const double z : {0.1, 0.5, 1.0}) {
        const double dm = std::sqrt(z);  // dm^2 = z_f m^2 matches the invariant form
        const double diff = (1.0 + z) - (1.0 + dm) * (1.0 + dm);
        CHECK(std::abs(diff) > 1e-3);
        CHECK(diff == doctest::Approx(-2.0 * dm).epsilon(1e-12));
    }
}

TEST_CASE("rest-frame and general-frame shell routes agree") {
    for (int i = 0; i < 300; ++i) {
        const PlaneWaveField f = random_field();
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        const Vec3 p3{u(rng), u(rng), u(rng)};
        const FourVector p{std::sqrt(1.0 + p3.dot(p3)), p3};
        const FourVector uu = ponderomotive_four_potential(f);
        const double lhs = 2.0 * inner(p, uu);
        const double rhs = 2.0 * ponderomotive_potential(f) * inner(p, f.k_four()) / f.omega();
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}
