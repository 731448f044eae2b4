#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sfkin/minkowski.hpp"
#include "sfkin/planewave.hpp"

using namespace sfkin;

namespace {

std::mt19937_64 rng(20260823);

FourVector random_vec(double scale = 3.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng), u(rng), u(rng)};
}

Vec3 random_velocity(double vmax) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        const Vec3 v{u(rng), u(rng), u(rng)};
        if (v.dot(v) < vmax * vmax && v.dot(v) > 1e-4) return v;
    }
}

}  // namespace

TEST_CASE("inner product convention (+,-,-,-)") {
    CHECK(inner({1, 0, 0, 0}, {1, 0, 0, 0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(inner({1, 0, 0, 1}, {1, 0, 0, 1}) == 0.0);
    const FourVector a{2, 1, -1, 3}, b{-1, 2, 0, 1};
    CHECK(inner(a, b) == doctest::Approx(inner(b, a)).epsilon(1e-15));
}

TEST_CASE("constructors reject non-finite components") {
    CHECK_THROWS_AS(FourVector(std::nan(""), 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(FourVector(0, std::numeric_limits<double>::infinity(), 0, 0),
                    std::invalid_argument);
}

TEST_CASE("boost convention: v = 0.6 xhat maps (1,0,0,0) to (1.25,-0.75,0,0)") {
    const LorentzBoost b({0.6, 0, 0});
    const FourVector r = b.apply({1, 0, 0, 0});
    CHECK(r.t == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(r.x == doctest::Approx(-0.75).epsilon(1e-14));
    CHECK(r.y == 0.0);
    CHECK(r.z == 0.0);
    // cross-check via inner-product preservation
    CHECK(inner(r, r) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("identity boost is the identity map") {
    const LorentzBoost b({0, 0, 0});
    const FourVector x = random_vec();
    const FourVector y = b.apply(x);
    CHECK(y.t == x.t);
    CHECK(y.x == x.x);
}

TEST_CASE("boost rejects superluminal velocities") {
    CHECK_THROWS_AS(LorentzBoost({1.0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(LorentzBoost({0.8, 0.8, 0}), std::domain_error);
}

TEST_CASE("boost then inverse boost returns the input") {
    for (int i = 0; i < 200; ++i) {
        const LorentzBoost b(random_velocity(0.95));
        const FourVector x = random_vec();
        const FourVector y = b.inverse().apply(b.apply(x));
        const double scale = std::max(1.0, std::sqrt(x.euclidean_sq())) * b.gamma() * b.gamma();
        CHECK(std::abs(y.t - x.t) <= 1e-12 * scale);
        CHECK(std::abs(y.x - x.x) <= 1e-12 * scale);
        CHECK(std::abs(y.y - x.y) <= 1e-12 * scale);
        CHECK(std::abs(y.z - x.z) <= 1e-12 * scale);
    }
}

TEST_CASE("inner products are boost invariant") {
    for (int i = 0; i < 1000; ++i) {
        const LorentzBoost b(random_velocity(0.95));
        const FourVector x = random_vec(), y = random_vec();
        const double before = inner(x, y);
        const double after = inner(b.apply(x), b.apply(y));
        const double scale = std::max(1.0, std::abs(before)) * b.gamma() * b.gamma();
        CHECK(std::abs(after - before) <= 1e-12 * scale);
    }
}

TEST_CASE("causal classification") {
    CHECK(classify({1, 0, 0, 1}, 1e-12) == CausalClass::lightlike);
    CHECK(classify({2, 0, 0, 1}, 1e-12) == CausalClass::timelike);
    CHECK(classify({1, 0, 0, 2}, 1e-12) == CausalClass::spacelike);
    CHECK_THROWS_AS(classify({1, 0, 0, 0}, 0.0), std::invalid_argument);

    // classification is scale invariant
    CHECK(classify(FourVector{1, 0, 0, 1} * 1e12, 1e-12) == CausalClass::lightlike);

    // linear-polarization potential away from a node is spacelike
    const PlaneWaveField f(1.0, {0, 0, 1}, Polarization::linear, 1.0);
    const FourVector a = potential_at(f, 0.1);
    CHECK(inner(a, a) < 0.0);
    CHECK(classify(a, 1e-12) == CausalClass::spacelike);
}

TEST_CASE("boosts preserve causal class away from the light cone") {
    for (int i = 0; i < 500; ++i) {
        const FourVector x = random_vec();
        if (std::abs(inner(x, x)) <= 1e-6 * x.euclidean_sq()) continue;
        const LorentzBoost b(random_velocity(0.9));
        CHECK(classify(x, 1e-6) == classify(b.apply(x), 1e-6));
    }
}
