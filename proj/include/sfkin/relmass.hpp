#pragma once

// Demonstrator: p = m u is covariant, the "relativistic mass" m*gamma is a
// frame artifact. Velocity composition is done by boosting the 4-velocity
// directly, which keeps covariance exact by construction.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "minkowski.hpp"

namespace sfkin {

/// u = gamma (1, v), natural units; inner(u,u) = 1.
inline FourVector four_velocity(Vec3 v3) {
    const double v2 = v3.dot(v3);
    if (!(v2 < 1.0)) throw std::domain_error("four_velocity: |v| must be < 1");
    const double gamma = 1.0 / std::sqrt(1.0 - v2);
    return {gamma, v3 * gamma};
}

/// p = m u; inner(p,p) = m^2.
inline FourVector momentum_from_velocity(double m, Vec3 v3) {
    if (!(m > 0.0)) throw std::invalid_argument("momentum_from_velocity: mass must be positive");
    return four_velocity(v3) * m;
}

struct CovarianceReport {
    std::vector<double> invariant_mass_per_frame;  // sqrt(p.p), frame by frame
    std::vector<double> m_gamma_per_frame;         // p^0, frame by frame
    std::vector<FourVector> momentum_per_frame;
    double covariance_residual = 0.0;  // max | boost(m u) - m boost(u) |
};

/// Evaluate the momentum of a particle (mass m, velocity v3) in each frame.
/// The invariant mass sqrt(p.p) is the same everywhere; p^0 = m*gamma is not.
inline CovarianceReport covariance_report(double m, Vec3 v3, const std::vector<LorentzBoost>& boosts) {
    const FourVector u = four_velocity(v3);
    const FourVector p = momentum_from_velocity(m, v3);

    CovarianceReport rep;
    rep.invariant_mass_per_frame.reserve(boosts.size() + 1);
    rep.m_gamma_per_frame.reserve(boosts.size() + 1);

    const auto record = [&](FourVector q) {
        rep.momentum_per_frame.push_back(q);
        rep.invariant_mass_per_frame.push_back(std::sqrt(inner(q, q)));
        rep.m_gamma_per_frame.push_back(q.t);
    };
    record(p);

    for (const auto& b : boosts) {
        const FourVector via_p = b.apply(p);
        const FourVector via_u = b.apply(u) * m;  // velocity composition route
        record(via_p);
        const FourVector d = via_p - via_u;
        const double r = std::max(std::max(std::abs(d.t), std::abs(d.x)),
                                  std::max(std::abs(d.y), std::abs(d.z)));
        rep.covariance_residual = std::max(rep.covariance_residual, r);
    }
    return rep;
}

}  // namespace sfkin
