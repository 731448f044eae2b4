#pragma once

// Minimal special-relativity algebra: 4-vectors with metric (+,-,-,-),
// inner products, pure boosts along arbitrary axes, causal classification.
//
// Boost convention (fixed once, used everywhere): boosting a 4-vector x by
// velocity v maps the rest momentum (m,0) to (gamma*m, -gamma*m*v), i.e.
//   t' = gamma*(t - v.r),   r' = r + ((gamma-1)*(v.r)/v^2 - gamma*t)*v.
// The inverse boost is the boost with -v.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sfkin {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }

    constexpr double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }

    Vec3 normalized() const {
        const double n = norm();
        if (n == 0.0) throw std::invalid_argument("Vec3: cannot normalize zero vector");
        return {x / n, y / n, z / n};
    }
};

constexpr Vec3 operator*(double s, Vec3 v) { return v * s; }

/// Contravariant Minkowski 4-vector, components in natural units.
/// Constructors reject non-finite components.
struct FourVector {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr FourVector() = default;

    FourVector(double t_, double x_, double y_, double z_) : t(t_), x(x_), y(y_), z(z_) {
        if (!std::isfinite(t) || !std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
            throw std::invalid_argument("FourVector: non-finite component");
    }

    FourVector(double t_, Vec3 r) : FourVector(t_, r.x, r.y, r.z) {}

    constexpr Vec3 spatial() const { return {x, y, z}; }

    FourVector operator+(FourVector o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
    FourVector operator-(FourVector o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
    FourVector operator*(double s) const { return {t * s, x * s, y * s, z * s}; }

    /// Squared Euclidean norm of the components; the scale reference for
    /// tolerance checks (classification is then invariant under x -> s*x).
    constexpr double euclidean_sq() const { return t * t + x * x + y * y + z * z; }
};

inline FourVector operator*(double s, FourVector v) { return v * s; }

/// Minkowski inner product a.b = a0*b0 - a1*b1 - a2*b2 - a3*b3.
inline double inner(FourVector a, FourVector b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

enum class CausalClass { timelike, lightlike, spacelike };

inline std::string to_string(CausalClass c) {
    switch (c) {
        case CausalClass::timelike: return "timelike";
        case CausalClass::lightlike: return "lightlike";
        default: return "spacelike";
    }
}

/// Classify x against |inner(x,x)| <= tol * euclidean_sq(x).
inline CausalClass classify(FourVector v, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("classify: tol must be positive");
    const double s = inner(v, v);
    const double scale = v.euclidean_sq();
    if (std::abs(s) <= tol * scale) return CausalClass::lightlike;
    return s > 0.0 ? CausalClass::timelike : CausalClass::spacelike;
}

/// Pure boost with velocity in units of c, |v| < 1.
class LorentzBoost {
public:
    explicit LorentzBoost(Vec3 velocity) : v_(velocity) {
        const double v2 = v_.dot(v_);
        if (!(v2 < 1.0)) throw std::domain_error("LorentzBoost: |velocity| must be < 1");
        gamma_ = 1.0 / std::sqrt(1.0 - v2);
    }

    Vec3 velocity() const { return v_; }
    double gamma() const { return gamma_; }

    LorentzBoost inverse() const { return LorentzBoost(-v_); }

    FourVector apply(FourVector p) const {
        const double v2 = v_.dot(v_);
        if (v2 == 0.0) return p;
        const Vec3 r = p.spatial();
        const double vr = v_.dot(r);
        const double tp = gamma_ * (p.t - vr);
        const Vec3 rp = r + ((gamma_ - 1.0) * vr / v2 - gamma_ * p.t) * v_;
        return {tp, rp};
    }

private:
    Vec3 v_;
    double gamma_;
};

inline FourVector boost(const LorentzBoost& b, FourVector x) { return b.apply(x); }

}  // namespace sfkin
