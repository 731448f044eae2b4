#pragma once

// Transverse plane-wave field. The 4-potential depends on spacetime only
// through the covariant phase phi = k.x; internally everything is in
// natural units m = c = 1 with the dimensionless amplitude convention
// a0 = e A0 / (m c^2), so the potential amplitude is a0 itself and
//   Up = <|A.A|> / 2  =  a0^2/4 (linear),  a0^2/2 (circular).
// SI laser parameters are converted once at construction.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "constants.hpp"
#include "minkowski.hpp"

namespace sfkin {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

enum class Polarization { linear, circular };

/// Pulse envelope as a function of phase, value in [0,1]. flat_top, sin2
/// and gaussian vanish at both ends of their support, which starts at
/// phi = 0. Durations are measured in carrier cycles (2*pi of phase).
class Envelope {
public:
    enum class Kind { monochromatic, flat_top, sin2, gaussian };

    static Envelope monochromatic() { return Envelope(Kind::monochromatic); }

    static Envelope flat_top(int ramp_cycles, int plateau_cycles) {
        if (ramp_cycles < 1 || plateau_cycles < 1)
            throw std::invalid_argument("Envelope: flat_top needs ramp_cycles >= 1 and plateau_cycles >= 1");
        Envelope e(Kind::flat_top);
        e.ramp_cycles_ = ramp_cycles;
        e.plateau_cycles_ = plateau_cycles;
        return e;
    }

    static Envelope sin2(int total_cycles) {
        if (total_cycles < 1) throw std::invalid_argument("Envelope: sin2 needs total_cycles >= 1");
        Envelope e(Kind::sin2);
        e.total_cycles_ = total_cycles;
        return e;
    }

    static Envelope gaussian(double sigma_cycles, double cutoff_sigmas) {
        if (!(sigma_cycles > 0.0) || !(cutoff_sigmas > 0.0))
            throw std::invalid_argument("Envelope: gaussian needs positive sigma_cycles and cutoff_sigmas");
        Envelope e(Kind::gaussian);
        e.sigma_cycles_ = sigma_cycles;
        e.cutoff_sigmas_ = cutoff_sigmas;
        return e;
    }

    Kind kind() const { return kind_; }
    int ramp_cycles() const { return ramp_cycles_; }
    int plateau_cycles() const { return plateau_cycles_; }

    double value(double phi) const {
        switch (kind_) {
            case Kind::monochromatic:
                return 1.0;
            case Kind::flat_top: {
                const double l1 = two_pi * ramp_cycles_;
                const double l2 = l1 + two_pi * plateau_cycles_;
                const double l3 = l2 + two_pi * ramp_cycles_;
                if (phi <= 0.0 || phi >= l3) return 0.0;
                if (phi < l1) {
                    const double s = std::sin(phi / (4.0 * ramp_cycles_));
                    return s * s;
                }
                if (phi <= l2) return 1.0;
                const double s = std::sin((l3 - phi) / (4.0 * ramp_cycles_));
                return s * s;
            }
            case Kind::sin2: {
                const double l = two_pi * total_cycles_;
                if (phi <= 0.0 || phi >= l) return 0.0;
                const double s = std::sin(phi / (2.0 * total_cycles_));
                return s * s;
            }
            case Kind::gaussian: {
                const double sig = two_pi * sigma_cycles_;
                const double center = cutoff_sigmas_ * sig;
                if (phi <= 0.0 || phi >= 2.0 * center) return 0.0;
                const double d = (phi - center) / sig;
                const double edge = std::exp(-0.5 * cutoff_sigmas_ * cutoff_sigmas_);
                const double v = (std::exp(-0.5 * d * d) - edge) / (1.0 - edge);
                return v > 0.0 ? v : 0.0;
            }
        }
        return 0.0;
    }

    /// d(envelope)/dphi, analytic.
    double derivative(double phi) const {
        switch (kind_) {
            case Kind::monochromatic:
                return 0.0;
            case Kind::flat_top: {
                const double r = ramp_cycles_;
                const double l1 = two_pi * r;
                const double l2 = l1 + two_pi * plateau_cycles_;
                const double l3 = l2 + two_pi * r;
                if (phi <= 0.0 || phi >= l3 || (phi >= l1 && phi <= l2)) return 0.0;
                if (phi < l1) return std::sin(phi / (2.0 * r)) / (4.0 * r);
                return -std::sin((l3 - phi) / (2.0 * r)) / (4.0 * r);
            }
            case Kind::sin2: {
                const double n = total_cycles_;
                if (phi <= 0.0 || phi >= two_pi * n) return 0.0;
                return std::sin(phi / n) / (2.0 * n);
            }
            case Kind::gaussian: {
                if (value(phi) <= 0.0) return 0.0;
                const double sig = two_pi * sigma_cycles_;
                const double center = cutoff_sigmas_ * sig;
                const double d = (phi - center) / sig;
                const double edge = std::exp(-0.5 * cutoff_sigmas_ * cutoff_sigmas_);
                return -d / sig * std::exp(-0.5 * d * d) / (1.0 - edge);
            }
        }
        return 0.0;
    }

    /// End of support in phase; infinity for the monochromatic envelope.
    double support_end() const {
        switch (kind_) {
            case Kind::monochromatic: return std::numeric_limits<double>::infinity();
            case Kind::flat_top: return two_pi * (2.0 * ramp_cycles_ + plateau_cycles_);
            case Kind::sin2: return two_pi * total_cycles_;
            case Kind::gaussian: return 2.0 * cutoff_sigmas_ * two_pi * sigma_cycles_;
        }
        return 0.0;
    }

    /// True when a whole-cycle region with envelope identically 1 exists,
    /// i.e. a cycle average of the carrier is well defined.
    bool has_periodic_region() const {
        return kind_ == Kind::monochromatic || kind_ == Kind::flat_top;
    }

    /// Start of the unit-envelope plateau (phi = 0 for monochromatic).
    double plateau_begin() const {
        if (kind_ == Kind::monochromatic) return 0.0;
        if (kind_ == Kind::flat_top) return two_pi * ramp_cycles_;
        throw std::domain_error("Envelope: no periodic plateau on a sin2/gaussian envelope");
    }

    /// Whole carrier cycles available on the plateau.
    int plateau_whole_cycles() const {
        if (kind_ == Kind::monochromatic) return std::numeric_limits<int>::max();
        if (kind_ == Kind::flat_top) return plateau_cycles_;
        throw std::domain_error("Envelope: no periodic plateau on a sin2/gaussian envelope");
    }

private:
    explicit Envelope(Kind k) : kind_(k) {}

    Kind kind_;
    int ramp_cycles_ = 0;
    int plateau_cycles_ = 0;
    int total_cycles_ = 0;
    double sigma_cycles_ = 0.0;
    double cutoff_sigmas_ = 0.0;
};

/// Orthonormal transverse basis for a propagation direction.
inline std::pair<Vec3, Vec3> transverse_basis(Vec3 khat) {
    // Exact basis for the common axis-aligned cases.
    if (khat.x == 0.0 && khat.y == 0.0) {
        const double s = khat.z >= 0.0 ? 1.0 : -1.0;
        return {Vec3{1, 0, 0}, Vec3{0, s, 0}};
    }
    const Vec3 helper = std::abs(khat.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 e1 = helper - khat * helper.dot(khat);
    e1 = e1.normalized();
    // e2 = khat x e1
    const Vec3 e2{khat.y * e1.z - khat.z * e1.y,
                  khat.z * e1.x - khat.x * e1.z,
                  khat.x * e1.y - khat.y * e1.x};
    return {e1, e2};
}

class PlaneWaveField {
public:
    PlaneWaveField(double omega, Vec3 direction, Polarization pol, double a0,
                   Envelope envelope = Envelope::monochromatic())
        : omega_(omega),
          khat_(direction.normalized()),
          pol_(pol),
          a0_(a0),
          envelope_(envelope) {
        if (!(omega > 0.0)) throw std::invalid_argument("PlaneWaveField: omega must be positive");
        if (!(a0 >= 0.0)) throw std::invalid_argument("PlaneWaveField: a0 must be non-negative");
        std::tie(eps1_, eps2_) = transverse_basis(khat_);
    }

    double omega() const { return omega_; }
    Vec3 khat() const { return khat_; }
    Polarization polarization() const { return pol_; }
    double a0() const { return a0_; }
    const Envelope& envelope() const { return envelope_; }
    Vec3 eps1() const { return eps1_; }
    Vec3 eps2() const { return eps2_; }

    /// Propagation 4-vector k = (omega)(1, khat); lightlike by construction.
    FourVector k_four() const { return {omega_, khat_ * omega_}; }

private:
    double omega_;
    Vec3 khat_;
    Polarization pol_;
    double a0_;
    Envelope envelope_;
    Vec3 eps1_, eps2_;
};

/// 4-potential at phase phi in the radiation gauge: A^0 = 0, space part
/// transverse to khat. Natural units, amplitude a0.
inline FourVector potential_at(const PlaneWaveField& f, double phi) {
    const double env = f.envelope().value(phi);
    Vec3 a = f.eps1() * (f.a0() * env * std::cos(phi));
    if (f.polarization() == Polarization::circular)
        a = a + f.eps2() * (f.a0() * env * std::sin(phi));
    return {0.0, a};
}

/// Cycle average <|A.A|> over one exact carrier period on the unit-envelope
/// plateau, by periodic trapezoid quadrature. Rejects envelopes without a
/// periodic region.
inline double cycle_average_abs_AA(const PlaneWaveField& f, int samples = 4096) {
    if (!f.envelope().has_periodic_region())
        throw std::domain_error("cycle_average_abs_AA: envelope has no periodic plateau");
    if (f.envelope().kind() == Envelope::Kind::flat_top && f.envelope().plateau_whole_cycles() < 1)
        throw std::domain_error("cycle_average_abs_AA: plateau shorter than one cycle");
    const double phi0 = f.envelope().plateau_begin();
    double acc = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double phi = phi0 + two_pi * i / samples;
        const FourVector a = potential_at(f, phi);
        acc += std::abs(inner(a, a));
    }
    return acc / samples;
}

/// Ponderomotive potential Up = e^2 <|A.A|> / (2 m c^2), in units of m c^2.
inline double ponderomotive_potential(const PlaneWaveField& f) {
    return 0.5 * cycle_average_abs_AA(f);
}

/// Intensity parameter z_f = 2 Up / (m c^2).
inline double zf(const PlaneWaveField& f) {
    return 2.0 * ponderomotive_potential(f);
}

/// Truncated Fourier series for the phase derivative of a gauge generator:
/// LambdaPrime(phi) = sum_n cos_coeff*cos(n*phi) + sin_coeff*sin(n*phi).
class GaugeGenerator {
public:
    struct Harmonic {
        int harmonic;
        double cos_coeff;
        double sin_coeff;
    };

    GaugeGenerator() = default;

    explicit GaugeGenerator(std::vector<Harmonic> terms) : terms_(std::move(terms)) {
        for (const auto& h : terms_) {
            if (h.harmonic < 0) throw std::invalid_argument("GaugeGenerator: harmonic must be >= 0");
            if (!std::isfinite(h.cos_coeff) || !std::isfinite(h.sin_coeff))
                throw std::invalid_argument("GaugeGenerator: non-finite coefficient");
        }
    }

    const std::vector<Harmonic>& terms() const { return terms_; }

    double lambda_prime(double phi) const {
        double v = 0.0;
        for (const auto& h : terms_)
            v += h.cos_coeff * std::cos(h.harmonic * phi) + h.sin_coeff * std::sin(h.harmonic * phi);
        return v;
    }

private:
    std::vector<Harmonic> terms_;
};

using PotentialFn = std::function<FourVector(double)>;

/// Gauge transform A -> A + k * LambdaPrime(phi). The transformed potential
/// generally has a nonzero time part and is no longer transverse; A.A is
/// unchanged pointwise because k is lightlike and k.A = 0.
inline PotentialFn apply_gauge(PotentialFn a, FourVector k, GaugeGenerator g) {
    return [a = std::move(a), k, g = std::move(g)](double phi) {
        return a(phi) + k * g.lambda_prime(phi);
    };
}

struct LaserParams {
    double intensity_w_cm2 = 0.0;  // W/cm^2
    double wavelength_m = 0.0;     // meters
    Polarization polarization = Polarization::linear;

    LaserParams() = default;
    LaserParams(double intensity, double wavelength, Polarization pol)
        : intensity_w_cm2(intensity), wavelength_m(wavelength), polarization(pol) {
        if (!(intensity >= 0.0)) throw std::invalid_argument("LaserParams: intensity must be >= 0");
        if (!(wavelength > 0.0)) throw std::invalid_argument("LaserParams: wavelength must be > 0");
    }
};

/// Peak electric field E0 (V/m) from intensity. The cycle-averaged squared
/// field is <E^2> = I / (eps0 c); linear polarization has <E^2> = E0^2/2,
/// circular has E0 per component with <E^2> = E0^2.
inline double peak_electric_field(const LaserParams& p, const PhysicalConstants& k = codata()) {
    const double intensity_si = p.intensity_w_cm2 * 1e4;  // W/m^2
    const double mean_e2 = intensity_si / (k.vacuum_permittivity * k.light_speed);
    const double factor = p.polarization == Polarization::linear ? 2.0 : 1.0;
    return std::sqrt(factor * mean_e2);
}

/// SI boundary: build the natural-unit field for a laser. The internal
/// omega is the photon energy in units of m c^2; a0 = e E0 / (m omega c).
inline PlaneWaveField from_laser_params(const LaserParams& p, const PhysicalConstants& k = codata(),
                                        Vec3 direction = {0, 0, 1},
                                        Envelope envelope = Envelope::monochromatic()) {
    const double omega_si = two_pi * k.light_speed / p.wavelength_m;
    const double e0 = peak_electric_field(p, k);
    const double a0 = k.elementary_charge * e0 / (k.electron_mass * omega_si * k.light_speed);
    const double omega_natural = k.reduced_planck * omega_si / k.rest_energy();
    return PlaneWaveField(omega_natural, direction, p.polarization, a0, envelope);
}

/// Ponderomotive potential in eV, straight from SI laser parameters.
inline double ponderomotive_potential_ev(const LaserParams& p, const PhysicalConstants& k = codata()) {
    const PlaneWaveField f = from_laser_params(p, k);
    return ponderomotive_potential(f) * k.rest_energy() / k.joule_per_ev();
}

/// z_f via the photon-density route: z_f = alpha * rho * 2 * lambda * lambdabar_C^2,
/// with rho the number of photons per unit volume, rho = eps0 <E^2> / (hbar omega).
inline double zf_photon_density(const LaserParams& p, const PhysicalConstants& k = codata()) {
    if (!(p.wavelength_m > 0.0)) throw std::invalid_argument("zf_photon_density: wavelength must be > 0");
    const double omega_si = two_pi * k.light_speed / p.wavelength_m;
    const double intensity_si = p.intensity_w_cm2 * 1e4;
    const double mean_e2 = intensity_si / (k.vacuum_permittivity * k.light_speed);
    const double energy_density = k.vacuum_permittivity * mean_e2;  // electric + magnetic
    const double rho = energy_density / (k.reduced_planck * omega_si);
    const double lc = k.reduced_compton();
    return k.alpha * rho * 2.0 * p.wavelength_m * lc * lc;
}

/// Photon number density (1/m^3) for reporting.
inline double photon_density(const LaserParams& p, const PhysicalConstants& k = codata()) {
    const double omega_si = two_pi * k.light_speed / p.wavelength_m;
    const double intensity_si = p.intensity_w_cm2 * 1e4;
    const double mean_e2 = intensity_si / (k.vacuum_permittivity * k.light_speed);
    return k.vacuum_permittivity * mean_e2 / (k.reduced_planck * omega_si);
}

}  // namespace sfkin
