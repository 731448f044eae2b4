#pragma once

// CODATA-2018 physical constants (SI). The single home of dimensional
// constants; everything past the SI boundary works in natural units m=c=1.

namespace sfkin {

struct PhysicalConstants {
    double electron_mass = 9.1093837015e-31;  // kg
    double light_speed = 299792458.0;         // m/s (exact)
    double reduced_planck = 1.054571817e-34;  // J s
    double elementary_charge = 1.602176634e-19;  // C (exact)
    double vacuum_permittivity = 8.8541878128e-12;  // F/m

    // Derived from e, eps0, hbar, c rather than tabulated separately so that
    // quantities reachable by two algebraic routes agree to rounding, not
    // just to the ~1e-10 consistency of independently rounded table entries.
    // Matches the CODATA-2018 value 7.2973525693e-3 within 4e-10 relative.
    double alpha = elementary_charge * elementary_charge /
                   (4.0 * 3.14159265358979323846 * vacuum_permittivity * reduced_planck *
                    light_speed);

    /// Reduced Compton wavelength hbar/(m c), meters.
    double reduced_compton() const {
        return reduced_planck / (electron_mass * light_speed);
    }

    /// Electron rest energy m c^2, joules.
    double rest_energy() const {
        return electron_mass * light_speed * light_speed;
    }

    /// Joules per electron-volt.
    double joule_per_ev() const { return elementary_charge; }
};

inline const PhysicalConstants& codata() {
    static const PhysicalConstants k{};
    return k;
}

}  // namespace sfkin
