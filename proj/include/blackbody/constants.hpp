#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace blackbody {

/// Fundamental constants in SI units. h and k are configuration inputs
/// (loaded from a constants file), so historical values can be injected;
/// nothing downstream hard-codes them.
struct PhysicalConstants {
    double c;  ///< speed of light, m/s
    double G;  ///< gravitational constant, m^3/(kg s^2)
    double R;  ///< molar gas constant, J/(mol K)
    double F;  ///< Faraday constant, C/mol
    double h;  ///< action quantum, J s
    double k;  ///< Boltzmann constant, J/K

    /// Throws std::domain_error unless every field is finite and > 0.
    void validate() const;
};

/// Constants derived from PhysicalConstants, never set independently.
struct DerivedConstants {
    double N;        ///< Avogadro number, 1/mol (R/k)
    double e;        ///< elementary charge, C (F/N)
    double sigma_u;  ///< Stefan-Boltzmann energy-density constant, J/(m^3 K^4)
};

/// Natural units built from h (not hbar), c, G and k.
struct PlanckUnits {
    double length;       ///< m, sqrt(h G / c^3)
    double time;         ///< s, length / c
    double mass;         ///< kg, sqrt(h c / G)
    double temperature;  ///< K, sqrt(h c^5 / G) / k
};

/// N = R/k, e = F/N, sigma_u = 8 pi^5 k^4 / (15 c^3 h^3).
DerivedConstants derive_constants(const PhysicalConstants& pc);

/// h-based Planck units. Modern tables use hbar; these differ from those by
/// a factor sqrt(2 pi), matching the pre-hbar definition of the unit system.
PlanckUnits planck_units(const PhysicalConstants& pc);

/// Planck units from the Wien-law parameterization (a in K s, b in J s):
/// identical to planck_units with h = b, k = b/a.
PlanckUnits planck_units_ab(double a, double b, double c, double G);

/// Parses a "key = value" constants file ('#' starts a comment, blank lines
/// ignored). Keys outside {c,G,R,F,h,k} are an error; values must be positive.
std::map<std::string, double> parse_constants_file(const std::filesystem::path& path);

/// Loads constants from `path`; keys missing there fall back to `defaults`.
PhysicalConstants load_constants(const std::filesystem::path& path,
                                 const PhysicalConstants& defaults);

/// Loads a complete constants file (all six keys required).
PhysicalConstants load_constants(const std::filesystem::path& path);

}  // namespace blackbody
