#pragma once

#include "blackbody/spectral.hpp"

#include <cstdint>
#include <optional>

namespace blackbody {

enum class RadiationLaw { planck, wien, rayleigh_jeans };

struct QuadratureResult {
    double value;             ///< J/m^3, or dimensionless for reduced integrals
    double est_error;         ///< same units; quadrature estimate plus any tail bound
    std::int64_t evaluations; ///< integrand calls
    bool divergent;           ///< true when the value is a cutoff-limited slice of a divergent integral
};

/// x^3/(e^x - 1), extended by continuity to 0 at x = 0.
double bose_integrand(double x);

/// Integral of x^3/(e^x - 1) over [0, inf): adaptive quadrature on [0, 50],
/// the [50, inf) remainder enters est_error as an analytic bound.
/// The exact value is pi^4/15.
QuadratureResult reduced_bose_integral();

/// Frequency-integrated energy density of the chosen law.
///   planck          -> sigma_u T^4, sigma_u = 8 pi^5 k^4/(15 c^3 h^3)
///   wien            -> (48 pi b / c^3) (T/a)^4
///   rayleigh_jeans  -> (8 pi k T / 3 c^3) cutoff^3, divergent flag set
/// planck and wien reduce to x = a nu / T and integrate on [0, 50] with a
/// tail bound; an optional cutoff truncates them too. rayleigh_jeans grows
/// without bound in the cutoff, so a cutoff is mandatory there
/// (std::invalid_argument otherwise).
QuadratureResult total_energy_density(double T, RadiationLaw law, const SpectralParams& sp,
                                      double c, std::optional<double> cutoff = std::nullopt);

/// Root of x = 3(1 - e^-x) on [2,3], bisected to 1e-13; approx 2.8214394.
double planck_peak_x();

/// argmax over nu of planck_u at fixed T: (T/a) planck_peak_x().
double peak_frequency(double T, const SpectralParams& sp);

/// argmax over nu of wien_u at fixed T: exactly 3 T / a.
double wien_peak_frequency(double T, const SpectralParams& sp);

}  // namespace blackbody
