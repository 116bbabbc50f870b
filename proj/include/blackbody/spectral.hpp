#pragma once

namespace blackbody {

/// Parameters of the exponential radiation laws: u has a factor
/// exp(-a nu / T) (Wien) or 1/(exp(a nu / T) - 1) (Planck) with amplitude b.
/// The modern identification is b = h, a = h/k.
struct SpectralParams {
    double a;  ///< K s
    double b;  ///< J s

    /// From (h, k): a = h/k, b = h.
    static SpectralParams from_hk(double h, double k) { return {h / k, h}; }

    /// Boltzmann constant implied by (a, b): k = b/a.
    double k() const { return b / a; }
};

/// One spectral observation: energy density per frequency interval.
struct SpectrumSample {
    double nu;  ///< Hz
    double T;   ///< K
    double u;   ///< J/(m^3 Hz)
};

/// u = (8 pi nu^2 / c^3) * E. The field-oscillator bridge; linear in E.
double bridge_u_from_E(double E, double nu, double c);

/// Mean oscillator energy b nu / (exp(a nu / T) - 1). The denominator is
/// evaluated with expm1 so small a nu / T does not cancel.
double oscillator_energy(double T, double nu, const SpectralParams& sp);

/// Equipartition energy k T (accepts T = 0).
double equipartition_energy(double T, double k);

/// Planck law (8 pi nu^2 / c^3) * b nu / (exp(a nu / T) - 1).
/// Implemented as bridge_u_from_E(oscillator_energy(...)), so the
/// compositional identity holds bit-for-bit.
double planck_u(double T, double nu, const SpectralParams& sp, double c);

/// Wien law (8 pi nu^3 / c^3) * b * exp(-a nu / T).
double wien_u(double T, double nu, const SpectralParams& sp, double c);

/// Rayleigh-Jeans law (8 pi nu^2 / c^3) * k T.
double rayleigh_jeans_u(double T, double nu, double k, double c);

/// Planck law with the additive zero-point term: bridge of
/// oscillator_energy + b nu / 2. Tends to (8 pi nu^2/c^3) b nu/2 as T -> 0.
double zero_point_variant(double T, double nu, const SpectralParams& sp, double c);

}  // namespace blackbody
