#include "blackbody/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blackbody {

namespace {

void check_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::domain_error(std::string(name) + " must be finite and > 0");
}

void check_params(const SpectralParams& sp) {
    check_positive(sp.a, "a");
    check_positive(sp.b, "b");
}

}  // namespace

double bridge_u_from_E(double E, double nu, double c) {
    check_positive(nu, "nu");
    check_positive(c, "c");
    if (!std::isfinite(E) || E < 0.0) throw std::domain_error("E must be finite and >= 0");
    return 8.0 * std::numbers::pi * nu * nu / (c * c * c) * E;
}

double oscillator_energy(double T, double nu, const SpectralParams& sp) {
    check_positive(T, "T");
    check_positive(nu, "nu");
    check_params(sp);
    // expm1 keeps the x -> 0 limit b nu / x = (b/a) T free of cancellation;
    // for large x, expm1 overflows to inf and the energy underflows to 0.
    const double x = sp.a * nu / T;
    return sp.b * nu / std::expm1(x);
}

double equipartition_energy(double T, double k) {
    if (!std::isfinite(T) || T < 0.0) throw std::domain_error("T must be finite and >= 0");
    check_positive(k, "k");
    return k * T;
}

double planck_u(double T, double nu, const SpectralParams& sp, double c) {
    return bridge_u_from_E(oscillator_energy(T, nu, sp), nu, c);
}

double wien_u(double T, double nu, const SpectralParams& sp, double c) {
    check_positive(T, "T");
    check_positive(nu, "nu");
    check_params(sp);
    // e^{-x} written as 1/(expm1(x) + 1): the denominator is >= the one in
    // oscillator_energy and division is monotone, so wien_u <= planck_u holds
    // in floating point for every (T, nu), not only where the true gap e^{-x}
    // clears an ulp.
    const double x = sp.a * nu / T;
    return bridge_u_from_E(sp.b * nu / (std::expm1(x) + 1.0), nu, c);
}

double rayleigh_jeans_u(double T, double nu, double k, double c) {
    check_positive(T, "T");
    return bridge_u_from_E(equipartition_energy(T, k), nu, c);
}

double zero_point_variant(double T, double nu, const SpectralParams& sp, double c) {
    return bridge_u_from_E(oscillator_energy(T, nu, sp) + 0.5 * sp.b * nu, nu, c);
}

}  // namespace blackbody
