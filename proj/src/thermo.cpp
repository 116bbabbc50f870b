#include "blackbody/thermo.hpp"

#include "blackbody/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace blackbody {

namespace {

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::domain_error(std::string(name) + " must be finite and > 0");
}

}  // namespace

double dS_dE(double E, double epsilon, double k) {
    require_positive(E, "E");
    require_positive(epsilon, "epsilon");
    require_positive(k, "k");
    return (k / epsilon) * std::log1p(epsilon / E);
}

double d2S_dE2(double E, double epsilon, double k) {
    require_positive(E, "E");
    require_positive(epsilon, "epsilon");
    require_positive(k, "k");
    return -k / (E * (E + epsilon));
}

EntropyDerivatives entropy_derivatives(double E, double epsilon, double k) {
    return {dS_dE(E, epsilon, k), d2S_dE2(E, epsilon, k)};
}

double energy_from_temperature(double T, double nu, double h, double k) {
    require_positive(h, "h");
    require_positive(k, "k");
    return oscillator_energy(T, nu, SpectralParams::from_hk(h, k));
}

double energy_from_temperature_bisect(double T, double nu, double h, double k) {
    require_positive(T, "T");
    require_positive(nu, "nu");
    require_positive(h, "h");
    require_positive(k, "k");
    const double eps_q = h * nu;
    const double target = 1.0 / T;
    // dS/dE is strictly decreasing; the Wien energy underestimates the root
    // and k T overestimates it, so this bracket always straddles.
    double lo = std::log(0.5 * eps_q) - eps_q / (k * T);
    double hi = std::log(2.0 * k * T);
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (dS_dE(std::exp(mid), eps_q, k) > target ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

double october_interpolation(double alpha, double beta, double T) {
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    require_positive(T, "T");
    return beta / std::expm1(beta / (alpha * T));
}

double wien_entropy(double E, double nu, double a, double b) {
    require_positive(E, "E");
    require_positive(nu, "nu");
    require_positive(a, "a");
    require_positive(b, "b");
    return -(E / (a * nu)) * (std::log(E / (b * nu)) - 1.0);
}

bool scaling_form_check(const std::function<double(double, double)>& S_fn, double E, double nu,
                        double lambda) {
    require_positive(lambda, "lambda");
    const double scaled = S_fn(lambda * E, lambda * nu);
    const double base = S_fn(E, nu);
    const double mag = std::max(std::abs(scaled), std::abs(base));
    return std::abs(scaled - base) <= 1e-10 * mag;
}

}  // namespace blackbody
