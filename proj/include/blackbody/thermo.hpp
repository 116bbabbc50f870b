#pragma once

#include <functional>

namespace blackbody {

/// Derivatives of the per-oscillator entropy at fixed quantum epsilon.
struct EntropyDerivatives {
    double dS_dE;    ///< 1/K; this is the inverse temperature
    double d2S_dE2;  ///< 1/(K J); negative wherever defined (stability)
};

/// (k/epsilon) ln(1 + epsilon/E), the derivative of entropy_per_oscillator.
double dS_dE(double E, double epsilon, double k);

/// -k / (E (E + epsilon)). As epsilon -> 0 at fixed E this degenerates to
/// the Wien-case -k/(const * E) curvature; the epsilon term is exactly the
/// interpolation that turns Wien into the full law.
double d2S_dE2(double E, double epsilon, double k);

EntropyDerivatives entropy_derivatives(double E, double epsilon, double k);

/// E = h nu / (exp(h nu / (k T)) - 1): the unique root of
/// dS_dE(E, epsilon = h nu, k) = 1/T. Shares its evaluation path with
/// oscillator_energy, so feeding the result through bridge_u_from_E
/// reproduces planck_u bit for bit.
double energy_from_temperature(double T, double nu, double h, double k);

/// Same root, found by bisection of dS_dE(E) = 1/T on [E_wien/2, 2 k T]
/// (always a valid bracket). Bisects in ln E because the bracket spans
/// many decades deep in the Wien regime; relative tolerance 1e-12.
/// Kept purely as a cross-check on the closed form.
double energy_from_temperature_bisect(double T, double nu, double h, double k);

/// Integrate d2S/dE2 = -alpha/(E(E+beta)) once to
/// dS/dE = (alpha/beta) ln((E+beta)/E), set that to 1/T, solve:
/// E = beta / (exp(beta/(alpha T)) - 1). With alpha = k, beta = h nu this
/// is energy_from_temperature again.
double october_interpolation(double alpha, double beta, double T);

/// S = -(E/(a nu)) [ln(E/(b nu)) - 1]: the entropy whose dS/dE = 1/T
/// inverts to the Wien law E = b nu exp(-a nu / T). Defined for all E > 0;
/// beyond E = b nu it decreases, which is the formal continuation.
double wien_entropy(double E, double nu, double a, double b);

/// True iff S_fn(lambda E, lambda nu) == S_fn(E, nu) to rel 1e-10, i.e.
/// S depends on E/nu only. This is the displacement-law constraint on the
/// oscillator entropy; it is what forces the quantum to scale with nu.
bool scaling_form_check(const std::function<double(double, double)>& S_fn, double E, double nu,
                        double lambda);

}  // namespace blackbody
