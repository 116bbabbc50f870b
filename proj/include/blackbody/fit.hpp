#pragma once

#include "blackbody/spectral.hpp"
#include "blackbody/spectrum_table.hpp"

#include <optional>

namespace blackbody {

struct FitOptions {
    /// Starting point; when absent, a and b are read off the Wien-regime
    /// rows (slope and intercept of ln u - 3 ln nu against nu/T).
    std::optional<SpectralParams> init;

    /// Fit a free scale factor instead of b (b stays at its initial value).
    /// Absorbs calibration constants of ingested data; with a caller-given
    /// init, the recovered a and a/b are then invariant under rescaling all
    /// u by a common factor. Off by default: then b itself is fitted and a
    /// common factor in u lands in b.
    bool free_amplitude = false;

    int max_iterations = 200;
    double step_tol = 1e-12;  ///< relative; parameters live in log space
};

struct FitResult {
    double a = 0.0;          ///< K s
    double b = 0.0;          ///< J s
    double amplitude = 1.0;  ///< multiplies the model; 1 unless free_amplitude
    double residual_rms = 0.0;  ///< rms log-residual, ~relative misfit
    int iterations = 0;
    bool converged = false;
};

/// Least squares on log residuals ln(model) - ln(u) over the table rows
/// (the spectrum spans too many decades for linear residuals), minimized by
/// damped Gauss-Newton steps; damping shrinks on accepted steps and grows
/// on rejected ones. Converged means the relative step fell below step_tol
/// before max_iterations. Requires at least two rows with distinct nu/T and
/// strictly positive u.
FitResult fit_ab(const SpectrumTable& table, double c, const FitOptions& opts = {});

/// N = (a/b) R. Throws if the fit did not converge.
double avogadro_from_ab(const FitResult& fit, double R);

/// e = F/N.
double elementary_charge_from_N(double N, double F);

/// The 1900 Avogadro number obtained from radiation measurements; shown
/// next to fitted values for comparison, never used as an input.
inline constexpr double kHistoricalAvogadro = 6.17e23;

}  // namespace blackbody
