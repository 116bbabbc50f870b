#include "blackbody/integrals.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace blackbody {

namespace {

constexpr double kReducedUpper = 50.0;

// Gamma(4, 50) = (x^3 + 3x^2 + 6x + 6) e^-x at x = 50: the exact tail of
// the Wien integral. The Bose tail is larger by at most 1/(1 - e^-50).
double wien_tail_bound() { return 132806.0 * std::exp(-kReducedUpper); }
double bose_tail_bound() { return wien_tail_bound() / (1.0 - std::exp(-kReducedUpper)); }

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::domain_error(std::string(name) + " must be finite and > 0");
}

template <class F>
QuadratureResult integrate_counted(const F& f, double lo, double hi) {
    std::int64_t evals = 0;
    auto counted = [&](double x) {
        ++evals;
        return f(x);
    };
    double err = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        counted, lo, hi, 15, 1e-12, &err);
    return {value, err, evals, false};
}

}  // namespace

double bose_integrand(double x) {
    if (x < 0.0) throw std::domain_error("x must be >= 0");
    if (x == 0.0) return 0.0;
    return x * x * x / std::expm1(x);
}

QuadratureResult reduced_bose_integral() {
    QuadratureResult qr = integrate_counted(bose_integrand, 0.0, kReducedUpper);
    qr.est_error += bose_tail_bound();
    return qr;
}

QuadratureResult total_energy_density(double T, RadiationLaw law, const SpectralParams& sp,
                                      double c, std::optional<double> cutoff) {
    require_positive(T, "T");
    require_positive(sp.a, "a");
    require_positive(sp.b, "b");
    require_positive(c, "c");
    if (cutoff) require_positive(*cutoff, "cutoff");

    if (law == RadiationLaw::rayleigh_jeans) {
        if (!cutoff)
            throw std::invalid_argument(
                "rayleigh_jeans energy density diverges; pass a frequency cutoff");
        const double k = sp.k();
        QuadratureResult qr = integrate_counted(
            [&](double nu) { return rayleigh_jeans_u(T, nu, k, c); }, 0.0, *cutoff);
        qr.divergent = true;
        return qr;
    }

    // substitute x = a nu / T: u dnu = amp * f(x) dx with f the reduced integrand
    const double scale = T / sp.a;
    const double amp =
        8.0 * std::numbers::pi * sp.b / (c * c * c) * scale * scale * scale * scale;

    double upper = kReducedUpper;
    bool open_tail = true;
    if (cutoff) {
        const double xc = sp.a * *cutoff / T;
        if (xc < kReducedUpper) {
            upper = xc;
            open_tail = false;
        }
    }

    QuadratureResult qr =
        law == RadiationLaw::planck
            ? integrate_counted(bose_integrand, 0.0, upper)
            : integrate_counted([](double x) { return x * x * x * std::exp(-x); }, 0.0, upper);
    qr.value *= amp;
    qr.est_error *= amp;
    if (open_tail)
        qr.est_error +=
            amp * (law == RadiationLaw::planck ? bose_tail_bound() : wien_tail_bound());
    return qr;
}

double planck_peak_x() {
    static const double x_star = [] {
        // x = 3(1 - e^-x) has one root in [2,3]; the objective is monotone there
        double lo = 2.0, hi = 3.0;
        while (hi - lo > 1e-13) {
            const double mid = 0.5 * (lo + hi);
            (mid < 3.0 * (1.0 - std::exp(-mid)) ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return x_star;
}

double peak_frequency(double T, const SpectralParams& sp) {
    require_positive(T, "T");
    require_positive(sp.a, "a");
    return planck_peak_x() * T / sp.a;
}

double wien_peak_frequency(double T, const SpectralParams& sp) {
    require_positive(T, "T");
    require_positive(sp.a, "a");
    return 3.0 * T / sp.a;
}

}  // namespace blackbody
