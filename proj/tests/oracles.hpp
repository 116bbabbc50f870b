#pragma once

// Test-side numeric oracles. Deliberately independent of the library's own
// evaluation routes: finite differences instead of analytic derivatives,
// golden-section search instead of root finding, plain regression.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Maximizer of a unimodal f on [lo, hi] by golden-section search; tol_rel
/// is relative to the bracket magnitude so frequency-sized arguments work.
inline double golden_max(const std::function<double(double)>& f, double lo, double hi,
                         double tol_rel) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    const double width_target = tol_rel * std::max({std::abs(lo), std::abs(hi), 1.0});
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < 200 && b - a > width_target; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

/// golden_max saturates at the sqrt(eps) comparison floor (~3e-8 relative);
/// a single parabolic vertex through three points around its answer pushes a
/// smooth, noise-free objective to ~1e-10 relative, still derivative-free.
inline double golden_max_refined(const std::function<double(double)>& f, double lo, double hi) {
    const double m = golden_max(f, lo, hi, 1e-5);
    const double s = 5e-6 * std::max({std::abs(lo), std::abs(hi), 1.0});
    const double fa = f(m - s), fm = f(m), fb = f(m + s);
    const double denom = 2.0 * (fa - 2.0 * fm + fb);
    if (denom == 0.0) return m;
    return m + s * (fa - fb) / denom;
}

/// Composite Simpson rule with n panels (n even).
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("simpson needs an even panel count");
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

inline double regression_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("bad regression input");
    const auto m = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace oracles
