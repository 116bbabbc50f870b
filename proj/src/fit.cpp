#include "blackbody/fit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace blackbody {

namespace {

// ln(e^x - 1) without overflow or cancellation anywhere on x > 0.
double ln_em1(double x) {
    return x <= 30.0 ? std::log(std::expm1(x)) : x + std::log1p(-std::exp(-x));
}

// x e^x / (e^x - 1) = x / (1 - e^-x): d ln(e^x - 1) / d ln x times ... the
// log-residual sensitivity to ln a. Stable down to denormal x.
double dlnem1_dlna(double x) {
    if (x == 0.0) return 1.0;
    return x / -std::expm1(-x);
}

struct Row {
    double s;       // nu / T
    double base;    // ln(8 pi / c^3) + 3 ln nu
    double ln_obs;  // ln u
};

struct Evaluation {
    double cost;
    Eigen::Vector2d g;  // J^T r
    Eigen::Matrix2d H;  // J^T J
};

// theta = (ln a, ln B): r_i = theta_B + base_i - ln(e^{a s_i} - 1) - ln u_i
double cost_at(const std::vector<Row>& rows, const Eigen::Vector2d& theta) {
    const double a = std::exp(theta[0]);
    double cost = 0.0;
    for (const auto& row : rows) {
        const double r = theta[1] + row.base - ln_em1(a * row.s) - row.ln_obs;
        cost += r * r;
    }
    return cost;
}

Evaluation evaluate(const std::vector<Row>& rows, const Eigen::Vector2d& theta) {
    const double a = std::exp(theta[0]);
    Evaluation ev{0.0, Eigen::Vector2d::Zero(), Eigen::Matrix2d::Zero()};
    for (const auto& row : rows) {
        const double x = a * row.s;
        const double r = theta[1] + row.base - ln_em1(x) - row.ln_obs;
        const Eigen::Vector2d J(-dlnem1_dlna(x), 1.0);
        ev.cost += r * r;
        ev.g += J * r;
        ev.H += J * J.transpose();
    }
    return ev;
}

// Wien-regime start: on the block with the steepest nu/T reach, Planck is
// nearly b nu^3 (8 pi / c^3) e^{-a nu / T}, so ln u - 3 ln nu is linear in
// nu/T with slope -a and intercept ln(8 pi b / c^3).
SpectralParams wien_initializer(const std::vector<Row>& rows) {
    // locate the run of rows around the globally largest nu/T
    std::size_t top = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].s > rows[top].s) top = i;
    // widen to at least 2 points, preferring neighbors with large s
    std::size_t lo = top;
    std::size_t hi = top + 1;
    while (hi - lo < std::max<std::size_t>(2, rows.size() / 4)) {
        const bool can_lo = lo > 0, can_hi = hi < rows.size();
        if (!can_lo && !can_hi) break;
        if (!can_hi || (can_lo && rows[lo - 1].s > rows[hi].s))
            --lo;
        else
            ++hi;
    }

    double sum_s = 0, sum_y = 0, sum_ss = 0, sum_sy = 0;
    const auto m = static_cast<double>(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) {
        const double y = rows[i].ln_obs - rows[i].base;  // ln u - 3 ln nu - ln(8pi/c^3)
        sum_s += rows[i].s;
        sum_y += y;
        sum_ss += rows[i].s * rows[i].s;
        sum_sy += rows[i].s * y;
    }
    const double denom = m * sum_ss - sum_s * sum_s;
    double a0 = 0.0, lnB0 = 0.0;
    if (denom > 0.0) {
        const double slope = (m * sum_sy - sum_s * sum_y) / denom;
        a0 = -slope;
        lnB0 = (sum_y - slope * sum_s) / m;
    }
    if (!(a0 > 0.0) || !std::isfinite(lnB0)) {
        // degenerate regression (flat or classical-regime data): start at
        // x = 1 for the largest nu/T and match that row's amplitude
        a0 = 1.0 / rows[top].s;
        lnB0 = rows[top].ln_obs - rows[top].base + std::log(std::expm1(1.0));
    }
    return SpectralParams{a0, std::exp(lnB0)};
}

}  // namespace

FitResult fit_ab(const SpectrumTable& table, double c, const FitOptions& opts) {
    table.validate();
    if (!std::isfinite(c) || c <= 0.0) throw std::domain_error("c must be finite and > 0");
    if (table.rows.size() < 2) throw std::invalid_argument("need at least 2 rows to fit");
    if (opts.free_amplitude && !opts.init)
        throw std::invalid_argument("free_amplitude requires an explicit init to freeze b");

    const double ln_geom = std::log(8.0 * std::numbers::pi / (c * c * c));
    std::vector<Row> rows;
    rows.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        if (!(r.u > 0.0))
            throw std::invalid_argument("row " + std::to_string(i + 1) +
                                        ": non-positive u cannot enter a log fit");
        rows.push_back({r.nu / r.T, ln_geom + 3.0 * std::log(r.nu), std::log(r.u)});
    }
    const double s_min = std::min_element(rows.begin(), rows.end(), [](auto& l, auto& r) {
                             return l.s < r.s;
                         })->s;
    const double s_max = std::max_element(rows.begin(), rows.end(), [](auto& l, auto& r) {
                             return l.s < r.s;
                         })->s;
    if (!(s_max > s_min))
        throw std::invalid_argument("all rows share one nu/T; a and b are not separable");

    SpectralParams start{0.0, 0.0};
    if (opts.init) {
        if (!(opts.init->a > 0.0) || !(opts.init->b > 0.0))
            throw std::domain_error("init parameters must be > 0");
        start = *opts.init;
    } else {
        start = wien_initializer(rows);
    }

    Eigen::Vector2d theta(std::log(start.a), std::log(start.b));
    double cost = cost_at(rows, theta);
    double lambda = 1e-3;
    FitResult out;
    while (out.iterations < opts.max_iterations) {
        const Evaluation ev = evaluate(rows, theta);
        bool accepted = false;
        while (lambda <= 1e12) {
            Eigen::Matrix2d damped = ev.H;
            damped(0, 0) *= 1.0 + lambda;
            damped(1, 1) *= 1.0 + lambda;
            const Eigen::Vector2d step = damped.ldlt().solve(-ev.g);
            if (step.cwiseAbs().maxCoeff() < opts.step_tol && lambda <= 1e3) {
                // the near-undamped proposal no longer moves the parameters
                out.converged = true;
                break;
            }
            const Eigen::Vector2d trial = theta + step;
            const double trial_cost = cost_at(rows, trial);
            if (trial_cost < cost) {
                theta = trial;
                cost = trial_cost;
                lambda = std::max(lambda / 3.0, 1e-12);
                accepted = true;
                ++out.iterations;
                break;
            }
            lambda *= 4.0;  // rejected: damp harder, retry from the same theta
        }
        if (out.converged || !accepted) break;  // done, or stalled inside the damping range
    }

    const double a_fit = std::exp(theta[0]);
    const double B_fit = std::exp(theta[1]);  // coefficient carrying b and any scale
    out.a = a_fit;
    if (opts.free_amplitude) {
        out.b = opts.init->b;
        out.amplitude = B_fit / opts.init->b;
    } else {
        out.b = B_fit;
        out.amplitude = 1.0;
    }
    out.residual_rms = std::sqrt(cost / static_cast<double>(rows.size()));
    return out;
}

double avogadro_from_ab(const FitResult& fit, double R) {
    if (!fit.converged) throw std::runtime_error("fit did not converge; refusing to derive N");
    if (!(fit.a > 0.0) || !(fit.b > 0.0)) throw std::domain_error("fit parameters must be > 0");
    if (!std::isfinite(R) || R <= 0.0) throw std::domain_error("R must be finite and > 0");
    return fit.a / fit.b * R;
}

double elementary_charge_from_N(double N, double F) {
    if (!std::isfinite(N) || N <= 0.0) throw std::domain_error("N must be finite and > 0");
    if (!std::isfinite(F) || F <= 0.0) throw std::domain_error("F must be finite and > 0");
    return F / N;
}

}  // namespace blackbody
