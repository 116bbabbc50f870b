#include "blackbody/constants.hpp"
#include "blackbody/counting.hpp"
#include "blackbody/fit.hpp"
#include "blackbody/format.hpp"
#include "blackbody/integrals.hpp"
#include "blackbody/montecarlo.hpp"
#include "blackbody/spectral.hpp"
#include "blackbody/spectrum_table.hpp"
#include "blackbody/thermo.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace blackbody;

std::vector<double> geometric_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo)) throw std::domain_error("need 0 < nu-min < nu-max");
    if (points < 1) throw std::domain_error("points must be >= 1");
    std::vector<double> grid;
    grid.reserve(points);
    if (points == 1) {
        grid.push_back(lo);
        return grid;
    }
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i) grid.push_back(lo * std::exp(step * i));
    grid.back() = hi;  // land exactly on the endpoint
    return grid;
}

const char* regime_label(double x) {
    if (x >= 25.0) return "wien";
    if (x <= 1e-4) return "rayleigh_jeans";
    return "intermediate";
}

void cmd_spectrum(std::ostream& os, const PhysicalConstants& pc, double T, double nu_min,
                  double nu_max, int points) {
    const auto sp = SpectralParams::from_hk(pc.h, pc.k);
    if (nu_min <= 0.0) nu_min = 0.01 * peak_frequency(T, sp);
    if (nu_max <= 0.0) nu_max = 10.0 * peak_frequency(T, sp);
    os << "nu_hz,u_wien,u_rj,u_planck,u_planck_zeropoint\n";
    for (const double nu : geometric_grid(nu_min, nu_max, points)) {
        os << format_sci(nu) << ',' << format_sci(wien_u(T, nu, sp, pc.c)) << ','
           << format_sci(rayleigh_jeans_u(T, nu, pc.k, pc.c)) << ','
           << format_sci(planck_u(T, nu, sp, pc.c)) << ','
           << format_sci(zero_point_variant(T, nu, sp, pc.c)) << '\n';
    }
}

void cmd_derive(std::ostream& os, const PhysicalConstants& pc, double T, double nu) {
    const auto sp = SpectralParams::from_hk(pc.h, pc.k);
    const double eps_q = pc.h * nu;
    const double E = energy_from_temperature(T, nu, pc.h, pc.k);
    const double u_bridge = bridge_u_from_E(E, nu, pc.c);
    const double u_direct = planck_u(T, nu, sp, pc.c);
    const double x = sp.a * nu / T;
    os << "T_K = " << format_sci(T) << '\n';
    os << "nu_hz = " << format_sci(nu) << '\n';
    os << "x = " << format_sci(x) << " (" << regime_label(x) << ")\n";
    os << "epsilon_J = " << format_sci(eps_q) << '\n';
    os << "E_J = " << format_sci(E) << '\n';
    os << "S_J_per_K = " << format_sci(entropy_per_oscillator(E, eps_q, pc.k)) << '\n';
    os << "dS_dE_per_K = " << format_sci(dS_dE(E, eps_q, pc.k)) << '\n';
    os << "inv_T_per_K = " << format_sci(1.0 / T) << '\n';
    os << "u_bridge = " << format_sci(u_bridge) << '\n';
    os << "u_planck = " << format_sci(u_direct) << '\n';
    os << "rel_diff = " << format_sci(std::abs(u_bridge - u_direct) / u_direct) << '\n';
}

void cmd_count(std::ostream& os, const PhysicalConstants& pc, std::uint64_t n, std::uint64_t p) {
    const MicrostateCount mc = count_microstates(n, p);
    os << "n = " << n << '\n';
    os << "p = " << p << '\n';
    os << "W = " << mc.count.str() << '\n';
    os << "ln_W = " << format_sci(mc.log_count) << '\n';
    os << "S_J_per_K = " << format_sci(boltzmann_entropy_ln(mc.log_count, pc.k)) << '\n';
}

void cmd_simulate(std::ostream& os, const SimConfig& cfg, unsigned shards) {
    const SimResult res = shards > 1 ? run_simulation(cfg, shards) : run_simulation(cfg);
    os << "# n = " << cfg.n << ", p = " << cfg.p << ", samples = " << cfg.samples
       << ", seed = " << cfg.seed << ", shards = " << shards << '\n';
    os << "# mean_occupancy = " << format_sci(res.mean_occupancy) << " (p/n = "
       << format_sci(static_cast<double>(cfg.p) / static_cast<double>(cfg.n)) << ")\n";
    os << "# entropy_estimate_nats = " << format_sci(res.entropy_estimate) << '\n';
    os << "# entropy_limit_nats = " << format_sci(res.entropy_exact_limit) << '\n';
    write_histogram_csv(os, cfg, res.histogram);
}

int cmd_fit(std::ostream& os, const PhysicalConstants& pc, const std::string& in_path,
            std::optional<double> init_a, std::optional<double> init_b, bool free_amplitude) {
    const SpectrumTable table = load_spectrum_csv(in_path);
    FitOptions opts;
    if (init_a.has_value() != init_b.has_value())
        throw std::invalid_argument("--init-a and --init-b must be given together");
    if (init_a) opts.init = SpectralParams{*init_a, *init_b};
    opts.free_amplitude = free_amplitude;
    const FitResult fit = fit_ab(table, pc.c, opts);
    os << "rows = " << table.rows.size() << '\n';
    os << "a_Ks = " << format_sci(fit.a) << '\n';
    os << "b_Js = " << format_sci(fit.b) << '\n';
    os << "amplitude = " << format_sci(fit.amplitude) << '\n';
    os << "residual_rms = " << format_sci(fit.residual_rms) << '\n';
    os << "iterations = " << fit.iterations << '\n';
    os << "converged = " << (fit.converged ? "yes" : "no") << '\n';
    if (!fit.converged) {
        std::cerr << "error: fit did not converge on " << in_path << "\n";
        return 1;
    }
    const double N = avogadro_from_ab(fit, pc.R);
    const double e = elementary_charge_from_N(N, pc.F);
    os << "N_per_mol = " << format_sci(N) << '\n';
    os << "e_C = " << format_sci(e) << '\n';
    os << "N_1900_per_mol = " << format_sci(kHistoricalAvogadro) << '\n';
    os << "N_vs_1900_rel = "
       << format_sci(std::abs(N - kHistoricalAvogadro) / kHistoricalAvogadro) << '\n';
    os << "e_1900_C = " << format_sci(elementary_charge_from_N(kHistoricalAvogadro, pc.F))
       << '\n';
    return 0;
}

void cmd_units(std::ostream& os, const PhysicalConstants& pc) {
    const PlanckUnits pu = planck_units(pc);
    const DerivedConstants dc = derive_constants(pc);
    os << "planck_length_m = " << format_sci(pu.length) << '\n';
    os << "planck_time_s = " << format_sci(pu.time) << '\n';
    os << "planck_mass_kg = " << format_sci(pu.mass) << '\n';
    os << "planck_temperature_K = " << format_sci(pu.temperature) << '\n';
    os << "N_per_mol = " << format_sci(dc.N) << '\n';
    os << "e_C = " << format_sci(dc.e) << '\n';
    os << "sigma_u_J_m3K4 = " << format_sci(dc.sigma_u) << '\n';
}

void cmd_sigma(std::ostream& os, const PhysicalConstants& pc, double T, double cutoff0) {
    const auto sp = SpectralParams::from_hk(pc.h, pc.k);
    const QuadratureResult reduced = reduced_bose_integral();
    const double closed = std::pow(std::numbers::pi, 4) / 15.0;
    os << "reduced_bose_integral = " << format_sci(reduced.value) << '\n';
    os << "pi4_over_15 = " << format_sci(closed) << '\n';
    os << "est_error = " << format_sci(reduced.est_error) << '\n';
    os << "evaluations = " << reduced.evaluations << '\n';
    const QuadratureResult U = total_energy_density(T, RadiationLaw::planck, sp, pc.c);
    os << "T_K = " << format_sci(T) << '\n';
    os << "U_J_m3 = " << format_sci(U.value) << '\n';
    os << "sigma_u_quadrature = " << format_sci(U.value / (T * T * T * T)) << '\n';
    os << "sigma_u_closed_form = " << format_sci(derive_constants(pc).sigma_u) << '\n';
    os << "# rayleigh_jeans grows as cutoff^3; the integral has no finite limit\n";
    os << "cutoff_hz,U_rj_J_m3,ratio_to_first\n";
    double first = 0.0;
    for (const double mult : {1.0, 2.0, 4.0}) {
        const QuadratureResult rj =
            total_energy_density(T, RadiationLaw::rayleigh_jeans, sp, pc.c, cutoff0 * mult);
        if (first == 0.0) first = rj.value;
        os << format_sci(cutoff0 * mult) << ',' << format_sci(rj.value) << ','
           << format_sci(rj.value / first) << '\n';
    }
}

void cmd_peak(std::ostream& os, const PhysicalConstants& pc, double T) {
    const auto sp = SpectralParams::from_hk(pc.h, pc.k);
    os << "x_star = " << format_sci(planck_peak_x()) << '\n';
    os << "peak_frequency_hz = " << format_sci(peak_frequency(T, sp)) << '\n';
    os << "nu_max_over_T = " << format_sci(peak_frequency(T, sp) / T) << '\n';
    os << "wien_peak_frequency_hz = " << format_sci(wien_peak_frequency(T, sp)) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"blackbody: radiation laws, oscillator statistics, and constants from spectra"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string constants_path = BLACKBODY_DEFAULT_CONSTANTS;
    std::uint64_t seed = 42;
    std::string out_path;
    app.add_option("--constants", constants_path, "constants file (key = value lines)")
        ->capture_default_str();
    app.add_option("--seed", seed, "RNG seed for stochastic subcommands")->capture_default_str();
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "tabulate the radiation laws on a nu grid");
    double sp_T = 1700.0, sp_nu_min = 0.0, sp_nu_max = 0.0;
    int sp_points = 50;
    spectrum->add_option("--T", sp_T, "temperature in K")->capture_default_str();
    spectrum->add_option("--nu-min", sp_nu_min, "grid start in Hz (default: peak/100)");
    spectrum->add_option("--nu-max", sp_nu_max, "grid end in Hz (default: 10*peak)");
    spectrum->add_option("--points", sp_points, "geometric grid size")->capture_default_str();

    // derive
    auto* derive = app.add_subcommand("derive", "entropy -> temperature -> spectrum chain at one point");
    double dv_T = 1700.0, dv_nu = 1e14;
    derive->add_option("--T", dv_T, "temperature in K")->capture_default_str();
    derive->add_option("--nu", dv_nu, "frequency in Hz")->capture_default_str();

    // count
    auto* count = app.add_subcommand("count", "microstates of p quanta over n oscillators");
    std::uint64_t ct_n = 2, ct_p = 2;
    count->add_option("--n", ct_n, "oscillators")->capture_default_str();
    count->add_option("--p", ct_p, "quanta")->capture_default_str();

    // simulate
    auto* simulate = app.add_subcommand("simulate", "sample microstates, histogram occupancy");
    std::uint64_t sm_n = 5, sm_p = 5, sm_samples = 100000;
    unsigned sm_shards = 1;
    simulate->add_option("--n", sm_n, "oscillators")->capture_default_str();
    simulate->add_option("--p", sm_p, "quanta")->capture_default_str();
    simulate->add_option("--samples", sm_samples, "sample count")->capture_default_str();
    simulate->add_option("--shards", sm_shards, "independent sub-streams")->capture_default_str();

    // fit
    auto* fit = app.add_subcommand("fit", "fit (a,b) to a spectrum CSV, derive N and e");
    std::string ft_in;
    std::optional<double> ft_init_a, ft_init_b;
    bool ft_free_amplitude = false;
    fit->add_option("--in", ft_in, "input CSV (nu_hz,T_K,u_J_per_m3Hz)")->required();
    fit->add_option("--init-a", ft_init_a, "starting a in K s");
    fit->add_option("--init-b", ft_init_b, "starting b in J s");
    fit->add_flag("--free-amplitude", ft_free_amplitude,
                  "fit a scale factor, keep b at --init-b");

    // units
    app.add_subcommand("units", "natural units and derived constants");

    // sigma
    auto* sigma = app.add_subcommand("sigma", "total energy density and the cutoff demonstration");
    double sg_T = 300.0, sg_cutoff = 1e13;
    sigma->add_option("--T", sg_T, "temperature in K")->capture_default_str();
    sigma->add_option("--cutoff", sg_cutoff, "base rayleigh_jeans cutoff in Hz")
        ->capture_default_str();

    // peak
    auto* peak = app.add_subcommand("peak", "frequency of maximal energy density");
    double pk_T = 1700.0;
    peak->add_option("--T", pk_T, "temperature in K")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // 0: --help and friends; otherwise usage error
    }

    try {
        const PhysicalConstants pc = load_constants(constants_path);
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw std::runtime_error("cannot open " + out_path + " for writing");
            os = &file;
        }
        *os << "# constants: " << constants_path << '\n';

        if (spectrum->parsed()) cmd_spectrum(*os, pc, sp_T, sp_nu_min, sp_nu_max, sp_points);
        if (derive->parsed()) cmd_derive(*os, pc, dv_T, dv_nu);
        if (count->parsed()) cmd_count(*os, pc, ct_n, ct_p);
        if (simulate->parsed()) cmd_simulate(*os, SimConfig{sm_n, sm_p, sm_samples, seed}, sm_shards);
        if (fit->parsed()) {
            const int rc = cmd_fit(*os, pc, ft_in, ft_init_a, ft_init_b, ft_free_amplitude);
            if (rc != 0) return rc;
        }
        if (app.get_subcommand("units")->parsed()) cmd_units(*os, pc);
        if (sigma->parsed()) cmd_sigma(*os, pc, sg_T, sg_cutoff);
        if (peak->parsed()) cmd_peak(*os, pc, pk_T);

        os->flush();
        if (!*os) throw std::runtime_error("write failed" +
                                           (out_path.empty() ? "" : ": " + out_path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
