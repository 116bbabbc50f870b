#include "blackbody/integrals.hpp"

#include "blackbody/constants.hpp"
#include "blackbody/spectral.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace {

using namespace blackbody;

constexpr double kC = 2.99792458e8;
constexpr double kH = 6.62607015e-34;
constexpr double kK = 1.380649e-23;
const SpectralParams kSp = SpectralParams::from_hk(kH, kK);

constexpr double kPi4Over15 = 6.493939402266829;  // zeta(4) Gamma(4)

}  // namespace

TEST_SUITE("integrals") {

TEST_CASE("reduced integral of x^3/(e^x - 1)") {
    const auto qr = reduced_bose_integral();
    CHECK(qr.value == doctest::Approx(kPi4Over15).epsilon(1e-8));
    CHECK_FALSE(qr.divergent);
    CHECK(qr.evaluations >= 15);
    CHECK(qr.est_error > 0.0);
    CHECK(qr.est_error < 1e-10);
    CHECK(std::abs(qr.value - kPi4Over15) <= qr.est_error);
    SUBCASE("a fixed-grid rule agrees") {
        const double simpson = oracles::simpson(bose_integrand, 0.0, 50.0, 100000);
        CHECK(qr.value == doctest::Approx(simpson).epsilon(1e-10));
    }
    SUBCASE("the truncation tail at 50 is certified below 1e-16") {
        // Gamma(4,50)/(1 - e^-50) = 2.56e-17 exactly; one order of slack
        // keeps the certificate honest without overselling it.
        const double tail = 132806.0 * std::exp(-50.0) / (1.0 - std::exp(-50.0));
        CHECK(tail < 1e-16);
        CHECK(tail > 1e-17);
        CHECK(qr.est_error >= tail);
    }
}

TEST_CASE("bose integrand endpoints") {
    CHECK(bose_integrand(0.0) == 0.0);
    CHECK(bose_integrand(1e-8) == doctest::Approx(1e-16).epsilon(1e-7));  // ~x^2 at 0
    CHECK(bose_integrand(800.0) == 0.0);  // e^x overflows, limit is 0
    CHECK_THROWS_AS(bose_integrand(-1.0), std::domain_error);
}

TEST_CASE("planck energy density is sigma_u T^4") {
    const PhysicalConstants pc{kC, 6.67430e-11, 8.314462618, 9.648533212e4, kH, kK};
    const double sigma_u = derive_constants(pc).sigma_u;
    const double T = 300.0;
    const auto qr = total_energy_density(T, RadiationLaw::planck, kSp, kC);
    CHECK(qr.value == doctest::Approx(sigma_u * T * T * T * T).epsilon(1e-8));
    CHECK_FALSE(qr.divergent);
    SUBCASE("direct frequency-space integration lands on the same number") {
        const double nu_hi = 50.0 * T / kSp.a;
        const double direct = oracles::simpson(
            [&](double nu) { return nu == 0.0 ? 0.0 : planck_u(T, nu, kSp, kC); }, 0.0,
            nu_hi, 200000);
        CHECK(qr.value == doctest::Approx(direct).epsilon(1e-8));
    }
    SUBCASE("doubling T multiplies U by 16") {
        const auto qr2 = total_energy_density(2.0 * T, RadiationLaw::planck, kSp, kC);
        CHECK(qr2.value / qr.value == doctest::Approx(16.0).epsilon(1e-9));
    }
}

TEST_CASE("wien energy density matches its closed form") {
    const double T = 1234.0;
    const auto qr = total_energy_density(T, RadiationLaw::wien, kSp, kC);
    const double scale = T / kSp.a;
    const double closed =
        6.0 * 8.0 * std::numbers::pi * kSp.b / (kC * kC * kC) * scale * scale * scale * scale;
    CHECK(qr.value == doctest::Approx(closed).epsilon(1e-9));
    CHECK(qr.value < total_energy_density(T, RadiationLaw::planck, kSp, kC).value);
}

TEST_CASE("T^4 law as a log-log slope") {
    std::vector<double> logT, logU_planck, logU_wien;
    for (int i = 0; i < 8; ++i) {
        const double T = 100.0 * std::pow(30.0, i / 7.0);  // 100..3000 K
        logT.push_back(std::log(T));
        logU_planck.push_back(
            std::log(total_energy_density(T, RadiationLaw::planck, kSp, kC).value));
        logU_wien.push_back(
            std::log(total_energy_density(T, RadiationLaw::wien, kSp, kC).value));
    }
    CHECK(std::abs(oracles::regression_slope(logT, logU_planck) - 4.0) < 1e-6);
    CHECK(std::abs(oracles::regression_slope(logT, logU_wien) - 4.0) < 1e-6);
}

TEST_CASE("rayleigh-jeans diverges in the cutoff") {
    const double T = 1700.0, nu0 = 1e13;
    const auto u1 = total_energy_density(T, RadiationLaw::rayleigh_jeans, kSp, kC, nu0);
    const auto u2 = total_energy_density(T, RadiationLaw::rayleigh_jeans, kSp, kC, 2.0 * nu0);
    const auto u4 = total_energy_density(T, RadiationLaw::rayleigh_jeans, kSp, kC, 4.0 * nu0);
    CHECK(u2.value / u1.value == doctest::Approx(8.0).epsilon(1e-10));
    CHECK(u4.value / u1.value == doctest::Approx(64.0).epsilon(1e-10));
    CHECK(u1.divergent);
    CHECK(u2.divergent);
    SUBCASE("closed form (8 pi k T / 3 c^3) nu0^3") {
        const double closed =
            8.0 * std::numbers::pi * kK * T / (3.0 * kC * kC * kC) * nu0 * nu0 * nu0;
        CHECK(u1.value == doctest::Approx(closed).epsilon(1e-10));
    }
    SUBCASE("refuses to integrate to infinity") {
        CHECK_THROWS_AS(total_energy_density(T, RadiationLaw::rayleigh_jeans, kSp, kC),
                        std::invalid_argument);
    }
}

TEST_CASE("cutoffs truncate the convergent laws too") {
    const double T = 500.0;
    const double full = total_energy_density(T, RadiationLaw::planck, kSp, kC).value;
    const double nu_c = 1.0 * T / kSp.a;  // x cutoff at 1
    const auto part = total_energy_density(T, RadiationLaw::planck, kSp, kC, nu_c);
    CHECK(part.value < full);
    CHECK_FALSE(part.divergent);
    const double scale = T / kSp.a;
    const double amp =
        8.0 * std::numbers::pi * kSp.b / (kC * kC * kC) * scale * scale * scale * scale;
    const double partial = oracles::simpson(bose_integrand, 0.0, 1.0, 20000);
    CHECK(part.value == doctest::Approx(amp * partial).epsilon(1e-10));
    SUBCASE("a cutoff past the truncation point changes nothing") {
        const auto far = total_energy_density(T, RadiationLaw::planck, kSp, kC, 1e3 * scale);
        CHECK(far.value == full);
    }
}

TEST_CASE("peak of the reduced planck integrand") {
    const double x_star = planck_peak_x();
    CHECK(std::abs(x_star - 2.8214393721220789) < 1e-12);
    CHECK(std::abs(x_star - 2.8214394) < 1e-6);
    CHECK(std::abs(x_star - 3.0 * (1.0 - std::exp(-x_star))) < 1e-12);
    SUBCASE("derivative-free extremizer agrees to 1e-9") {
        const double golden = oracles::golden_max_refined(bose_integrand, 2.0, 3.0);
        CHECK(std::abs(golden - x_star) < 1e-9);
    }
}

TEST_CASE("displacement law") {
    const double T = 1700.0;
    SUBCASE("peak frequency is linear in T") {
        CHECK(peak_frequency(2.0 * T, kSp) ==
              doctest::Approx(2.0 * peak_frequency(T, kSp)).epsilon(1e-10));
    }
    SUBCASE("nu_max/T constant over three decades, against a nu-space extremizer") {
        double first_ratio = 0.0;
        for (double temp : {5.0, 50.0, 500.0, 5000.0}) {
            const double ratio = peak_frequency(temp, kSp) / temp;
            if (first_ratio == 0.0)
                first_ratio = ratio;
            else
                CHECK(ratio == doctest::Approx(first_ratio).epsilon(1e-9));
            const double center = planck_peak_x() * temp / kSp.a;
            const double golden = oracles::golden_max_refined(
                [&](double nu) { return planck_u(temp, nu, kSp, kC); }, 0.7 * center,
                1.4 * center);
            CHECK(golden == doctest::Approx(peak_frequency(temp, kSp)).epsilon(1e-9));
        }
    }
    SUBCASE("wien law peaks at exactly x = 3") {
        CHECK(wien_peak_frequency(T, kSp) == 3.0 * T / kSp.a);
        const double golden = oracles::golden_max_refined(
            [](double x) { return x * x * x * std::exp(-x); }, 2.0, 4.0);
        CHECK(golden == doctest::Approx(3.0).epsilon(1e-9));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(total_energy_density(0.0, RadiationLaw::planck, kSp, kC),
                    std::domain_error);
    CHECK_THROWS_AS(total_energy_density(300.0, RadiationLaw::planck, kSp, kC, -1.0),
                    std::domain_error);
    CHECK_THROWS_AS(peak_frequency(-5.0, kSp), std::domain_error);
    CHECK_THROWS_AS(wien_peak_frequency(0.0, kSp), std::domain_error);
}

}  // TEST_SUITE
