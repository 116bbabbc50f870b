#include "blackbody/constants.hpp"

#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace {

using namespace blackbody;

const PhysicalConstants kModern{2.99792458e8, 6.67430e-11, 8.314462618,
                                9.648533212e4, 6.62607015e-34, 1.380649e-23};

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("bundled reference file matches the modern values") {
    const auto pc = load_constants(std::filesystem::path(BLACKBODY_DATA_DIR) /
                                   "reference_constants.txt");
    CHECK(pc.c == kModern.c);
    CHECK(pc.G == kModern.G);
    CHECK(pc.R == kModern.R);
    CHECK(pc.F == kModern.F);
    CHECK(pc.h == kModern.h);
    CHECK(pc.k == kModern.k);
}

TEST_CASE("derived constants and their exact relations") {
    const auto d = derive_constants(kModern);
    CHECK(d.N == doctest::Approx(6.02214076e23).epsilon(1e-9));
    CHECK(d.e == doctest::Approx(1.602176634e-19).epsilon(1e-9));
    CHECK(d.sigma_u == doctest::Approx(7.56573325e-16).epsilon(1e-8));
    // N and e are defined through R and F, so these hold to rounding.
    CHECK(d.N * kModern.k == doctest::Approx(kModern.R).epsilon(1e-14));
    CHECK(d.e * d.N == doctest::Approx(kModern.F).epsilon(1e-14));
}

TEST_CASE("k is the only input that moves N") {
    const auto base = derive_constants(kModern);
    auto pc = kModern;
    pc.k *= 2.0;
    const auto d = derive_constants(pc);
    CHECK(d.N == doctest::Approx(0.5 * base.N).epsilon(1e-12));
    CHECK(d.e == doctest::Approx(2.0 * base.e).epsilon(1e-12));
}

TEST_CASE("the 1900 Avogadro number implies the 1900 charge") {
    // N = 6.17e23 was the radiation-theoretic value; F/N then gives a charge
    // a few percent below the modern one.
    const double e_1900 = kModern.F / 6.17e23;
    CHECK(e_1900 == doctest::Approx(1.56378172e-19).epsilon(1e-8));
    CHECK(e_1900 < 1.602176634e-19);
}

TEST_CASE("h-based natural units") {
    const auto u = planck_units(kModern);
    CHECK(u.length == doctest::Approx(4.05135054e-35).epsilon(1e-8));
    CHECK(u.time == doctest::Approx(1.35138508e-43).epsilon(1e-8));
    CHECK(u.mass == doctest::Approx(5.45551186e-8).epsilon(1e-8));
    CHECK(u.temperature == doctest::Approx(3.55135124e32).epsilon(1e-8));
    CHECK(u.time == u.length / kModern.c);  // definitional, exact in FP
    // length^2 c^3 / G recovers h.
    CHECK(u.length * u.length * std::pow(kModern.c, 3) / kModern.G ==
          doctest::Approx(kModern.h).epsilon(1e-12));
}

TEST_CASE("unit scaling under a changed G") {
    auto pc = kModern;
    pc.G *= 4.0;
    const auto base = planck_units(kModern);
    const auto scaled = planck_units(pc);
    CHECK(scaled.mass == doctest::Approx(0.5 * base.mass).epsilon(1e-12));
    CHECK(scaled.length == doctest::Approx(2.0 * base.length).epsilon(1e-12));
    CHECK(scaled.temperature == doctest::Approx(0.5 * base.temperature).epsilon(1e-12));
}

TEST_CASE("ab parameterization agrees with the hk one") {
    const auto direct = planck_units(kModern);
    const auto via_ab =
        planck_units_ab(kModern.h / kModern.k, kModern.h, kModern.c, kModern.G);
    CHECK(via_ab.length == doctest::Approx(direct.length).epsilon(1e-12));
    CHECK(via_ab.time == doctest::Approx(direct.time).epsilon(1e-12));
    CHECK(via_ab.mass == doctest::Approx(direct.mass).epsilon(1e-12));
    CHECK(via_ab.temperature == doctest::Approx(direct.temperature).epsilon(1e-12));
}

TEST_CASE("constants file parsing") {
    const auto path = write_temp("bb_test_constants_ok.txt",
                                 "# comment line\n"
                                 "h = 6.55e-34   # trailing comment\n"
                                 "\n"
                                 "k = 1.346e-23\n");
    SUBCASE("partial file merges over defaults") {
        const auto pc = load_constants(path, kModern);
        CHECK(pc.h == 6.55e-34);
        CHECK(pc.k == 1.346e-23);
        CHECK(pc.c == kModern.c);
        CHECK(pc.R == kModern.R);
    }
    SUBCASE("complete loader rejects the partial file") {
        CHECK_THROWS_AS(load_constants(path), std::runtime_error);
    }
    std::filesystem::remove(path);
}

TEST_CASE("parser rejects malformed input") {
    SUBCASE("unknown key") {
        const auto path = write_temp("bb_test_constants_bad1.txt", "hbar = 1.05e-34\n");
        CHECK_THROWS_AS(parse_constants_file(path), std::runtime_error);
        std::filesystem::remove(path);
    }
    SUBCASE("no key = value shape") {
        const auto path = write_temp("bb_test_constants_bad2.txt", "just words\n");
        CHECK_THROWS_AS(parse_constants_file(path), std::runtime_error);
        std::filesystem::remove(path);
    }
    SUBCASE("junk number") {
        const auto path = write_temp("bb_test_constants_bad3.txt", "h = fast\n");
        CHECK_THROWS_AS(parse_constants_file(path), std::runtime_error);
        std::filesystem::remove(path);
    }
    SUBCASE("non-positive value") {
        const auto path = write_temp("bb_test_constants_bad4.txt", "h = -1e-34\n");
        CHECK_THROWS_AS(load_constants(path, kModern), std::domain_error);
        std::filesystem::remove(path);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(parse_constants_file("/nonexistent/path/constants.txt"),
                        std::runtime_error);
    }
}

TEST_CASE("validate rejects non-positive fields") {
    auto pc = kModern;
    pc.h = 0.0;
    CHECK_THROWS_AS(pc.validate(), std::domain_error);
    pc = kModern;
    pc.k = -1.0;
    CHECK_THROWS_AS(derive_constants(pc), std::domain_error);
}

}  // TEST_SUITE
