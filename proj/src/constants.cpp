#include "blackbody/constants.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace blackbody {

namespace {

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::domain_error(std::string("constant ") + name + " must be finite and > 0");
}

double parse_double(const std::string& tok, const std::string& context) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw std::runtime_error("bad numeric value '" + tok + "' in " + context);
    return v;
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

void PhysicalConstants::validate() const {
    require_positive(c, "c");
    require_positive(G, "G");
    require_positive(R, "R");
    require_positive(F, "F");
    require_positive(h, "h");
    require_positive(k, "k");
}

DerivedConstants derive_constants(const PhysicalConstants& pc) {
    pc.validate();
    DerivedConstants d;
    d.N = pc.R / pc.k;
    d.e = pc.F / d.N;
    const double pi = std::numbers::pi;
    d.sigma_u = 8.0 * std::pow(pi, 5) * std::pow(pc.k, 4) /
                (15.0 * std::pow(pc.c, 3) * std::pow(pc.h, 3));
    return d;
}

PlanckUnits planck_units(const PhysicalConstants& pc) {
    pc.validate();
    PlanckUnits u;
    u.length = std::sqrt(pc.h * pc.G / std::pow(pc.c, 3));
    u.time = u.length / pc.c;
    u.mass = std::sqrt(pc.h * pc.c / pc.G);
    u.temperature = std::sqrt(pc.h * std::pow(pc.c, 5) / pc.G) / pc.k;
    return u;
}

PlanckUnits planck_units_ab(double a, double b, double c, double G) {
    require_positive(a, "a");
    require_positive(b, "b");
    PhysicalConstants pc{c, G, 1.0, 1.0, b, b / a};
    return planck_units(pc);
}

std::map<std::string, double> parse_constants_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open constants file: " + path.string());

    static const std::string known[] = {"c", "G", "R", "F", "h", "k"};
    std::map<std::string, double> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        const std::string where = path.string() + ":" + std::to_string(lineno);
        if (eq == std::string::npos)
            throw std::runtime_error("expected 'key = value' in " + where);
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        bool ok = false;
        for (const auto& kn : known) ok = ok || key == kn;
        if (!ok) throw std::runtime_error("unknown constant '" + key + "' in " + where);
        values[key] = parse_double(val, where);
    }
    return values;
}

PhysicalConstants load_constants(const std::filesystem::path& path,
                                 const PhysicalConstants& defaults) {
    const auto values = parse_constants_file(path);
    auto pick = [&](const char* key, double fallback) {
        const auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    };
    PhysicalConstants pc{pick("c", defaults.c), pick("G", defaults.G), pick("R", defaults.R),
                         pick("F", defaults.F), pick("h", defaults.h), pick("k", defaults.k)};
    pc.validate();
    return pc;
}

PhysicalConstants load_constants(const std::filesystem::path& path) {
    const auto values = parse_constants_file(path);
    for (const char* key : {"c", "G", "R", "F", "h", "k"})
        if (!values.count(key))
            throw std::runtime_error("constants file " + path.string() + " is missing key '" +
                                     key + "'");
    PhysicalConstants pc{values.at("c"), values.at("G"), values.at("R"),
                         values.at("F"), values.at("h"), values.at("k")};
    pc.validate();
    return pc;
}

}  // namespace blackbody
