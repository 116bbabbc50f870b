#include "blackbody/spectrum_table.hpp"

#include "blackbody/format.hpp"
#include "blackbody/rng.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace blackbody {

namespace {

constexpr const char* kHeader = "nu_hz,T_K,u_J_per_m3Hz";

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

}  // namespace

void SpectrumTable::validate() const {
    const SpectrumSample* prev = nullptr;
    for (const auto& row : rows) {
        if (!std::isfinite(row.nu) || row.nu <= 0.0)
            throw std::domain_error("nu must be finite and > 0");
        if (!std::isfinite(row.T) || row.T <= 0.0)
            throw std::domain_error("T must be finite and > 0");
        if (!std::isfinite(row.u)) throw std::domain_error("u must be finite");
        if (prev && prev->T == row.T && !(row.nu > prev->nu))
            throw std::domain_error("nu must increase strictly within a temperature block");
        prev = &row;
    }
}

SpectrumTable synthesize_spectrum(const std::vector<double>& T_list,
                                  const std::vector<double>& nu_grid, const SpectralParams& sp,
                                  double c, double noise_rel, std::uint64_t seed) {
    if (!(noise_rel >= 0.0)) throw std::domain_error("noise_rel must be >= 0");
    for (std::size_t i = 1; i < nu_grid.size(); ++i)
        if (!(nu_grid[i] > nu_grid[i - 1]))
            throw std::invalid_argument("nu_grid must be strictly increasing");

    SpectrumTable table;
    table.source = "synthetic";
    table.rows.reserve(T_list.size() * nu_grid.size());
    Xoshiro256 rng(seed);
    for (const double T : T_list)
        for (const double nu : nu_grid) {
            const double g = noise_rel > 0.0 ? standard_normal(rng) : 0.0;
            table.rows.push_back({nu, T, planck_u(T, nu, sp, c) * (1.0 + noise_rel * g)});
        }
    table.validate();
    return table;
}

SpectrumTable read_spectrum_csv(std::istream& in, std::string source) {
    SpectrumTable table;
    table.source = std::move(source);
    std::string line;
    bool saw_header = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        if (!saw_header) {
            if (body != kHeader)
                throw std::invalid_argument(table.source + ":" + std::to_string(lineno) +
                                            ": expected header '" + kHeader + "'");
            saw_header = true;
            continue;
        }
        std::string_view rest = body;
        double fields[3];
        for (int f = 0; f < 3; ++f) {
            const auto comma = rest.find(',');
            if ((comma == std::string_view::npos) != (f == 2))
                throw std::invalid_argument(table.source + ":" + std::to_string(lineno) +
                                            ": expected 3 comma-separated fields");
            try {
                fields[f] = parse_double(trim(rest.substr(0, comma)));
            } catch (const std::invalid_argument& ex) {
                throw std::invalid_argument(table.source + ":" + std::to_string(lineno) + ": " +
                                            ex.what());
            }
            if (f < 2) rest.remove_prefix(comma + 1);
        }
        table.rows.push_back({fields[0], fields[1], fields[2]});
    }
    if (!saw_header) throw std::invalid_argument(table.source + ": missing header line");
    table.validate();
    return table;
}

SpectrumTable load_spectrum_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_spectrum_csv(in, path.string());
}

void write_spectrum_csv(std::ostream& os, const SpectrumTable& table) {
    table.validate();
    os << kHeader << '\n';
    for (const auto& row : table.rows)
        os << format_sci(row.nu) << ',' << format_sci(row.T) << ',' << format_sci(row.u) << '\n';
}

void save_spectrum_csv(const std::filesystem::path& path, const SpectrumTable& table) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_spectrum_csv(os, table);
    if (!os.flush()) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace blackbody
