#pragma once

#include "blackbody/spectral.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace blackbody {

/// Spectral observations grouped in blocks of constant T with strictly
/// increasing nu inside each block.
struct SpectrumTable {
    std::vector<SpectrumSample> rows;
    std::string source;  ///< free-text provenance

    /// Structural invariants: finite positive nu and T, finite u, nu
    /// strictly increasing within each constant-T run.
    void validate() const;
};

/// Rows u = planck_u(T, nu) * (1 + noise_rel * g), g standard normal from
/// the seeded generator; row order is T_list outer, nu_grid inner.
/// nu_grid must be strictly increasing.
SpectrumTable synthesize_spectrum(const std::vector<double>& T_list,
                                  const std::vector<double>& nu_grid, const SpectralParams& sp,
                                  double c, double noise_rel, std::uint64_t seed);

/// CSV with header nu_hz,T_K,u_J_per_m3Hz; '#' comments and blank lines
/// are ignored; plain or scientific notation, '.' decimal point.
SpectrumTable read_spectrum_csv(std::istream& in, std::string source);
SpectrumTable load_spectrum_csv(const std::filesystem::path& path);

/// Writes the same CSV dialect, 9 significant digits. A written table reads
/// back and rewrites to identical bytes.
void write_spectrum_csv(std::ostream& os, const SpectrumTable& table);
void save_spectrum_csv(const std::filesystem::path& path, const SpectrumTable& table);

}  // namespace blackbody
