// Regenerates data/synthetic_spectrum.csv, the bundled noiseless reference
// spectrum (3 temperature blocks, geometric frequency grid, modern a = h/k
// and b = h). Deterministic; rerun only if the reference constants change.

#include "blackbody/constants.hpp"
#include "blackbody/spectral.hpp"
#include "blackbody/spectrum_table.hpp"

#include <cmath>
#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    using namespace blackbody;
    const std::string constants_path = argc > 1 ? argv[1] : "data/reference_constants.txt";
    const std::string out_path = argc > 2 ? argv[2] : "data/synthetic_spectrum.csv";
    try {
        const PhysicalConstants pc = load_constants(constants_path);
        const auto sp = SpectralParams::from_hk(pc.h, pc.k);
        std::vector<double> grid;
        const int points = 25;
        for (int i = 0; i < points; ++i)
            grid.push_back(1e12 * std::pow(1e3, static_cast<double>(i) / (points - 1)));
        SpectrumTable table = synthesize_spectrum({500.0, 1000.0, 1650.0}, grid, sp, pc.c,
                                                  /*noise_rel=*/0.0, /*seed=*/0);
        table.source = out_path;
        save_spectrum_csv(out_path, table);
        std::cout << "wrote " << table.rows.size() << " rows to " << out_path << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
