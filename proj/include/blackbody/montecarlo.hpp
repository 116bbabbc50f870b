#pragma once

#include "blackbody/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace blackbody {

struct SimConfig {
    std::uint64_t n;        ///< oscillators, >= 1
    std::uint64_t p;        ///< quanta, >= 0
    std::uint64_t samples;  ///< >= 1
    std::uint64_t seed;

    void validate() const;
};

/// counts[j]: how often the designated oscillator (index 0) held j quanta.
struct OccupancyHistogram {
    std::vector<std::uint64_t> counts;  ///< size p+1, sums to samples
    std::uint64_t samples = 0;

    void merge(const OccupancyHistogram& other);  ///< pure addition, order-free
};

struct SimResult {
    OccupancyHistogram histogram;
    double mean_occupancy;      ///< sample mean of the designated occupancy; targets p/n
    double entropy_estimate;    ///< plug-in -sum f ln f over the histogram, nats
    double entropy_exact_limit; ///< (1+u)ln(1+u) - u ln u at u = p/n, the n->inf marginal
};

/// One microstate, uniform over all W(n,p) compositions: draws a uniform
/// (n-1)-subset of the n+p-1 star/bar slots by partial Fisher-Yates and
/// reads the gaps off as occupancies.
std::vector<std::uint32_t> sample_microstate(std::uint64_t n, std::uint64_t p, Xoshiro256& rng);

/// Exact marginal Pr(designated oscillator holds j) = W(n-1, p-j) / W(n, p),
/// evaluated as a rational of exact counts. Requires n >= 2, 0 <= j <= p.
double occupancy_distribution_exact(std::uint64_t n, std::uint64_t p, std::uint64_t j);

/// Deterministic given cfg.seed; consumes the stream exactly like repeated
/// sample_microstate calls.
SimResult run_simulation(const SimConfig& cfg);

/// Sharded variant: shard s draws cfg.samples/shards (+remainder on the
/// last) samples from derive_substream_seed(cfg.seed, s); results merge by
/// addition, so any merge order gives the same totals.
SimResult run_simulation(const SimConfig& cfg, unsigned shards);

/// CSV: j, observed, expected, sigma (binomial expectation and spread under
/// the exact marginal).
void write_histogram_csv(std::ostream& os, const SimConfig& cfg, const OccupancyHistogram& hist);

}  // namespace blackbody
