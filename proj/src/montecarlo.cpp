#include "blackbody/montecarlo.hpp"

#include "blackbody/counting.hpp"
#include "blackbody/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace blackbody {

void SimConfig::validate() const {
    if (n < 1) throw std::domain_error("n must be >= 1");
    if (samples < 1) throw std::domain_error("samples must be >= 1");
    if (n + p - 1 > std::numeric_limits<std::uint32_t>::max())
        throw std::length_error("n + p too large to lay out star/bar slots");
}

void OccupancyHistogram::merge(const OccupancyHistogram& other) {
    if (counts.size() != other.counts.size())
        throw std::invalid_argument("histogram sizes differ");
    for (std::size_t j = 0; j < counts.size(); ++j) counts[j] += other.counts[j];
    samples += other.samples;
}

namespace {

// Occupancies from a fresh uniform (n-1)-subset of the n+p-1 slots.
// slots/bars are caller-owned scratch so the sampling loop does not allocate.
void sample_occupancies(std::uint64_t n, std::uint64_t p, Xoshiro256& rng,
                        std::vector<std::uint32_t>& slots, std::vector<std::uint32_t>& bars,
                        std::vector<std::uint32_t>& out) {
    if (n == 1) {
        out.assign(1, static_cast<std::uint32_t>(p));
        return;
    }
    const std::uint64_t total = n + p - 1;
    slots.resize(total);
    std::iota(slots.begin(), slots.end(), 0u);
    bars.resize(n - 1);
    for (std::uint64_t i = 0; i < n - 1; ++i) {
        const std::uint64_t j = i + uniform_below(rng, total - i);
        std::swap(slots[i], slots[j]);
        bars[i] = slots[i];
    }
    std::sort(bars.begin(), bars.end());
    out.resize(n);
    out[0] = bars[0];
    for (std::uint64_t i = 1; i < n - 1; ++i) out[i] = bars[i] - bars[i - 1] - 1;
    out[n - 1] = static_cast<std::uint32_t>(total - 1) - bars[n - 2];
}

OccupancyHistogram simulate_histogram(const SimConfig& cfg) {
    OccupancyHistogram hist;
    hist.counts.assign(cfg.p + 1, 0);
    hist.samples = cfg.samples;
    Xoshiro256 rng(cfg.seed);
    std::vector<std::uint32_t> slots, bars, state;
    for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        sample_occupancies(cfg.n, cfg.p, rng, slots, bars, state);
        ++hist.counts[state[0]];
    }
    return hist;
}

SimResult finalize(const SimConfig& cfg, OccupancyHistogram hist) {
    double mean = 0.0;
    double entropy = 0.0;
    const auto samples = static_cast<double>(hist.samples);
    for (std::size_t j = 0; j < hist.counts.size(); ++j) {
        const auto c = static_cast<double>(hist.counts[j]);
        mean += static_cast<double>(j) * c;
        if (c > 0.0) entropy -= c * std::log(c);
    }
    mean /= samples;
    entropy = entropy / samples + std::log(samples);
    const double u = static_cast<double>(cfg.p) / static_cast<double>(cfg.n);
    const double limit = cfg.p == 0 ? 0.0 : (1.0 + u) * std::log1p(u) - u * std::log(u);
    return SimResult{std::move(hist), mean, entropy, limit};
}

}  // namespace

std::vector<std::uint32_t> sample_microstate(std::uint64_t n, std::uint64_t p, Xoshiro256& rng) {
    SimConfig{n, p, 1, 0}.validate();
    std::vector<std::uint32_t> slots, bars, out;
    sample_occupancies(n, p, rng, slots, bars, out);
    return out;
}

double occupancy_distribution_exact(std::uint64_t n, std::uint64_t p, std::uint64_t j) {
    if (n < 2) throw std::domain_error("marginal needs n >= 2");
    if (j > p) throw std::domain_error("j must be <= p");
    const BigInt favorable = count_microstates(n - 1, p - j).count;
    const BigInt all = count_microstates(n, p).count;
    return boost::multiprecision::cpp_rational(favorable, all).convert_to<double>();
}

SimResult run_simulation(const SimConfig& cfg) {
    cfg.validate();
    return finalize(cfg, simulate_histogram(cfg));
}

SimResult run_simulation(const SimConfig& cfg, unsigned shards) {
    cfg.validate();
    if (shards == 0) throw std::domain_error("shards must be >= 1");
    const std::uint64_t base = cfg.samples / shards;
    OccupancyHistogram merged;
    merged.counts.assign(cfg.p + 1, 0);
    for (unsigned s = 0; s < shards; ++s) {
        SimConfig shard = cfg;
        shard.samples = s + 1 == shards ? base + cfg.samples % shards : base;
        shard.seed = derive_substream_seed(cfg.seed, s);
        if (shard.samples == 0) continue;
        merged.merge(simulate_histogram(shard));
    }
    return finalize(cfg, std::move(merged));
}

void write_histogram_csv(std::ostream& os, const SimConfig& cfg, const OccupancyHistogram& hist) {
    os << "j,observed,expected,sigma\n";
    const auto samples = static_cast<double>(hist.samples);
    for (std::size_t j = 0; j < hist.counts.size(); ++j) {
        const double pr = cfg.n >= 2 ? occupancy_distribution_exact(cfg.n, cfg.p, j)
                                     : (j == cfg.p ? 1.0 : 0.0);
        const double expected = samples * pr;
        const double sigma = std::sqrt(samples * pr * (1.0 - pr));
        os << j << ',' << hist.counts[j] << ',' << format_sci(expected) << ','
           << format_sci(sigma) << '\n';
    }
}

}  // namespace blackbody
