#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace blackbody {

using BigInt = boost::multiprecision::cpp_int;

/// Number of ways to distribute p indistinguishable quanta over n
/// distinguishable oscillators: W = (n+p-1)! / ((n-1)! p!).
struct MicrostateCount {
    std::uint64_t oscillators;  ///< n >= 1
    std::uint64_t quanta;       ///< p >= 0
    BigInt count;               ///< exact W
    double log_count;           ///< ln W via log-gamma
};

/// Total energy snapped to an integer number of quanta.
struct QuantizedEnergy {
    double total_energy;   ///< J
    double quantum;        ///< epsilon, J
    std::uint64_t quanta;  ///< p = round-half-to-even(total_energy / quantum)
};

/// Exact W plus its log-gamma logarithm. Exact arithmetic is unbounded;
/// keep n+p below ~10^4 to stay fast (ln_microstate_count covers any size).
MicrostateCount count_microstates(std::uint64_t n, std::uint64_t p);

/// ln W by log-gamma only; usable far beyond exact-integer range.
double ln_microstate_count(std::uint64_t n, std::uint64_t p);

/// ln of an arbitrarily large positive integer, accurate to ~1 ulp of ln.
double log_big(const BigInt& value);

/// Visits every n-tuple of non-negative integers summing to p, in
/// lexicographic order. Refuses when W > 10^6 (std::length_error).
void for_each_composition(std::uint64_t n, std::uint64_t p,
                          const std::function<void(const std::vector<std::uint32_t>&)>& visit);

/// Materialized for_each_composition, same guard.
std::vector<std::vector<std::uint32_t>> enumerate_compositions(std::uint64_t n, std::uint64_t p);

/// S = k ln W (exact-integer route).
double boltzmann_entropy(const BigInt& W, double k);

/// S = k ln W given ln W directly (log-gamma route).
double boltzmann_entropy_ln(double ln_W, double k);

/// Per-oscillator entropy k[(1+r)ln(1+r) - r ln r] with r = E/epsilon.
/// S(0) = 0 by an explicit branch (the x ln x -> 0 extension).
double entropy_per_oscillator(double E, double epsilon, double k);

/// The two-term approximation z ln z - z for ln z!. Kept to document the
/// large-n limit of the counting formula; everything else uses log-gamma.
double stirling_ln_factorial(double z);

/// p = round-half-to-even(E_total / epsilon).
QuantizedEnergy quantize_energy(double E_total, double epsilon);

}  // namespace blackbody
