#include "blackbody/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blackbody {

namespace {

constexpr std::uint64_t kEnumerationGuard = 1000000;

// C(N, r) by the multiplicative rule; each division is exact.
BigInt binomial_exact(std::uint64_t N, std::uint64_t r) {
    if (r > N) return 0;
    r = std::min(r, N - r);
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        result *= N - r + i;
        result /= i;
    }
    return result;
}

}  // namespace

double ln_microstate_count(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw std::domain_error("need at least one oscillator (n >= 1)");
    // ln W = lgamma(n+p) - lgamma(n) - lgamma(p+1)
    return std::lgamma(static_cast<double>(n + p)) - std::lgamma(static_cast<double>(n)) -
           std::lgamma(static_cast<double>(p + 1));
}

MicrostateCount count_microstates(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw std::domain_error("need at least one oscillator (n >= 1)");
    MicrostateCount mc;
    mc.oscillators = n;
    mc.quanta = p;
    mc.count = binomial_exact(n + p - 1, p);
    mc.log_count = ln_microstate_count(n, p);
    return mc;
}

double log_big(const BigInt& value) {
    if (value <= 0) throw std::domain_error("log_big requires a positive integer");
    const std::size_t bits = boost::multiprecision::msb(value) + 1;
    if (bits <= 1000) return std::log(value.convert_to<double>());
    // ln(top 64 bits) + (discarded bits) * ln 2
    const unsigned shift = static_cast<unsigned>(bits - 64);
    const BigInt top = value >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

void for_each_composition(std::uint64_t n, std::uint64_t p,
                          const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    if (n == 0) throw std::domain_error("need at least one oscillator (n >= 1)");
    const BigInt total = binomial_exact(n + p - 1, p);
    if (total > kEnumerationGuard)
        throw std::length_error("composition count " + total.str() + " exceeds the 10^6 guard");

    // Lexicographic successor: find the rightmost slot with quanta strictly
    // to its right, move one quantum into it, park the rest at the end.
    std::vector<std::uint32_t> tuple(n, 0);
    tuple[n - 1] = static_cast<std::uint32_t>(p);
    while (true) {
        visit(tuple);
        if (tuple[0] == p) break;  // lexicographic maximum (p,0,...,0)
        std::size_t i = n - 1;
        std::uint32_t suffix = 0;
        do {
            suffix += tuple[i];
            --i;
        } while (suffix == 0);
        tuple[i] += 1;
        for (std::size_t j = i + 1; j < n; ++j) tuple[j] = 0;
        tuple[n - 1] = suffix - 1;
    }
}

std::vector<std::vector<std::uint32_t>> enumerate_compositions(std::uint64_t n, std::uint64_t p) {
    std::vector<std::vector<std::uint32_t>> out;
    for_each_composition(n, p, [&](const std::vector<std::uint32_t>& t) { out.push_back(t); });
    return out;
}

double boltzmann_entropy(const BigInt& W, double k) {
    if (W < 1) throw std::domain_error("W must be >= 1");
    if (!std::isfinite(k) || k <= 0.0) throw std::domain_error("k must be finite and > 0");
    if (W == 1) return 0.0;
    return k * log_big(W);
}

double boltzmann_entropy_ln(double ln_W, double k) {
    if (!std::isfinite(ln_W) || ln_W < 0.0) throw std::domain_error("ln W must be >= 0");
    if (!std::isfinite(k) || k <= 0.0) throw std::domain_error("k must be finite and > 0");
    return k * ln_W;
}

double entropy_per_oscillator(double E, double epsilon, double k) {
    if (!std::isfinite(E) || E < 0.0) throw std::domain_error("E must be finite and >= 0");
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw std::domain_error("epsilon must be finite and > 0");
    if (!std::isfinite(k) || k <= 0.0) throw std::domain_error("k must be finite and > 0");
    if (E == 0.0) return 0.0;
    const double r = E / epsilon;
    return k * ((1.0 + r) * std::log1p(r) - r * std::log(r));
}

double stirling_ln_factorial(double z) {
    if (!std::isfinite(z) || z <= 0.0) throw std::domain_error("z must be finite and > 0");
    return z * std::log(z) - z;
}

QuantizedEnergy quantize_energy(double E_total, double epsilon) {
    if (!std::isfinite(E_total) || E_total < 0.0)
        throw std::domain_error("E_total must be finite and >= 0");
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw std::domain_error("epsilon must be finite and > 0");
    const double q = E_total / epsilon;
    // explicit round-half-to-even, independent of the fenv rounding mode
    double lower = std::floor(q);
    const double frac = q - lower;
    if (frac > 0.5 || (frac == 0.5 && std::fmod(lower, 2.0) != 0.0)) lower += 1.0;
    return QuantizedEnergy{E_total, epsilon, static_cast<std::uint64_t>(lower)};
}

}  // namespace blackbody
