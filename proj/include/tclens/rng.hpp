#pragma once

#include <cstdint>
#include <random>

namespace tclens {

/// SplitMix64 finalizer. Substream k of a master seed is the mix of
/// master + (k+1) * 0x9E3779B97F4A7C15; this is the documented splitting
/// rule for all per-unit generation.
std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t stream_index);

/// Deterministic draw stream for one unit.
///
/// The engine is a mt19937_64 seeded with substream_seed(master, index), and
/// every sampler is a fixed algorithm over its 53-bit uniforms:
///   - normal: Box-Muller with the spare value cached;
///   - gamma:  Marsaglia-Tsang squeeze for shape >= 1, and
///             Gamma(shape+1) * U^(1/shape) below 1;
///   - poisson: counting unit-exponential arrivals (exact for any mean,
///              O(mean) uniforms).
/// Identical (seed, index) pairs therefore reproduce bit-identical draws
/// regardless of platform, unit count, or scheduling.
class UnitStream {
public:
    UnitStream(std::uint64_t master_seed, std::uint64_t stream_index);

    /// Uniform on [0,1) with 53 random bits.
    double uniform01();

    /// Uniform on (0,1]; safe to pass to log().
    double uniform_open01();

    double normal(double mean, double sd);

    /// Shape/rate parameterisation; requires both positive.
    double gamma(double shape, double rate);

    /// Requires mean >= 0.
    long long poisson(double mean);

private:
    double standard_normal();

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace tclens
