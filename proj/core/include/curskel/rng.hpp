#pragma once

#include <cstdint>
#include <random>

namespace curskel {

/// Seeded random source built on std::mt19937_64 (whose output sequence is
/// fixed by the standard). All value transforms are implemented here with
/// fixed formulas instead of std::*_distribution, so identical seeds give
/// identical draws across standard libraries. Index draws use integer
/// arithmetic only.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Independent per-trial stream: the engine seed is a SplitMix64 hash of
    /// (seed, stream, trial), so trial order and parallel scheduling cannot
    /// change any trial's draws.
    static SeededRng for_trial(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01();

    /// Uniform in {0, ..., bound-1}, unbiased (rejection sampling). bound > 0.
    std::size_t uniform_index(std::size_t bound);

    bool bernoulli(double p) { return uniform01() < p; }

    /// Standard normal via Box-Muller (pairs are cached).
    double normal();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// SplitMix64 mixing step; used for deriving stream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace curskel
