#pragma once

#include <cstdint>

namespace insdel {

struct Seed {
    std::uint64_t value = 0;
};

/// SplitMix64 used as a counter-based generator: the k-th output is
/// mix(seed + (k+1) * golden_gamma). Streams for sub-tasks are derived with
/// `derive`, so results never depend on evaluation order.
class CounterRng {
public:
    explicit CounterRng(Seed seed) : seed_(seed.value) {}

    std::uint64_t next();
    /// Uniform integer in [0, bound); bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t uniform(std::uint64_t bound);
    /// Uniform double in [0, 1).
    double uniform01();

    std::uint64_t counter() const noexcept { return counter_; }

    static std::uint64_t mix(std::uint64_t z) noexcept;
    /// Independent seed for sub-stream `stream` of `seed`.
    static Seed derive(Seed seed, std::uint64_t stream) noexcept;

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace insdel
