#include "insdel/rng.hpp"

namespace insdel {

namespace {
constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t CounterRng::mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t CounterRng::next() {
    ++counter_;
    return mix(seed_ + counter_ * golden_gamma);
}

std::uint64_t CounterRng::uniform(std::uint64_t bound) {
    // reject the low tail so that the remaining range is a multiple of bound
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        std::uint64_t x = next();
        if (x >= threshold) return x % bound;
    }
}

double CounterRng::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Seed CounterRng::derive(Seed seed, std::uint64_t stream) noexcept {
    return Seed{mix(mix(seed.value ^ 0x6A09E667F3BCC909ULL) + stream * golden_gamma)};
}

}  // namespace insdel
