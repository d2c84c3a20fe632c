#pragma once
#include <cstdint>

namespace ringcluster {

// SplitMix64 step. Small, well-mixed generator used only for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic child seed for stream `index` of a base seed.  Trials and
// per-ring sampling streams are seeded through this, so results do not
// depend on scheduling or thread count.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t state = base + (index + 1) * 0x9e3779b97f4a7c15ULL;
    return splitmix64(state);
}

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.  Avoids
// std::uniform_real_distribution, whose output is implementation-defined,
// so streams are reproducible byte-for-byte across toolchains.
template <class Rng>
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace ringcluster
