#pragma once

#include <cstdint>
#include <random>

namespace acd {

// Double in [0, 1) consuming exactly one engine call. Distribution adapters in
// the standard library may consume a variable number of calls, which would
// break the one-draw-per-step RNG discipline the environments rely on.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Integer in [0, n). One engine call.
inline int uniform_int(std::mt19937_64& rng, int n) {
    int v = static_cast<int>(uniform01(rng) * n);
    return v < n ? v : n - 1;
}

// Independent stream seed from a base seed and a stream label (splitmix64).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace acd
