#pragma once

#include <array>
#include <cstdint>

#include "tss/network.hpp"

namespace tss {

/// splitmix64: the documented generator contract for reproducible instances.
/// state += 0x9E3779B97F4A7C15; x = state; x ^= x>>30; x *= 0xBF58476D1CE4E5B9;
/// x ^= x>>27; x *= 0x94D049BB133111EB; x ^= x>>31. Bounded draws use next()
/// modulo the range size.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t x = (state += 0x9E3779B97F4A7C15ULL);
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw ValidationError("SplitMix64::below: empty range");
        return next() % bound;
    }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }
};

enum class ThetaPolicy {
    UniformDegree,  // theta(v) uniform in [0, degree(v) + 1]
    Constant,
};

struct BlockCactusParams {
    int blocks = 3;
    int min_size = 2;
    int max_size = 5;
    double cycle_fraction = 0.5;
    ThetaPolicy policy = ThetaPolicy::UniformDegree;
    int constant_theta = 2;
};

/// Connected block-cactus instance: a random block-cut tree grown one block
/// at a time, each block complete or a cycle, attached at a uniformly chosen
/// existing vertex. Same seed, same instance, byte for byte.
ThresholdedNetwork gen_block_cactus(std::uint64_t seed, const BlockCactusParams& params);

struct ChordalParams {
    int n = 10;
    int width = 3;                                // max clique-attachment size
    std::array<int, 3> theta_weights = {1, 2, 2};  // weights for thresholds 0,1,2
};

/// Connected chordal instance built by reversing a perfect elimination order:
/// each new vertex attaches to a clique inside an earlier attachment clique.
ThresholdedNetwork gen_chordal(std::uint64_t seed, const ChordalParams& params);

}  // namespace tss
