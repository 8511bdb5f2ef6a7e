#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace bettisig {

// (seed, stream) pair. Equal pairs produce identical draws on every platform;
// distinct streams are decorrelated through SplitMix64 mixing.
struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    // Child stream keyed by a further id (family, dimension, replicate, ...).
    RngSeed child(std::uint64_t id) const;
    bool operator==(const RngSeed&) const = default;
};

std::uint64_t splitmix64(std::uint64_t x);
// FNV-1a over the bytes of `text`; stable across runs and platforms.
std::uint64_t stable_hash(std::string_view text);

// 64-bit Mersenne twister seeded from the mixed (seed, stream) pair. Uniform
// and normal variates are derived by hand rather than through <random>
// distributions, whose algorithms are implementation-defined.
class Rng {
public:
    explicit Rng(RngSeed seed);

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    // Uniform on (0, 1).
    double uniform_open() {
        double u;
        do u = uniform();
        while (u == 0.0);
        return u;
    }
    // Standard normal (Box-Muller, both variates used).
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace bettisig
