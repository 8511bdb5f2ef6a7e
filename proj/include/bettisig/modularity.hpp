#pragma once

#include <cstddef>
#include <vector>

#include "bettisig/matrix.hpp"
#include "bettisig/rng.hpp"
#include "bettisig/signature.hpp"

namespace bettisig {

struct ModularConfig {
    std::size_t n_series = 90;
    std::size_t length = 400;
    std::size_t n_modules = 1;
    double noise_amplitude = 0.1;  // relative to unit base-series variance
    RngSeed seed;
};

// Sizes of the m modules produced by cyclic tiling of n_series channels.
std::vector<std::size_t> module_sizes(std::size_t n_series, std::size_t n_modules);

// m white-noise base series tiled cyclically (channel i copies base i mod m),
// plus independent N(0, noise^2) noise on every channel.
TimeSeriesSet generate_modular_series(const ModularConfig& config);

// One signature per (module count, replicate); records carry n_modules and
// noise_amplitude. Replicate r of count m uses seed.child(m).child(r).
std::vector<IntegralBettiSignature> modularity_sweep(const ModularConfig& base,
                                                     const std::vector<std::size_t>& module_counts,
                                                     std::size_t replicates,
                                                     const SignatureConfig& signature_config = {});

}  // namespace bettisig
