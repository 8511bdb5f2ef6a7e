#include "bettisig/modularity.hpp"

#include <exception>

#include "bettisig/errors.hpp"
#include "bettisig/samplers.hpp"

namespace bettisig {

std::vector<std::size_t> module_sizes(std::size_t n_series, std::size_t n_modules) {
    if (n_modules < 1 || n_modules > n_series)
        throw InvalidModuleCount("module count " + std::to_string(n_modules) + " not in [1, " +
                                 std::to_string(n_series) + "]");
    std::vector<std::size_t> sizes(n_modules, n_series / n_modules);
    for (std::size_t k = 0; k < n_series % n_modules; ++k) ++sizes[k];
    return sizes;
}

TimeSeriesSet generate_modular_series(const ModularConfig& config) {
    module_sizes(config.n_series, config.n_modules);  // validates
    if (config.length < 2) throw LengthMismatch("modular series need length >= 2");
    if (config.noise_amplitude < 0.0) throw Error("noise amplitude must be non-negative");
    Rng rng(config.seed);
    const TimeSeriesSet base = white_noise(config.n_modules, config.length, rng);
    TimeSeriesSet out(config.n_series, config.length);
    for (std::size_t i = 0; i < config.n_series; ++i) {
        auto src = base.series(i % config.n_modules);
        auto dst = out.series(i);
        for (std::size_t t = 0; t < config.length; ++t)
            dst[t] = src[t] + config.noise_amplitude * rng.normal();
    }
    return out;
}

std::vector<IntegralBettiSignature> modularity_sweep(const ModularConfig& base,
                                                     const std::vector<std::size_t>& module_counts,
                                                     std::size_t replicates,
                                                     const SignatureConfig& signature_config) {
    for (auto m : module_counts) module_sizes(base.n_series, m);
    std::vector<IntegralBettiSignature> out(module_counts.size() * replicates);
    std::vector<std::exception_ptr> errors(out.size());
    const long long cells = static_cast<long long>(out.size());
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < cells; ++c) {
        const auto cell = static_cast<std::size_t>(c);
        try {
            const std::size_t m = module_counts[cell / replicates];
            const std::size_t rep = cell % replicates;
            ModularConfig cfg = base;
            cfg.n_modules = m;
            cfg.seed = base.seed.child(m).child(rep);
            auto sig = signature_of_matrix(pearson_correlation(generate_modular_series(cfg)),
                                           signature_config);
            sig.family = "modular";
            sig.label = "MOD(m=" + std::to_string(m) + ")";
            sig.sample_dim = base.length;
            sig.seed = base.seed.seed;
            sig.extra["n_modules"] = m;
            sig.extra["noise_amplitude"] = base.noise_amplitude;
            sig.extra["replicate"] = rep;
            out[cell] = std::move(sig);
        } catch (...) {
            errors[cell] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace bettisig
