#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bettisig/filtration.hpp"
#include "bettisig/flag_homology.hpp"
#include "bettisig/matrix.hpp"
#include "json.hpp"

namespace bettisig {

// Trapezoidal integral of beta_dim over the curve's density grid.
double auc(const BettiCurve& curve, std::size_t dim);

struct SignatureConfig {
    Direction direction = Direction::descending;
    std::optional<DensityGrid> grid;  // default: DensityGrid::default_for(N)
    std::uint64_t budget = default_simplex_budget;
};

struct IntegralBettiSignature {
    double b0_auc = 0.0;
    double b1_auc = 0.0;
    std::size_t sample_dim = 0;
    std::string label;
    std::string family;
    std::size_t n_points = 0;
    Direction direction = Direction::descending;
    std::optional<std::uint64_t> seed;
    std::string grid;
    std::size_t max_dim = 1;
    std::optional<double> radius;
    nlohmann::json extra = nlohmann::json::object();  // family-specific fields

    bool operator==(const IntegralBettiSignature&) const = default;
};

IntegralBettiSignature signature_of_curve(const BettiCurve& curve);
// order complex -> cliques of size <= 3 -> beta_0, beta_1 -> AUCs.
IntegralBettiSignature signature_of_matrix(const SymmetricMatrix& matrix,
                                           const SignatureConfig& config = {});

// One JSON-lines object.
nlohmann::json to_json(const IntegralBettiSignature& sig);
IntegralBettiSignature signature_from_json(const nlohmann::json& j);

}  // namespace bettisig
