#include "bettisig/signature.hpp"

#include <algorithm>

#include "bettisig/errors.hpp"

namespace bettisig {

double auc(const BettiCurve& curve, std::size_t dim) {
    if (dim >= curve.values.size())
        throw DimOutOfRange("curve has no dimension " + std::to_string(dim));
    const auto& x = curve.densities;
    const auto& y = curve.values[dim];
    double area = 0.0;
    for (std::size_t g = 1; g < x.size(); ++g)
        area += 0.5 * (x[g] - x[g - 1]) * static_cast<double>(y[g] + y[g - 1]);
    return area;
}

IntegralBettiSignature signature_of_curve(const BettiCurve& curve) {
    IntegralBettiSignature sig;
    sig.b0_auc = auc(curve, 0);
    sig.b1_auc = curve.max_dim >= 1 ? auc(curve, 1) : 0.0;
    sig.max_dim = curve.max_dim;
    return sig;
}

IntegralBettiSignature signature_of_matrix(const SymmetricMatrix& matrix,
                                           const SignatureConfig& config) {
    const OrderComplex oc = build_order_complex(matrix, config.direction);
    const DensityGrid grid = config.grid ? *config.grid : DensityGrid::default_for(matrix.size());
    const BettiCurve curve = betti_curves(enumerate_cliques(oc, 3, config.budget), grid);
    IntegralBettiSignature sig = signature_of_curve(curve);
    sig.n_points = matrix.size();
    sig.direction = config.direction;
    sig.grid = grid.kind;
    return sig;
}

nlohmann::json to_json(const IntegralBettiSignature& sig) {
    nlohmann::json j;
    j["label"] = sig.label;
    j["family"] = sig.family;
    j["n_points"] = sig.n_points;
    j["sample_dim"] = sig.sample_dim;
    if (sig.radius) j["radius"] = *sig.radius;
    j["direction"] = std::string(to_string(sig.direction));
    if (sig.seed)
        j["seed"] = *sig.seed;
    else
        j["seed"] = nullptr;
    j["b0_auc"] = sig.b0_auc;
    j["b1_auc"] = sig.b1_auc;
    j["grid"] = sig.grid;
    j["max_dim"] = sig.max_dim;
    for (const auto& [key, value] : sig.extra.items()) j[key] = value;
    return j;
}

IntegralBettiSignature signature_from_json(const nlohmann::json& j) {
    static const char* known[] = {"label",  "family",    "n_points", "sample_dim",
                                  "radius", "direction", "seed",     "b0_auc",
                                  "b1_auc", "grid",      "max_dim"};
    IntegralBettiSignature sig;
    try {
        sig.label = j.at("label").get<std::string>();
        sig.family = j.at("family").get<std::string>();
        sig.n_points = j.at("n_points").get<std::size_t>();
        sig.sample_dim = j.at("sample_dim").get<std::size_t>();
        if (j.contains("radius")) sig.radius = j["radius"].get<double>();
        sig.direction = parse_direction(j.at("direction").get<std::string>());
        if (j.contains("seed") && !j["seed"].is_null()) sig.seed = j["seed"].get<std::uint64_t>();
        sig.b0_auc = j.at("b0_auc").get<double>();
        sig.b1_auc = j.at("b1_auc").get<double>();
        sig.grid = j.at("grid").get<std::string>();
        sig.max_dim = j.at("max_dim").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), 0);
    }
    for (const auto& [key, value] : j.items()) {
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
            sig.extra[key] = value;
    }
    return sig;
}

}  // namespace bettisig
