#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bettisig/flag_homology.hpp"
#include "bettisig/matrix.hpp"
#include "bettisig/rng.hpp"
#include "bettisig/signature.hpp"
#include "json.hpp"

namespace bettisig {

inline constexpr const char* software_version = "0.1.0";

enum class FamilyKind {
    random,
    euclidean,
    sphere,
    hyperbolic,
    random_correlation,
    modular,
    external
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::random;
    double radius = 1.0;                 // hyperbolic
    std::size_t modules = 1;             // modular
    double noise = 0.1;                  // modular
    std::string path;                    // external
    std::string format = "series_csv";   // external: series_csv | matrix_csv
    std::string preprocessing = "none";  // external: none | log_returns | normalize
    std::string metric = "pearson";  // external series: pearson | euclidean | correlation_distance
    std::optional<Direction> direction;  // overrides the experiment policy

    // File-name safe identifier, e.g. "hyperbolic_R0.1".
    std::string key() const;
    // Short plot label, e.g. "HG(R=0.1)".
    std::string label() const;
    // Distance-type families: larger entry = less similar.
    bool is_distance() const;
};

FamilySpec parse_family(const nlohmann::json& j);
nlohmann::json to_json(const FamilySpec& f);

// Filtration direction for a family: "desc", "asc", or "auto" (ascending for
// distance families, descending for similarity families).
Direction direction_for(const FamilySpec& family, const std::string& policy);

// "default" | "per_step" | "uniform:<points>"
DensityGrid parse_grid(const std::string& text, std::size_t n_vertices);

struct ExperimentConfig {
    std::vector<FamilySpec> families;
    std::size_t n_points = 90;
    std::vector<std::size_t> dims{400};
    std::size_t replicates = 1;
    std::size_t max_dim = 1;
    std::string direction = "auto";
    std::string grid = "default";
    std::uint64_t seed = 0;
    std::string output_dir = "out";
    std::size_t threads = 0;  // 0 = all available
    std::uint64_t budget = default_simplex_budget;
    bool write_curves = true;
    bool emit_gnuplot = false;

    // Throws ConfigError on unknown keys or invalid values.
    static ExperimentConfig from_json(const nlohmann::json& j);
    static ExperimentConfig load(const std::string& path);
    nlohmann::json to_json() const;
    // Hash of the resolved config. Fields that cannot change numbers (output
    // location, thread count, plotting) are left out.
    std::uint64_t hash() const;
};

// Matrix for one cell. `dim` is the ambient dimension or series length.
SymmetricMatrix generate_family_matrix(const FamilySpec& family, std::size_t n_points,
                                       std::size_t dim, RngSeed seed);

struct CellResult {
    std::string family_key;
    std::string label;
    std::size_t dim = 0;
    std::size_t replicate = 0;
    Direction direction = Direction::descending;
    bool ok = false;
    std::string error;
    double wall_seconds = 0.0;
    std::optional<BettiCurve> curve;
    std::optional<IntegralBettiSignature> signature;
    std::vector<std::string> outputs;
};

struct MeanCurve {
    std::string family_key;
    std::string label;
    std::size_t dim = 0;
    std::size_t count = 0;
    std::vector<double> densities;
    std::vector<std::vector<double>> mean;       // [dim][grid]
    std::vector<std::vector<double>> std_error;  // [dim][grid]
};

MeanCurve mean_curve(const std::vector<const BettiCurve*>& curves);

struct ExperimentResult {
    std::uint64_t config_hash = 0;
    std::vector<CellResult> cells;
    std::vector<MeanCurve> means;
    nlohmann::json manifest;
    int exit_code = 0;  // 0 all cells ok, 1 some failed

    const MeanCurve* mean_for(const std::string& family_key, std::size_t dim) const;
};

// Runs every (family, dim, replicate) cell. With write_files the curve CSVs,
// mean curves, signatures.jsonl and manifest.json go under output_dir.
ExperimentResult run_experiment(const ExperimentConfig& config, bool write_files = true);

struct IngestOptions {
    std::string format = "series_csv";
    std::string preprocessing = "none";
    std::string metric = "pearson";
};

struct IngestResult {
    SymmetricMatrix matrix;
    std::optional<TimeSeriesSet> series;  // after preprocessing
    nlohmann::json provenance;
};

// Throws ParseError for unreadable input and PreprocessingError for a
// preprocessing step that does not apply to the data kind.
IngestResult ingest(const std::string& path, const IngestOptions& options = {});
IngestResult ingest_series(TimeSeriesSet series, const IngestOptions& options);

// One signature per length L (first L samples of every series).
std::vector<IntegralBettiSignature> segment_sweep(const TimeSeriesSet& series,
                                                  const std::vector<std::size_t>& lengths,
                                                  const SignatureConfig& config = {});

// Plain-text gnuplot scripts referencing the mean-curve and signature files.
void write_gnuplot_scripts(const std::string& output_dir, const ExperimentResult& result);

}  // namespace bettisig
