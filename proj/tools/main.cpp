#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bettisig/errors.hpp"
#include "bettisig/experiment.hpp"
#include "bettisig/io.hpp"
#include "bettisig/modularity.hpp"
#include "bettisig/samplers.hpp"
#include "bettisig/signature.hpp"

using namespace bettisig;

namespace {

// Exit codes: 0 ok, 1 computation failure (or partial cell failures), 2 bad input or config.
constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct Shared {
    std::uint64_t seed = 0;
    std::string direction = "desc";
    std::size_t max_dim = 1;
    std::string grid = "default";
    std::string out;
    std::size_t threads = 0;
    std::uint64_t budget = default_simplex_budget;
};

void add_shared(CLI::App* app, Shared& s, bool allow_auto = false) {
    app->add_option("--seed", s.seed, "RNG seed");
    auto* dir = app->add_option("--direction", s.direction,
                                "Edge order: desc (largest value first) or asc");
    dir->check(CLI::IsMember(allow_auto ? std::vector<std::string>{"desc", "asc", "auto"}
                                        : std::vector<std::string>{"desc", "asc"}));
    app->add_option("--max-dim", s.max_dim, "Highest Betti dimension");
    app->add_option("--grid", s.grid, "default | per_step | uniform:<points>");
    app->add_option("--out", s.out, "Output path (file or directory); stdout when empty");
    app->add_option("--threads", s.threads, "Worker threads (0 = all cores)");
    app->add_option("--budget", s.budget, "Maximum number of simplices");
}

void set_threads(std::size_t threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(static_cast<int>(threads));
#else
    (void)threads;
#endif
}

// Writes to --out or stdout.
template <class Fn>
void emit(const std::string& path, Fn&& write, bool append = false) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + path);
    write(out);
}

SymmetricMatrix load_input(const std::string& input, const std::string& format,
                           const std::string& preprocessing, const std::string& metric) {
    if (format == "matrix_csv") return load_matrix_file(input).matrix;
    return ingest(input, {format, preprocessing, metric}).matrix;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti curves and integral Betti signatures of symmetric matrices"};
    app.require_subcommand(1);
    app.set_version_flag("--version", software_version);

    // sample
    Shared sample_opts;
    std::string sample_family = "random";
    std::size_t sample_n = 90, sample_dim = 400, sample_modules = 1;
    double sample_radius = 1.0, sample_noise = 0.1;
    std::string sample_points;
    auto* sample = app.add_subcommand("sample", "Draw one matrix from a reference family");
    add_shared(sample, sample_opts);
    sample->add_option("--family", sample_family, "Matrix family")
        ->check(CLI::IsMember(
            {"random", "euclidean", "sphere", "hyperbolic", "random_correlation", "modular"}));
    sample->add_option("-n,--n-points", sample_n, "Matrix size N");
    sample->add_option("--dim", sample_dim, "Ambient dimension or series length");
    sample->add_option("--radius", sample_radius, "Hyperbolic truncation radius R");
    sample->add_option("--modules", sample_modules, "Module count (modular family)");
    sample->add_option("--noise", sample_noise, "Noise amplitude (modular family)");
    sample->add_option("--points-out", sample_points,
                       "Also dump the point cloud (geometric families)");

    // betti
    Shared betti_opts;
    std::string betti_input, betti_format = "matrix_csv", betti_pre = "none",
                             betti_metric = "pearson", betti_filtration;
    auto* betti = app.add_subcommand("betti", "Betti curves of a matrix, written as curve CSV");
    add_shared(betti, betti_opts);
    betti->add_option("input", betti_input, "Matrix or series CSV")->required();
    betti->add_option("--format", betti_format)->check(CLI::IsMember({"matrix_csv", "series_csv"}));
    betti->add_option("--preprocessing", betti_pre)
        ->check(CLI::IsMember({"none", "log_returns", "normalize"}));
    betti->add_option("--metric", betti_metric)
        ->check(CLI::IsMember({"pearson", "euclidean", "correlation_distance"}));
    betti->add_option("--filtration-out", betti_filtration,
                      "Dump the edge order (rank,i,j,value,density)");

    // signature
    Shared sig_opts;
    std::string sig_input, sig_format = "matrix_csv", sig_pre = "none", sig_metric = "pearson",
                           sig_label, sig_family = "external";
    bool sig_append = false;
    auto* signature = app.add_subcommand("signature", "Integral Betti signature as one JSON line");
    add_shared(signature, sig_opts);
    signature->add_option("input", sig_input, "Matrix or series CSV")->required();
    signature->add_option("--format", sig_format)
        ->check(CLI::IsMember({"matrix_csv", "series_csv"}));
    signature->add_option("--preprocessing", sig_pre)
        ->check(CLI::IsMember({"none", "log_returns", "normalize"}));
    signature->add_option("--metric", sig_metric)
        ->check(CLI::IsMember({"pearson", "euclidean", "correlation_distance"}));
    signature->add_option("--label", sig_label);
    signature->add_option("--family", sig_family);
    signature->add_flag("--append", sig_append, "Append to --out instead of overwriting");

    // ingest
    Shared ingest_opts;
    std::string ingest_input, ingest_format = "series_csv", ingest_pre = "none",
                              ingest_metric = "pearson", ingest_provenance;
    auto* ingest_cmd =
        app.add_subcommand("ingest", "Load series or a matrix and write the matrix CSV");
    add_shared(ingest_cmd, ingest_opts);
    ingest_cmd->add_option("input", ingest_input)->required();
    ingest_cmd->add_option("--format", ingest_format)
        ->check(CLI::IsMember({"matrix_csv", "series_csv"}));
    ingest_cmd->add_option("--preprocessing", ingest_pre)
        ->check(CLI::IsMember({"none", "log_returns", "normalize"}));
    ingest_cmd->add_option("--metric", ingest_metric)
        ->check(CLI::IsMember({"pearson", "euclidean", "correlation_distance"}));
    ingest_cmd->add_option("--provenance-out", ingest_provenance, "Write provenance JSON here");

    // sweep
    Shared sweep_opts;
    std::string sweep_input, sweep_pre = "none";
    std::vector<std::size_t> sweep_lengths;
    std::size_t sweep_start = 0;
    auto* sweep =
        app.add_subcommand("sweep", "Signatures of growing initial segments of a series file");
    add_shared(sweep, sweep_opts);
    sweep->add_option("input", sweep_input, "Series CSV")->required();
    sweep->add_option("--preprocessing", sweep_pre)
        ->check(CLI::IsMember({"none", "log_returns", "normalize"}));
    auto* lengths_opt =
        sweep->add_option("--lengths", sweep_lengths, "Segment lengths, sorted")->delimiter(',');
    sweep
        ->add_option("--doubling-from", sweep_start,
                     "Lengths L, 2L, 4L, ... up to the series length")
        ->excludes(lengths_opt);

    // experiment
    Shared exp_opts;
    std::string exp_config;
    bool emit_gnuplot = false, no_curves = false;
    auto* experiment =
        app.add_subcommand("experiment", "Run every cell of a JSON experiment config");
    add_shared(experiment, exp_opts, true);
    experiment->add_option("config", exp_config, "JSON config file")->required();
    experiment->add_flag("--emit-gnuplot", emit_gnuplot, "Write gnuplot scripts next to the data");
    experiment->add_flag("--no-curves", no_curves, "Skip per-cell curve files");

    // validate
    std::string validate_input;
    auto* validate_cmd =
        app.add_subcommand("validate", "Report on the health of a matrix CSV");
    validate_cmd->add_option("input", validate_input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*sample) {
            set_threads(sample_opts.threads);
            const RngSeed seed{sample_opts.seed, 0};
            SymmetricMatrix m;
            std::optional<PointCloud> cloud;
            if (sample_family == "random") {
                m = random_symmetric(sample_n, seed);
            } else if (sample_family == "euclidean") {
                cloud = sample_cube(sample_n, sample_dim, seed);
            } else if (sample_family == "sphere") {
                cloud = sample_sphere(sample_n, sample_dim, seed);
            } else if (sample_family == "hyperbolic") {
                if (!(sample_radius > 0)) throw ConfigError("--radius must be positive");
                cloud = sample_hyperbolic(sample_n, sample_dim, {sample_radius}, seed);
            } else if (sample_family == "random_correlation") {
                m = random_correlation(sample_n, sample_dim, seed);
            } else {
                m = pearson_correlation(generate_modular_series(
                    {sample_n, sample_dim, sample_modules, sample_noise, seed}));
            }
            if (cloud) {
                m = distance_matrix(*cloud);
                if (!sample_points.empty())
                    emit(sample_points,
                         [&](std::ostream& o) { write_point_cloud_csv(o, *cloud, seed); });
            }
            const double diag =
                (sample_family == "random_correlation" || sample_family == "modular") ? 1.0 : 0.0;
            emit(sample_opts.out, [&](std::ostream& o) { write_matrix_csv(o, m, diag); });
            return exit_ok;
        }

        if (*betti) {
            set_threads(betti_opts.threads);
            const auto m = load_input(betti_input, betti_format, betti_pre, betti_metric);
            const auto oc = build_order_complex(m, parse_direction(betti_opts.direction));
            if (!betti_filtration.empty())
                emit(betti_filtration, [&](std::ostream& o) { write_filtration_csv(o, oc); });
            const auto grid = parse_grid(betti_opts.grid, m.size());
            const auto curve = betti_curves(oc, betti_opts.max_dim, grid, betti_opts.budget);
            CurveMetadata meta{
                betti_opts.direction, std::nullopt, grid.kind, {{"input", betti_input}}};
            emit(betti_opts.out, [&](std::ostream& o) { write_curve_csv(o, curve, meta); });
            return exit_ok;
        }

        if (*signature) {
            set_threads(sig_opts.threads);
            const auto m = load_input(sig_input, sig_format, sig_pre, sig_metric);
            SignatureConfig cfg;
            cfg.direction = parse_direction(sig_opts.direction);
            cfg.grid = parse_grid(sig_opts.grid, m.size());
            cfg.budget = sig_opts.budget;
            auto sig = signature_of_matrix(m, cfg);
            sig.label = sig_label.empty() ? sig_input : sig_label;
            sig.family = sig_family;
            emit(
                sig_opts.out, [&](std::ostream& o) { o << to_json(sig).dump() << '\n'; },
                sig_append);
            return exit_ok;
        }

        if (*ingest_cmd) {
            set_threads(ingest_opts.threads);
            auto r = ingest(ingest_input, {ingest_format, ingest_pre, ingest_metric});
            const double diag =
                ingest_metric == "pearson" && ingest_format == "series_csv" ? 1.0 : 0.0;
            emit(ingest_opts.out, [&](std::ostream& o) { write_matrix_csv(o, r.matrix, diag); });
            if (!ingest_provenance.empty())
                emit(ingest_provenance,
                     [&](std::ostream& o) { o << r.provenance.dump(2) << '\n'; });
            else
                std::cerr << r.provenance.dump() << '\n';
            return exit_ok;
        }

        if (*sweep) {
            set_threads(sweep_opts.threads);
            auto series = ingest(sweep_input, {"series_csv", sweep_pre, "pearson"}).series.value();
            if (sweep_start > 0) {
                for (std::size_t L = sweep_start; L <= series.length(); L *= 2)
                    sweep_lengths.push_back(L);
            }
            if (sweep_lengths.empty()) throw ConfigError("give --lengths or --doubling-from");
            SignatureConfig cfg;
            cfg.direction = parse_direction(sweep_opts.direction);
            cfg.grid = parse_grid(sweep_opts.grid, series.n_series());
            cfg.budget = sweep_opts.budget;
            auto sigs = segment_sweep(series, sweep_lengths, cfg);
            emit(sweep_opts.out, [&](std::ostream& o) {
                for (auto& s : sigs) {
                    s.seed = sweep_opts.seed;
                    o << to_json(s).dump() << '\n';
                }
            });
            return exit_ok;
        }

        if (*experiment) {
            auto cfg = ExperimentConfig::load(exp_config);
            // Command-line flags override the file when given.
            if (experiment->count("--seed")) cfg.seed = exp_opts.seed;
            if (experiment->count("--direction")) cfg.direction = exp_opts.direction;
            if (experiment->count("--max-dim")) cfg.max_dim = exp_opts.max_dim;
            if (experiment->count("--grid")) cfg.grid = exp_opts.grid;
            if (experiment->count("--out")) cfg.output_dir = exp_opts.out;
            if (experiment->count("--threads")) cfg.threads = exp_opts.threads;
            if (experiment->count("--budget")) cfg.budget = exp_opts.budget;
            if (emit_gnuplot) cfg.emit_gnuplot = true;
            if (no_curves) cfg.write_curves = false;
            cfg = ExperimentConfig::from_json(cfg.to_json());  // re-validate overrides
            const auto result = run_experiment(cfg);
            std::size_t failed = 0;
            for (const auto& c : result.cells)
                if (!c.ok) {
                    ++failed;
                    std::cerr << "cell " << c.family_key << " dim=" << c.dim
                              << " rep=" << c.replicate << " failed: " << c.error << '\n';
                }
            std::cerr << result.cells.size() - failed << "/" << result.cells.size()
                      << " cells ok, output in " << cfg.output_dir << '\n';
            return result.exit_code;
        }

        if (*validate_cmd) {
            const auto loaded = load_matrix_file(validate_input);
            const auto report = validate(loaded.matrix, loaded.diagonal);
            nlohmann::json j{{"n", loaded.matrix.size()},
                             {"finite", report.finite},
                             {"max_asymmetry", loaded.max_asymmetry},
                             {"tied_entries", report.tied_entries},
                             {"distinct_values", report.distinct_values},
                             {"diagonal_anomalies", report.diagonal_anomalies}};
            if (report.first_non_finite)
                j["first_non_finite"] = {report.first_non_finite->first,
                                         report.first_non_finite->second};
            std::cout << j.dump(2) << '\n';
            return report.finite ? exit_ok : exit_usage;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreprocessingError& e) {
        std::cerr << "preprocessing error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NonFiniteEntry& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_usage;
    } catch (const LengthMismatch& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_usage;
    } catch (const LengthExceedsData& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvalidModuleCount& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_ok;
}
