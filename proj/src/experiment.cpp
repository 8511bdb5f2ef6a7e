#include "bettisig/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bettisig/errors.hpp"
#include "bettisig/io.hpp"
#include "bettisig/modularity.hpp"
#include "bettisig/samplers.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace bettisig {

namespace {

std::string format_number(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

const std::map<std::string, FamilyKind>& family_names() {
    static const std::map<std::string, FamilyKind> names{
        {"random", FamilyKind::random},
        {"euclidean", FamilyKind::euclidean},
        {"sphere", FamilyKind::sphere},
        {"hyperbolic", FamilyKind::hyperbolic},
        {"random_correlation", FamilyKind::random_correlation},
        {"modular", FamilyKind::modular},
        {"external", FamilyKind::external},
    };
    return names;
}

std::string kind_name(FamilyKind kind) {
    for (const auto& [name, k] : family_names())
        if (k == kind) return name;
    return "?";
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
    }
}

std::string stem_of(const std::string& path) {
    return fs::path(path).stem().string();
}

}  // namespace

std::string FamilySpec::key() const {
    switch (kind) {
        case FamilyKind::hyperbolic:
            return "hyperbolic_R" + format_number(radius);
        case FamilyKind::modular:
            return "modular_m" + std::to_string(modules) + "_s" + format_number(noise);
        case FamilyKind::external:
            return "external_" + stem_of(path) + "_" + preprocessing + "_" + metric;
        default:
            return kind_name(kind);
    }
}

std::string FamilySpec::label() const {
    switch (kind) {
        case FamilyKind::random:
            return "RM";
        case FamilyKind::euclidean:
            return "EG";
        case FamilyKind::sphere:
            return "SG";
        case FamilyKind::hyperbolic:
            return "HG(R=" + format_number(radius) + ")";
        case FamilyKind::random_correlation:
            return "RC";
        case FamilyKind::modular:
            return "MOD(m=" + std::to_string(modules) + ")";
        case FamilyKind::external:
            return "EXT(" + stem_of(path) + ")";
    }
    return "?";
}

bool FamilySpec::is_distance() const {
    switch (kind) {
        case FamilyKind::euclidean:
        case FamilyKind::sphere:
        case FamilyKind::hyperbolic:
            return true;
        case FamilyKind::external:
            return format == "series_csv" && metric != "pearson";
        default:
            return false;
    }
}

FamilySpec parse_family(const json& j) {
    if (j.is_string()) return parse_family(json{{"type", j}});
    check_keys(j,
               {"type", "radius", "modules", "noise", "path", "format", "preprocessing", "metric",
                "direction"},
               "family");
    FamilySpec f;
    const auto type = get_or<std::string>(j, "type", "");
    const auto it = family_names().find(type);
    if (it == family_names().end()) throw ConfigError("unknown family type '" + type + "'");
    f.kind = it->second;
    f.radius = get_or<double>(j, "radius", 1.0);
    f.modules = get_or<std::size_t>(j, "modules", 1);
    f.noise = get_or<double>(j, "noise", 0.1);
    f.path = get_or<std::string>(j, "path", "");
    f.format = get_or<std::string>(j, "format", "series_csv");
    f.preprocessing = get_or<std::string>(j, "preprocessing", "none");
    f.metric = get_or<std::string>(j, "metric", "pearson");
    if (j.contains("direction"))
        f.direction = parse_direction(get_or<std::string>(j, "direction", ""));
    if (f.kind == FamilyKind::hyperbolic && !(f.radius > 0.0))
        throw ConfigError("hyperbolic radius must be > 0");
    if (f.kind == FamilyKind::modular && f.modules < 1) throw ConfigError("modules must be >= 1");
    if (f.kind == FamilyKind::modular && f.noise < 0.0) throw ConfigError("noise must be >= 0");
    if (f.kind == FamilyKind::external && f.path.empty())
        throw ConfigError("external family needs a path");
    return f;
}

json to_json(const FamilySpec& f) {
    json j{{"type", kind_name(f.kind)}};
    switch (f.kind) {
        case FamilyKind::hyperbolic:
            j["radius"] = f.radius;
            break;
        case FamilyKind::modular:
            j["modules"] = f.modules;
            j["noise"] = f.noise;
            break;
        case FamilyKind::external:
            j["path"] = f.path;
            j["format"] = f.format;
            j["preprocessing"] = f.preprocessing;
            j["metric"] = f.metric;
            break;
        default:
            break;
    }
    if (f.direction) j["direction"] = std::string(to_string(*f.direction));
    return j;
}

Direction direction_for(const FamilySpec& family, const std::string& policy) {
    if (family.direction) return *family.direction;
    if (policy == "auto")
        return family.is_distance() ? Direction::ascending : Direction::descending;
    return parse_direction(policy);
}

DensityGrid parse_grid(const std::string& text, std::size_t n_vertices) {
    if (text == "default") return DensityGrid::default_for(n_vertices);
    if (text == "per_step") return DensityGrid::per_step(choose2(n_vertices));
    if (text.rfind("uniform:", 0) == 0) {
        std::size_t points = 0;
        try {
            points = std::stoul(text.substr(8));
        } catch (const std::logic_error&) {
            throw ConfigError("bad grid '" + text + "'");
        }
        if (points < 2) throw ConfigError("uniform grid needs at least 2 points");
        return DensityGrid::uniform(points - 1);
    }
    throw ConfigError("unknown grid '" + text +
                      "' (expected default, per_step or uniform:<points>)");
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
    check_keys(j,
               {"families", "n_points", "dims", "replicates", "max_dim", "direction", "grid",
                "seed", "output_dir", "threads", "budget", "write_curves", "emit_gnuplot"},
               "config");
    ExperimentConfig c;
    if (!j.contains("families") || !j["families"].is_array() || j["families"].empty())
        throw ConfigError("config needs a non-empty 'families' list");
    for (const auto& f : j["families"]) c.families.push_back(parse_family(f));
    c.n_points = get_or<std::size_t>(j, "n_points", c.n_points);
    c.dims = get_or<std::vector<std::size_t>>(j, "dims", c.dims);
    c.replicates = get_or<std::size_t>(j, "replicates", c.replicates);
    c.max_dim = get_or<std::size_t>(j, "max_dim", c.max_dim);
    c.direction = get_or<std::string>(j, "direction", c.direction);
    c.grid = get_or<std::string>(j, "grid", c.grid);
    c.seed = get_or<std::uint64_t>(j, "seed", c.seed);
    c.output_dir = get_or<std::string>(j, "output_dir", c.output_dir);
    c.threads = get_or<std::size_t>(j, "threads", c.threads);
    c.budget = get_or<std::uint64_t>(j, "budget", c.budget);
    c.write_curves = get_or<bool>(j, "write_curves", c.write_curves);
    c.emit_gnuplot = get_or<bool>(j, "emit_gnuplot", c.emit_gnuplot);

    if (c.n_points < 2) throw ConfigError("n_points must be >= 2");
    if (c.replicates < 1) throw ConfigError("replicates must be >= 1");
    if (c.dims.empty()) throw ConfigError("dims must not be empty");
    if (c.direction != "auto") parse_direction(c.direction);
    parse_grid(c.grid, c.n_points);
    for (const auto& f : c.families) {
        for (auto d : c.dims) {
            if (f.kind == FamilyKind::sphere && d < 2) throw ConfigError("sphere needs dim >= 2");
            if (f.kind == FamilyKind::hyperbolic && d < 2)
                throw ConfigError("hyperbolic needs dim >= 2");
            if ((f.kind == FamilyKind::random_correlation || f.kind == FamilyKind::modular) &&
                d < 3)
                throw ConfigError("correlation families need series length >= 3");
        }
        if (f.kind == FamilyKind::modular && f.modules > c.n_points)
            throw ConfigError("modules exceeds n_points");
    }
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    json j;
    try {
        j = json::parse(in, nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return from_json(j);
}

json ExperimentConfig::to_json() const {
    json fams = json::array();
    for (const auto& f : families) fams.push_back(bettisig::to_json(f));
    return json{{"families", fams},
                {"n_points", n_points},
                {"dims", dims},
                {"replicates", replicates},
                {"max_dim", max_dim},
                {"direction", direction},
                {"grid", grid},
                {"seed", seed},
                {"output_dir", output_dir},
                {"threads", threads},
                {"budget", budget},
                {"write_curves", write_curves},
                {"emit_gnuplot", emit_gnuplot}};
}

std::uint64_t ExperimentConfig::hash() const {
    json j = to_json();
    j.erase("output_dir");
    j.erase("threads");
    j.erase("emit_gnuplot");
    return stable_hash(j.dump());
}

SymmetricMatrix generate_family_matrix(const FamilySpec& family, std::size_t n_points,
                                       std::size_t dim, RngSeed seed) {
    switch (family.kind) {
        case FamilyKind::random:
            return random_symmetric(n_points, seed);
        case FamilyKind::euclidean:
            return distance_matrix(sample_cube(n_points, dim, seed));
        case FamilyKind::sphere:
            return distance_matrix(sample_sphere(n_points, dim, seed));
        case FamilyKind::hyperbolic:
            return distance_matrix(sample_hyperbolic(n_points, dim, {family.radius}, seed));
        case FamilyKind::random_correlation:
            return random_correlation(n_points, dim, seed);
        case FamilyKind::modular:
            return pearson_correlation(
                generate_modular_series({n_points, dim, family.modules, family.noise, seed}));
        case FamilyKind::external:
            break;
    }
    throw Error("external families are ingested, not generated");
}

MeanCurve mean_curve(const std::vector<const BettiCurve*>& curves) {
    MeanCurve m;
    if (curves.empty()) return m;
    const BettiCurve& first = *curves.front();
    m.count = curves.size();
    m.densities = first.densities;
    const std::size_t dims = first.values.size();
    const std::size_t points = first.densities.size();
    m.mean.assign(dims, std::vector<double>(points, 0.0));
    m.std_error.assign(dims, std::vector<double>(points, 0.0));
    for (const auto* c : curves)
        if (c->densities != first.densities || c->values.size() != dims)
            throw Error("cannot average curves on different grids");
    const double count = static_cast<double>(curves.size());
    for (std::size_t d = 0; d < dims; ++d) {
        for (std::size_t g = 0; g < points; ++g) {
            double s = 0.0, ss = 0.0;
            for (const auto* c : curves) {
                const double v = static_cast<double>(c->values[d][g]);
                s += v;
                ss += v * v;
            }
            const double mean = s / count;
            m.mean[d][g] = mean;
            if (curves.size() > 1) {
                const double var = std::max(0.0, (ss - count * mean * mean) / (count - 1.0));
                m.std_error[d][g] = std::sqrt(var / count);
            }
        }
    }
    return m;
}

const MeanCurve* ExperimentResult::mean_for(const std::string& family_key, std::size_t dim) const {
    for (const auto& m : means)
        if (m.family_key == family_key && m.dim == dim) return &m;
    return nullptr;
}

IngestResult ingest_series(TimeSeriesSet series, const IngestOptions& options) {
    IngestResult r;
    r.provenance = {{"format", "series_csv"},
                    {"preprocessing", options.preprocessing},
                    {"metric", options.metric},
                    {"n_series", series.n_series()},
                    {"raw_length", series.length()}};
    if (options.preprocessing == "log_returns") {
        try {
            series = log_returns(series);
        } catch (const NonPositivePrice& e) {
            throw PreprocessingError(std::string("log returns: ") + e.what());
        } catch (const PreprocessingError&) {
            throw;
        }
    } else if (options.preprocessing == "normalize") {
        try {
            series = normalize_series(series);
        } catch (const ConstantSeries& e) {
            throw PreprocessingError(std::string("normalize: ") + e.what());
        }
    } else if (options.preprocessing != "none") {
        throw PreprocessingError("unknown preprocessing '" + options.preprocessing + "'");
    }
    r.provenance["length"] = series.length();
    if (options.metric == "pearson")
        r.matrix = pearson_correlation(series);
    else if (options.metric == "euclidean")
        r.matrix = distance_matrix_from_series(series, SeriesMetric::euclidean, false);
    else if (options.metric == "correlation_distance")
        r.matrix = distance_matrix_from_series(series, SeriesMetric::correlation_distance, false);
    else
        throw ConfigError("unknown metric '" + options.metric + "'");
    r.series = std::move(series);
    return r;
}

IngestResult ingest(const std::string& path, const IngestOptions& options) {
    if (options.format == "matrix_csv") {
        if (options.preprocessing != "none")
            throw PreprocessingError("preprocessing '" + options.preprocessing +
                                     "' does not apply to a matrix file");
        LoadedMatrix loaded = load_matrix_file(path);
        IngestResult r;
        r.matrix = std::move(loaded.matrix);
        r.provenance = {{"format", "matrix_csv"},
                        {"path", path},
                        {"n", r.matrix.size()},
                        {"max_asymmetry", loaded.max_asymmetry}};
        return r;
    }
    if (options.format != "series_csv")
        throw ConfigError("unknown input format '" + options.format + "'");
    IngestResult r = ingest_series(load_series_file(path), options);
    r.provenance["path"] = path;
    return r;
}

std::vector<IntegralBettiSignature> segment_sweep(const TimeSeriesSet& series,
                                                  const std::vector<std::size_t>& lengths,
                                                  const SignatureConfig& config) {
    if (!std::is_sorted(lengths.begin(), lengths.end()))
        throw ConfigError("segment lengths must be sorted");
    for (auto L : lengths)
        if (L > series.length()) throw LengthExceedsData(L, series.length());
    std::vector<IntegralBettiSignature> out;
    out.reserve(lengths.size());
    for (auto L : lengths) {
        auto sig = signature_of_matrix(pearson_correlation(series.truncated(L)), config);
        sig.family = "segment";
        sig.label = "L=" + std::to_string(L);
        sig.sample_dim = L;
        out.push_back(std::move(sig));
    }
    return out;
}

namespace {

struct CellPlan {
    std::size_t family;
    std::size_t dim;
    std::size_t replicate;
};

void write_mean_curve(const fs::path& path, const MeanCurve& m, const std::string& direction,
                      std::uint64_t config_hash) {
    std::ofstream out(path);
    out << "# family=" << m.family_key << "\n# label=" << m.label << "\n# dim=" << m.dim
        << "\n# replicates=" << m.count << "\n# direction=" << direction
        << "\n# config_hash=" << std::hex << config_hash << std::dec << "\n";
    out << "density";
    for (std::size_t d = 0; d < m.mean.size(); ++d)
        out << ",beta_" << d << "_mean,beta_" << d << "_se";
    out << "\n" << std::setprecision(17);
    for (std::size_t g = 0; g < m.densities.size(); ++g) {
        out << m.densities[g];
        for (std::size_t d = 0; d < m.mean.size(); ++d)
            out << ',' << m.mean[d][g] << ',' << m.std_error[d][g];
        out << '\n';
    }
}

std::string hex(std::uint64_t x) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << x;
    return os.str();
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, bool write_files) {
    ExperimentResult result;
    result.config_hash = config.hash();
    const RngSeed root{config.seed, 0};

    std::vector<CellPlan> plan;
    for (std::size_t f = 0; f < config.families.size(); ++f) {
        if (config.families[f].kind == FamilyKind::external) {
            plan.push_back({f, 0, 0});
            continue;
        }
        for (auto d : config.dims)
            for (std::size_t r = 0; r < config.replicates; ++r) plan.push_back({f, d, r});
    }
    result.cells.resize(plan.size());

#ifdef _OPENMP
    if (config.threads > 0) omp_set_num_threads(static_cast<int>(config.threads));
#endif
    const long long cells = static_cast<long long>(plan.size());
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < cells; ++c) {
        const CellPlan& p = plan[static_cast<std::size_t>(c)];
        const FamilySpec& family = config.families[p.family];
        CellResult& cell = result.cells[static_cast<std::size_t>(c)];
        cell.family_key = family.key();
        cell.label = family.label();
        cell.dim = p.dim;
        cell.replicate = p.replicate;
        const auto start = std::chrono::steady_clock::now();
        try {
            cell.direction = direction_for(family, config.direction);
            const RngSeed seed =
                root.child(stable_hash(cell.family_key)).child(p.dim).child(p.replicate);
            SymmetricMatrix matrix;
            json provenance;
            std::size_t sample_dim = p.dim;
            if (family.kind == FamilyKind::external) {
                IngestResult in =
                    ingest(family.path, {family.format, family.preprocessing, family.metric});
                matrix = std::move(in.matrix);
                provenance = std::move(in.provenance);
                sample_dim = in.series ? in.series->length() : matrix.size();
                cell.dim = sample_dim;
            } else {
                matrix = generate_family_matrix(family, config.n_points, p.dim, seed);
            }
            const OrderComplex oc = build_order_complex(matrix, cell.direction);
            const DensityGrid grid = parse_grid(config.grid, matrix.size());
            BettiCurve curve =
                betti_curves(oc, std::max<std::size_t>(config.max_dim, 1), grid, config.budget);
            IntegralBettiSignature sig = signature_of_curve(curve);
            sig.label = cell.label;
            sig.family = cell.family_key;
            sig.n_points = matrix.size();
            sig.sample_dim = sample_dim;
            if (family.kind == FamilyKind::hyperbolic) sig.radius = family.radius;
            sig.direction = cell.direction;
            sig.seed = config.seed;
            sig.grid = grid.kind;
            sig.max_dim = curve.max_dim;
            sig.extra["replicate"] = p.replicate;
            sig.extra["stream"] = seed.stream;
            sig.extra["config_hash"] = hex(result.config_hash);
            if (family.kind == FamilyKind::modular) {
                sig.extra["n_modules"] = family.modules;
                sig.extra["noise_amplitude"] = family.noise;
            }
            if (!provenance.is_null()) sig.extra["provenance"] = provenance;
            cell.curve = std::move(curve);
            cell.signature = std::move(sig);
            cell.ok = true;
        } catch (const std::exception& e) {
            cell.ok = false;
            cell.error = e.what();
        }
        cell.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    // Mean curves per (family, dim) over successful cells.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < plan.size(); ++c)
        if (result.cells[c].ok) groups[{plan[c].family, result.cells[c].dim}].push_back(c);
    for (const auto& [key, members] : groups) {
        std::vector<const BettiCurve*> curves;
        for (auto c : members) curves.push_back(&*result.cells[c].curve);
        MeanCurve m = mean_curve(curves);
        m.family_key = config.families[key.first].key();
        m.label = config.families[key.first].label();
        m.dim = key.second;
        result.means.push_back(std::move(m));
    }

    result.exit_code = 0;
    for (const auto& cell : result.cells)
        if (!cell.ok) result.exit_code = 1;

    json manifest{{"config_hash", hex(result.config_hash)},
                  {"software_version", software_version},
                  {"config", config.to_json()},
                  {"cells", json::array()},
                  {"artifacts", json::array()}};

    if (write_files) {
        const fs::path root_dir(config.output_dir);
        fs::create_directories(root_dir / "curves");
        fs::create_directories(root_dir / "mean_curves");
        for (auto& cell : result.cells) {
            if (!cell.ok || !config.write_curves) continue;
            const std::string name = cell.family_key + "_d" + std::to_string(cell.dim) + "_r" +
                                     std::to_string(cell.replicate) + ".csv";
            const fs::path path = root_dir / "curves" / name;
            std::ofstream out(path);
            CurveMetadata meta{std::string(to_string(cell.direction)),
                               config.seed,
                               cell.signature->grid,
                               {{"family", cell.family_key},
                                {"dim", std::to_string(cell.dim)},
                                {"replicate", std::to_string(cell.replicate)},
                                {"config_hash", hex(result.config_hash)}}};
            write_curve_csv(out, *cell.curve, meta);
            cell.outputs.push_back(path.string());
        }
        {
            const fs::path path = root_dir / "signatures.jsonl";
            std::ofstream out(path);
            for (const auto& cell : result.cells)
                if (cell.ok) out << to_json(*cell.signature).dump() << '\n';
            manifest["artifacts"].push_back(path.string());
        }
        {
            const fs::path path = root_dir / "signatures.csv";
            std::ofstream out(path);
            out << "label,family,sample_dim,replicate,direction,b0_auc,b1_auc\n"
                << std::setprecision(17);
            for (const auto& cell : result.cells)
                if (cell.ok)
                    out << '"' << cell.label << "\"," << cell.family_key << ',' << cell.dim << ','
                        << cell.replicate << ',' << to_string(cell.direction) << ','
                        << cell.signature->b0_auc << ',' << cell.signature->b1_auc << '\n';
            manifest["artifacts"].push_back(path.string());
        }
        for (const auto& m : result.means) {
            const fs::path path =
                root_dir / "mean_curves" / (m.family_key + "_d" + std::to_string(m.dim) + ".csv");
            std::string direction;
            for (const auto& f : config.families)
                if (f.key() == m.family_key)
                    direction = std::string(to_string(direction_for(f, config.direction)));
            write_mean_curve(path, m, direction, result.config_hash);
            manifest["artifacts"].push_back(path.string());
        }
    }

    for (const auto& cell : result.cells) {
        json entry{{"family", cell.family_key},
                   {"label", cell.label},
                   {"dim", cell.dim},
                   {"replicate", cell.replicate},
                   {"status", cell.ok ? "ok" : "error"},
                   {"wall_seconds", cell.wall_seconds},
                   {"outputs", cell.outputs}};
        if (!cell.ok) entry["error"] = cell.error;
        manifest["cells"].push_back(std::move(entry));
    }
    result.manifest = manifest;

    if (write_files) {
        if (config.emit_gnuplot) write_gnuplot_scripts(config.output_dir, result);
        std::ofstream out(fs::path(config.output_dir) / "manifest.json");
        out << result.manifest.dump(2) << '\n';
    }
    return result;
}

void write_gnuplot_scripts(const std::string& output_dir, const ExperimentResult& result) {
    const fs::path dir = fs::path(output_dir) / "plots";
    fs::create_directories(dir);
    std::set<std::size_t> dims;
    for (const auto& m : result.means) dims.insert(m.dim);
    for (auto dim : dims) {
        std::size_t max_betti = 0;
        for (const auto& m : result.means)
            if (m.dim == dim) max_betti = std::max(max_betti, m.mean.size());
        for (std::size_t b = 0; b < max_betti; ++b) {
            std::ofstream gp(dir /
                             ("betti" + std::to_string(b) + "_d" + std::to_string(dim) + ".gp"));
            gp << "set datafile separator ','\nset key outside\n";
            gp << "set xlabel 'edge density'\nset ylabel 'mean beta_" << b << "'\n";
            gp << "set terminal pngcairo size 900,600\nset output 'betti" << b << "_d" << dim
               << ".png'\n";
            gp << "plot ";
            bool first = true;
            for (const auto& m : result.means) {
                if (m.dim != dim || b >= m.mean.size()) continue;
                if (!first) gp << ", \\\n     ";
                first = false;
                gp << "'../mean_curves/" << m.family_key << "_d" << dim
                   << ".csv' using 1:" << (2 + 2 * b) << " with lines title '" << m.label << "'";
            }
            gp << "\n";
        }
    }
    std::ofstream gp(dir / "signatures.gp");
    gp << "set datafile separator ','\nset key outside\nset xlabel 'B0 AUC'\nset ylabel 'B1 AUC'\n";
    gp << "set terminal pngcairo size 900,600\nset output 'signatures.png'\n";
    std::set<std::string> labels;
    for (const auto& cell : result.cells)
        if (cell.ok) labels.insert(cell.label);
    gp << "plot ";
    bool first = true;
    for (const auto& label : labels) {
        if (!first) gp << ", \\\n     ";
        first = false;
        gp << "'< grep -F \"\\\"" << label
           << "\\\"\" ../signatures.csv' using 6:7 with points title '" << label << "'";
    }
    gp << "\n";
}

}  // namespace bettisig
