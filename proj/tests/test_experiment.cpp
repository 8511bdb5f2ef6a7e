#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bettisig/errors.hpp"
#include "bettisig/experiment.hpp"
#include "bettisig/io.hpp"
#include "bettisig/samplers.hpp"
#include "doctest.h"

using namespace bettisig;
namespace fs = std::filesystem;

namespace {
std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("bettisig_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

// Two-sample KS statistic and asymptotic p-value.
double ks_pvalue(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(
            d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
    }
    const double ne =
        static_cast<double>(a.size() * b.size()) / static_cast<double>(a.size() + b.size());
    const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
    double p = 0;
    for (int k = 1; k < 100; ++k)
        p += 2 * ((k % 2) ? 1 : -1) * std::exp(-2.0 * k * k * lambda * lambda);
    return std::clamp(p, 0.0, 1.0);
}
}  // namespace

TEST_CASE("config parsing") {
    auto c = ExperimentConfig::from_json(nlohmann::json::parse(R"({
        "families": ["random", {"type": "hyperbolic", "radius": 0.1}, {"type": "modular", "modules": 3}],
        "n_points": 12, "dims": [16], "replicates": 2, "seed": 4})"));
    CHECK(c.families.size() == 3);
    CHECK(c.families[1].key() == "hyperbolic_R0.1");
    CHECK(c.families[1].label() == "HG(R=0.1)");
    CHECK(c.families[2].label() == "MOD(m=3)");
    CHECK(ExperimentConfig::from_json(c.to_json()).hash() == c.hash());
    auto d = c;
    d.output_dir = "elsewhere";
    d.threads = 3;
    CHECK(d.hash() == c.hash());
    d.seed = 5;
    CHECK(d.hash() != c.hash());
    CHECK_THROWS_AS(
        ExperimentConfig::from_json(nlohmann::json::parse(R"({"families":["random"],"bogus":1})")),
        ConfigError);
    CHECK_THROWS_AS(ExperimentConfig::from_json(nlohmann::json::parse(R"({"families":["nope"]})")),
                    ConfigError);
    CHECK_THROWS_AS(
        ExperimentConfig::from_json(nlohmann::json::parse(R"({"families":["random"],"grid":"x"})")),
        ConfigError);
    CHECK_THROWS_AS(ExperimentConfig::from_json(nlohmann::json::parse(R"({"families":[]})")),
                    ConfigError);
}

TEST_CASE("direction policy") {
    FamilySpec sphere{FamilyKind::sphere};
    FamilySpec rc{FamilyKind::random_correlation};
    CHECK(direction_for(sphere, "auto") == Direction::ascending);
    CHECK(direction_for(rc, "auto") == Direction::descending);
    CHECK(direction_for(sphere, "desc") == Direction::descending);
    sphere.direction = Direction::descending;
    CHECK(direction_for(sphere, "auto") == Direction::descending);
}

TEST_CASE("experiment bookkeeping and byte-identical reruns") {
    auto dir = scratch("bookkeeping");
    ExperimentConfig c;
    c.families = {FamilySpec{FamilyKind::random}};
    c.n_points = 10;
    c.dims = {16};
    c.replicates = 2;
    c.output_dir = (dir / "a").string();
    auto r = run_experiment(c);
    CHECK(r.exit_code == 0);
    CHECK(std::distance(fs::directory_iterator(dir / "a" / "curves"), fs::directory_iterator{}) ==
          2);
    CHECK(std::distance(fs::directory_iterator(dir / "a" / "mean_curves"),
                        fs::directory_iterator{}) == 1);
    const auto jsonl = slurp(dir / "a" / "signatures.jsonl");
    CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 2);
    CHECK(fs::exists(dir / "a" / "manifest.json"));

    c.output_dir = (dir / "b").string();
    c.threads = 1;
    run_experiment(c);
    CHECK(slurp(dir / "b" / "signatures.jsonl") == jsonl);
    CHECK(slurp(dir / "b" / "curves" / "random_d16_r1.csv") ==
          slurp(dir / "a" / "curves" / "random_d16_r1.csv"));
}

TEST_CASE("mean curve of identical curves has zero error") {
    BettiCurve a;
    a.max_dim = 0;
    a.densities = {0, 1};
    a.steps = {0, 1};
    a.values = {{2, 1}};
    auto m = mean_curve({&a, &a});
    CHECK(m.mean[0] == std::vector<double>{2, 1});
    CHECK(m.std_error[0] == std::vector<double>{0, 0});
}

TEST_CASE("failed cells are reported without aborting") {
    auto dir = scratch("partial");
    ExperimentConfig c;
    FamilySpec ext{FamilyKind::external};
    ext.path = "/nonexistent/series.csv";
    c.families = {FamilySpec{FamilyKind::random}, ext};
    c.n_points = 8;
    c.dims = {16};
    c.output_dir = dir.string();
    c.emit_gnuplot = true;
    auto r = run_experiment(c);
    CHECK(r.exit_code == 1);
    CHECK(r.cells[0].ok);
    CHECK_FALSE(r.cells[1].ok);
    CHECK(r.manifest["cells"][1]["status"] == "error");
    CHECK(fs::exists(dir / "plots" / "signatures.gp"));
    CHECK(fs::exists(dir / "plots" / "betti1_d16.gp"));
}

TEST_CASE("ingest composes with separate calls") {
    auto dir = scratch("ingest");
    auto prices = TimeSeriesSet::from_rows(
        {{10, 11, 12.5, 12, 13}, {5, 5.5, 5.2, 5.9, 6.1}, {1, 0.9, 0.95, 1.2, 1.1}});
    {
        std::ofstream out(dir / "prices.csv");
        write_series_csv(out, prices);
    }
    auto r = ingest((dir / "prices.csv").string(), {"series_csv", "log_returns", "pearson"});
    CHECK(r.matrix.size() == 3);
    auto expect = pearson_correlation(log_returns(load_series_file((dir / "prices.csv").string())));
    for (std::size_t k = 0; k < expect.pair_count(); ++k)
        CHECK(r.matrix.upper()[k] == doctest::Approx(expect.upper()[k]).epsilon(1e-15));
    CHECK(r.provenance["preprocessing"] == "log_returns");

    auto plain = ingest((dir / "prices.csv").string());
    CHECK(plain.matrix.size() == 3);

    {
        std::ofstream out(dir / "neg.csv");
        out << "a,b\n1,2\n-1,3\n2,4\n";
    }
    CHECK_THROWS_AS(ingest((dir / "neg.csv").string(), {"series_csv", "log_returns", "pearson"}),
                    PreprocessingError);
    {
        std::ofstream out(dir / "asym.csv");
        out << "1,0.5\n0.6,1\n";
    }
    CHECK_THROWS_AS(ingest((dir / "asym.csv").string(), {"matrix_csv", "none", "pearson"}),
                    ParseError);
    CHECK_THROWS_AS(ingest((dir / "asym.csv").string(), {"matrix_csv", "log_returns", "pearson"}),
                    PreprocessingError);
}

TEST_CASE("segment sweep") {
    Rng rng({1, 2});
    auto s = white_noise(8, 64, rng);
    auto sigs = segment_sweep(s, {4, 8, 16});
    REQUIRE(sigs.size() == 3);
    CHECK(sigs[0].sample_dim == 4);
    CHECK(sigs[2].sample_dim == 16);
    auto full = segment_sweep(s, {64});
    auto direct = signature_of_matrix(pearson_correlation(s));
    CHECK(full[0].b0_auc == direct.b0_auc);
    CHECK(full[0].b1_auc == direct.b1_auc);
    CHECK_THROWS_AS(segment_sweep(s, {65}), LengthExceedsData);
    CHECK_THROWS_AS(segment_sweep(s, {8, 4}), ConfigError);
}

TEST_CASE("white-noise segments match random correlation in distribution") {
    std::vector<double> a0, a1, b0, b1;
    for (std::uint64_t rep = 0; rep < 30; ++rep) {
        Rng rng({100 + rep, 0});
        auto s = segment_sweep(white_noise(20, 10000, rng), {10000})[0];
        a0.push_back(s.b0_auc);
        a1.push_back(s.b1_auc);
        auto t = signature_of_matrix(random_correlation(20, 10000, {500 + rep, 0}));
        b0.push_back(t.b0_auc);
        b1.push_back(t.b1_auc);
    }
    CHECK(ks_pvalue(a0, b0) > 0.001);
    CHECK(ks_pvalue(a1, b1) > 0.001);
}

TEST_CASE("segment signatures stabilize as segments grow") {
    std::vector<double> short_b0, long_b0;
    for (std::uint64_t rep = 0; rep < 30; ++rep) {
        Rng rng({300 + rep, 0});
        auto sigs = segment_sweep(white_noise(15, 2048, rng), {16, 2048});
        short_b0.push_back(sigs[0].b0_auc);
        long_b0.push_back(sigs[1].b0_auc);
    }
    auto variance = [](const std::vector<double>& v) {
        double m = 0, s = 0;
        for (double x : v) m += x / static_cast<double>(v.size());
        for (double x : v) s += (x - m) * (x - m);
        return s / static_cast<double>(v.size() - 1);
    };
    CHECK(variance(long_b0) < variance(short_b0));
}

TEST_CASE("manifest lists every cell once") {
    auto dir = scratch("manifest");
    ExperimentConfig c;
    c.families = {FamilySpec{FamilyKind::random}, FamilySpec{FamilyKind::sphere}};
    c.n_points = 8;
    c.dims = {4, 16};
    c.replicates = 3;
    c.output_dir = dir.string();
    auto r = run_experiment(c);
    CHECK(r.manifest["cells"].size() == 12);
    auto written = nlohmann::json::parse(slurp(dir / "manifest.json"));
    CHECK(written["config_hash"] == r.manifest["config_hash"]);
    CHECK(written["software_version"] == software_version);
}
