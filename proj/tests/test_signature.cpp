#include <cmath>
#include <numeric>

#include "bettisig/errors.hpp"
#include "bettisig/samplers.hpp"
#include "bettisig/signature.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bettisig;

namespace {
BettiCurve synthetic(std::vector<double> d, std::vector<std::uint64_t> b0) {
    BettiCurve c;
    c.max_dim = 0;
    c.densities = std::move(d);
    c.steps.assign(c.densities.size(), 0);
    c.values = {std::move(b0)};
    return c;
}
// beta_0 and beta_1 of a clique complex by dense Z2 elimination over edges and
// triangles only. The library oracle stops at 16 vertices; this one only needs
// dimensions <= 2 and so handles N = 20.
std::pair<std::uint64_t, std::uint64_t> low_betti(const EdgeSet& g) {
    const std::size_t n = g.n_vertices;
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, -1));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        adj[g.edges[e].first][g.edges[e].second] = static_cast<int>(e);
        adj[g.edges[e].second][g.edges[e].first] = static_cast<int>(e);
    }
    auto rank = [](std::vector<std::vector<bool>> cols) {
        std::size_t r = 0;
        const std::size_t rows = cols.empty() ? 0 : cols[0].size();
        for (std::size_t row = 0; row < rows && r < cols.size(); ++row) {
            std::size_t k = r;
            while (k < cols.size() && !cols[k][row]) ++k;
            if (k == cols.size()) continue;
            std::swap(cols[r], cols[k]);
            for (std::size_t c = r + 1; c < cols.size(); ++c)
                if (cols[c][row])
                    for (std::size_t q = 0; q < rows; ++q) cols[c][q] = cols[c][q] != cols[r][q];
            ++r;
        }
        return r;
    };
    std::vector<std::vector<bool>> d1;
    for (auto [i, j] : g.edges) {
        std::vector<bool> c(n, false);
        c[i] = c[j] = true;
        d1.push_back(c);
    }
    std::vector<std::vector<bool>> d2;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (adj[a][b] >= 0 && adj[a][c] >= 0 && adj[b][c] >= 0) {
                    std::vector<bool> col(g.edges.size(), false);
                    col[static_cast<std::size_t>(adj[a][b])] =
                        col[static_cast<std::size_t>(adj[a][c])] =
                            col[static_cast<std::size_t>(adj[b][c])] = true;
                    d2.push_back(col);
                }
    const std::size_t r1 = rank(d1), r2 = rank(d2);
    return {n - r1, g.edges.size() - r1 - r2};
}
}  // namespace

TEST_CASE("auc examples") {
    CHECK(auc(synthetic({0, 0.5, 1}, {5, 5, 5}), 0) == doctest::Approx(5.0));
    CHECK(auc(synthetic({0, 0.25, 0.5, 0.75, 1}, {0, 0, 0, 0, 1}), 0) == doctest::Approx(0.125));
    // linear ramp: values scaled by 4 on a 5-point grid, so auc = 4 * 0.5
    CHECK(auc(synthetic({0, 0.25, 0.5, 0.75, 1}, {0, 1, 2, 3, 4}), 0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(auc(synthetic({0, 1}, {1, 1}), 1), DimOutOfRange);
}

TEST_CASE("auc of a spanning-tree order filtration") {
    // N = 6: first five edges form a path, so beta_0 = 6,5,4,3,2,1 then flat.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges{
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    for (std::uint32_t i = 0; i < 6; ++i)
        for (std::uint32_t j = i + 1; j < 6; ++j)
            if (j != i + 1) edges.push_back({i, j});
    auto oc = test::graph(6, edges);
    auto curve = betti_curves(oc, 1, DensityGrid::per_step(15));
    // trapezoids of width 1/15: (6+5)/2+(5+4)/2+(4+3)/2+(3+2)/2+(2+1)/2 = 17.5, then 10 flat steps
    // at 1
    CHECK(auc(curve, 0) == doctest::Approx((17.5 + 10.0) / 15.0));
}

TEST_CASE("three distinct values give no loop") {
    SymmetricMatrix m(3);
    m.set(0, 1, 0.3);
    m.set(0, 2, 0.2);
    m.set(1, 2, 0.1);
    auto s = signature_of_matrix(m);
    CHECK(s.b1_auc == 0.0);
    CHECK(s.n_points == 3);
}

TEST_CASE("signatures are invariant to relabeling and affine maps") {
    auto m = test::random_matrix(15, 21);
    auto base = signature_of_matrix(m);
    std::vector<std::size_t> perm(15);
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    std::swap(perm[2], perm[9]);
    SymmetricMatrix p(15);
    for (std::size_t i = 0; i < 15; ++i)
        for (std::size_t j = i + 1; j < 15; ++j) p.set(perm[i], perm[j], m(i, j));
    auto ps = signature_of_matrix(p);
    CHECK(ps.b0_auc == base.b0_auc);
    CHECK(ps.b1_auc == base.b1_auc);
    auto a = m;
    for (auto& v : a.upper()) v = 3.5 * v - 2.0;
    auto as = signature_of_matrix(a);
    CHECK(as.b0_auc == base.b0_auc);
    CHECK(as.b1_auc == base.b1_auc);
}

TEST_CASE("signature equals the brute-force pipeline") {
    auto cloud = sample_cube(20, 20, {17, 0});
    auto m = distance_matrix(cloud);
    SignatureConfig cfg;
    cfg.direction = Direction::ascending;
    auto s = signature_of_matrix(m, cfg);
    auto oc = build_order_complex(m, Direction::ascending);
    // step-function trapezoid over the per-step grid from the oracle
    double b0 = 0, b1 = 0;
    std::vector<std::uint64_t> prev;
    for (std::uint64_t step = 0; step <= oc.edge_count(); ++step) {
        auto [x, y] = low_betti(graph_at_step(oc, step));
        std::vector<std::uint64_t> b{x, y};
        if (step > 0) {
            b0 += 0.5 * static_cast<double>(prev[0] + b[0]) / static_cast<double>(oc.pair_count());
            b1 += 0.5 * static_cast<double>(prev[1] + b[1]) / static_cast<double>(oc.pair_count());
        }
        prev = b;
    }
    CHECK(s.b0_auc == doctest::Approx(b0).epsilon(1e-12));
    CHECK(s.b1_auc == doctest::Approx(b1).epsilon(1e-12));
    CHECK(s.b0_auc >= 1.0 - 1.0 / 190);
    CHECK(s.b0_auc <= 20.0);
}

TEST_CASE("quadrature consistency between per-step and uniform grids") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto m = test::random_matrix(60, seed);
        SignatureConfig fine, coarse;
        fine.grid = DensityGrid::per_step(choose2(60));
        coarse.grid = DensityGrid::uniform(512);
        auto a = signature_of_matrix(m, fine), b = signature_of_matrix(m, coarse);
        CHECK(std::abs(a.b0_auc - b.b0_auc) / a.b0_auc < 0.02);
        CHECK(std::abs(a.b1_auc - b.b1_auc) / a.b1_auc < 0.02);
    }
}

TEST_CASE("json round trip keeps extras") {
    auto s = signature_of_matrix(test::random_matrix(8, 1));
    s.label = "RM";
    s.family = "random";
    s.seed = 9;
    s.radius = 0.1;
    s.extra["n_modules"] = 3;
    auto j = to_json(s);
    for (const char* key : {"label", "family", "n_points", "sample_dim", "radius", "direction",
                            "seed", "b0_auc", "b1_auc", "grid", "max_dim", "n_modules"})
        CHECK(j.contains(key));
    CHECK(signature_from_json(j) == s);
    CHECK_THROWS_AS(signature_from_json(nlohmann::json{{"b0_auc", "x"}}), ParseError);
}
