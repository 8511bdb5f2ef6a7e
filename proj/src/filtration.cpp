#include "bettisig/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "bettisig/errors.hpp"

namespace bettisig {

std::string_view to_string(Direction d) {
    return d == Direction::descending ? "desc" : "asc";
}

Direction parse_direction(std::string_view text) {
    if (text == "desc" || text == "descending") return Direction::descending;
    if (text == "asc" || text == "ascending") return Direction::ascending;
    throw ConfigError("unknown direction '" + std::string(text) + "'");
}

OrderComplex::OrderComplex(std::size_t n_vertices, std::vector<Edge> edges, Direction direction)
    : n_(n_vertices), edges_(std::move(edges)), direction_(direction) {}

std::uint64_t OrderComplex::steps_at_density(double rho) const {
    if (!(rho > 0.0)) return 0;
    const double x = rho * static_cast<double>(pair_count());
    auto s = static_cast<std::uint64_t>(std::floor(x));
    if (x - static_cast<double>(s) > 1.0 - 1e-9) ++s;
    return std::min<std::uint64_t>(s, edges_.size());
}

OrderComplex build_order_complex(const SymmetricMatrix& matrix, Direction direction) {
    const std::size_t n = matrix.size();
    std::vector<Edge> edges;
    edges.reserve(matrix.pair_count());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = matrix(i, j);
            if (!std::isfinite(v)) throw NonFiniteEntry(i, j);
            edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), v});
        }
    }
    // Edges are generated in lexicographic (i, j) order, so a stable sort on
    // value alone yields the lexicographic tie-break.
    if (direction == Direction::descending)
        std::stable_sort(edges.begin(), edges.end(),
                         [](const Edge& a, const Edge& b) { return a.value > b.value; });
    else
        std::stable_sort(edges.begin(), edges.end(),
                         [](const Edge& a, const Edge& b) { return a.value < b.value; });
    return OrderComplex(n, std::move(edges), direction);
}

OrderComplex order_complex_from_edges(
    std::size_t n_vertices, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    double rank = 0.0;
    for (auto [a, b] : edges) {
        if (a == b || a >= n_vertices || b >= n_vertices)
            throw Error("invalid edge {" + std::to_string(a) + ", " + std::to_string(b) + "}");
        out.push_back({std::min(a, b), std::max(a, b), ++rank});
    }
    return OrderComplex(n_vertices, std::move(out), Direction::ascending);
}

EdgeSet graph_at_step(const OrderComplex& oc, std::uint64_t step) {
    EdgeSet g{oc.n_vertices(), {}};
    step = std::min<std::uint64_t>(step, oc.edge_count());
    g.edges.reserve(step);
    for (std::uint64_t s = 0; s < step; ++s) g.edges.emplace_back(oc.edges()[s].i, oc.edges()[s].j);
    return g;
}

EdgeSet graph_at_density(const OrderComplex& oc, double rho) {
    return graph_at_step(oc, oc.steps_at_density(rho));
}

void write_filtration_csv(std::ostream& out, const OrderComplex& oc) {
    out << "# direction=" << to_string(oc.direction()) << "\n";
    out << "rank,i,j,value,density\n";
    out << std::setprecision(17);
    for (std::size_t s = 0; s < oc.edge_count(); ++s) {
        const Edge& e = oc.edges()[s];
        out << (s + 1) << ',' << e.i << ',' << e.j << ',' << e.value << ',' << oc.density(s + 1)
            << '\n';
    }
}

}  // namespace bettisig
