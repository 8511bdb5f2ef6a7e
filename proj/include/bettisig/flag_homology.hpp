#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bettisig/filtration.hpp"

namespace bettisig {

inline constexpr std::uint64_t default_simplex_budget = 200'000'000;

// Pascal table C(n, k) for n <= max_n, k <= max_k. Entries saturate at
// uint64 max instead of wrapping.
class BinomialTable {
public:
    BinomialTable(std::size_t max_n, std::size_t max_k);
    std::uint64_t operator()(std::size_t n, std::size_t k) const {
        return k > n ? 0 : table_[n * (max_k_ + 1) + k];
    }

private:
    std::size_t max_k_;
    std::vector<std::uint64_t> table_;
};

// A simplex of the flag filtration: combinatorial-number-system index of its
// vertex set plus the rank of its latest edge (0 for vertices).
struct FilteredSimplex {
    std::uint64_t index = 0;
    std::uint32_t rank = 0;

    bool operator==(const FilteredSimplex&) const = default;
};

// Clique complex of every graph in an order complex. Cliques of size below
// max_clique_size are stored explicitly, sorted by (rank, index); cliques of
// the top size are only counted and can be streamed with for_each_simplex.
class FlagFiltration {
public:
    FlagFiltration(const OrderComplex& oc, std::size_t max_clique_size);

    const OrderComplex& order_complex() const { return oc_; }
    std::size_t n_vertices() const { return n_; }
    std::size_t max_clique_size() const { return max_clique_size_; }
    // Highest Betti dimension this filtration can answer for.
    std::size_t max_dim() const { return max_clique_size_ >= 2 ? max_clique_size_ - 2 : 0; }

    // 0 when {i, j} is not an edge of the final graph.
    std::uint32_t edge_rank(std::size_t i, std::size_t j) const { return ranks_[i * n_ + j]; }

    // Stored simplices of dimension dim (dim + 2 <= max_clique_size).
    const std::vector<FilteredSimplex>& simplices(std::size_t dim) const { return stored_[dim]; }
    std::size_t stored_dims() const { return stored_.size(); }
    std::uint64_t count(std::size_t dim) const { return counts_.at(dim); }
    std::uint64_t total_count() const;

    const BinomialTable& binomials() const { return binomials_; }

    // Vertices in decreasing order.
    void vertices_of(std::uint64_t index, std::size_t dim, std::span<std::uint32_t> out) const;
    std::vector<std::uint32_t> vertices_of(std::uint64_t index, std::size_t dim) const;
    std::uint64_t index_of(std::span<const std::uint32_t> sorted_ascending) const;
    // Rank of the latest edge among the given vertices; nullopt when some pair
    // is not an edge.
    std::optional<std::uint32_t> rank_of(std::span<const std::uint32_t> vertices) const;

    // Visits every clique with dim + 1 vertices (vertices ascending) and its
    // rank. Works for the streamed top dimension as well.
    void for_each_simplex(
        std::size_t dim,
        const std::function<void(std::span<const std::uint32_t>, std::uint32_t)>& visit) const;

private:
    friend FlagFiltration enumerate_cliques(const OrderComplex&, std::size_t, std::uint64_t);

    OrderComplex oc_;
    std::size_t n_;
    std::size_t max_clique_size_;
    std::vector<std::uint32_t> ranks_;
    std::vector<std::vector<std::uint32_t>> neighbors_above_;
    BinomialTable binomials_;
    std::vector<std::vector<FilteredSimplex>> stored_;
    std::vector<std::uint64_t> counts_;
    bool complete_ = false;
};

// Throws BudgetExceeded when the number of cliques of size <= max_clique_size
// exceeds `budget`.
FlagFiltration enumerate_cliques(const OrderComplex& oc, std::size_t max_clique_size,
                                 std::uint64_t budget = default_simplex_budget);

// Z2 boundary matrix of one dimension. Columns are p-simplices in filtration
// order, rows index (p-1)-simplices in filtration order.
struct BoundaryMatrix {
    std::size_t dim = 0;
    std::size_t rows = 0;
    std::vector<std::vector<std::uint32_t>> columns;  // sorted row indices
};

// Explicit assembly for small complexes (stored dimensions only).
BoundaryMatrix assemble_boundary(const FlagFiltration& filtration, std::size_t dim);

struct PersistenceInterval {
    std::uint64_t birth = 0;             // step at which the class appears
    std::optional<std::uint64_t> death;  // step at which it dies; none = never

    bool contains(std::uint64_t step) const { return birth <= step && (!death || step < *death); }
};

// Non-empty intervals per dimension, 0..max_dim.
struct Barcode {
    std::vector<std::vector<PersistenceInterval>> dims;
};

Barcode persistence_barcode(const FlagFiltration& filtration);

struct DensityGrid {
    std::vector<double> densities;  // sorted, within [0, 1]
    std::string kind;               // "per_step" or "uniform:<points>"

    // s / C(N,2) for s = 0..C(N,2).
    static DensityGrid per_step(std::uint64_t pair_count);
    // `intervals` + 1 evenly spaced densities including both endpoints.
    static DensityGrid uniform(std::size_t intervals);
    // per_step for N <= 120, else uniform(512).
    static DensityGrid default_for(std::size_t n_vertices);
};

struct BettiCurve {
    std::size_t max_dim = 0;
    std::vector<double> densities;
    std::vector<std::uint64_t> steps;                // edge count behind each density
    std::vector<std::vector<std::uint64_t>> values;  // values[dim][grid index]

    bool operator==(const BettiCurve&) const = default;
};

BettiCurve betti_curves(const FlagFiltration& filtration, const DensityGrid& grid);
BettiCurve betti_curves(const Barcode& barcode, const OrderComplex& oc, const DensityGrid& grid);

// Convenience: enumerate cliques of size max_dim + 2 and evaluate curves.
BettiCurve betti_curves(const OrderComplex& oc, std::size_t max_dim, const DensityGrid& grid,
                        std::uint64_t budget = default_simplex_budget);

// beta_0 after each of the steps 0..edge_count(), by union-find.
std::vector<std::uint64_t> connected_components_curve(const OrderComplex& oc);

// Brute-force oracle: the full clique complex of the graph, dense Z2 boundary
// matrices, and ranks by Gaussian elimination. Returns beta_0..beta_max_dim.
// Throws TooLarge when the graph has more than 16 vertices.
std::vector<std::uint64_t> betti_brute_force(const EdgeSet& graph, std::size_t max_dim);

// Number of cliques of each size 1..N of the graph (entry p = p-simplices).
std::vector<std::uint64_t> clique_counts_brute_force(const EdgeSet& graph);

// Curve CSV: metadata comment lines, header, one row per grid density.
struct CurveMetadata {
    std::string direction;
    std::optional<std::uint64_t> seed;
    std::string grid;
    std::vector<std::pair<std::string, std::string>> extra;
};
void write_curve_csv(std::ostream& out, const BettiCurve& curve, const CurveMetadata& meta);
BettiCurve read_curve_csv(std::istream& in);

}  // namespace bettisig
