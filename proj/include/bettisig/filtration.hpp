#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bettisig/matrix.hpp"

namespace bettisig {

enum class Direction { descending, ascending };

std::string_view to_string(Direction d);
// Accepts "desc", "descending", "asc", "ascending".
Direction parse_direction(std::string_view text);

struct Edge {
    std::uint32_t i = 0;  // i < j
    std::uint32_t j = 0;
    double value = 0.0;

    bool operator==(const Edge&) const = default;
};

struct EdgeSet {
    std::size_t n_vertices = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

inline std::uint64_t choose2(std::uint64_t n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

// Sorted edge filtration of a symmetric matrix. Edge s (1-based rank) enters
// the graph at step s; step 0 is the edgeless graph on all vertices.
class OrderComplex {
public:
    OrderComplex() = default;
    OrderComplex(std::size_t n_vertices, std::vector<Edge> edges, Direction direction);

    std::size_t n_vertices() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    // C(N, 2), the density denominator.
    std::uint64_t pair_count() const { return choose2(n_); }
    Direction direction() const { return direction_; }

    // edges()[s - 1] is the edge of rank s.
    const std::vector<Edge>& edges() const { return edges_; }

    double density(std::uint64_t step) const {
        return pair_count() == 0 ? 0.0
                                 : static_cast<double>(step) / static_cast<double>(pair_count());
    }

    // Number of edges present at density rho: floor(rho * C(N,2)), capped at
    // edge_count(). Products that land within 1e-9 of an integer count as it.
    std::uint64_t steps_at_density(double rho) const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    Direction direction_ = Direction::descending;
};

// All C(N,2) off-diagonal pairs, sorted by value in `direction`; ties broken
// by lexicographic (i, j). Throws NonFiniteEntry.
OrderComplex build_order_complex(const SymmetricMatrix& matrix,
                                 Direction direction = Direction::descending);

// Filtration of an explicit graph: edges enter in the given order. Used for
// hand-built complexes that are not complete at the end.
OrderComplex order_complex_from_edges(
    std::size_t n_vertices, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

EdgeSet graph_at_density(const OrderComplex& oc, double rho);
EdgeSet graph_at_step(const OrderComplex& oc, std::uint64_t step);

// Debug dump: rank,i,j,value,density
void write_filtration_csv(std::ostream& out, const OrderComplex& oc);

}  // namespace bettisig
