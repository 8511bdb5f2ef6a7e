#pragma once

#include <vector>

#include "bettisig/filtration.hpp"
#include "bettisig/matrix.hpp"
#include "bettisig/rng.hpp"

namespace test {

// Uniform random symmetric matrix with distinct entries (almost surely).
inline bettisig::SymmetricMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    bettisig::Rng rng({seed, 99});
    bettisig::SymmetricMatrix m(n);
    for (auto& v : m.upper()) v = rng.uniform();
    return m;
}

inline bettisig::OrderComplex graph(std::size_t n,
                                    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    return bettisig::order_complex_from_edges(n, edges);
}

// Seven-vertex example: two filled triangles sharing an edge, a square 2-3-5-4, a
// filled triangle 4-5-6. beta = (1, 1).
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> seven_vertex_edges() {
    return {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {5, 6}, {4, 5}, {4, 6}};
}

}  // namespace test
