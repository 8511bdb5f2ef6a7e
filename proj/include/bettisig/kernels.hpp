#pragma once

// Pairwise kernels over the rows of a dense row-major array. Each kernel has a
// serial reference and an OpenMP version; both evaluate the same per-pair
// expression, so their outputs are bitwise identical.

#include <cstddef>
#include <span>

#include "bettisig/matrix.hpp"

namespace bettisig::kernels {

enum class Exec { serial, parallel };

// Row-major n x d view.
struct RowView {
    std::span<const double> data;
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::span<const double> row(std::size_t i) const { return data.subspan(i * cols, cols); }
};

double dot(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);

// Visits every pair i < j and stores fn(i, j) in out.upper() at the pair offset.
template <class Fn>
void fill_pairs(SymmetricMatrix& out, Exec exec, Fn&& fn) {
    const std::size_t n = out.size();
    auto upper = out.upper();
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t base = out.offset(i, i + 1 < n ? i + 1 : i);
            for (std::size_t j = i + 1; j < n; ++j) upper[base + (j - i - 1)] = fn(i, j);
        }
        return;
    }
    const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long ii = 0; ii < nn; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        if (i + 1 >= n) continue;
        std::size_t base = out.offset(i, i + 1);
        for (std::size_t j = i + 1; j < n; ++j) upper[base + (j - i - 1)] = fn(i, j);
    }
}

SymmetricMatrix gram(RowView rows, Exec exec = Exec::parallel);
SymmetricMatrix euclidean(RowView rows, Exec exec = Exec::parallel);
// arccos of the inner product; rows must be unit vectors. Inputs within 1e-9
// outside [-1, 1] are clamped, anything further throws NumericalDomain.
SymmetricMatrix spherical(RowView rows, Exec exec = Exec::parallel);
// Poincare ball distance; rows must have norm < 1.
SymmetricMatrix poincare(RowView rows, Exec exec = Exec::parallel);

double poincare_distance(std::span<const double> v, std::span<const double> w);

}  // namespace bettisig::kernels
