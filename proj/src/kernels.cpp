#include "bettisig/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bettisig/errors.hpp"

namespace bettisig::kernels {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

SymmetricMatrix gram(RowView rows, Exec exec) {
    SymmetricMatrix out(rows.rows);
    fill_pairs(out, exec,
               [&](std::size_t i, std::size_t j) { return dot(rows.row(i), rows.row(j)); });
    return out;
}

SymmetricMatrix euclidean(RowView rows, Exec exec) {
    SymmetricMatrix out(rows.rows);
    fill_pairs(out, exec, [&](std::size_t i, std::size_t j) {
        return std::sqrt(squared_distance(rows.row(i), rows.row(j)));
    });
    return out;
}

SymmetricMatrix spherical(RowView rows, Exec exec) {
    constexpr double tol = 1e-9;
    SymmetricMatrix out(rows.rows);
    fill_pairs(out, exec, [&](std::size_t i, std::size_t j) {
        double c = dot(rows.row(i), rows.row(j));
        if (c > 1.0 + tol || c < -1.0 - tol || std::isnan(c))
            return std::numeric_limits<double>::quiet_NaN();
        c = std::clamp(c, -1.0, 1.0);
        return std::acos(c);
    });
    // Exceptions cannot leave the parallel region, so domain errors are
    // reported after the fact.
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (std::isnan(out(i, j))) throw NumericalDomain(i, j);
    return out;
}

double poincare_distance(std::span<const double> v, std::span<const double> w) {
    const double vv = dot(v, v);
    const double ww = dot(w, w);
    const double x = 2.0 * squared_distance(v, w) / ((1.0 - vv) * (1.0 - ww));
    // arccosh(1 + x) without cancellation for small x.
    return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

SymmetricMatrix poincare(RowView rows, Exec exec) {
    SymmetricMatrix out(rows.rows);
    fill_pairs(out, exec, [&](std::size_t i, std::size_t j) {
        return poincare_distance(rows.row(i), rows.row(j));
    });
    return out;
}

}  // namespace bettisig::kernels
