#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "bettisig/kernels.hpp"
#include "bettisig/matrix.hpp"
#include "bettisig/rng.hpp"

namespace bettisig {

enum class Geometry { euclidean_cube, sphere, hyperbolic_poincare };

std::string_view to_string(Geometry g);

struct PointCloud {
    Geometry geometry = Geometry::euclidean_cube;
    std::size_t dim = 0;
    std::size_t n_points = 0;
    std::vector<double> coordinates;  // row-major n_points x dim
    std::optional<double> radius;     // hyperbolic only

    kernels::RowView rows() const { return {coordinates, n_points, dim}; }
    std::span<const double> point(std::size_t i) const { return rows().row(i); }
};

struct HyperbolicParams {
    double radius = 1.0;  // truncation radius R > 0
};

// Hyperbolic radius -> Poincare ball norm: (cosh r - 1) / (2 + cosh r).
double hyperbolic_norm(double r);

// Inverse-CDF sampler for the radial law with density proportional to
// sinh^(n-1)(r) on [0, R]. The log-density is interpolated linearly between
// knots, so each segment is an exact exponential and both the CDF and its
// inverse have closed forms. All mass bookkeeping is in log space, which keeps
// large n (thousands) from overflowing.
class HyperbolicRadialSampler {
public:
    HyperbolicRadialSampler(std::size_t n, double radius, std::size_t knots = 10'000);

    double radius() const { return radius_; }
    // Model CDF at r in [0, R].
    double cdf(double r) const;
    // Inverse of cdf for u in [0, 1].
    double quantile(double u) const;

private:
    std::size_t n_;
    double radius_;
    double step_;
    std::vector<double> log_density_;  // at knots
    std::vector<double> cumulative_;   // normalized mass before each segment
    std::vector<double> weight_;       // normalized mass of each segment
};

SymmetricMatrix random_symmetric(std::size_t n, RngSeed seed);
PointCloud sample_cube(std::size_t n_points, std::size_t dim, RngSeed seed);
PointCloud sample_sphere(std::size_t n_points, std::size_t dim, RngSeed seed);
PointCloud sample_hyperbolic(std::size_t n_points, std::size_t dim, HyperbolicParams params,
                             RngSeed seed);

// Geodesic distance matrix for the cloud's geometry.
SymmetricMatrix distance_matrix(const PointCloud& cloud,
                                kernels::Exec exec = kernels::Exec::parallel);

// Pearson matrix of n_series independent standard-normal series.
SymmetricMatrix random_correlation(std::size_t n_series, std::size_t length, RngSeed seed);

TimeSeriesSet white_noise(std::size_t n_series, std::size_t length, Rng& rng);

void write_point_cloud_csv(std::ostream& out, const PointCloud& cloud, RngSeed seed);

}  // namespace bettisig
