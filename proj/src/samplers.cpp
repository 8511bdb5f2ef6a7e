#include "bettisig/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "bettisig/errors.hpp"

namespace bettisig {

std::string_view to_string(Geometry g) {
    switch (g) {
        case Geometry::euclidean_cube:
            return "euclidean_cube";
        case Geometry::sphere:
            return "sphere";
        case Geometry::hyperbolic_poincare:
            return "hyperbolic_poincare";
    }
    return "?";
}

double hyperbolic_norm(double r) {
    // cosh r - 1 = 2 sinh^2(r/2), exact for small r
    const double s = std::sinh(0.5 * r);
    const double cm1 = 2.0 * s * s;
    return 1.0 / (1.0 + 3.0 / cm1);  // saturates at 1 instead of inf/inf
}

namespace {

double log_sinh(double r) {
    // log((e^r - e^-r) / 2) = r + log1p(-e^{-2r}) - log 2
    return r + std::log1p(-std::exp(-2.0 * r)) - std::numbers::ln2;
}

double log_sum_exp(const std::vector<double>& xs) {
    const double m = *std::max_element(xs.begin(), xs.end());
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double x : xs) s += std::exp(x - m);
    return m + std::log(s);
}

}  // namespace

HyperbolicRadialSampler::HyperbolicRadialSampler(std::size_t n, double radius, std::size_t knots)
    : n_(n), radius_(radius), step_(radius / static_cast<double>(knots)) {
    if (n < 2) throw Error("hyperbolic sampler needs dimension >= 2");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw Error("hyperbolic radius must be positive");
    if (knots < 2) throw Error("hyperbolic sampler needs at least 2 knots");
    const double e = static_cast<double>(n - 1);
    log_density_.resize(knots + 1);
    log_density_[0] = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i <= knots; ++i)
        log_density_[i] = e * log_sinh(step_ * static_cast<double>(i));

    std::vector<double> log_mass(knots);
    // First segment: power law r^(n-1) matched at the first knot.
    log_mass[0] = log_density_[1] + std::log(step_) - std::log(static_cast<double>(n));
    for (std::size_t i = 1; i < knots; ++i) {
        const double g0 = log_density_[i];
        const double g1 = log_density_[i + 1];
        const double bh = g1 - g0;
        if (bh < 1e-12)
            log_mass[i] = g0 + std::log(step_);
        else
            log_mass[i] = g1 + std::log(-std::expm1(-bh)) + std::log(step_) - std::log(bh);
    }
    const double total = log_sum_exp(log_mass);
    weight_.resize(knots);
    cumulative_.resize(knots + 1);
    cumulative_[0] = 0.0;
    for (std::size_t i = 0; i < knots; ++i) {
        weight_[i] = std::exp(log_mass[i] - total);
        cumulative_[i + 1] = cumulative_[i] + weight_[i];
    }
    // Absorb rounding so the last knot maps to exactly 1.
    for (auto& c : cumulative_) c /= cumulative_.back();
}

double HyperbolicRadialSampler::cdf(double r) const {
    if (r <= 0.0) return 0.0;
    if (r >= radius_) return 1.0;
    const auto i = std::min<std::size_t>(static_cast<std::size_t>(r / step_), weight_.size() - 1);
    const double t = r - step_ * static_cast<double>(i);
    const double w = cumulative_[i + 1] - cumulative_[i];
    double frac;
    if (i == 0) {
        frac = std::pow(t / step_, static_cast<double>(n_));
    } else {
        const double bh = log_density_[i + 1] - log_density_[i];
        if (bh < 1e-12)
            frac = t / step_;
        else  // (e^{b t} - 1) / (e^{b h} - 1)
            frac = std::expm1(bh * t / step_) / std::expm1(bh);
        if (!std::isfinite(frac)) frac = std::exp(bh * (t / step_ - 1.0));
    }
    return cumulative_[i] + w * std::clamp(frac, 0.0, 1.0);
}

double HyperbolicRadialSampler::quantile(double u) const {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return radius_;
    // segment i with cumulative_[i] <= u < cumulative_[i+1]
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    std::size_t i = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    i = std::min(i, weight_.size() - 1);
    const double w = cumulative_[i + 1] - cumulative_[i];
    const double q = w > 0.0 ? std::clamp((u - cumulative_[i]) / w, 0.0, 1.0) : 0.0;
    const double left = step_ * static_cast<double>(i);
    double t;
    if (i == 0) {
        t = step_ * std::pow(q, 1.0 / static_cast<double>(n_));
    } else {
        const double bh = log_density_[i + 1] - log_density_[i];
        if (bh < 1e-12)
            t = q * step_;
        else  // solve (e^{b t} - 1) / (e^{b h} - 1) = q
            t = step_ + std::log1p((1.0 - q) * std::expm1(-bh)) * step_ / bh;
    }
    return std::clamp(left + t, 0.0, radius_);
}

SymmetricMatrix random_symmetric(std::size_t n, RngSeed seed) {
    Rng rng(seed);
    SymmetricMatrix m(n);
    for (double& v : m.upper()) v = rng.uniform();
    return m;
}

PointCloud sample_cube(std::size_t n_points, std::size_t dim, RngSeed seed) {
    Rng rng(seed);
    PointCloud cloud{
        Geometry::euclidean_cube, dim, n_points, std::vector<double>(n_points * dim), {}};
    for (double& x : cloud.coordinates) x = rng.uniform();
    return cloud;
}

namespace {

void random_direction(Rng& rng, std::span<double> out) {
    while (true) {
        double ss = 0.0;
        for (double& x : out) {
            x = rng.normal();
            ss += x * x;
        }
        if (ss > 0.0) {
            const double inv = 1.0 / std::sqrt(ss);
            for (double& x : out) x *= inv;
            return;
        }
    }
}

}  // namespace

PointCloud sample_sphere(std::size_t n_points, std::size_t dim, RngSeed seed) {
    if (dim < 2) throw Error("sphere sampling needs dimension >= 2");
    Rng rng(seed);
    PointCloud cloud{Geometry::sphere, dim, n_points, std::vector<double>(n_points * dim), {}};
    for (std::size_t i = 0; i < n_points; ++i)
        random_direction(rng, std::span<double>(cloud.coordinates).subspan(i * dim, dim));
    return cloud;
}

PointCloud sample_hyperbolic(std::size_t n_points, std::size_t dim, HyperbolicParams params,
                             RngSeed seed) {
    const HyperbolicRadialSampler radial(dim, params.radius);
    Rng rng(seed);
    if (hyperbolic_norm(params.radius) >= 1.0)
        throw Error("hyperbolic radius too large for a double-precision Poincare ball");
    PointCloud cloud{Geometry::hyperbolic_poincare, dim, n_points,
                     std::vector<double>(n_points * dim), params.radius};
    for (std::size_t i = 0; i < n_points; ++i) {
        auto p = std::span<double>(cloud.coordinates).subspan(i * dim, dim);
        random_direction(rng, p);
        const double norm = hyperbolic_norm(radial.quantile(rng.uniform()));
        for (double& x : p) x *= norm;
    }
    return cloud;
}

SymmetricMatrix distance_matrix(const PointCloud& cloud, kernels::Exec exec) {
    switch (cloud.geometry) {
        case Geometry::euclidean_cube:
            return kernels::euclidean(cloud.rows(), exec);
        case Geometry::sphere:
            return kernels::spherical(cloud.rows(), exec);
        case Geometry::hyperbolic_poincare:
            return kernels::poincare(cloud.rows(), exec);
    }
    throw Error("unknown geometry");
}

TimeSeriesSet white_noise(std::size_t n_series, std::size_t length, Rng& rng) {
    TimeSeriesSet s(n_series, length);
    for (std::size_t i = 0; i < n_series; ++i)
        for (double& x : s.series(i)) x = rng.normal();
    return s;
}

SymmetricMatrix random_correlation(std::size_t n_series, std::size_t length, RngSeed seed) {
    Rng rng(seed);
    return pearson_correlation(white_noise(n_series, length, rng));
}

void write_point_cloud_csv(std::ostream& out, const PointCloud& cloud, RngSeed seed) {
    out << "# geometry=" << to_string(cloud.geometry) << "\n";
    out << "# dim=" << cloud.dim << "\n";
    if (cloud.radius) out << "# R=" << *cloud.radius << "\n";
    out << "# seed=" << seed.seed << "\n# stream=" << seed.stream << "\n";
    for (std::size_t k = 0; k < cloud.dim; ++k) out << (k ? "," : "") << "x" << k;
    out << "\n" << std::setprecision(17);
    for (std::size_t i = 0; i < cloud.n_points; ++i) {
        auto p = cloud.point(i);
        for (std::size_t k = 0; k < cloud.dim; ++k) out << (k ? "," : "") << p[k];
        out << "\n";
    }
}

}  // namespace bettisig
