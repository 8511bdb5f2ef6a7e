#include "bettisig/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "bettisig/errors.hpp"
#include "bettisig/kernels.hpp"

namespace bettisig {

SymmetricMatrix::SymmetricMatrix(std::size_t n, double fill)
    : n_(n), entries_(n < 2 ? 0 : n * (n - 1) / 2, fill) {}

void SymmetricMatrix::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_)
        throw LengthMismatch("expected " + std::to_string(n_) + " labels, got " +
                             std::to_string(labels.size()));
    labels_ = std::move(labels);
}

TimeSeriesSet::TimeSeriesSet(std::size_t n_series, std::size_t length, double fill)
    : n_series_(n_series), length_(length), values_(n_series * length, fill) {}

TimeSeriesSet TimeSeriesSet::from_rows(const std::vector<std::vector<double>>& series) {
    if (series.empty()) return {};
    const std::size_t length = series.front().size();
    TimeSeriesSet out(series.size(), length);
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i].size() != length)
            throw LengthMismatch("series " + std::to_string(i) + " has length " +
                                 std::to_string(series[i].size()) + ", expected " +
                                 std::to_string(length));
        std::copy(series[i].begin(), series[i].end(), out.series(i).begin());
    }
    return out;
}

void TimeSeriesSet::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_series_)
        throw LengthMismatch("expected " + std::to_string(n_series_) + " labels, got " +
                             std::to_string(labels.size()));
    labels_ = std::move(labels);
}

TimeSeriesSet TimeSeriesSet::truncated(std::size_t length) const {
    if (length > length_) throw LengthExceedsData(length, length_);
    TimeSeriesSet out(n_series_, length);
    for (std::size_t i = 0; i < n_series_; ++i) {
        auto src = series(i);
        std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(length),
                  out.series(i).begin());
    }
    out.labels_ = labels_;
    return out;
}

namespace {

// Centered rows scaled to unit Euclidean norm; the Gram matrix of the result
// is the Pearson matrix.
std::vector<double> centered_unit_rows(const TimeSeriesSet& series) {
    const std::size_t n = series.n_series();
    const std::size_t t = series.length();
    if (t < 2) throw LengthMismatch("series need at least 2 samples");
    std::vector<double> rows(n * t);
    for (std::size_t i = 0; i < n; ++i) {
        auto x = series.series(i);
        if (std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>()) == x.end())
            throw ConstantSeries(i);
        double mean = 0.0;
        for (double v : x) mean += v;
        mean /= static_cast<double>(t);
        double ss = 0.0;
        for (std::size_t k = 0; k < t; ++k) {
            const double c = x[k] - mean;
            rows[i * t + k] = c;
            ss += c * c;
        }
        if (!(ss > 0.0)) throw ConstantSeries(i);
        const double inv = 1.0 / std::sqrt(ss);
        for (std::size_t k = 0; k < t; ++k) rows[i * t + k] *= inv;
    }
    return rows;
}

}  // namespace

SymmetricMatrix pearson_correlation(const TimeSeriesSet& series) {
    const auto rows = centered_unit_rows(series);
    auto out = kernels::gram({rows, series.n_series(), series.length()});
    for (double& v : out.upper()) v = std::clamp(v, -1.0, 1.0);
    if (!series.labels().empty()) out.set_labels(series.labels());
    return out;
}

TimeSeriesSet log_returns(const TimeSeriesSet& prices) {
    if (prices.length() < 2) throw PreprocessingError("log returns need at least 2 samples");
    TimeSeriesSet out(prices.n_series(), prices.length() - 1);
    for (std::size_t i = 0; i < prices.n_series(); ++i) {
        for (std::size_t t = 0; t < prices.length(); ++t)
            if (!(prices(i, t) > 0.0)) throw NonPositivePrice(i, t);
        for (std::size_t t = 1; t < prices.length(); ++t)
            out(i, t - 1) = std::log(prices(i, t)) - std::log(prices(i, t - 1));
    }
    out.set_labels(prices.labels());
    return out;
}

TimeSeriesSet normalize_series(const TimeSeriesSet& series) {
    const auto rows = centered_unit_rows(series);
    TimeSeriesSet out(series.n_series(), series.length());
    // unit norm -> unit population variance
    const double scale = std::sqrt(static_cast<double>(series.length()));
    for (std::size_t i = 0; i < series.n_series(); ++i)
        for (std::size_t t = 0; t < series.length(); ++t)
            out(i, t) = rows[i * series.length() + t] * scale;
    out.set_labels(series.labels());
    return out;
}

SymmetricMatrix distance_matrix_from_series(const TimeSeriesSet& series, SeriesMetric metric,
                                            bool normalize) {
    const TimeSeriesSet& input = series;
    TimeSeriesSet scaled;
    if (normalize) scaled = normalize_series(series);
    const TimeSeriesSet& used = normalize ? scaled : input;

    SymmetricMatrix out;
    if (metric == SeriesMetric::euclidean) {
        std::vector<double> rows;
        rows.reserve(used.n_series() * used.length());
        for (std::size_t i = 0; i < used.n_series(); ++i) {
            auto s = used.series(i);
            rows.insert(rows.end(), s.begin(), s.end());
        }
        out = kernels::euclidean({rows, used.n_series(), used.length()});
    } else {
        out = pearson_correlation(used);
        for (double& v : out.upper()) v = 1.0 - v;
    }
    if (!series.labels().empty()) out.set_labels(series.labels());
    return out;
}

ValidationReport validate(const SymmetricMatrix& matrix, std::span<const double> diagonal) {
    ValidationReport report;
    const std::size_t n = matrix.size();
    std::unordered_map<double, std::size_t> counts;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = matrix(i, j);
            if (!std::isfinite(v)) {
                if (report.finite) report.first_non_finite = std::make_pair(i, j);
                report.finite = false;
                continue;
            }
            ++counts[v == 0.0 ? 0.0 : v];
        }
    }
    report.distinct_values = counts.size();
    for (const auto& [value, count] : counts)
        if (count > 1) report.tied_entries += count;

    if (!diagonal.empty()) {
        // Anomaly: non-finite, or differing from the most common diagonal value.
        std::map<double, std::size_t> diag_counts;
        for (double d : diagonal)
            if (std::isfinite(d)) ++diag_counts[d];
        double mode = 0.0;
        std::size_t best = 0;
        for (const auto& [value, count] : diag_counts)
            if (count > best) best = count, mode = value;
        for (double d : diagonal)
            if (!std::isfinite(d) || d != mode) ++report.diagonal_anomalies;
    }
    return report;
}

}  // namespace bettisig
