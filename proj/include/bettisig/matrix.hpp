#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bettisig {

// N x N real symmetric matrix. Only the strict upper triangle is stored
// (row-major), so symmetry holds by construction and the diagonal is
// implicitly absent.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n, double fill = 0.0);

    std::size_t size() const { return n_; }
    std::size_t pair_count() const { return entries_.size(); }

    double operator()(std::size_t i, std::size_t j) const { return entries_[offset(i, j)]; }
    void set(std::size_t i, std::size_t j, double value) { entries_[offset(i, j)] = value; }

    // Upper-triangular entries in row-major order: (0,1), (0,2), ..., (1,2), ...
    std::span<const double> upper() const { return entries_; }
    std::span<double> upper() { return entries_; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    // Offset of the unordered pair {i, j}, i != j, in upper().
    std::size_t offset(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return i * n_ - i * (i + 1) / 2 + (j - i - 1);
    }

    bool operator==(const SymmetricMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> entries_;
    std::vector<std::string> labels_;
};

// n_series x length samples, stored series-major.
class TimeSeriesSet {
public:
    TimeSeriesSet() = default;
    TimeSeriesSet(std::size_t n_series, std::size_t length, double fill = 0.0);
    // Throws LengthMismatch on ragged input or empty series.
    static TimeSeriesSet from_rows(const std::vector<std::vector<double>>& series);

    std::size_t n_series() const { return n_series_; }
    std::size_t length() const { return length_; }

    std::span<const double> series(std::size_t i) const {
        return {values_.data() + i * length_, length_};
    }
    std::span<double> series(std::size_t i) { return {values_.data() + i * length_, length_}; }

    double operator()(std::size_t i, std::size_t t) const { return values_[i * length_ + t]; }
    double& operator()(std::size_t i, std::size_t t) { return values_[i * length_ + t]; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    // First `length` samples of every series.
    TimeSeriesSet truncated(std::size_t length) const;

    bool operator==(const TimeSeriesSet&) const = default;

private:
    std::size_t n_series_ = 0;
    std::size_t length_ = 0;
    std::vector<double> values_;
    std::vector<std::string> labels_;
};

enum class SeriesMetric { euclidean, correlation_distance };

// Pairwise Pearson coefficients, population normalization (divide by T).
SymmetricMatrix pearson_correlation(const TimeSeriesSet& series);

// r_i(t) = log p_i(t) - log p_i(t-1). Output is one sample shorter.
TimeSeriesSet log_returns(const TimeSeriesSet& prices);

// Mean-removed, unit (population) variance copy of every series.
TimeSeriesSet normalize_series(const TimeSeriesSet& series);

SymmetricMatrix distance_matrix_from_series(const TimeSeriesSet& series, SeriesMetric metric,
                                            bool normalize);

struct ValidationReport {
    bool finite = true;
    std::size_t tied_entries = 0;  // entries whose value occurs more than once
    std::size_t distinct_values = 0;
    std::size_t diagonal_anomalies = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first_non_finite;
};

// `diagonal` is optional; loaders that see the full square matrix pass it so
// that non-finite or inconsistent diagonal values are counted.
ValidationReport validate(const SymmetricMatrix& matrix, std::span<const double> diagonal = {});

}  // namespace bettisig
