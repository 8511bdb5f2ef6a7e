#pragma once

#include <iosfwd>
#include <vector>

#include "bettisig/matrix.hpp"

namespace bettisig {

struct LoadedMatrix {
    SymmetricMatrix matrix;
    std::vector<double> diagonal;
    double max_asymmetry = 0.0;
};

// N x N decimals, optionally with a header row and/or a leading label column.
// Pairs that differ by more than 1e-9 raise ParseError; smaller differences
// are averaged away.
LoadedMatrix read_matrix_csv(std::istream& in);
void write_matrix_csv(std::ostream& out, const SymmetricMatrix& m, double diagonal = 0.0);

// One column per series, one row per time point, optional header of labels.
TimeSeriesSet read_series_csv(std::istream& in);
void write_series_csv(std::ostream& out, const TimeSeriesSet& series);

LoadedMatrix load_matrix_file(const std::string& path);
TimeSeriesSet load_series_file(const std::string& path);

}  // namespace bettisig
