#include "bettisig/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "bettisig/errors.hpp"

namespace bettisig {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\"");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\"");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::optional<double> parse_number(const std::string& s) {
    if (s.empty()) return std::nullopt;
    // strtod accepts nan/inf spellings, which validate() must be able to see.
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) return std::nullopt;
    return v;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::string> row_labels;
    std::vector<std::vector<double>> rows;
};

// Reads numeric rows; a first row with any non-numeric cell is a header, and
// a non-numeric first cell in the first data row marks a label column.
Table read_table(std::istream& in, bool allow_label_column) {
    Table t;
    std::string line;
    std::size_t line_no = 0;
    bool first = true;
    bool label_column = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty() || line[0] == '#') continue;
        auto cells = split_row(line);
        if (first) {
            first = false;
            bool numeric = true;
            for (const auto& c : cells)
                if (!parse_number(c)) numeric = false;
            if (!numeric) {
                t.header = cells;
                continue;
            }
        }
        if (t.rows.empty() && allow_label_column) {
            label_column = !parse_number(cells.front());
        }
        std::vector<double> row;
        std::size_t start = 0;
        if (label_column) {
            t.row_labels.push_back(cells.front());
            start = 1;
        }
        for (std::size_t k = start; k < cells.size(); ++k) {
            auto v = parse_number(cells[k]);
            if (!v) throw ParseError("not a number: '" + cells[k] + "'", line_no);
            row.push_back(*v);
        }
        if (!t.rows.empty() && row.size() != t.rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " values, expected " +
                                 std::to_string(t.rows.front().size()),
                             line_no);
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace

LoadedMatrix read_matrix_csv(std::istream& in) {
    Table t = read_table(in, true);
    const std::size_t n = t.rows.size();
    if (n == 0) throw ParseError("empty matrix", 0);
    for (std::size_t i = 0; i < n; ++i)
        if (t.rows[i].size() != n)
            throw ParseError("matrix is not square: row " + std::to_string(i) + " has " +
                                 std::to_string(t.rows[i].size()) + " values, expected " +
                                 std::to_string(n),
                             i + 1);
    LoadedMatrix out{SymmetricMatrix(n), std::vector<double>(n), 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        out.diagonal[i] = t.rows[i][i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = t.rows[i][j];
            const double b = t.rows[j][i];
            const double gap = std::fabs(a - b);
            if (std::isfinite(a) && std::isfinite(b)) {
                out.max_asymmetry = std::max(out.max_asymmetry, gap);
                if (gap > 1e-9)
                    throw ParseError("matrix not symmetric at (" + std::to_string(i) + ", " +
                                         std::to_string(j) + ")",
                                     i + 1);
            }
            out.matrix.set(i, j, 0.5 * (a + b));
        }
    }
    std::vector<std::string> labels;
    if (!t.row_labels.empty())
        labels = t.row_labels;
    else if (t.header.size() == n)
        labels = t.header;
    else if (t.header.size() == n + 1)
        labels.assign(t.header.begin() + 1, t.header.end());
    if (!labels.empty()) out.matrix.set_labels(std::move(labels));
    return out;
}

void write_matrix_csv(std::ostream& out, const SymmetricMatrix& m, double diagonal) {
    out << std::setprecision(17);
    const std::size_t n = m.size();
    const bool labelled = !m.labels().empty();
    if (labelled) {
        for (const auto& l : m.labels()) out << ',' << l;
        out << '\n';
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (labelled) out << m.labels()[i] << ',';
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ',';
            out << (i == j ? diagonal : m(i, j));
        }
        out << '\n';
    }
}

TimeSeriesSet read_series_csv(std::istream& in) {
    Table t = read_table(in, false);
    if (t.rows.empty()) throw ParseError("no samples", 0);
    const std::size_t n_series = t.rows.front().size();
    const std::size_t length = t.rows.size();
    TimeSeriesSet s(n_series, length);
    for (std::size_t tt = 0; tt < length; ++tt)
        for (std::size_t i = 0; i < n_series; ++i) s(i, tt) = t.rows[tt][i];
    if (!t.header.empty()) {
        if (t.header.size() != n_series) throw ParseError("header/column count mismatch", 1);
        s.set_labels(t.header);
    }
    return s;
}

void write_series_csv(std::ostream& out, const TimeSeriesSet& series) {
    out << std::setprecision(17);
    if (!series.labels().empty()) {
        for (std::size_t i = 0; i < series.n_series(); ++i)
            out << (i ? "," : "") << series.labels()[i];
        out << '\n';
    }
    for (std::size_t t = 0; t < series.length(); ++t) {
        for (std::size_t i = 0; i < series.n_series(); ++i) out << (i ? "," : "") << series(i, t);
        out << '\n';
    }
}

LoadedMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return read_matrix_csv(in);
}

TimeSeriesSet load_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return read_series_csv(in);
}

}  // namespace bettisig
