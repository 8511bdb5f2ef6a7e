#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bettisig {

// Base for every error raised by the library. The CLI maps these to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConstantSeries : public Error {
public:
    explicit ConstantSeries(std::size_t index)
        : Error("series " + std::to_string(index) + " has zero variance"), index(index) {}
    std::size_t index;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class NonPositivePrice : public Error {
public:
    NonPositivePrice(std::size_t series, std::size_t t)
        : Error("non-positive price in series " + std::to_string(series) +
                " at t=" + std::to_string(t)),
          series(series),
          t(t) {}
    std::size_t series;
    std::size_t t;
};

class NonFiniteEntry : public Error {
public:
    NonFiniteEntry(std::size_t i, std::size_t j)
        : Error("non-finite matrix entry at (" + std::to_string(i) + ", " + std::to_string(j) +
                ")"),
          i(i),
          j(j) {}
    std::size_t i;
    std::size_t j;
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::uint64_t limit)
        : Error("simplex budget of " + std::to_string(limit) + " exceeded"), limit(limit) {}
    std::uint64_t limit;
};

class TooLarge : public Error {
public:
    explicit TooLarge(std::size_t n)
        : Error("brute-force oracle limited to 16 vertices, got " + std::to_string(n)), n(n) {}
    std::size_t n;
};

class DimOutOfRange : public Error {
public:
    using Error::Error;
};

class NumericalDomain : public Error {
public:
    NumericalDomain(std::size_t i, std::size_t j)
        : Error("arccos argument out of range for pair (" + std::to_string(i) + ", " +
                std::to_string(j) + ")"),
          i(i),
          j(j) {}
    std::size_t i;
    std::size_t j;
};

class InvalidModuleCount : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

class PreprocessingError : public Error {
public:
    using Error::Error;
};

class LengthExceedsData : public Error {
public:
    LengthExceedsData(std::size_t length, std::size_t available)
        : Error("segment length " + std::to_string(length) + " exceeds series length " +
                std::to_string(available)),
          length(length) {}
    std::size_t length;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace bettisig
