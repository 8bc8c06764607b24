#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seasonality {

inline constexpr Eigen::Index kMonths = 12;

template <typename Scalar>
using MonthVector = Eigen::Matrix<Scalar, 12, 1>;

/// Month-by-year grid: one row per calendar month, one column per year.
template <typename Scalar>
using MonthGrid = Eigen::Matrix<Scalar, 12, Eigen::Dynamic>;

using CountGrid = MonthGrid<long>;

inline constexpr std::array<std::string_view, 12> kMonthNames = {
    "Jan", "Feb", "Mar", "Apr", "May", "Jun",
    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition or invariant (CLI exit code 1).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed input row; `line()` is 1-based and counts the header line.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// File-system failure (CLI exit code 2).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace seasonality
