#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "harmony/tolerances.hpp"

namespace harmony {

/// A CSV report:
///
///   # key: value                  run metadata
///   # timestamp: ...              the only line allowed to differ between reruns
///   # column <name>: <meaning>    one per column
///   name,name,...                 the header
///   rows...
///   # summary <key>: <value>      after the rows
///
/// Doubles are written with 17 significant digits.
using Cell = std::variant<double, std::int64_t, std::uint64_t, bool, std::string>;

struct Column {
    std::string name;
    std::string description;
};

std::string format_double(double x);
std::string format_cell(const Cell& c);
std::string utc_timestamp();

class CsvReport {
public:
    explicit CsvReport(std::ostream& out) : out_(out) {}

    void meta(std::string_view key, const Cell& value);
    /// Writes command, seed, all tolerances, log base and RNG algorithm.
    void standard_meta(std::string_view command, std::uint64_t seed, const Tolerances& tol, double check_tolerance,
                       bool base2);
    void timestamp(const std::string& ts);
    void columns(std::vector<Column> cols);
    void row(const std::vector<Cell>& cells);
    void summary(std::string_view key, const Cell& value);

private:
    std::ostream& out_;
    std::size_t n_columns_ = 0;
    bool header_written_ = false;
};

/// Drops the timestamp line so that reruns compare equal.
std::string strip_timestamp(std::string_view report);

}  // namespace harmony
