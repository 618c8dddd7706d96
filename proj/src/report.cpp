#include "harmony/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "harmony/error.hpp"
#include "harmony/rng.hpp"

namespace harmony {

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_cell(const Cell& c) {
    struct Visitor {
        std::string operator()(double x) const { return format_double(x); }
        std::string operator()(std::int64_t x) const { return std::to_string(x); }
        std::string operator()(std::uint64_t x) const { return std::to_string(x); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return csv_quote(s); }
    };
    return std::visit(Visitor{}, c);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void CsvReport::meta(std::string_view key, const Cell& value) {
    out_ << "# " << key << ": " << format_cell(value) << '\n';
}

void CsvReport::standard_meta(std::string_view command, std::uint64_t seed, const Tolerances& tol,
                              double check_tolerance, bool base2) {
    meta("command", std::string(command));
    meta("seed", seed);
    meta("rng", std::string(Rng::algorithm));
    meta("log_base", std::string(base2 ? "2" : "e"));
    meta("tolerance", check_tolerance);
    meta("tol_hermitian", tol.hermitian);
    meta("tol_psd_floor", tol.psd_floor);
    meta("tol_trace", tol.trace);
    meta("tol_reconstruction", tol.reconstruction);
    meta("tol_imaginary_residue", tol.imaginary_residue);
    meta("tol_spectrum", tol.spectrum);
    meta("tol_purity", tol.purity);
    meta("tol_rank_floor", tol.rank_floor);
}

void CsvReport::timestamp(const std::string& ts) { out_ << "# timestamp: " << ts << '\n'; }

void CsvReport::columns(std::vector<Column> cols) {
    if (header_written_) throw Error("report header already written");
    for (const Column& c : cols) out_ << "# column " << c.name << ": " << c.description << '\n';
    for (std::size_t i = 0; i < cols.size(); ++i) out_ << (i ? "," : "") << cols[i].name;
    out_ << '\n';
    n_columns_ = cols.size();
    header_written_ = true;
}

void CsvReport::row(const std::vector<Cell>& cells) {
    if (!header_written_ || cells.size() != n_columns_) throw Error("report row does not match header");
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << format_cell(cells[i]);
    out_ << '\n';
}

void CsvReport::summary(std::string_view key, const Cell& value) {
    out_ << "# summary " << key << ": " << format_cell(value) << '\n';
}

std::string strip_timestamp(std::string_view report) {
    std::string out;
    std::size_t pos = 0;
    while (pos < report.size()) {
        std::size_t end = report.find('\n', pos);
        if (end == std::string_view::npos) end = report.size() - 1;
        const std::string_view line = report.substr(pos, end - pos + 1);
        if (!line.starts_with("# timestamp:")) out += line;
        pos = end + 1;
    }
    return out;
}

}  // namespace harmony
