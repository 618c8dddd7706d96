#pragma once

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace harmony::test {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

inline CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "harmony");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

inline std::filesystem::path cli_scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "harmony_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

/// Rows of a report as column -> value maps (comment lines skipped).
inline std::vector<std::map<std::string, std::string>> csv_rows(const std::string& report) {
    std::istringstream in(report);
    std::string line;
    std::vector<std::string> header;
    std::vector<std::map<std::string, std::string>> rows;
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(s);
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        return cells;
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header.empty()) {
            header = split(line);
            continue;
        }
        const std::vector<std::string> cells = split(line);
        std::map<std::string, std::string> row;
        for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) row[header[i]] = cells[i];
        rows.push_back(row);
    }
    return rows;
}

/// Value of a "# summary <key>: <value>" or "# <key>: <value>" line.
inline std::string report_field(const std::string& report, const std::string& key) {
    for (const std::string& prefix : {"# summary " + key + ": ", "# " + key + ": "}) {
        const auto pos = report.find(prefix);
        if (pos != std::string::npos) {
            const auto start = pos + prefix.size();
            return report.substr(start, report.find('\n', start) - start);
        }
    }
    return {};
}

}  // namespace harmony::test
