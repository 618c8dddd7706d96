#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "harmony/qmat.hpp"
#include "harmony/states.hpp"
#include "harmony/tolerances.hpp"

namespace harmony {

inline constexpr std::string_view state_file_version = "1";

/// On-disk state: a JSON object
///
///   {
///     "format_version": "1",
///     "n_qubits": 2,
///     "label": "optional text",
///     "matrix": [[[re, im], ...], ...]
///   }
///
/// with a 2^n x 2^n matrix of [re, im] pairs written with 17 significant
/// digits, which round-trips doubles exactly.
struct StateFile {
    std::string format_version{state_file_version};
    std::size_t n_qubits = 0;
    Matrix matrix;
    std::optional<std::string> label;
};

std::string serialize_state(const StateFile& file);
StateFile make_state_file(const DensityMatrix& rho, std::optional<std::string> label = std::nullopt);

/// Throws ParseError naming the line/column of malformed JSON or the field
/// path (e.g. "matrix[1][2][0]") of a malformed value. Does not validate
/// physical invariants; see to_density_matrix.
StateFile parse_state(std::string_view text);

/// Throws ValidationError if the matrix is not a density matrix.
DensityMatrix to_density_matrix(const StateFile& file, const Tolerances& tol = default_tolerances);

/// Throws ParseError if the file cannot be read.
StateFile read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const StateFile& file);

}  // namespace harmony
