#include "harmony/state_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "harmony/error.hpp"

namespace harmony {

namespace {

using nlohmann::json;

std::string number(double x) {
    if (x == 0.0) return "0";  // JSON readers drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const json& field(const json& obj, const char* name) {
    const auto it = obj.find(name);
    if (it == obj.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

}  // namespace

std::string serialize_state(const StateFile& file) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"format_version\": " << quote(file.format_version) << ",\n";
    os << "  \"n_qubits\": " << file.n_qubits << ",\n";
    if (file.label) os << "  \"label\": " << quote(*file.label) << ",\n";
    os << "  \"matrix\": [\n";
    const std::size_t dim = file.matrix.dim();
    for (std::size_t r = 0; r < dim; ++r) {
        os << "    [";
        for (std::size_t c = 0; c < dim; ++c) {
            const Complex z = file.matrix(r, c);
            os << (c ? ", " : "") << '[' << number(z.real()) << ", " << number(z.imag()) << ']';
        }
        os << (r + 1 < dim ? "],\n" : "]\n");
    }
    os << "  ]\n}\n";
    return os.str();
}

StateFile make_state_file(const DensityMatrix& rho, std::optional<std::string> label) {
    StateFile f;
    f.n_qubits = rho.n_qubits();
    f.matrix = rho.matrix();
    f.label = std::move(label);
    return f;
}

StateFile parse_state(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_and_column(text, e.byte);
        throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
    if (!doc.is_object()) throw ParseError("state file must be a JSON object");

    StateFile f;
    const json& version = field(doc, "format_version");
    if (!version.is_string()) throw ParseError("field \"format_version\" must be a string");
    f.format_version = version.get<std::string>();
    if (f.format_version != state_file_version) {
        throw ParseError("unsupported format_version \"" + f.format_version + "\" (expected \"" +
                         std::string(state_file_version) + "\")");
    }

    const json& nq = field(doc, "n_qubits");
    if (!nq.is_number_integer() || nq.get<long long>() < 1 || nq.get<long long>() > 3) {
        throw ParseError("field \"n_qubits\" must be an integer in 1..3");
    }
    f.n_qubits = nq.get<std::size_t>();

    if (const auto it = doc.find("label"); it != doc.end()) {
        if (!it->is_string()) throw ParseError("field \"label\" must be a string");
        f.label = it->get<std::string>();
    }

    const std::size_t dim = std::size_t{1} << f.n_qubits;
    const json& rows = field(doc, "matrix");
    if (!rows.is_array() || rows.size() != dim) {
        throw ParseError("field \"matrix\" must be an array of " + std::to_string(dim) + " rows");
    }
    f.matrix = Matrix(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const std::string row_path = "matrix[" + std::to_string(r) + "]";
        if (!rows[r].is_array() || rows[r].size() != dim) {
            throw ParseError(row_path + " must be an array of " + std::to_string(dim) + " entries");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            const std::string path = row_path + "[" + std::to_string(c) + "]";
            const json& entry = rows[r][c];
            if (!entry.is_array() || entry.size() != 2) throw ParseError(path + " must be a [re, im] pair");
            for (std::size_t part = 0; part < 2; ++part) {
                if (!entry[part].is_number()) {
                    throw ParseError(path + "[" + std::to_string(part) + "] must be a number");
                }
            }
            f.matrix(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return f;
}

DensityMatrix to_density_matrix(const StateFile& file, const Tolerances& tol) {
    return DensityMatrix(file.matrix, tol);
}

StateFile read_state_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open state file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_state(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_state_file(const std::filesystem::path& path, const StateFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write state file " + path.string());
    out << serialize_state(file);
    if (!out) throw Error("failed writing state file " + path.string());
}

}  // namespace harmony
