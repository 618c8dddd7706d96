#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "harmony/error.hpp"
#include "harmony/report.hpp"
#include "harmony/state_file.hpp"
#include "support.hpp"

namespace harmony {

namespace {

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "harmony_io_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string valid_text(const std::string& matrix_rows) {
    return "{\n  \"format_version\": \"1\",\n  \"n_qubits\": 1,\n  \"matrix\": " + matrix_rows + "\n}\n";
}

}  // namespace

TEST_SUITE("state-file") {

TEST_CASE("write then read reproduces random states") {
    for (std::uint64_t i = 0; i < 300; ++i) {
        Rng rng(91, i);
        const std::size_t n = 1 + rng.index(3);
        const DensityMatrix rho = random_mixed(n, 1 + rng.index(std::size_t{1} << n), rng);
        const StateFile back = parse_state(serialize_state(make_state_file(rho, "r" + std::to_string(i))));
        CHECK(back.n_qubits == n);
        CHECK(back.label == "r" + std::to_string(i));
        CHECK(test::max_abs_diff(back.matrix, rho.matrix()) <= 1e-15);
        CHECK(test::max_abs_diff(back.matrix, rho.matrix()) == 0.0);
    }
}

TEST_CASE("files on disk round-trip") {
    const auto path = scratch("bell.json");
    const StateFile f = make_state_file(test::rho_of(BellKind::PsiMinus), "psi-");
    write_state_file(path, f);
    const StateFile g = read_state_file(path);
    CHECK(test::max_abs_diff(g.matrix, f.matrix) == 0.0);
    CHECK(serialize_state(g) == serialize_state(f));
    CHECK_NOTHROW(to_density_matrix(g));
}

TEST_CASE("label is optional and JSON-escaped") {
    StateFile f = make_state_file(test::maximally_mixed(2));
    CHECK(serialize_state(f).find("label") == std::string::npos);
    f.label = "quote \" and\nnewline";
    CHECK(parse_state(serialize_state(f)).label == f.label);
}

TEST_CASE("malformed JSON reports line and column") {
    CHECK_THROWS_WITH_AS(parse_state("{\n  \"format_version\": \"1\",\n  \"n_qubits\": ,\n}"),
                         doctest::Contains("line 3, column"), ParseError);
}

TEST_CASE("field errors name the field path") {
    CHECK_THROWS_WITH_AS(parse_state("{\"n_qubits\": 1, \"matrix\": []}"), doctest::Contains("format_version"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_state("{\"format_version\": \"2\", \"n_qubits\": 1, \"matrix\": []}"),
                         doctest::Contains("unsupported format_version"), ParseError);
    CHECK_THROWS_WITH_AS(parse_state("{\"format_version\": \"1\", \"n_qubits\": 4, \"matrix\": []}"),
                         doctest::Contains("n_qubits"), ParseError);
    CHECK_THROWS_WITH_AS(parse_state("{\"format_version\": \"1\", \"n_qubits\": 1.5, \"matrix\": []}"),
                         doctest::Contains("n_qubits"), ParseError);
    CHECK_THROWS_WITH_AS(parse_state(valid_text("[[[1, 0], [0, 0]]]")), doctest::Contains("\"matrix\""),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_state(valid_text("[[[1, 0], [0, 0]], [[0, 0]]]")), doctest::Contains("matrix[1]"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_state(valid_text("[[[1, 0], [0, 0]], [[0, 0], [0]]]")),
                         doctest::Contains("matrix[1][1]"), ParseError);
    CHECK_THROWS_WITH_AS(parse_state(valid_text("[[[1, 0], [0, 0]], [[0, 0], [\"x\", 0]]]")),
                         doctest::Contains("matrix[1][1][0]"), ParseError);
    CHECK_THROWS_WITH_AS(parse_state("[1, 2]"), doctest::Contains("object"), ParseError);
}

TEST_CASE("parsed but unphysical matrices fail validation") {
    const StateFile f = parse_state(valid_text("[[[1, 0], [0, 0]], [[0, 0], [1, 0]]]"));
    CHECK_THROWS_WITH_AS(to_density_matrix(f), doctest::Contains("trace"), ValidationError);
}

TEST_CASE("unreadable files are parse errors") {
    CHECK_THROWS_AS(read_state_file(scratch("does_not_exist.json")), ParseError);
}

}  // TEST_SUITE

TEST_SUITE("report") {

TEST_CASE("cell formatting") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(format_cell(std::uint64_t{7}) == "7");
    CHECK(format_cell(true) == "true");
    CHECK(format_cell(std::string("a,b")) == "\"a,b\"");
    CHECK(format_cell(std::string("say \"hi\"")) == "\"say \"\"hi\"\"\"");
}

TEST_CASE("layout and timestamp stripping") {
    std::ostringstream os;
    CsvReport r(os);
    r.meta("command", std::string("x"));
    r.timestamp("2026-01-01T00:00:00Z");
    r.columns({{"a", "first"}, {"b", "second"}});
    r.row({1.5, std::uint64_t{2}});
    r.summary("rows", std::uint64_t{1});
    CHECK(os.str() == "# command: x\n# timestamp: 2026-01-01T00:00:00Z\n# column a: first\n# column b: second\na,b\n"
                      "1.5,2\n# summary rows: 1\n");
    CHECK(strip_timestamp(os.str()).find("timestamp") == std::string::npos);
    CHECK(strip_timestamp(os.str()).find("1.5,2\n") != std::string::npos);
    CHECK_THROWS_AS(r.row({1.0}), Error);
    CHECK_THROWS_AS(r.columns({{"c", ""}}), Error);
}

TEST_CASE("rows before the header are rejected") {
    std::ostringstream os;
    CsvReport r(os);
    CHECK_THROWS_AS(r.row({1.0}), Error);
}

}  // TEST_SUITE

}  // namespace harmony
