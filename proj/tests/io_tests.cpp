#include <cstring>
#include <sstream>
#include <stdexcept>

#include "commands.hpp"
#include "curskel/errors.hpp"
#include "curskel/rng.hpp"
#include "curskel/verify.hpp"
#include "doctest.h"
#include "matrix_io.hpp"
#include "report.hpp"
#include "support/test_util.hpp"

using namespace curskel;
using namespace curskel::cli;

TEST_CASE("csv parsing: plain grid") {
    std::istringstream in("1,2\n3,4\n");
    const Matrix a = load_csv(in);
    CHECK(a == Matrix::from_rows({{1, 2}, {3, 4}}));
}

TEST_CASE("csv parsing: header, whitespace, exponents") {
    std::istringstream in("# m n\n 1.5 , -2e-3 \n\n0.25,+0\n");
    CHECK_THROWS_AS(load_csv(in), parse_error);  // '+0' is not a plain decimal literal

    std::istringstream ok("# header\n1.5,-2e-3\n0.25,4\n");
    const Matrix a = load_csv(ok);
    CHECK(a(0, 1) == -2e-3);
    CHECK(a.rows() == 2);
}

TEST_CASE("csv parsing failures carry line numbers") {
    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS_WITH_AS(load_csv(ragged), "line 2: expected 2 fields, got 1", parse_error);

    std::istringstream junk("1,2\nx,4\n");
    CHECK_THROWS_WITH_AS(load_csv(junk), "line 2: not a decimal literal: 'x'", parse_error);

    std::istringstream nonfinite("1,2\nnan,4\n");
    CHECK_THROWS_AS(load_csv(nonfinite), parse_error);

    std::istringstream empty("\n\n");
    CHECK_THROWS_AS(load_csv(empty), parse_error);
}

TEST_CASE("csv write/load round-trip is bit exact") {
    SeededRng rng(271828);
    const Matrix a = gaussian_matrix(rng, 7, 5);
    std::ostringstream out;
    write_csv(a, out);
    std::istringstream in(out.str());
    const Matrix b = load_csv(in);
    REQUIRE(b.rows() == a.rows());
    REQUIRE(b.cols() == a.cols());
    CHECK(std::memcmp(a.data().data(), b.data().data(), a.data().size() * sizeof(double)) == 0);
}

TEST_CASE("matrix market array files are column-major") {
    std::istringstream in(
        "%%MatrixMarket matrix array real general\n"
        "% comment\n"
        "2 2\n"
        "1\n3\n2\n4\n");
    const Matrix a = load_matrix_market(in);
    CHECK(a == Matrix::from_rows({{1, 2}, {3, 4}}));
}

TEST_CASE("matrix market coordinate files densify") {
    std::istringstream in(
        "%%MatrixMarket matrix coordinate real general\n"
        "3 3 2\n"
        "1 1 5\n"
        "3 2 -1\n");
    const Matrix a = load_matrix_market(in);
    CHECK(a(0, 0) == 5);
    CHECK(a(2, 1) == -1);
    CHECK(a(1, 1) == 0);
}

TEST_CASE("matrix market rejects malformed input") {
    std::istringstream bad_header("%%MatrixMarket matrix array complex general\n2 2\n");
    CHECK_THROWS_AS(load_matrix_market(bad_header), parse_error);

    std::istringstream bad_index(
        "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n");
    CHECK_THROWS_AS(load_matrix_market(bad_index), parse_error);

    std::istringstream duplicate(
        "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n1 1 2\n");
    CHECK_THROWS_AS(load_matrix_market(duplicate), parse_error);

    std::istringstream truncated("%%MatrixMarket matrix array real general\n2 2\n1\n2\n");
    CHECK_THROWS_AS(load_matrix_market(truncated), parse_error);
}

TEST_CASE("matrix market densification cap maps to the budget error") {
    std::istringstream in("%%MatrixMarket matrix coordinate real general\n100 100 1\n1 1 1\n");
    CHECK_THROWS_AS(load_matrix_market(in, 50), budget_exceeded_error);
}

TEST_CASE("format detection") {
    CHECK(detect_format("a.csv", MatrixFormat::Auto) == MatrixFormat::Csv);
    CHECK(detect_format("b.MTX", MatrixFormat::Auto) == MatrixFormat::MatrixMarket);
    CHECK(detect_format("weird.dat", MatrixFormat::Csv) == MatrixFormat::Csv);
    CHECK_THROWS_AS(detect_format("weird.dat", MatrixFormat::Auto), parse_error);
}

TEST_CASE("report envelope and round-trip") {
    json inputs;
    inputs["tol"] = 0.1 + 0.2;  // not exactly representable in decimal
    const json report = make_report("check", inputs, json::object());
    CHECK(report["schema_version"] == kSchemaVersion);
    CHECK(report["command"] == "check");

    const std::string text = report.dump(2);
    const json parsed = json::parse(text);
    CHECK(parsed.dump(2) == text);
    CHECK(double(parsed["inputs"]["tol"]) == 0.1 + 0.2);  // lossless float round-trip
}

TEST_CASE("index sets serialize 1-based") {
    const json j = to_json(IndexSet{0, 2, 2});
    CHECK(j == json::parse("[1,3,3]"));
}

TEST_CASE("characterization report serialization") {
    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    const json j = to_json(characterize(a, IndexSet{0}, IndexSet{0}));
    CHECK(j["rank_condition"] == false);
    CHECK(j["all_equivalent"] == true);
    CHECK(j["residuals"].size() == 5);
    CHECK(j["ranks"]["a"] == 2);
    CHECK(j["ranks"]["u"] == 1);
}

TEST_CASE("sweep and open-question reports serialize deterministically") {
    SweepConfig cfg;
    cfg.trials = 10;
    cfg.seed = 3;
    const std::string first = to_json(equivalence_sweep(cfg)).dump();
    const std::string second = to_json(equivalence_sweep(cfg)).dump();
    CHECK(first == second);

    const std::string q1 = to_json(open_question_experiment(cfg)).dump();
    const std::string q2 = to_json(open_question_experiment(cfg)).dump();
    CHECK(q1 == q2);
}

TEST_CASE("exceptions map to the documented exit codes") {
    CHECK(exit_code_for(parse_error("x")) == kExitParse);
    CHECK(exit_code_for(svd_convergence_error("x")) == kExitNumeric);
    CHECK(exit_code_for(budget_exceeded_error("x")) == kExitBudget);
    CHECK(exit_code_for(std::invalid_argument("x")) == kExitUsage);
    CHECK(exit_code_for(std::out_of_range("x")) == kExitUsage);
}
