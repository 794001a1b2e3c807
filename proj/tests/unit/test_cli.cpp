#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "torus/angle.hpp"
#include "torus_cli/commands.hpp"
#include "torus_cli/config.hpp"
#include "torus_cli/table.hpp"

using namespace torus::cli;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

ExperimentConfig make(const json& flags) { return resolve_config(json::object(), 0, flags); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("number formatting") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(1.0 / 0.0) == "inf");
    CHECK(std::stod(format_number(0.1 + 0.2)) == 0.1 + 0.2);
    CHECK(format_cell(Cell{7LL}) == "7");
    CHECK(format_cell(Cell{std::string("a,b")}) == "\"a,b\"");
  }

  TEST_CASE("table shape and metadata") {
    ResultTable t({"x", "y"});
    t.add_row({1.0, 2LL});
    CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);
    t.set_meta("k", "v");
    CHECK(t.body() == "x,y\n1,2\n");
    CHECK(t.csv() == "# k: v\nx,y\n1,2\n");
  }

  TEST_CASE("config round trip and unknown keys") {
    ExperimentConfig c = make({{"command", "norm"}, {"f", "exp:4"}, {"ns", {1, 2}}});
    const ExperimentConfig d = config_from_json(c.to_json());
    CHECK(d.to_json() == c.to_json());
    CHECK(d.ns == std::vector<int>{1, 2});
    CHECK_THROWS_AS(config_from_json({{"command", "norm"}, {"bogus", 1}}), UsageError);
  }

  TEST_CASE("flags beat the file, the file beats the environment") {
    const json file{{"command", "norm"}, {"f", "cantor"}, {"grid", 64}};
    CHECK(resolve_config(file, 128, json::object()).grid == 64);
    CHECK(resolve_config({{"command", "norm"}}, 128, json::object()).grid == 128);
    CHECK(resolve_config(file, 128, {{"grid", 32}}).grid == 32);
    CHECK(resolve_config(file, 0, {{"f", "xsin"}}).f == "xsin");
    CHECK(resolve_config(json::object(), 0, json::object()).N == 16);
  }

  TEST_CASE("grid from the environment") {
    ::setenv("TORUS_CPI_GRID", "512", 1);
    CHECK(grid_from_env() == 512);
    ::setenv("TORUS_CPI_GRID", "lots", 1);
    CHECK_THROWS_AS(grid_from_env(), UsageError);
    ::setenv("TORUS_CPI_GRID", "1", 1);
    CHECK_THROWS_AS(grid_from_env(), UsageError);
    ::unsetenv("TORUS_CPI_GRID");
    CHECK(grid_from_env() == 0);
  }

  TEST_CASE("validation names the alternatives") {
    try {
      validate(make({{"command", "norm"}, {"f", "nope"}}));
      FAIL("expected a usage error");
    } catch (const UsageError& e) {
      CHECK(std::string(e.what()).find("const1") != std::string::npos);
    }
    CHECK_THROWS_AS(validate(make({{"command", "frobnicate"}})), UsageError);
    CHECK_THROWS_AS(validate(make({{"command", "norm"}, {"tol", -1.0}})), UsageError);
    CHECK_THROWS_AS(validate(make({{"command", "parseval"}, {"g", "cos:1000"}})), UsageError);
  }

  TEST_CASE("norm of e_4") {
    const RunResult r = run(make({{"command", "norm"}, {"f", "exp:4"}}));
    CHECK(r.exit_code == kOk);
    REQUIRE(r.table.rows().size() == 1);
    CHECK(r.table.columns()[0] == "value");
    CHECK(std::get<double>(r.table.rows()[0][0]) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(r.table.metadata().front().first == "command");
    CHECK(r.table.metadata().back().second == "ok");
  }

  TEST_CASE("coeffs of const1") {
    const RunResult r = run(make({{"command", "coeffs"}, {"f", "const1"}, {"N", 3}}));
    CHECK(r.exit_code == kOk);
    const auto body = lines(r.table.body());
    REQUIRE(body.size() == 8);
    CHECK(body[0] == "n,re,im,abs,bound_f,bound_h,bound_e,ratio");
    const auto zero = fields(body[4]);
    CHECK(zero[0] == "0");
    CHECK(std::stod(zero[1]) == doctest::Approx(2 * torus::kPi));
  }

  TEST_CASE("dirichlet-bound emits one row per n") {
    const RunResult r = run(make({{"command", "dirichlet-bound"}, {"n_max", 64}}));
    CHECK(r.exit_code == kOk);
    CHECK(r.table.rows().size() == 64);
  }

  TEST_CASE("exit codes") {
    std::ostringstream out, err;
    CHECK(execute(make({{"command", "norm"}, {"f", "nope"}}), out, err) == kUsage);
    CHECK(err.str().find("usage error") != std::string::npos);
    CHECK(out.str().empty());
    std::ostringstream out2, err2;
    const int code = execute(make({{"command", "fubini-check"}, {"f", "xsin"}, {"tol", 1e-30}}), out2, err2);
    CHECK(code == kInvariant);
    CHECK(out2.str().find("invariant-failure") != std::string::npos);
  }

  TEST_CASE("bodies are deterministic") {
    for (const json& flags : {json{{"command", "norm"}, {"f", "cantor"}},
                              json{{"command", "coeffs"}, {"f", "osc:0.5"}, {"N", 4}}}) {
      CHECK(run(make(flags)).table.body() == run(make(flags)).table.body());
    }
  }

  TEST_CASE("atomic output file") {
    const auto dir = std::filesystem::temp_directory_path() / "torus_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "out.csv").string();
    write_atomic(path, "first\n");
    write_atomic(path, "second\n");
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(text == "second\n");
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
    CHECK(entries == 1);
    std::filesystem::remove_all(dir);
    CHECK_THROWS(write_atomic("/nonexistent-dir/x.csv", "x"));
  }
}
