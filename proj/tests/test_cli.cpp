#include "hl/cli.hpp"
#include "hl/form_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>

namespace {

struct Outcome
{
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args)
{
  std::ostringstream out;
  std::ostringstream err;
  int const code = hl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(std::string const &haystack, std::string const &needle)
{
  return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("constants")
{
  auto const eq = run({"constants", "--m", "2", "--p", "4", "--field", "real"});
  CHECK(eq.code == hl::cli::kExitOk);
  CHECK(contains(eq.out, "1.41421356"));
  auto const inf = run({"constants", "--m", "2", "--p", "inf", "--field", "real", "--format", "json"});
  REQUIRE(inf.code == hl::cli::kExitOk);
  auto const j = nlohmann::json::parse(inf.out);
  auto const &row = j.at(0);
  CHECK(row.at("theorem1_bound").get<double>() == doctest::Approx(std::sqrt(2.0)));
  CHECK(row.at("bh_bound").get<double>() == doctest::Approx(std::sqrt(2.0)));
  auto const bad = run({"constants", "--m", "2", "--p", "3"});
  CHECK(bad.code == hl::cli::kExitUsage);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("exponents")
{
  auto const r = run({"exponents", "--m", "2", "--p", "8", "--format", "csv"});
  REQUIRE(r.code == hl::cli::kExitOk);
  CHECK(contains(r.out, "8/5"));
  CHECK(contains(r.out, "8/7"));
  CHECK(contains(r.out, "4/3"));
  CHECK(contains(r.out, "1/2"));
  CHECK(run({"exponents", "--m", "1", "--p", "8"}).code == hl::cli::kExitUsage);
}

TEST_CASE("verify")
{
  std::vector<std::string> const args{"verify", "--m", "2", "--p", "inf", "--n", "2", "--trials", "100", "--seed", "7"};
  auto const a = run(args);
  CHECK(a.code == hl::cli::kExitOk);
  CHECK(contains(a.out, "max_ratio 1.41421356"));
  CHECK(contains(a.out, "PASS"));
  CHECK(run(args).out == a.out);
  auto const zero = run({"verify", "--m", "2", "--p", "inf", "--trials", "0"});
  CHECK(zero.code == hl::cli::kExitUsage);
  auto const cplx = run({"verify", "--m", "3", "--p", "12", "--field", "complex", "--n", "2,3", "--trials", "3",
                         "--dist", "gaussian", "--restarts", "8", "--format", "json"});
  CHECK(cplx.code == hl::cli::kExitOk);
  CHECK(nlohmann::json::parse(cplx.out).at("trials").size() == 6);
}

TEST_CASE("sweep")
{
  auto const r = run({"sweep", "--m", "2", "--p", "inf", "--r", "1.2", "--n", "2,4,8", "--trials", "8", "--format",
                      "json"});
  REQUIRE(r.code == hl::cli::kExitOk);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j.at("rows").size() == 3);
  CHECK(j.at("summary").contains("median_strictly_increasing"));
  CHECK(run({"sweep", "--m", "2", "--p", "inf", "--r", "2"}).code == hl::cli::kExitUsage);
}

TEST_CASE("growth")
{
  auto const sq = run({"growth", "--rule", "square", "--m-min", "2", "--m-max", "30", "--format", "csv"});
  REQUIRE(sq.code == hl::cli::kExitOk);
  CHECK(contains(sq.out, "loglog_slope"));
  auto const fixed = run({"growth", "--rule", "fixed", "--p", "2m", "--m-min", "2", "--m-max", "20"});
  CHECK(fixed.code == hl::cli::kExitOk);
  CHECK(run({"growth", "--rule", "fixed", "--p", "6", "--m-min", "2", "--m-max", "10"}).code == hl::cli::kExitUsage);
}

TEST_CASE("random-form and ratio")
{
  auto const path = (std::filesystem::temp_directory_path() / "hl_cli_test.hlform").string();
  auto const made = run({"random-form", "--dist", "rademacher", "--m", "2", "--n", "3", "--seed", "4", "--out", path});
  REQUIRE(made.code == hl::cli::kExitOk);
  auto const form = hl::load_form(path);
  CHECK(hl::field_of_form(form) == hl::Field::Real);
  auto const r = run({"ratio", "--form", path, "--p", "inf", "--format", "json"});
  std::filesystem::remove(path);
  REQUIRE(r.code == hl::cli::kExitOk);
  double const ratio = nlohmann::json::parse(r.out).at(0).at("ratio").get<double>();
  CHECK(ratio > 0.0);
  CHECK(ratio <= std::sqrt(2.0) + 1e-12);
  CHECK(run({"ratio", "--form", "/nonexistent.hlform", "--p", "inf"}).code == hl::cli::kExitUsage);
  auto const printed = run({"random-form", "--m", "1", "--n", "2", "--field", "complex"});
  CHECK(contains(printed.out, "hlform 1"));
}

TEST_CASE("usage errors")
{
  CHECK(run({}).code == hl::cli::kExitUsage);
  CHECK(run({"bogus"}).code == hl::cli::kExitUsage);
  CHECK(run({"constants", "--m", "2"}).code == hl::cli::kExitUsage);
  CHECK(run({"constants", "--m", "2", "--p", "4", "--format", "xml"}).code == hl::cli::kExitUsage);
  CHECK(run({"--help"}).code == hl::cli::kExitOk);
}
