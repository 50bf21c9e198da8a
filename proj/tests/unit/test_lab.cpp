#include <doctest.h>

#include "commands.hpp"
#include "job.hpp"
#include "report.hpp"

using namespace lab;
using hav::Rational;

namespace {

JobSpec job_for(const std::string& command, std::map<std::string, std::string> params = {},
                std::optional<std::string> catalog = std::nullopt) {
  JobSpec j;
  j.command = command;
  j.params = std::move(params);
  j.catalog = std::move(catalog);
  prepare(j);
  return j;
}

const Check& find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("report round trip") {
  Report r;
  r.job["command"] = "norms";
  r.checks.push_back(pass("a", {{"value", num(Rational(-7, 4))}}));
  r.checks.push_back(fail("b", "broken"));
  r.checks.push_back(skipped("c", "not applicable"));
  auto back = Report::from_json(r.to_json());
  CHECK(back == r);
  CHECK(back.any_fail());
  CHECK(r.to_json()["checks"][0]["data"]["value"] == "-7/4");
  CHECK_FALSE(r.to_json().dump().find("elapsed_us") != std::string::npos);
  r.checks[0].elapsed_us = 12;
  CHECK(r.to_json(true).dump().find("elapsed_us") != std::string::npos);
  CHECK(render(r).back() == '\n');
  CHECK(num(hav::LogNorm()) == "-inf");
}

TEST_CASE("schema rejects unknown keys at every level") {
  CHECK_NOTHROW(check_document(nlohmann::json::parse(R"({"algebra": {"catalog": "sl2"}})")));
  CHECK_THROWS_AS(check_document(nlohmann::json::parse(R"({"algebr": {}})")), InputError);
  CHECK_THROWS_AS(check_document(nlohmann::json::parse(R"({"field": {"poly": [1], "extra": 1}})")), InputError);
  CHECK_THROWS_AS(check_document(nlohmann::json::parse(R"({"algebra": {"dim": 2, "constants": [[0, 1, 1, 1]]}})")),
                  InputError);
  CHECK_THROWS_AS(check_document(nlohmann::json::parse(R"({"series": {"nu": []}})")), InputError);
  CHECK_THROWS_AS(check_document(nlohmann::json::parse(R"({"module": {"kind": "adjoint", "weight": 2}})")),
                  InputError);
}

TEST_CASE("parameters are checked per command") {
  CHECK_THROWS_AS(job_for("norms", {{"module", "adjoint"}}), InputError);
  CHECK_NOTHROW(job_for("norms", {{"p", "5"}, {"a", "1/2"}}));
  CHECK_THROWS_AS(job_for("suite", {{"n", "2"}}), InputError);
  auto j = job_for("norms", {{"p", "4"}});
  CHECK_THROWS_AS(job_radius(j), InputError);
}

TEST_CASE("series from the command line") {
  auto j = job_for("norms", {{"lambda", "3:1,0,0;1/2:0,0,2"}}, "heisenberg");
  auto g = job_algebra(j);
  auto s = job_series(j, "lambda", g, 4);
  REQUIRE(s);
  CHECK(s->terms() == std::map<hav::MultiIndex, Rational>{{{1, 0, 0}, Rational(3)}, {{0, 0, 2}, Rational(1, 2)}});
  CHECK_FALSE(job_series(j, "mu", g, 4).has_value());
  auto bad = job_for("norms", {{"lambda", "3:1,0"}}, "heisenberg");
  CHECK_THROWS_AS(job_series(bad, "lambda", g, 4), InputError);
}

TEST_CASE("cohomology command") {
  auto r = run_cohomology(job_for("cohomology", {{"module", "adjoint"}}, "heisenberg"));
  CHECK_FALSE(r.any_fail());
  auto dims = find(r, "dimensions").data["dims"];
  CHECK(dims["0"] == "1");
  CHECK(dims["1"] == "4");
  CHECK(dims["2"] == "5");
  CHECK(dims["3"] == "2");
  CHECK(dims["4"] == "0");
}

TEST_CASE("validate reports a corrupted algebra as a failing check") {
  JobSpec j;
  j.command = "validate";
  j.document = nlohmann::json::parse(
      R"({"algebra": {"dim": 3, "constants": [[1, 2, 2, "2"], [1, 3, 3, "-2"], [2, 3, 2, "1"]]}})");
  prepare(j);
  auto r = run_validate(j);
  CHECK(r.any_fail());
  const auto& alg = find(r, "algebra");
  CHECK(alg.status == Status::Fail);
  REQUIRE(alg.reason);
  CHECK(alg.reason->find("JacobiViolated") != std::string::npos);
}

TEST_CASE("norms command skips checks whose preconditions fail") {
  auto r = run_norms(job_for("norms", {{"a", "1/2"}, {"lambda", "1:1,0,0"}, {"mu", "1:0,1,0"}}, "heisenberg"));
  CHECK(find(r, "c_r").data["log_c_r"] == "-1/2");
  CHECK(find(r, "multiplicativity").status == Status::Skipped);
  CHECK(find(r, "graded").status == Status::Skipped);
  CHECK_FALSE(r.any_fail());
}

TEST_CASE("suite names and prefixes") {
  CHECK(suite_names().front() == "structural");
  CHECK_THROWS_AS(suite_checks("nope"), InputError);
  for (const auto& c : suite_checks("norms")) CHECK(c.name.rfind("norms", 0) == 0);
}
