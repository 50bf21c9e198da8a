#include "report.hpp"

#include <sstream>
#include <stdexcept>

namespace lab {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skipped") return Status::Skipped;
  throw std::invalid_argument("unknown status '" + s + "'");
}

bool Report::any_fail() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return true;
  return false;
}

ordered_json Report::to_json(bool timing) const {
  ordered_json j;
  j["artifact_version"] = version;
  j["job"] = job;
  j["status"] = any_fail() ? "fail" : "pass";
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    if (c.reason) e["reason"] = *c.reason;
    e["data"] = c.data;
    if (timing && c.elapsed_us) e["elapsed_us"] = num(static_cast<long long>(*c.elapsed_us));
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j;
}

Report Report::from_json(const ordered_json& j) {
  Report r;
  r.version = j.at("artifact_version").get<std::string>();
  r.job = j.at("job");
  for (const auto& e : j.at("checks")) {
    Check c;
    c.name = e.at("name").get<std::string>();
    c.status = status_from_string(e.at("status").get<std::string>());
    if (e.contains("reason")) c.reason = e["reason"].get<std::string>();
    c.data = e.at("data");
    if (e.contains("elapsed_us")) c.elapsed_us = std::stoll(e["elapsed_us"].get<std::string>());
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.status == Status::Pass ? "PASS " : c.status == Status::Fail ? "FAIL " : "SKIP ") << c.name;
    if (c.reason) out << "  (" << *c.reason << ")";
    out << "\n";
  }
  out << (any_fail() ? "overall: fail" : "overall: pass") << "\n";
  return out.str();
}

Check pass(std::string name, ordered_json data) { return Check{std::move(name), Status::Pass, std::move(data), {}, {}}; }

Check fail(std::string name, std::string reason, ordered_json data) {
  return Check{std::move(name), Status::Fail, std::move(data), std::move(reason), {}};
}

Check skipped(std::string name, std::string reason) {
  return Check{std::move(name), Status::Skipped, ordered_json::object(), std::move(reason), {}};
}

Check verdict(std::string name, bool ok, ordered_json data, std::string reason) {
  if (ok) return pass(std::move(name), std::move(data));
  return fail(std::move(name), reason.empty() ? "check failed" : std::move(reason), std::move(data));
}

std::string num(long long x) { return std::to_string(x); }
std::string num(std::size_t x) { return std::to_string(x); }
std::string num(const hav::Rational& x) { return hav::format_rational(x); }
std::string num(const hav::LogNorm& x) { return x.to_string(); }

ordered_json nums(const std::vector<std::size_t>& xs) {
  ordered_json a = ordered_json::array();
  for (auto x : xs) a.push_back(num(x));
  return a;
}

}  // namespace lab
