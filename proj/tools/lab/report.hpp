#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hav/rational.hpp"

namespace lab {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "1";

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  ordered_json data = ordered_json::object();
  std::optional<std::string> reason;
  std::optional<long long> elapsed_us;

  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  std::string version = kArtifactVersion;
  ordered_json job = ordered_json::object();
  std::vector<Check> checks;

  bool any_fail() const;
  /// `elapsed_us` fields are written only with timing on.
  ordered_json to_json(bool timing = false) const;
  static Report from_json(const ordered_json& j);
  std::string to_text() const;

  friend bool operator==(const Report&, const Report&) = default;
};

Check pass(std::string name, ordered_json data = ordered_json::object());
Check fail(std::string name, std::string reason, ordered_json data = ordered_json::object());
Check skipped(std::string name, std::string reason);
Check verdict(std::string name, bool ok, ordered_json data = ordered_json::object(), std::string reason = "");

// Report values are strings so that no floating point can leak into output.
std::string num(long long x);
std::string num(std::size_t x);
std::string num(const hav::Rational& x);
std::string num(const hav::LogNorm& x);
ordered_json nums(const std::vector<std::size_t>& xs);

}  // namespace lab
