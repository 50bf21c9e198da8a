#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "job.hpp"
#include "report.hpp"

namespace lab {

Report run_validate(const JobSpec& job);
Report run_cohomology(const JobSpec& job);
Report run_tvectors(const JobSpec& job);
Report run_norms(const JobSpec& job);

/// Suite names in report order, "all" excluded.
const std::vector<std::string>& suite_names();

/// Checks of one named suite (or every suite for "all"), without the golden
/// comparison. Throws InputError for unknown names.
std::vector<Check> suite_checks(const std::string& name);

std::filesystem::path golden_dir();
std::filesystem::path golden_path(const std::string& suite);

/// Runs the suite and appends the golden comparison. With `bless` the golden
/// file is (re)written first.
Report run_suite(const JobSpec& job, bool bless);

/// Canonical text of a report (2-space indent, trailing newline).
std::string render(const Report& r, bool timing = false);

}  // namespace lab
