#pragma once

// Job descriptions for the lab front end: parsing from the command line and
// from JSON input documents, and turning them into core objects.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hav/cohomology.hpp"
#include "hav/dist_algebra.hpp"

namespace lab {

using ordered_json = nlohmann::ordered_json;

/// Raised for malformed input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  std::string command;
  std::optional<std::string> input_path;
  std::optional<std::string> catalog;
  std::string suite;
  std::map<std::string, std::string> params;
  std::optional<std::string> output_path;
  /// Parsed input document, when input_path is set.
  std::optional<nlohmann::json> document;
};

/// Keys accepted by --param for each command.
const std::vector<std::string>& allowed_params(const std::string& command);

/// Reads the input file (if any) and rejects unknown parameter keys.
/// Throws InputError.
void prepare(JobSpec& job);

/// Checks an input document against the job schema: known keys only,
/// expected JSON types. Throws InputError naming the offending path.
void check_document(const nlohmann::json& doc);

/// Echo of the job for reports (paths omitted; they are not part of the result).
ordered_json job_echo(const JobSpec& job);

struct AlgebraInput {
  hav::NumberField field;
  /// Constants as given; validation errors are left to the caller.
  std::size_t dim = 0;
  std::vector<hav::FieldElement> constants;
  std::vector<std::string> labels;
  std::optional<std::size_t> toral_dim;
  std::string name;
};

/// The field named by param L, or the document's field, or Q.
hav::NumberField job_field(const JobSpec& job);

/// Unvalidated constants from --catalog/document, pushed into the job field.
AlgebraInput job_algebra_input(const JobSpec& job);
hav::LieAlgebra job_algebra(const JobSpec& job);

/// trivial | adjoint | dual_adjoint | character | explicit (document only).
hav::LieModule job_module(const JobSpec& job, const hav::LieAlgebra& g);

hav::RadiusParam job_radius(const JobSpec& job);

std::string param_or(const JobSpec& job, const std::string& key, const std::string& fallback);
long long_param(const JobSpec& job, const std::string& key, long fallback);

/// "c:e1,e2,...;c:e1,..." or the document's series entry.
std::optional<hav::TruncatedPBWSeries> job_series(const JobSpec& job, const std::string& key, const hav::LieAlgebra& g,
                                                  std::size_t truncation);

hav::CatalogParams catalog_params(const JobSpec& job);

}  // namespace lab
