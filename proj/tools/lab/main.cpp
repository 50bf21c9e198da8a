#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  std::string catalog;
  std::vector<std::string> params;
  std::string output;
  std::string format = "json";
  bool timing = false;
  bool bless = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--in", o.input, "JSON job document");
  cmd->add_option("--catalog", o.catalog, "built-in algebra name");
  cmd->add_option("--param", o.params, "parameter override key=value")->allow_extra_args(false);
  cmd->add_option("--out", o.output, "write the report here instead of stdout");
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--timing", o.timing, "include per-check elapsed microseconds");
}

int emit(const lab::Report& r, const Options& o) {
  std::string body = o.format == "text" ? r.to_text() : lab::render(r, o.timing);
  if (o.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) {
      std::cerr << "lab: cannot write '" << o.output << "'\n";
      return kExitInput;
    }
    out << body;
  }
  return r.any_fail() ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Lie algebra cohomology, kernel ideals and p-adic norms"};
  app.require_subcommand(1);
  Options o;
  std::string suite;

  auto* validate = app.add_subcommand("validate", "validate a field, algebra and module");
  auto* cohom = app.add_subcommand("cohomology", "Chevalley-Eilenberg dimension table");
  auto* tvec = app.add_subcommand("tvectors", "higher analytic vector dimensions of a Borel algebra");
  auto* norms = app.add_subcommand("norms", "radius constants, PBW norms and graded checks");
  auto* suite_cmd = app.add_subcommand("suite", "run a named acceptance suite against golden reports");
  for (auto* c : {validate, cohom, tvec, norms, suite_cmd}) add_common(c, o);
  suite_cmd->add_option("name", suite, "suite name or 'all'")->required();
  suite_cmd->add_flag("--bless", o.bless, "rewrite the golden report first");
  auto* list = app.add_subcommand("list", "print suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  if (list->parsed()) {
    for (const auto& n : lab::suite_names()) std::cout << n << "\n";
    std::cout << "all\n";
    return kExitPass;
  }

  lab::JobSpec job;
  job.command = app.get_subcommands().front()->get_name();
  if (!o.input.empty()) job.input_path = o.input;
  if (!o.catalog.empty()) job.catalog = o.catalog;
  if (!o.output.empty()) job.output_path = o.output;
  job.suite = suite;

  try {
    for (const auto& kv : o.params) {
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw lab::InputError("--param expects key=value, got '" + kv + "'");
      if (!job.params.emplace(kv.substr(0, eq), kv.substr(eq + 1)).second)
        throw lab::InputError("parameter '" + kv.substr(0, eq) + "' given twice");
    }
    lab::prepare(job);
    lab::Report report;
    if (job.command == "validate") report = lab::run_validate(job);
    else if (job.command == "cohomology") report = lab::run_cohomology(job);
    else if (job.command == "tvectors") report = lab::run_tvectors(job);
    else if (job.command == "norms") report = lab::run_norms(job);
    else report = lab::run_suite(job, o.bless);
    return emit(report, o);
  } catch (const lab::InputError& e) {
    std::cerr << "lab: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const hav::Error& e) {
    std::cerr << "lab: " << e.what() << "\n";
    bool input = e.kind() == hav::ErrorKind::ParseError || e.kind() == hav::ErrorKind::UnknownName;
    return input ? kExitInput : kExitFail;
  }
}
