#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

const std::map<std::string, std::string> kDescriptions{
    {"stratify", "Groebner stratification of a submodule over a cone"},
    {"statify", "Compute a static toric modification and its certificate"},
    {"check-static", "Test whether a presentation is static on its chart"},
    {"tor-dim", "Test log Tor-dimension at most d on every face"},
    {"verify-theorem", "Compare refinement of the flattening stratification with staticity"},
    {"jacobian", "Invariant factors of the graph Jacobian"},
    {"chip-equiv", "Decide linear equivalence of two divisors"},
    {"firing-script", "Find a firing script taking d1 to d2"},
    {"replay", "Re-run every check stored in a certificate"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact statification and chip-firing toolkit"};
  app.require_subcommand(1, 1);
  statikit::cli::JobSpec job;
  std::string output;

  for (const auto& name : statikit::cli::subcommands()) {
    auto* sub = app.add_subcommand(name, kDescriptions.at(name));
    sub->add_option("input", job.input, "JSON file, or inline JSON starting with '{'");
    sub->add_option("-o,--output", output, "Write the result here instead of stdout");
    sub->add_flag("--audit", job.audit, "Cross-check with a second presentation");
    sub->add_flag("--fail-fast", job.fail_fast, "Stop at the first chart that is not static");
    sub->add_flag("-v,--verbose", job.verbose, "Progress on stderr");
    sub->add_flag("--schema", job.schema, "Print the input and output schemas");
    sub->callback([&job, sub] {
      job.subcommand = sub->get_name();
      if (job.input.empty() && !job.schema) throw CLI::RequiredError("input");
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : statikit::cli::kExitInputError;
  }
  if (!output.empty()) job.output = output;

  auto result = statikit::cli::run(job);
  if (!job.output || result.exit_code == statikit::cli::kExitInputError) {
    auto& stream = result.exit_code == statikit::cli::kExitInputError ? std::cerr : std::cout;
    stream << result.output;
  }
  return result.exit_code;
}
