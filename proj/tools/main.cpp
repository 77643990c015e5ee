#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

void add_common_options(CLI::App* cmd, bluescheme::cli::CommandOptions& opts) {
  cmd->add_option("--builtin", opts.builtin, "built-in model name");
  cmd->add_option("--file", opts.file, "blueprint DSL file");
  cmd->add_option("--budget", opts.budget, "saturation depth")
      ->envname("BLUESCHEME_BUDGET");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Proj/Spec computations for graded blueprints over F1"};
  app.require_subcommand(1);

  bluescheme::cli::CommandOptions opts;

  CLI::App* spec = app.add_subcommand(
      "spec", "enumerate the prime spectrum of a presentation");
  add_common_options(spec, opts);
  spec->add_option("--dot", opts.dot_path, "write the poset as DOT");
  spec->add_option("--json", opts.json_path, "write the poset as JSON");

  CLI::App* proj = app.add_subcommand(
      "proj", "compute Proj of a graded presentation");
  add_common_options(proj, opts);
  proj->add_option("--dot", opts.dot_path, "write the poset as DOT");
  proj->add_option("--json", opts.json_path, "write the poset as JSON");

  CLI::App* chart = app.add_subcommand(
      "chart", "print the affine chart at a degree-1 generator");
  add_common_options(chart, opts);
  chart->add_option("--at", opts.at, "degree-1 generator to invert");

  CLI::App* count = app.add_subcommand(
      "count", "evaluate the Gr(2,4) counting polynomial against the "
               "subspace oracle");
  count->add_option("--q", opts.qs, "field sizes")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bluescheme::cli::kUsageError;
  }

  if (spec->parsed()) {
    return bluescheme::cli::run_spec(opts, std::cout, std::cerr);
  }
  if (proj->parsed()) {
    return bluescheme::cli::run_proj(opts, std::cout, std::cerr);
  }
  if (chart->parsed()) {
    return bluescheme::cli::run_chart(opts, std::cout, std::cerr);
  }
  return bluescheme::cli::run_count(opts, std::cout, std::cerr);
}
