#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "giryq/giryq.hpp"

namespace {

int run_command(const std::string& path, const giryq::RunOptions& opts, const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "giryq: cannot read '" << path << "'\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    const giryq::Scenario scenario = giryq::parse_scenario(buffer.str());
    const giryq::RunResult result = giryq::run_scenario(scenario, opts);
    std::cout << (format == "json" ? giryq::render_json(result.outcomes)
                                   : giryq::render_text(result.outcomes));
    return result.exit_code;
  } catch (const giryq::Error& e) {
    std::cerr << "giryq: " << path << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact probabilistic quantifiers over finite Markov kernels"};
  app.require_subcommand(1);

  giryq::RunOptions opts;
  std::string path;
  std::string format = "text";

  auto* run = app.add_subcommand("run", "Execute the queries of a scenario file");
  run->add_option("scenario", path, "Scenario JSON document")->required();
  run->add_option("--seed", opts.seed, "Seed for CHECK_LAWS instance generation");
  run->add_option("--cases", opts.cases, "Random instances per law");
  run->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  run->add_flag("--parallel", opts.parallel, "Evaluate queries concurrently");

  auto* laws = app.add_subcommand("laws", "Run the full property suite on random instances");
  laws->add_option("--seed", opts.seed, "Generator seed");
  laws->add_option("--cases", opts.cases, "Random instances per law");

  CLI11_PARSE(app, argc, argv);

  if (*run) return run_command(path, opts, format);

  const giryq::LawReport report = giryq::run_law_suite(opts.seed, opts.cases);
  std::cout << report.to_text();
  return report.passed() ? 0 : 3;
}
