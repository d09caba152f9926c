#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <ostream>
#include <streambuf>
#include <string>

#include "CLI11.hpp"
#include "vlab/config.hpp"
#include "vlab/experiments.hpp"

namespace {

struct NullBuffer : std::streambuf {
  int overflow(int c) override { return c; }
};

int dispatch(const std::string& cmd, const vlab::ExperimentConfig& cfg,
             std::ostream& csv, std::ostream& log) {
  if (cmd == "transform") return vlab::run_transform(cfg, csv, log);
  if (cmd == "maximal") return vlab::run_maximal(cfg, csv, log);
  if (cmd == "counterexample") return vlab::run_counterexample(cfg, csv, log);
  return vlab::run_converge(cfg, csv, log);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier analysis laboratory on bounded Vilenkin groups"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool quiet = false;
  app.add_option("--config", config_path, "configuration file (key = value sections)");
  app.add_option("--out", out_path, "CSV output path, overrides the config (default stdout)");
  CLI::Option* seed_opt = app.add_option("--seed", seed, "seed override");
  app.add_flag("--quiet", quiet, "suppress notes on the error stream");

  app.add_subcommand("transform", "fast transform vs the quadratic reference, energy check")->fallthrough();
  app.add_subcommand("maximal", "maximal-operator domination and weak-norm ratios over a random batch")->fallthrough();
  app.add_subcommand("counterexample", "divergence construction: exact conditions and lower-bound chain")->fallthrough();
  app.add_subcommand("converge", "sup-norm decay of the means against the certified bound")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage problems map to 2; --help stays 0
  }

  vlab::ExperimentConfig cfg;
  try {
    if (!config_path.empty()) cfg = vlab::load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "vlab: " << e.what() << "\n";
    return 2;
  }
  if (seed_opt->count() > 0) cfg.seed = seed;
  if (!out_path.empty()) cfg.out = out_path;

  std::ofstream file;
  std::ostream* csv = &std::cout;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "vlab: cannot open output file '" << cfg.out << "'\n";
      return 2;
    }
    csv = &file;
  }

  NullBuffer null_buffer;
  std::ostream null_stream(&null_buffer);
  std::ostream& log = quiet ? null_stream : std::cerr;

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, cfg, *csv, log);
  } catch (const std::exception& e) {
    std::cerr << "vlab: " << e.what() << "\n";
    return 2;
  }
}
