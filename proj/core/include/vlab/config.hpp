#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vlab/weights.hpp"

namespace vlab {

// Experiment settings, one flat key = value file with bracketed sections.
// parse_config(serialize_config(c)) == c exactly: doubles are printed in
// shortest round-trip form, everything else is integral or enumerated.
// Unknown sections and keys are rejected so a typo cannot silently fall
// back to a default.
struct ExperimentConfig {
  // [experiment]
  std::vector<int> m = {2};                 // radix pattern, e.g. "2x3x2"
  int depth = 12;                           // N
  std::vector<WeightSpec> kinds = {WeightSpec{}};  // semicolon-separated
  double p = 0.5;                           // quasi-norm exponent
  std::uint64_t seed = 1;
  int samples = 100;                        // batch size for `maximal`
  std::string out;                          // output path, empty = stdout
  bool timings = false;                     // "on" adds wall-clock columns,
                                            // which break byte reproducibility

  // [counterexample]
  long p_inverse = 3;
  int count = 3;
  long alpha0 = 1;
  int sample_points = 10000;
  WeightSpec chain_kind{};                  // "kind" key

  // [converge]
  int spectrum_level = 3;                   // spectrum lives below M_{level}
  int grid = 12;                            // rows in the log-spaced n grid

  bool operator==(const ExperimentConfig&) const = default;
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& c);

}  // namespace vlab
