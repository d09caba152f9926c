#pragma once

#include <iosfwd>

#include "vlab/config.hpp"

namespace vlab {

// Each runner writes one CSV table (header row first) to `csv` and failure
// notes to `log`, returning a process exit code: 0 when every checked
// property holds, 1 when one fails. Configuration problems surface as
// exceptions for the caller to map to exit code 2. With an identical config
// (timings off) the CSV bytes are identical run to run.
int run_transform(const ExperimentConfig& c, std::ostream& csv, std::ostream& log);
int run_maximal(const ExperimentConfig& c, std::ostream& csv, std::ostream& log);
int run_counterexample(const ExperimentConfig& c, std::ostream& csv, std::ostream& log);
int run_converge(const ExperimentConfig& c, std::ostream& csv, std::ostream& log);

}  // namespace vlab
