#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlab/config.hpp"
#include "vlab/experiments.hpp"

namespace vlab {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("vlab-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  ASSERT_TRUE(out) << p;
  out << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  EXPECT_TRUE(in) << p;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the installed tool binary; returns its exit code with stderr captured.
int run_tool(const std::string& args, std::string* err_text = nullptr) {
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string(VLAB_TOOL) + " " + args + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  EXPECT_TRUE(WIFEXITED(status)) << cmd;
  if (err_text != nullptr) *err_text = read_file(err);
  return WEXITSTATUS(status);
}

// RFC 4180: quoted cells may carry commas (the two-parameter weight labels).
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char ch = line[i];
      if (quoted) {
        if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else if (ch == '"') {
          quoted = false;
        } else {
          cell += ch;
        }
      } else if (ch == '"') {
        quoted = true;
      } else if (ch == ',') {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += ch;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Config, RoundTripThroughSerialization) {
  ExperimentConfig c;
  c.m = {2, 3, 5};
  c.depth = 7;
  c.kinds = {parse_weight_spec("riesz"), parse_weight_spec("iterlog(1,2)"),
             parse_weight_spec("power(0.25)")};
  c.p = 1.0 / 3.0;
  c.seed = 987654321;
  c.samples = 42;
  c.out = "results.csv";
  c.timings = true;
  c.p_inverse = 4;
  c.count = 5;
  c.alpha0 = 2;
  c.sample_points = 321;
  c.chain_kind = parse_weight_spec("iterlog(1,1)");
  c.spectrum_level = 2;
  c.grid = 9;

  const ExperimentConfig back = parse_config(serialize_config(c));
  EXPECT_EQ(back, c);

  const ExperimentConfig defaults;
  EXPECT_EQ(parse_config(serialize_config(defaults)), defaults);
}

TEST(Config, ParsesSectionsCommentsAndWhitespace) {
  const ExperimentConfig c = parse_config(
      "# header comment\n"
      "\n"
      "[experiment]\n"
      "  m   =  2x3x2  \n"
      "depth = 4\n"
      "kinds = fejer ; riesz\n"
      "timings = on\n"
      "[converge]\n"
      "grid = 5\n");
  EXPECT_EQ(c.m, (std::vector<int>{2, 3, 2}));
  EXPECT_EQ(c.depth, 4);
  ASSERT_EQ(c.kinds.size(), 2u);
  EXPECT_EQ(weight_label(c.kinds[1]), "riesz");
  EXPECT_TRUE(c.timings);
  EXPECT_EQ(c.grid, 5);
  EXPECT_EQ(c.samples, 100);  // untouched default
}

TEST(Config, RejectsMalformedInputWithLineNumbers) {
  const auto message_of = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };

  EXPECT_NE(message_of("[experiment]\nbogus = 3\n").find("config line 2"), std::string::npos);
  EXPECT_NE(message_of("m = 2\n").find("before any section"), std::string::npos);
  EXPECT_NE(message_of("[nope]\n").find("unknown section"), std::string::npos);
  EXPECT_NE(message_of("[experiment]\ndepth\n").find("key = value"), std::string::npos);
  EXPECT_NE(message_of("[experiment]\nm = 2x1\n").find("radix"), std::string::npos);
  EXPECT_NE(message_of("[experiment]\ndepth = x\n").find("bad number"), std::string::npos);
  EXPECT_NE(message_of("[experiment]\ntimings = maybe\n").find("on"), std::string::npos);
  EXPECT_NE(message_of("[experiment]\nkinds = warp\n").find("line 2"), std::string::npos);
  EXPECT_NE(message_of("[experiment]\np = 0\n").find("positive"), std::string::npos);
  EXPECT_NE(message_of("[counterexample]\np_inverse = 2\n").find(">= 3"), std::string::npos);
  EXPECT_NE(message_of("[experiment\n").find("unterminated"), std::string::npos);

  EXPECT_THROW(load_config("/nonexistent/path.cfg"), std::invalid_argument);
}

TEST(Runners, TransformReportsTinyErrors) {
  ExperimentConfig c;
  c.m = {2, 3};
  c.depth = 4;
  c.seed = 2;
  std::stringstream csv, log;
  EXPECT_EQ(run_transform(c, csv, log), 0);
  EXPECT_EQ(log.str(), "");

  const auto rows = parse_csv(csv.str());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"basis", "M_N", "max_abs_err",
                                               "parseval_rel_err", "fast_ms", "naive_ms"}));
  EXPECT_EQ(rows[1][0], "2x3x2x3");
  EXPECT_EQ(rows[1][1], "36");
  EXPECT_LE(std::stod(rows[1][2]), 1e-9);
  EXPECT_LE(std::stod(rows[1][3]), 1e-12);
  EXPECT_EQ(rows[1][4], "");  // timings off: cells stay empty
  EXPECT_EQ(rows[1][5], "");

  c.timings = true;
  std::stringstream csv2;
  EXPECT_EQ(run_transform(c, csv2, log), 0);
  const auto rows2 = parse_csv(csv2.str());
  EXPECT_FALSE(rows2[1][4].empty());
  EXPECT_GE(std::stod(rows2[1][4]), 0.0);
}

TEST(Runners, MaximalBatchHoldsTheDomination) {
  ExperimentConfig c;
  c.m = {2};
  c.depth = 8;
  c.samples = 5;
  c.seed = 7;
  c.kinds = {parse_weight_spec("riesz"), parse_weight_spec("iterlog(1,1)")};
  std::stringstream csv, log;
  EXPECT_EQ(run_maximal(c, csv, log), 0);
  const auto rows = parse_csv(csv.str());
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0][0], "kind");
  EXPECT_EQ(rows[1][0], "riesz");
  EXPECT_EQ(rows[1][1], "1..256");
  EXPECT_EQ(rows[2][0], "iterlog(1,1)");  // comma label survives the quoting
  ASSERT_EQ(rows[2].size(), 4u);
  EXPECT_GE(std::stod(rows[1][3]), -1e-9);
  EXPECT_GE(std::stod(rows[2][3]), -1e-9);
}

TEST(Runners, CounterexampleEmitsTheChainTable) {
  const ExperimentConfig c;  // canonical defaults
  std::stringstream csv, log;
  EXPECT_EQ(run_counterexample(c, csv, log), 0);
  const auto rows = parse_csv(csv.str());
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"alpha_k", "M_alpha_k", "threshold_155aba2",
                                               "min_sample_margin", "hp_bound", "ratio",
                                               "separation", "gap"}));
  EXPECT_EQ(rows[1][0], "1");
  EXPECT_EQ(rows[2][0], "13");
  EXPECT_EQ(rows[3][0], "47");
  EXPECT_EQ(rows[3][1], "140737488355328");
  EXPECT_EQ(rows[1][3], "");  // no chain margin at the seed block
  EXPECT_EQ(rows[1][7], "");  // gap condition starts at k = 1
  EXPECT_EQ(rows[2][6], "pass");
  EXPECT_EQ(rows[2][7], "pass");
  EXPECT_GT(std::stod(rows[2][3]), std::stod(rows[2][2]));  // margin clears threshold

  // Thresholds are the certified lower bounds and must grow down the table.
  EXPECT_LT(std::stod(rows[1][2]), std::stod(rows[2][2]));
  EXPECT_LT(std::stod(rows[2][2]), std::stod(rows[3][2]));
}

TEST(Runners, ConvergeImprovesTenfoldOnUnitWeights) {
  ExperimentConfig c;
  c.m = {2};
  c.depth = 6;
  c.spectrum_level = 3;
  c.grid = 12;
  c.seed = 5;
  c.kinds = {parse_weight_spec("fejer")};
  std::stringstream csv, log;
  EXPECT_EQ(run_converge(c, csv, log), 0);
  const auto rows = parse_csv(csv.str());
  ASSERT_GE(rows.size(), 3u);
  const double first = std::stod(rows[1][2]);
  const double last = std::stod(rows.back()[2]);
  EXPECT_LE(last, first / 10.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(std::stod(rows[i][2]), std::stod(rows[i][3]) + 1e-9) << "row " << i;
  }

  c.spectrum_level = 6;
  std::stringstream sink;
  EXPECT_THROW(run_converge(c, sink, log), std::invalid_argument);
}

TEST(Tool, UsageAndErrorExitCodes) {
  EXPECT_EQ(run_tool("--help"), 0);
  EXPECT_EQ(run_tool(""), 2);             // a subcommand is required
  EXPECT_EQ(run_tool("sideways"), 2);     // unknown subcommand
  std::string err;
  EXPECT_EQ(run_tool("transform --config /does/not/exist.cfg", &err), 2);
  EXPECT_NE(err.find("cannot open config"), std::string::npos);

  const fs::path bad = scratch_dir() / "bad.cfg";
  write_file(bad, "[experiment]\nfrequency = 9\n");
  EXPECT_EQ(run_tool("transform --config " + bad.string(), &err), 2);
  EXPECT_NE(err.find("config line 2"), std::string::npos);

  // The divergence chain refuses weight families below its sufficiency gate.
  const fs::path riesz = scratch_dir() / "riesz-chain.cfg";
  write_file(riesz, "[counterexample]\nkind = riesz\n");
  EXPECT_EQ(run_tool("counterexample --config " + riesz.string(), &err), 2);
  EXPECT_NE(err.find("riesz"), std::string::npos);
}

TEST(Tool, WritesCsvAndHonorsSeedOverride) {
  const fs::path cfg = scratch_dir() / "transform.cfg";
  write_file(cfg,
             "[experiment]\n"
             "m = 2x3\n"
             "depth = 4\n"
             "seed = 3\n");
  const fs::path out_a = scratch_dir() / "a.csv";
  const fs::path out_b = scratch_dir() / "b.csv";
  const fs::path out_c = scratch_dir() / "c.csv";

  std::string err;
  ASSERT_EQ(run_tool("transform --config " + cfg.string() + " --out " + out_a.string(), &err), 0);
  EXPECT_EQ(err, "");
  ASSERT_EQ(run_tool("transform --config " + cfg.string() + " --out " + out_b.string()), 0);
  ASSERT_EQ(run_tool("transform --config " + cfg.string() + " --seed 4 --out " + out_c.string()), 0);

  const std::string a = read_file(out_a);
  EXPECT_EQ(a, read_file(out_b));      // same seed, same bytes
  EXPECT_NE(a, read_file(out_c));      // seed override reaches the sampler
  EXPECT_NE(a.find("max_abs_err"), std::string::npos);

  EXPECT_EQ(run_tool("transform --config " + cfg.string() + " --out /no/such/dir/x.csv"), 2);
}

TEST(Tool, QuietSilencesTheLogStream) {
  const fs::path cfg = scratch_dir() / "converge.cfg";
  write_file(cfg,
             "[experiment]\n"
             "m = 2\n"
             "depth = 5\n"
             "kinds = fejer\n"
             "seed = 5\n"
             "[converge]\n"
             "spectrum_level = 2\n"
             "grid = 4\n");
  const fs::path out = scratch_dir() / "converge.csv";
  std::string err;
  ASSERT_EQ(run_tool("converge --quiet --config " + cfg.string() + " --out " + out.string(), &err), 0);
  EXPECT_EQ(err, "");
  EXPECT_NE(read_file(out).find("certified_bound"), std::string::npos);
}

}  // namespace
}  // namespace vlab
