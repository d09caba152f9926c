#include "vlab/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "vlab/csv.hpp"

namespace vlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_number(std::string_view v, std::size_t line) {
  T out{};
  const char* end = v.data() + v.size();
  const auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end) fail(line, "bad number '" + std::string(v) + "'");
  return out;
}

std::vector<int> parse_radix(std::string_view v, std::size_t line) {
  std::vector<int> out;
  while (true) {
    const auto cut = v.find('x');
    out.push_back(parse_number<int>(trim(cut == std::string_view::npos ? v : v.substr(0, cut)), line));
    if (out.back() < 2) fail(line, "radix < 2");
    if (cut == std::string_view::npos) break;
    v.remove_prefix(cut + 1);
  }
  return out;
}

std::vector<WeightSpec> parse_kinds(std::string_view v, std::size_t line) {
  std::vector<WeightSpec> out;
  while (true) {
    const auto cut = v.find(';');
    const std::string_view tok = trim(cut == std::string_view::npos ? v : v.substr(0, cut));
    try {
      out.push_back(parse_weight_spec(tok));
    } catch (const std::invalid_argument& e) {
      fail(line, e.what());
    }
    if (cut == std::string_view::npos) break;
    v.remove_prefix(cut + 1);
  }
  return out;
}

bool parse_switch(std::string_view v, std::size_t line) {
  if (v == "on") return true;
  if (v == "off") return false;
  fail(line, "expected 'on' or 'off', got '" + std::string(v) + "'");
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig c;
  enum class Section { none, experiment, counterexample, converge };
  Section section = Section::none;
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = nl == std::string_view::npos ? text : text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      const std::string_view name = line.substr(1, line.size() - 2);
      if (name == "experiment") {
        section = Section::experiment;
      } else if (name == "counterexample") {
        section = Section::counterexample;
      } else if (name == "converge") {
        section = Section::converge;
      } else {
        fail(line_no, "unknown section '" + std::string(name) + "'");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    switch (section) {
      case Section::none:
        fail(line_no, "key before any section header");
      case Section::experiment:
        if (key == "m") {
          c.m = parse_radix(value, line_no);
        } else if (key == "depth") {
          c.depth = parse_number<int>(value, line_no);
          if (c.depth < 1) fail(line_no, "depth must be >= 1");
        } else if (key == "kinds") {
          c.kinds = parse_kinds(value, line_no);
        } else if (key == "p") {
          c.p = parse_number<double>(value, line_no);
          if (!(c.p > 0.0)) fail(line_no, "p must be positive");
        } else if (key == "seed") {
          c.seed = parse_number<std::uint64_t>(value, line_no);
        } else if (key == "samples") {
          c.samples = parse_number<int>(value, line_no);
          if (c.samples < 1) fail(line_no, "samples must be >= 1");
        } else if (key == "out") {
          c.out = std::string(value);
        } else if (key == "timings") {
          c.timings = parse_switch(value, line_no);
        } else {
          fail(line_no, "unknown key '" + std::string(key) + "' in [experiment]");
        }
        break;
      case Section::counterexample:
        if (key == "p_inverse") {
          c.p_inverse = parse_number<long>(value, line_no);
          if (c.p_inverse < 3) fail(line_no, "p_inverse must be >= 3");
        } else if (key == "count") {
          c.count = parse_number<int>(value, line_no);
          if (c.count < 2) fail(line_no, "count must be >= 2");
        } else if (key == "alpha0") {
          c.alpha0 = parse_number<long>(value, line_no);
          if (c.alpha0 < 1) fail(line_no, "alpha0 must be >= 1");
        } else if (key == "sample_points") {
          c.sample_points = parse_number<int>(value, line_no);
          if (c.sample_points < 1) fail(line_no, "sample_points must be >= 1");
        } else if (key == "kind") {
          try {
            c.chain_kind = parse_weight_spec(value);
          } catch (const std::invalid_argument& e) {
            fail(line_no, e.what());
          }
        } else {
          fail(line_no, "unknown key '" + std::string(key) + "' in [counterexample]");
        }
        break;
      case Section::converge:
        if (key == "spectrum_level") {
          c.spectrum_level = parse_number<int>(value, line_no);
          if (c.spectrum_level < 1) fail(line_no, "spectrum_level must be >= 1");
        } else if (key == "grid") {
          c.grid = parse_number<int>(value, line_no);
          if (c.grid < 2) fail(line_no, "grid must be >= 2");
        } else {
          fail(line_no, "unknown key '" + std::string(key) + "' in [converge]");
        }
        break;
    }
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config(text);
}

std::string serialize_config(const ExperimentConfig& c) {
  std::string s;
  s += "[experiment]\n";
  s += "m = ";
  for (std::size_t i = 0; i < c.m.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(c.m[i]);
  }
  s += "\n";
  s += "depth = " + std::to_string(c.depth) + "\n";
  s += "kinds = ";
  for (std::size_t i = 0; i < c.kinds.size(); ++i) {
    if (i) s += ';';
    s += weight_label(c.kinds[i]);
  }
  s += "\n";
  s += "p = " + fmt_shortest(c.p) + "\n";
  s += "seed = " + std::to_string(c.seed) + "\n";
  s += "samples = " + std::to_string(c.samples) + "\n";
  s += "out = " + c.out + "\n";
  s += "timings = " + std::string(c.timings ? "on" : "off") + "\n";
  s += "\n[counterexample]\n";
  s += "p_inverse = " + std::to_string(c.p_inverse) + "\n";
  s += "count = " + std::to_string(c.count) + "\n";
  s += "alpha0 = " + std::to_string(c.alpha0) + "\n";
  s += "sample_points = " + std::to_string(c.sample_points) + "\n";
  s += "kind = " + weight_label(c.chain_kind) + "\n";
  s += "\n[converge]\n";
  s += "spectrum_level = " + std::to_string(c.spectrum_level) + "\n";
  s += "grid = " + std::to_string(c.grid) + "\n";
  return s;
}

}  // namespace vlab
