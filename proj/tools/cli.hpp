#pragma once

#include <iosfwd>
#include <string>

#include "horizonlab/constants.hpp"
#include "horizonlab/types.hpp"

namespace horizonlab::cli {

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int n = 0;
  bool set = false;
};

struct RunConfig {
  std::string command;
  ModelParams params;
  GridSpec grid_q2l;
  GridSpec grid_m2l;
  Tolerances tol;
  std::string out_path;  // empty writes to stdout
  std::string format = "json";
  double flow_s0 = kNaN;   // defaults to a/2
  double flow_t_end = 10.0;
  int threads = 0;  // 0: HORIZONLAB_THREADS, then hardware concurrency
};

// Flags win over --config file entries (key=value lines, '#' comments).
// Throws InvalidConfig on anything malformed.
RunConfig parse_args(int argc, const char* const* argv);

// Dispatches one command; returns the process exit status (0 ok, 1 failed
// verification checks).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse + run + error reporting (JSON detail on err). Returns exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace horizonlab::cli
