#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "hilspec/matrix_families.hpp"

namespace hilspec {

// Parsed command line. One flag surface per command; unused fields keep
// their defaults.
struct RunConfig {
  std::string command;  // build spectrum verify trace conjecture szego zeta sweep
  MatrixFamily family = MatrixFamily::Alternating;
  std::vector<std::size_t> n_values;
  double theta = std::numbers::pi / 3.0;
  std::uint64_t p = 2;
  std::string format = "csv";  // csv | json
  std::string output_path;     // empty -> stdout
  double tol = -1.0;           // negative -> per-check default

  std::string theorem;         // verify: 1 2 3 4 sym-quant cosec-quant det-q
                               //         eigenbasis trig-sums difference
                               //         radius structure
  int which = 1;               // conjecture: 1 2 3
  std::string szego_case = "cos";
  std::string szego_fn = "sq";  // sq quartic abs indicator
  double a = 0.0;               // indicator window
  double b = 0.0;
  std::string zeta_op = "catalan";  // catalan alpha trigamma zerosum identity
                                    // primelimit
  double eps = 1e-12;               // catalan
  unsigned k = 1;                   // alpha index
  unsigned k2 = 2;                  // zero-sum order
  std::string zeros_path;
};

// "7", "1..128", or "100,200,400"; result must be ascending and nonempty.
std::vector<std::size_t> parse_n_spec(const std::string& text);

// Executes the command and writes the serialized report. Returns 0, or 1
// when at least one produced row carries pass = false. Throws the library
// error types for bad parameters and I/O problems.
int run_command(const RunConfig& config);

// run_command with errors mapped to exit codes: 2 for parameter/usage
// problems, 3 for I/O and parse failures, 1 for numeric check failures.
// Messages go to stderr.
int run_cli(const RunConfig& config);

}  // namespace hilspec
