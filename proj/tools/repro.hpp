#ifndef DISPSOLVE_TOOLS_REPRO_HPP
#define DISPSOLVE_TOOLS_REPRO_HPP

// Benchmark sweeps and the experiment series t1..t6. Every run writes CSV
// files into the output directory and prints a short summary to stdout.

#include <cstdint>
#include <string>
#include <vector>

namespace dispsolve::cli {

struct BenchOptions {
  std::string structure = "cauchy_like";
  std::vector<std::ptrdiff_t> sizes;
  int piv = 1;
  int gu_period = 10;
  int repetitions = 3;
  std::ptrdiff_t rank = 2;
  std::ptrdiff_t oracle_cap = 1024;
  std::uint64_t seed = 1;
  std::string out;  // CSV path; stdout when empty
};

/// Structures accepted by run_bench: cauchy_like, toeplitz, toeplitz_hankel,
/// vandermonde, dense.
int run_bench(const BenchOptions& o);

struct ReproOptions {
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  std::vector<std::ptrdiff_t> sizes;  // t2, t3; empty for the defaults
  std::ptrdiff_t n = 0;               // t1, t4, t5; 0 for the default
  double tau = 1e-12;                 // t5
  int gu_period = 10;
  std::ptrdiff_t oracle_cap = 1024;
};

/// id in t1..t6; throws InputError on anything else.
int run_repro(const std::string& id, const ReproOptions& o);

}  // namespace dispsolve::cli

#endif
