#ifndef DISPSOLVE_TOOLS_PROBLEM_IO_HPP
#define DISPSOLVE_TOOLS_PROBLEM_IO_HPP

// Problem and result files. JSON, complex numbers as [re, im] pairs (a bare
// number is read as a real value), matrices as arrays of rows.
//
//   {
//     "version": 1,
//     "structure": "cauchy_like",
//     "payload": {"t": [..], "s": [..], "G": [[..], ..], "H": [[..], ..]},
//     "rhs": [[..], ..],
//     "piv": 1,
//     "gu_period": 10, "collapse_tol": 0, "phi": [1, 0], "seed": 7
//   }
//
// Payload fields by structure:
//   cauchy_like           t, s, G, H
//   toeplitz              col, row
//   toeplitz_like         G, H, xi (default 1), eta (default -1)
//   toeplitz_hankel       t (t_{1-n}..t_{n-1}), h (h_0..h_{2n-2})
//   toeplitz_hankel_like  G, H
//   vandermonde           w        (optional top-level phi)
//   vandermonde_like      w, phi, G, H

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dispsolve/dispsolve.h"
#include "instances.hpp"
#include "json.hpp"

namespace dispsolve::cli {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Malformed input; maps to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column-major complex block.
struct Block {
  std::ptrdiff_t rows = 0, cols = 0;
  std::vector<dsv_complex> data;

  Block() = default;
  Block(std::ptrdiff_t r, std::ptrdiff_t c)
      : rows(r), cols(c), data(static_cast<std::size_t>(r * c)) {}
  dsv_complex& operator()(std::ptrdiff_t i, std::ptrdiff_t j) {
    return data[static_cast<std::size_t>(i + j * rows)];
  }
  const dsv_complex& operator()(std::ptrdiff_t i, std::ptrdiff_t j) const {
    return data[static_cast<std::size_t>(i + j * rows)];
  }
};

struct Problem {
  std::string structure;
  std::map<std::string, Block> arrays;  // vectors are n x 1
  std::map<std::string, dsv_complex> scalars;
  Block rhs;
  int piv = DSV_PIV_PARTIAL;
  int gu_period = 10;
  double collapse_tol = 0.0;
  std::optional<dsv_complex> phi;
  std::optional<std::uint64_t> seed;

  std::ptrdiff_t size() const;
  dsv_options options() const;
};

const std::vector<std::string>& structure_tags();

/// Throws InputError with a message naming the offending field.
Problem parse_problem(const json& j);
Problem read_problem(const std::string& path);
json problem_to_json(const Problem& p);

/// Runs the matching solver. *out is only set on DSV_OK.
dsv_status solve_problem(const Problem& p, dsv_report** out);

json result_to_json(const Problem& p, const dsv_report* rep, double seconds);

/// Deterministic random instance of the given structure.
Problem generate(const std::string& structure, std::ptrdiff_t n,
                 std::ptrdiff_t r, std::ptrdiff_t d, std::uint64_t seed);

Block to_block(const instances::Dense& d);
Block to_block(const std::vector<instances::cplx>& v);
instances::cplx to_std(dsv_complex z);

/// Compact JSON followed by a newline.
std::string dump(const json& j);
void write_text(const std::string& path, const std::string& text);

/// 0 ok; 1 singular or structural failure; 2 invalid input.
int exit_status(dsv_status s);

}  // namespace dispsolve::cli

#endif
