#pragma once

// Parameter sweeps over the built-in state families, emitted as CSV with
// '#' provenance comments. Row order is lexicographic in the parameter
// names, so output is byte-stable for a fixed grid and seed.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sepcert/types.hpp"

namespace sepcert {

struct GridAxis {
  std::string name;
  double start = 0.0;
  double end = 0.0;
  double step = 0.0;  // 0 marks a single-point axis
};

// Grammar: "name=start:end:step" or "name=value", comma-separated.
std::vector<GridAxis> parse_grid(const std::string& spec);

std::vector<double> axis_values(const GridAxis& axis);

struct SweepRequest {
  std::string family;  // "two-pure" or "singlet-up"
  std::string grid_spec;
  std::uint64_t seed = 0;
};

// Writes comments, the header row, and one row per grid point.
void run_sweep(const SweepRequest& request, std::ostream& out);

}  // namespace sepcert
