#pragma once

// The full identity suite: every check of the library in one report.

#include <vector>

#include "qweyl/bquot.hpp"
#include "qweyl/report.hpp"

namespace qweyl::verify {

struct Options {
  std::vector<bquot::Params> params;  // empty: default_params()
  int degree = 3;                     // truncation for the HH^1 estimate and the center check
};

/// (1,1), (q,1), (0,1), (1,0).
std::vector<bquot::Params> default_params();

/// Checks sorted by identity name.
std::vector<Check> run(const Options& options);

}  // namespace qweyl::verify
