#pragma once

// Exact linear algebra over Q(q) on sparse row vectors.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qweyl/ratq.hpp"

namespace qweyl {

/// Column index -> nonzero entry.
using SparseVec = std::map<std::size_t, RatQ>;

struct LinSystem {
  std::size_t columns = 0;
  std::vector<SparseVec> rows;
  std::vector<std::string> labels;  // optional, one per column

  explicit LinSystem(std::size_t ncols = 0) : columns(ncols) {}
  void add_row(SparseVec row);
};

struct Echelon {
  std::vector<SparseVec> rows;        // reduced, pivot entry 1
  std::vector<std::size_t> pivots;    // pivot column of each row, increasing
};

/// Reduced row echelon form. Columns are scanned in order; among the rows
/// with a nonzero entry in the current column the one whose entry has the
/// lowest numerator degree is chosen (ties: earliest row).
Echelon rref(std::vector<SparseVec> rows, std::size_t columns);

/// Basis of the solution space of rows * v = 0, one vector per free column,
/// with entry 1 at that column.
std::vector<SparseVec> kernel(const LinSystem& sys);

std::size_t rank(std::vector<SparseVec> vectors, std::size_t columns);

/// Dot product of two sparse vectors.
RatQ dot(const SparseVec& a, const SparseVec& b);

}  // namespace qweyl
