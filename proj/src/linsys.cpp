#include "qweyl/linsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace qweyl {

namespace {

void axpy(SparseVec& target, const SparseVec& src, const RatQ& factor) {
  for (const auto& [col, v] : src) {
    auto it = target.find(col);
    if (it == target.end()) {
      target.emplace(col, factor * v);
      continue;
    }
    it->second += factor * v;
    if (it->second.is_zero()) target.erase(it);
  }
}

}  // namespace

void LinSystem::add_row(SparseVec row) {
  std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
  if (!row.empty() && row.rbegin()->first >= columns) throw std::out_of_range("row entry beyond column count");
  if (!row.empty()) rows.push_back(std::move(row));
}

Echelon rref(std::vector<SparseVec> rows, std::size_t columns) {
  for (auto& r : rows) std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(rows, [](const SparseVec& r) { return r.empty(); });

  std::vector<bool> used(rows.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> chosen;  // (row, pivot column)
  for (std::size_t col = 0; col < columns; ++col) {
    std::size_t best = rows.size();
    int best_degree = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      const int deg = it->second.num_degree();
      if (best == rows.size() || deg < best_degree) {
        best = r;
        best_degree = deg;
      }
    }
    if (best == rows.size()) continue;
    used[best] = true;
    const RatQ inv = rows[best].at(col).inverse();
    for (auto& [c, v] : rows[best]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == best) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      const RatQ factor = -it->second;
      axpy(rows[r], rows[best], factor);
    }
    chosen.emplace_back(best, col);
  }
  Echelon out;
  for (const auto& [row, col] : chosen) {
    out.rows.push_back(std::move(rows[row]));
    out.pivots.push_back(col);
  }
  return out;
}

std::vector<SparseVec> kernel(const LinSystem& sys) {
  const Echelon e = rref(sys.rows, sys.columns);
  std::vector<bool> is_pivot(sys.columns, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<SparseVec> basis;
  for (std::size_t free = 0; free < sys.columns; ++free) {
    if (is_pivot[free]) continue;
    SparseVec v;
    v.emplace(free, RatQ(1));
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      auto it = e.rows[r].find(free);
      if (it != e.rows[r].end()) v.emplace(e.pivots[r], -it->second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(std::vector<SparseVec> vectors, std::size_t columns) {
  return rref(std::move(vectors), columns).rows.size();
}

RatQ dot(const SparseVec& a, const SparseVec& b) {
  RatQ acc;
  for (const auto& [col, v] : a) {
    auto it = b.find(col);
    if (it != b.end()) acc += v * it->second;
  }
  return acc;
}

}  // namespace qweyl
