#pragma once

#include <string>
#include <vector>

#include "qweyl/algebra.hpp"
#include "qweyl/exprio.hpp"
#include "qweyl/pbw.hpp"
#include "qweyl/report.hpp"

namespace support {

inline qweyl::Elem ex(const qweyl::Algebra& alg, const std::string& text) {
  return qweyl::exprio::parse_elem(text, qweyl::exprio::context_for(alg));
}

inline qweyl::RatQ rq(const std::string& text) { return qweyl::exprio::parse_ratq(text); }

inline bool all_pass(const std::vector<qweyl::Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

/// First failing identity name, or empty.
inline std::string first_failure(const std::vector<qweyl::Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return c.identity;
  return {};
}

/// Every exponent vector over n generators with total |degree| <= max_degree,
/// allowing negative entries where invertible[g] is set.
inline std::vector<qweyl::Mono> monomials_up_to(const std::vector<bool>& invertible, int max_degree) {
  std::vector<qweyl::Mono> out;
  qweyl::Mono m(invertible.size(), 0);
  auto rec = [&](auto&& self, std::size_t g, int budget) -> void {
    if (g == m.size()) {
      out.push_back(m);
      return;
    }
    const int lo = invertible[g] ? -budget : 0;
    for (int e = lo; e <= budget; ++e) {
      m[g] = e;
      self(self, g + 1, budget - (e < 0 ? -e : e));
    }
    m[g] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

}  // namespace support
