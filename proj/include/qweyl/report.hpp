#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qweyl/pbw.hpp"

namespace qweyl {

/// How the exponent vectors of an element are spelled out when printed.
/// Generator alphabets print X0^a*X1^b*...; the GWA alphabet reads a
/// two-entry monomial (i, j) as h^i*x^j for j >= 0 and h^i*y^-j for j < 0.
struct Alphabet {
  std::vector<std::string> names;
  bool gwa = false;

  static Alphabet of(const Presentation& p) { return {p.names(), false}; }
  static Alphabet gwa_alphabet() { return {{"h", "x", "y"}, true}; }
};

/// One verified identity: the residual lhs - rhs must normalize to zero.
struct Check {
  std::string identity;
  std::string statement;
  bool pass = false;
  Elem residual;
  Alphabet alphabet;
};

inline Check residual_check(std::string identity, std::string statement, Elem residual,
                            Alphabet alphabet) {
  const bool ok = residual.is_zero();
  return {std::move(identity), std::move(statement), ok, std::move(residual), std::move(alphabet)};
}

}  // namespace qweyl
