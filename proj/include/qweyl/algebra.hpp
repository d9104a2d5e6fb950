#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/pbw.hpp"

namespace qweyl {

/// A presentation together with the named elements an expression may refer to:
/// generator names, derived symbols such as e3 in a quotient, and scalar
/// parameters such as alpha and beta.
struct Algebra {
  std::string tag;
  PresentationPtr pres;
  std::map<std::string, Elem> aliases;
  std::map<std::string, RatQ> scalars;

  bool has_symbol(const std::string& name) const;
  /// Value of a generator or alias; throws std::out_of_range for unknown names.
  Elem symbol(const std::string& name) const;
  /// Whether name is a generator flagged invertible.
  bool invertible_symbol(const std::string& name) const;
  /// symbol^exponent; negative exponents only for invertible generators.
  Elem symbol_power(const std::string& name, int exponent) const;
  /// Product of symbol powers, left to right.
  Elem evaluate(const std::vector<std::pair<std::string, int>>& word) const;

  Elem scalar(const RatQ& c) const { return pres->scalar(c); }
  Elem mul(const Elem& a, const Elem& b) const { return pres->multiply(a, b); }
  Elem commutator(const Elem& a, const Elem& b) const { return pres->commutator(a, b); }
};

}  // namespace qweyl
