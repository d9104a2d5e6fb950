#include "qweyl/algebra.hpp"

#include <stdexcept>

namespace qweyl {

bool Algebra::has_symbol(const std::string& name) const {
  return pres->index_of(name).has_value() || aliases.count(name) > 0;
}

Elem Algebra::symbol(const std::string& name) const {
  if (auto g = pres->index_of(name)) return pres->gen(*g);
  auto it = aliases.find(name);
  if (it == aliases.end()) throw std::out_of_range("unknown symbol " + name);
  return it->second;
}

bool Algebra::invertible_symbol(const std::string& name) const {
  auto g = pres->index_of(name);
  return g && pres->invertible(*g);
}

Elem Algebra::symbol_power(const std::string& name, int exponent) const {
  if (auto g = pres->index_of(name)) {
    if (exponent < 0 && !pres->invertible(*g)) throw NonInvertibleNegativePower(name);
    return pres->gen(*g, exponent);
  }
  if (exponent < 0) throw NonInvertibleNegativePower(name);
  return pres->power(symbol(name), exponent);
}

Elem Algebra::evaluate(const std::vector<std::pair<std::string, int>>& word) const {
  Elem acc = scalar(RatQ(1));
  for (const auto& [name, e] : word) acc = mul(acc, symbol_power(name, e));
  return acc;
}

}  // namespace qweyl
