#pragma once

// Text and JSON surface of the library.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' ['-'] int)?
//   atom   := ident | integer | '(' expr ')'
//
// Multiplication is explicit. Division is allowed only by expressions that
// evaluate to scalars, which makes rational-function literals such as
// (q^3+q)/(q^2-1) ordinary expressions. Negative powers are allowed on
// invertible generators and on nonzero scalars.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qweyl/algebra.hpp"
#include "qweyl/gwa.hpp"
#include "qweyl/report.hpp"

namespace qweyl::exprio {

using json = nlohmann::json;

class SyntaxError : public AlgebraError {
 public:
  SyntaxError(const std::string& message, std::size_t pos);
  std::size_t position;
};

class UnknownGenerator : public AlgebraError {
 public:
  explicit UnknownGenerator(const std::string& name);
};

class NegativePowerNotInvertible : public NonInvertibleNegativePower {
 public:
  using NonInvertibleNegativePower::NonInvertibleNegativePower;
};

class SchemaError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

struct ExprTree {
  enum class Kind { Sum, Difference, Product, Quotient, Negate, Power, Integer, Symbol };
  Kind kind;
  std::string text;       // Integer: decimal digits; Symbol: name
  int exponent = 0;       // Power
  std::size_t position = 0;
  std::vector<std::unique_ptr<ExprTree>> children;
};

std::unique_ptr<ExprTree> parse(const std::string& text);

/// Where an expression is evaluated: symbol lookup and the ring operations.
struct Context {
  std::string tag;
  Alphabet alphabet;
  std::map<std::string, RatQ> scalars;  // alpha, beta, ...; q is always available
  std::function<bool(const std::string&)> has_symbol;
  /// name^exponent; may throw NegativePowerNotInvertible.
  std::function<Elem(const std::string&, int)> symbol_power;
  std::function<Elem(const Elem&, const Elem&)> mul;
  std::function<Elem(const RatQ&)> scalar;
  std::function<Elem(const Elem&, int)> power;
};

Context context_for(const Algebra& alg);
Context context_for(const gwa::GwaAlgebra& A, std::map<std::string, RatQ> scalars = {});
/// Only q and the given named scalars.
Context scalar_context(std::map<std::string, RatQ> scalars = {});

Elem evaluate(const ExprTree& tree, const Context& ctx);
Elem parse_elem(const std::string& text, const Context& ctx);
/// Parses an expression that must evaluate to a scalar.
RatQ parse_ratq(const std::string& text, const std::map<std::string, RatQ>& scalars = {});

/// Coefficient text used inside printed elements.
std::string coefficient_text(const RatQ& c);
std::string print_canonical(const Elem& e, const Alphabet& alphabet);

json to_json(const Elem& e);
Elem from_json(const json& j, std::size_t ngens);
json to_json(const RatQ& c);
RatQ ratq_from_json(const json& j);

json report_entry(const Check& c);
json report_json(const std::vector<Check>& checks);

}  // namespace qweyl::exprio
