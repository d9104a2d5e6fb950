#include "qweyl/exprio.hpp"

#include <cctype>
#include <sstream>

namespace qweyl::exprio {

SyntaxError::SyntaxError(const std::string& message, std::size_t pos)
    : AlgebraError("syntax error at position " + std::to_string(pos) + ": " + message), position(pos) {}

UnknownGenerator::UnknownGenerator(const std::string& name) : AlgebraError("unknown symbol " + name) {}

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  std::unique_ptr<ExprTree> parse_all() {
    auto e = expr();
    if (peek().kind != Tok::End) throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }

  static std::unique_ptr<ExprTree> node(ExprTree::Kind k, std::size_t pos) {
    auto n = std::make_unique<ExprTree>();
    n->kind = k;
    n->position = pos;
    return n;
  }

  static std::unique_ptr<ExprTree> binary(ExprTree::Kind k, std::size_t pos, std::unique_ptr<ExprTree> a,
                                          std::unique_ptr<ExprTree> b) {
    auto n = node(k, pos);
    n->children.push_back(std::move(a));
    n->children.push_back(std::move(b));
    return n;
  }

  std::unique_ptr<ExprTree> expr() {
    auto lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      auto rhs = term();
      lhs = binary(op.kind == Tok::Plus ? ExprTree::Kind::Sum : ExprTree::Kind::Difference, op.pos,
                   std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  std::unique_ptr<ExprTree> term() {
    auto lhs = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = take();
      auto rhs = unary();
      lhs = binary(op.kind == Tok::Star ? ExprTree::Kind::Product : ExprTree::Kind::Quotient, op.pos,
                   std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  std::unique_ptr<ExprTree> unary() {
    if (peek().kind == Tok::Minus) {
      const Token& op = take();
      auto n = node(ExprTree::Kind::Negate, op.pos);
      n->children.push_back(unary());
      return n;
    }
    return factor();
  }

  std::unique_ptr<ExprTree> factor() {
    auto base = atom();
    if (peek().kind != Tok::Caret) return base;
    const Token& caret = take();
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      take();
      negative = true;
    }
    if (peek().kind != Tok::Int) throw SyntaxError("integer exponent expected", peek().pos);
    const Token& digits = take();
    long value = 0;
    try {
      value = std::stol(digits.text);
    } catch (const std::out_of_range&) {
      throw SyntaxError("exponent out of range", digits.pos);
    }
    if (value > 1'000'000) throw SyntaxError("exponent out of range", digits.pos);
    auto n = node(ExprTree::Kind::Power, caret.pos);
    n->exponent = static_cast<int>(negative ? -value : value);
    n->children.push_back(std::move(base));
    if (peek().kind == Tok::Caret) throw SyntaxError("chained '^' needs parentheses", peek().pos);
    return n;
  }

  std::unique_ptr<ExprTree> atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        take();
        auto n = node(ExprTree::Kind::Symbol, t.pos);
        n->text = t.text;
        return n;
      }
      case Tok::Int: {
        take();
        auto n = node(ExprTree::Kind::Integer, t.pos);
        n->text = t.text;
        return n;
      }
      case Tok::LParen: {
        take();
        auto inner = expr();
        if (peek().kind != Tok::RParen) throw SyntaxError("')' expected", peek().pos);
        take();
        return inner;
      }
      case Tok::End:
        throw SyntaxError("unexpected end of input", t.pos);
      default:
        throw SyntaxError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

std::optional<RatQ> scalar_value(const Elem& e) {
  if (e.is_zero()) return RatQ();
  return e.as_scalar();
}

Elem symbol_value(const ExprTree& t, const Context& ctx, int exponent) {
  const std::string& name = t.text;
  if (ctx.has_symbol(name)) return ctx.symbol_power(name, exponent);
  std::optional<RatQ> value;
  if (name == "q") value = RatQ::q();
  auto it = ctx.scalars.find(name);
  if (it != ctx.scalars.end()) value = it->second;
  if (!value) throw UnknownGenerator(name);
  if (exponent < 0 && value->is_zero()) throw DivisionByZero();
  return ctx.scalar(value->pow(exponent));
}

}  // namespace

std::unique_ptr<ExprTree> parse(const std::string& text) { return Parser(text).parse_all(); }

Elem evaluate(const ExprTree& t, const Context& ctx) {
  using K = ExprTree::Kind;
  switch (t.kind) {
    case K::Sum:
      return evaluate(*t.children[0], ctx) + evaluate(*t.children[1], ctx);
    case K::Difference:
      return evaluate(*t.children[0], ctx) - evaluate(*t.children[1], ctx);
    case K::Negate:
      return -evaluate(*t.children[0], ctx);
    case K::Product:
      return ctx.mul(evaluate(*t.children[0], ctx), evaluate(*t.children[1], ctx));
    case K::Quotient: {
      const Elem den = evaluate(*t.children[1], ctx);
      const auto s = scalar_value(den);
      if (!s) throw SyntaxError("division by a non-scalar expression", t.position);
      if (s->is_zero()) throw DivisionByZero();
      return s->inverse() * evaluate(*t.children[0], ctx);
    }
    case K::Power: {
      const ExprTree& base = *t.children[0];
      if (base.kind == K::Symbol) return symbol_value(base, ctx, t.exponent);
      const Elem v = evaluate(base, ctx);
      if (t.exponent >= 0) return ctx.power(v, t.exponent);
      const auto s = scalar_value(v);
      if (!s) throw NegativePowerNotInvertible("(expression at position " + std::to_string(base.position) + ")");
      if (s->is_zero()) throw DivisionByZero();
      return ctx.scalar(s->pow(t.exponent));
    }
    case K::Integer:
      return ctx.scalar(RatQ(Rational(t.text)));
    case K::Symbol:
      return symbol_value(t, ctx, 1);
  }
  throw std::logic_error("unhandled expression node");
}

Context context_for(const Algebra& alg) {
  Context ctx;
  ctx.tag = alg.tag;
  ctx.alphabet = Alphabet::of(*alg.pres);
  ctx.scalars = alg.scalars;
  const Algebra* a = &alg;
  ctx.has_symbol = [a](const std::string& n) { return a->has_symbol(n); };
  ctx.symbol_power = [a](const std::string& n, int e) {
    if (e < 0 && !a->invertible_symbol(n)) throw NegativePowerNotInvertible(n);
    return a->symbol_power(n, e);
  };
  ctx.mul = [a](const Elem& x, const Elem& y) { return a->mul(x, y); };
  ctx.scalar = [a](const RatQ& c) { return a->scalar(c); };
  ctx.power = [a](const Elem& x, int n) { return n == 0 ? a->scalar(RatQ(1)) : a->pres->power(x, n); };
  return ctx;
}

Context context_for(const gwa::GwaAlgebra& A, std::map<std::string, RatQ> scalars) {
  Context ctx;
  ctx.tag = "gwa";
  ctx.alphabet = Alphabet::gwa_alphabet();
  ctx.scalars = std::move(scalars);
  const gwa::GwaAlgebra* g = &A;
  ctx.has_symbol = [](const std::string& n) { return n == "h" || n == "x" || n == "y"; };
  ctx.symbol_power = [](const std::string& n, int e) {
    if (n == "h") return gwa::h_pow(e);
    if (e < 0) throw NegativePowerNotInvertible(n);
    return n == "x" ? gwa::x_pow(e) : gwa::y_pow(e);
  };
  ctx.mul = [g](const Elem& x, const Elem& y) { return gwa::gwa_multiply(*g, x, y); };
  ctx.scalar = [](const RatQ& c) { return gwa::scalar(c); };
  ctx.power = [g](const Elem& x, int n) { return gwa::gwa_power(*g, x, n); };
  return ctx;
}

Context scalar_context(std::map<std::string, RatQ> scalars) {
  Context ctx;
  ctx.tag = "scalar";
  ctx.scalars = std::move(scalars);
  ctx.has_symbol = [](const std::string&) { return false; };
  ctx.symbol_power = [](const std::string& n, int) -> Elem { throw UnknownGenerator(n); };
  ctx.scalar = [](const RatQ& c) { return Elem::scalar(c, 0); };
  ctx.mul = [](const Elem& x, const Elem& y) {
    return Elem::scalar(scalar_value(x).value() * scalar_value(y).value(), 0);
  };
  ctx.power = [](const Elem& x, int n) { return Elem::scalar(scalar_value(x).value().pow(n), 0); };
  return ctx;
}

Elem parse_elem(const std::string& text, const Context& ctx) { return evaluate(*parse(text), ctx); }

RatQ parse_ratq(const std::string& text, const std::map<std::string, RatQ>& scalars) {
  const Elem e = parse_elem(text, scalar_context(scalars));
  return scalar_value(e).value();
}

std::string coefficient_text(const RatQ& c) {
  std::string s = c.to_string();
  if (c.den().is_constant() && c.num().term_count() > 1) return "(" + s + ")";
  return s;
}

namespace {

std::string mono_text(const Mono& m, const Alphabet& abc) {
  std::string out;
  auto factor = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  };
  if (abc.gwa) {
    factor("h", m[0]);
    if (m[1] > 0) factor("x", m[1]);
    if (m[1] < 0) factor("y", -m[1]);
    return out;
  }
  for (std::size_t g = 0; g < m.size(); ++g) factor(abc.names.at(g), m[g]);
  return out;
}

}  // namespace

std::string print_canonical(const Elem& e, const Alphabet& alphabet) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    const bool negative = c.num().lead() < 0;
    const RatQ mag = negative ? -c : c;
    const std::string mono = mono_text(m, alphabet);
    std::string body;
    if (mono.empty()) {
      body = coefficient_text(mag);
    } else if (mag.is_one()) {
      body = mono;
    } else {
      body = coefficient_text(mag) + "*" + mono;
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

json to_json(const RatQ& c) { return {{"num", c.num().to_string()}, {"den", c.den().to_string()}}; }

RatQ ratq_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() ||
      !j["den"].is_string())
    throw SchemaError("coefficient must be {\"num\": string, \"den\": string}");
  try {
    const RatQ num = parse_ratq(j["num"].get<std::string>());
    const RatQ den = parse_ratq(j["den"].get<std::string>());
    if (!num.den().is_constant() || !den.den().is_constant())
      throw SchemaError("coefficient num/den must be polynomials in q");
    if (den.is_zero()) throw SchemaError("coefficient denominator is zero");
    return num / den;
  } catch (const SyntaxError& e) {
    throw SchemaError(std::string("bad coefficient text: ") + e.what());
  } catch (const UnknownGenerator& e) {
    throw SchemaError(std::string("bad coefficient text: ") + e.what());
  }
}

json to_json(const Elem& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms()) terms.push_back({{"exp", m}, {"coeff", to_json(c)}});
  return {{"terms", terms}};
}

Elem from_json(const json& j, std::size_t ngens) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw SchemaError("element must be {\"terms\": [...]}");
  Elem out;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff") || !t["exp"].is_array())
      throw SchemaError("term must be {\"exp\": [...], \"coeff\": {...}}");
    Mono m;
    for (const auto& x : t["exp"]) {
      if (!x.is_number_integer()) throw SchemaError("exponents must be integers");
      m.push_back(x.get<int>());
    }
    if (m.size() != ngens) throw SchemaError("exponent vector has the wrong length");
    out.add_term(m, ratq_from_json(t["coeff"]));
  }
  return out;
}

json report_entry(const Check& c) {
  return {{"identity", c.identity},
          {"statement", c.statement},
          {"status", c.pass ? "pass" : "fail"},
          {"residual", to_json(c.residual)}};
}

json report_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back(report_entry(c));
  return arr;
}

}  // namespace qweyl::exprio
