#include "qweyl/ratq.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>

#include "qweyl/errors.hpp"

namespace qweyl {

Poly::Poly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

Poly::Poly(Rational c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Rational c, int degree) {
  assert(degree >= 0);
  Poly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = std::move(c);
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

std::size_t Poly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += (c != 0);
  return n;
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  Poly r = *this;
  Rational inv = 1 / lead();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
  } else {
    for (auto& x : coeffs_) x *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(rem.size() - b.coeffs_.size() + 1, Rational(0));
  const Rational inv_lead = 1 / b.lead();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    Rational f = top * inv_lead;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(k - db)] = std::move(f);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [quot, rem] = divmod(a, b);
  assert(rem.is_zero());
  return quot;
}

namespace {

using IntPoly = std::vector<mpz_class>;

// Integer multiple of p with coprime coefficients and positive leading coefficient.
IntPoly primitive_part(const Poly& p) {
  mpz_class scale = 1;
  for (const Rational& c : p.coeffs()) scale = lcm(scale, c.get_den());
  IntPoly out;
  out.reserve(p.coeffs().size());
  mpz_class content = 0;
  for (const Rational& c : p.coeffs()) {
    out.push_back(c.get_num() * (scale / c.get_den()));
    content = gcd(content, out.back());
  }
  if (out.back() < 0) content = -content;
  for (mpz_class& c : out) c /= content;
  return out;
}

mpz_class max_norm(const IntPoly& p) {
  mpz_class m = 0;
  for (const mpz_class& c : p)
    if (abs(c) > m) m = abs(c);
  return m;
}

mpz_class eval_int(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly to_poly(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const mpz_class& x : p) c.emplace_back(x);
  return Poly(std::move(c));
}

// Heuristic gcd: the gcd of the values at a large integer point, read back in
// that base with balanced digits, is the polynomial gcd whenever it divides
// both inputs. Returns nothing when a few evaluation points all fail.
std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b) {
  const IntPoly pa = primitive_part(a);
  const IntPoly pb = primitive_part(b);
  mpz_class xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class gamma = gcd(eval_int(pa, xi), eval_int(pb, xi));
    if (gamma != 0) {
      IntPoly digits;
      const mpz_class half = xi / 2;
      while (gamma != 0) {
        mpz_class r = gamma % xi;
        if (r < 0) r += xi;
        if (r > half) r -= xi;
        digits.push_back(r);
        gamma = (gamma - r) / xi;
      }
      const Poly g = to_poly(primitive_part(to_poly(digits)));
      if (Poly::divmod(a, g).second.is_zero() && Poly::divmod(b, g).second.is_zero()) return g.monic();
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.is_zero() ? Poly() : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (auto g = heuristic_gcd(a, b)) return *g;
  while (!b.is_zero()) {
    if (b.is_constant()) return Poly(1);
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (d == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

RatQ RatQ::canonicalize(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RatQ();
  if (!den.is_constant()) {
    Poly g = Poly::gcd(num, den);
    if (!g.is_constant()) {
      num = Poly::exact_div(num, g);
      den = Poly::exact_div(den, g);
    }
  }
  if (den.lead() != 1) {
    Rational inv = 1 / den.lead();
    num *= inv;
    den *= inv;
  }
  return RatQ(std::move(num), std::move(den), 0);
}

RatQ RatQ::from_laurent(const std::map<int, Rational>& num, const std::map<int, Rational>& den) {
  int shift = 0;
  for (const auto& [e, c] : num)
    if (c != 0) shift = std::min(shift, e);
  for (const auto& [e, c] : den)
    if (c != 0) shift = std::min(shift, e);
  auto lift = [shift](const std::map<int, Rational>& m) {
    Poly p;
    for (const auto& [e, c] : m) p += Poly::monomial(c, e - shift);
    return p;
  };
  return canonicalize(lift(num), lift(den));
}

RatQ RatQ::from_laurent(const std::map<int, Rational>& terms) {
  return from_laurent(terms, {{0, Rational(1)}});
}

RatQ RatQ::q_pow(int n) {
  if (n >= 0) return RatQ(Poly::monomial(1, n), Poly(1), 0);
  return RatQ(Poly(1), Poly::monomial(1, -n), 0);
}

bool RatQ::is_one() const { return den_.is_constant() && num_.is_constant() && !num_.is_zero() && num_.lead() == 1; }

RatQ RatQ::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return canonicalize(den_, num_);
}

RatQ RatQ::operator-() const { return RatQ(-num_, den_, 0); }

RatQ& RatQ::operator+=(const RatQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    Poly n = num_ + o.num_;
    if (den_.is_constant()) {
      num_ = std::move(n);
      if (num_.is_zero()) den_ = Poly(1);
      return *this;
    }
    return *this = canonicalize(std::move(n), den_);
  }
  Poly g = Poly::gcd(den_, o.den_);
  if (g.is_constant()) {
    Poly n = num_ * o.den_ + o.num_ * den_;
    Poly d = den_ * o.den_;
    // coprime monic denominators: only the new numerator can share a factor with d
    return *this = canonicalize(std::move(n), std::move(d));
  }
  Poly b1 = Poly::exact_div(den_, g);
  Poly d1 = Poly::exact_div(o.den_, g);
  Poly n = num_ * d1 + o.num_ * b1;
  Poly d = den_ * d1;
  return *this = canonicalize(std::move(n), std::move(d));
}

RatQ& RatQ::operator-=(const RatQ& o) { return *this += -o; }

RatQ& RatQ::operator*=(const RatQ& o) {
  if (is_zero() || o.is_zero()) return *this = RatQ();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  Poly a = g1.is_constant() ? num_ : Poly::exact_div(num_, g1);
  Poly d = g1.is_constant() ? o.den_ : Poly::exact_div(o.den_, g1);
  Poly c = g2.is_constant() ? o.num_ : Poly::exact_div(o.num_, g2);
  Poly b = g2.is_constant() ? den_ : Poly::exact_div(den_, g2);
  num_ = a * c;
  den_ = b * d;
  return *this;
}

RatQ& RatQ::operator/=(const RatQ& o) { return *this *= o.inverse(); }

RatQ RatQ::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatQ result(1);
  RatQ base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

std::string RatQ::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  std::string d = den_.term_count() > 1 ? "(" + den_.to_string() + ")" : den_.to_string();
  return n + "/" + d;
}

}  // namespace qweyl
