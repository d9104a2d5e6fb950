#pragma once

// Exact arithmetic in Q(q): univariate polynomials with rational
// coefficients and reduced fractions of them.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qweyl {

using Rational = mpq_class;

/// Dense polynomial in q over Q; coeffs()[i] multiplies q^i.
/// Trailing zero coefficients are never stored, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(Rational c);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(Rational c, int degree);
  static Poly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& lead() const { return coeffs_.back(); }
  std::size_t term_count() const;

  Poly monic() const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Exact division; the remainder is asserted to vanish.
  static Poly exact_div(const Poly& a, const Poly& b);
  /// Monic gcd (zero only when both inputs are zero).
  static Poly gcd(Poly a, Poly b);

  Rational eval(const Rational& x) const;

  /// Compact text, highest power first: "q^3+q", "-1/2*q+3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of Q(q) kept in canonical form: gcd(num, den) = 1, den monic, 0 = 0/1.
/// Two values are equal exactly when their representations are identical.
class RatQ {
 public:
  RatQ() : den_(1) {}
  RatQ(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatQ(Rational c) : num_(std::move(c)), den_(1) {}
  explicit RatQ(Poly p) : num_(std::move(p)), den_(1) {}

  /// Reduces num/den; throws DivisionByZero when den is zero.
  static RatQ canonicalize(Poly num, Poly den);
  /// Laurent input: exponent -> coefficient, negative powers cleared into den.
  static RatQ from_laurent(const std::map<int, Rational>& terms);
  static RatQ from_laurent(const std::map<int, Rational>& num,
                           const std::map<int, Rational>& den);
  static RatQ q_pow(int n);
  static RatQ q() { return q_pow(1); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatQ inverse() const;
  RatQ operator-() const;
  RatQ& operator+=(const RatQ& o);
  RatQ& operator-=(const RatQ& o);
  RatQ& operator*=(const RatQ& o);
  RatQ& operator/=(const RatQ& o);

  friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
  friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
  friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
  friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }
  friend bool operator==(const RatQ& a, const RatQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatQ pow(int n) const;
  std::string to_string() const;
  /// Total numerator "size" used for deterministic pivot tie-breaking.
  int num_degree() const { return num_.degree(); }

 private:
  RatQ(Poly num, Poly den, int /*trusted*/) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

}  // namespace qweyl
