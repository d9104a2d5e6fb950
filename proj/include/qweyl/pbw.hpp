#pragma once

// Sparse rewriting onto PBW normal forms.
//
// A presentation lists ordered generators X_0 < X_1 < ... and, for every
// out-of-order pair of letters, the normal form of their product. A letter is
// a generator raised to +1 or, for invertible generators, to -1. Normal
// monomials are exponent vectors; the word they stand for lists generators in
// increasing order. Optional power rules bound the exponent of a generator and
// give the normal form of its first forbidden power.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/ratq.hpp"

namespace qweyl {

using Mono = std::vector<int>;

/// Sum of absolute exponents.
int grade(const Mono& m);

/// Graded lexicographic order, largest first: higher grade, then larger
/// exponent vector. Elements iterate their terms in this order.
struct MonoOrder {
  bool operator()(const Mono& a, const Mono& b) const {
    const int ga = grade(a);
    const int gb = grade(b);
    if (ga != gb) return ga > gb;
    return a > b;
  }
};

/// Finite linear combination of normal monomials with nonzero coefficients.
class Elem {
 public:
  using Terms = std::map<Mono, RatQ, MonoOrder>;

  Elem() = default;
  static Elem monomial(Mono m, RatQ c = RatQ(1));
  static Elem scalar(const RatQ& c, std::size_t ngens);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RatQ coeff(const Mono& m) const;
  /// The coefficient of the identity when the element is a pure scalar.
  std::optional<RatQ> as_scalar() const;
  /// Maximum grade over the support, -1 for zero.
  int degree() const;

  void add_term(const Mono& m, const RatQ& c);
  void add_scaled(const Elem& o, const RatQ& c);

  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const RatQ& c);
  Elem operator-() const;

  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(const RatQ& c, Elem a) { return a *= c; }
  friend bool operator==(const Elem& a, const Elem& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

struct Letter {
  int gen = 0;
  int sign = 1;
  auto operator<=>(const Letter&) const = default;
};

/// Key (left, right) with left.gen > right.gen; the value is the normal form of left*right.
using RuleTable = std::map<std::pair<Letter, Letter>, Elem>;

/// gen -> (bound, normal form of gen^(bound+1)).
using PowerRules = std::map<int, std::pair<int, Elem>>;

/// Raised when a product needs a straightening rule the table does not have.
class MissingRule : public InvalidPresentation {
 public:
  MissingRule(Letter l, Letter r);
  Letter left;
  Letter right;
};

class Presentation {
 public:
  static constexpr std::size_t kDefaultFuel = 1'000'000;

  Presentation(std::vector<std::string> names, std::vector<bool> invertible, RuleTable rules,
               PowerRules power_rules = {}, std::size_t fuel = kDefaultFuel);
  Presentation(const Presentation&) = delete;
  Presentation& operator=(const Presentation&) = delete;

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int g) const { return names_.at(static_cast<std::size_t>(g)); }
  std::optional<int> index_of(const std::string& name) const;
  bool invertible(int g) const { return invertible_.at(static_cast<std::size_t>(g)); }
  const std::vector<bool>& invertible_flags() const { return invertible_; }
  const RuleTable& rules() const { return rules_; }
  const PowerRules& power_rules() const { return power_rules_; }
  std::optional<int> power_bound(int g) const;
  const Elem* rule(Letter left, Letter right) const;
  std::size_t fuel() const { return fuel_; }

  Mono one() const { return Mono(size(), 0); }
  bool is_normal(const Mono& m) const;
  Elem scalar(const RatQ& c) const { return Elem::scalar(c, size()); }
  Elem gen(int g, int exponent = 1) const;

  /// Normal form of the product of two normal monomials (memoized).
  Elem product(const Mono& a, const Mono& b) const;
  Elem multiply(const Elem& a, const Elem& b) const;
  Elem commutator(const Elem& a, const Elem& b) const;
  Elem power(const Elem& a, int n) const;
  /// Normal form of X_{g1}^{n1} X_{g2}^{n2} ... for arbitrary (generator, exponent) factors.
  Elem normal_form(std::span<const std::pair<int, int>> factors) const;

  std::size_t cache_size() const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Mono, Mono>& k) const noexcept;
  };

  Elem product_uncached(const Mono& a, const Mono& b) const;
  Elem times_letter(const Mono& a, Letter x) const;
  void burn() const;

  std::vector<std::string> names_;
  std::vector<bool> invertible_;
  RuleTable rules_;
  PowerRules power_rules_;
  std::size_t fuel_;

  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<std::pair<Mono, Mono>, Elem, PairHash> cache_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Returns a copy of p in which generator k is invertible, with the straightening
/// rules for every pair involving X_k^{-1}. Each rule X_k x = mu x X_k + r yields
/// X_k^{-1} x = mu^{-1} (x X_k^{-1} - X_k^{-1} r X_k^{-1}); each rule
/// y X_k = mu X_k y + r yields y X_k^{-1} = mu^{-1} (X_k^{-1} y - X_k^{-1} r X_k^{-1}).
/// The correction terms are normalized recursively; throws UnderivableInverseRule
/// when that recursion does not close.
PresentationPtr derive_inverse_rules(const Presentation& p, int k);

}  // namespace qweyl
