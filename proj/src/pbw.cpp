#include "qweyl/pbw.hpp"

#include <cstdlib>
#include <mutex>
#include <set>

namespace qweyl {

int grade(const Mono& m) {
  int g = 0;
  for (int e : m) g += std::abs(e);
  return g;
}

// ---------------------------------------------------------------------------
// Elem

Elem Elem::monomial(Mono m, RatQ c) {
  Elem e;
  if (!c.is_zero()) e.terms_.emplace(std::move(m), std::move(c));
  return e;
}

Elem Elem::scalar(const RatQ& c, std::size_t ngens) { return monomial(Mono(ngens, 0), c); }

RatQ Elem::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatQ() : it->second;
}

std::optional<RatQ> Elem::as_scalar() const {
  if (terms_.empty()) return RatQ();
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  if (grade(m) != 0) return std::nullopt;
  return c;
}

int Elem::degree() const {
  // terms are sorted by decreasing grade
  return terms_.empty() ? -1 : grade(terms_.begin()->first);
}

void Elem::add_term(const Mono& m, const RatQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Elem::add_scaled(const Elem& o, const RatQ& c) {
  if (c.is_zero()) return;
  const bool unit = c.is_one();
  for (const auto& [m, x] : o.terms_) add_term(m, unit ? x : x * c);
}

Elem& Elem::operator+=(const Elem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Elem& Elem::operator*=(const RatQ& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Elem Elem::operator-() const {
  Elem r = *this;
  for (auto& [m, x] : r.terms_) x = -x;
  return r;
}

// ---------------------------------------------------------------------------
// Presentation

namespace {

thread_local std::size_t tl_depth = 0;
thread_local std::size_t tl_burned = 0;

struct DepthGuard {
  DepthGuard() {
    if (tl_depth++ == 0) tl_burned = 0;
  }
  ~DepthGuard() { --tl_depth; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;
};

std::string letter_text(const std::vector<std::string>& names, Letter l) {
  const std::string& n = l.gen >= 0 && static_cast<std::size_t>(l.gen) < names.size()
                             ? names[static_cast<std::size_t>(l.gen)]
                             : std::string("?");
  return l.sign > 0 ? n : n + "^-1";
}

int last_nonzero(const Mono& m) {
  for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
    if (m[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

int first_nonzero(const Mono& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

MissingRule::MissingRule(Letter l, Letter r)
    : InvalidPresentation("no straightening rule for (" + std::to_string(l.gen) + "^" +
                          std::to_string(l.sign) + ")(" + std::to_string(r.gen) + "^" +
                          std::to_string(r.sign) + ")"),
      left(l),
      right(r) {}

std::size_t Presentation::PairHash::operator()(const std::pair<Mono, Mono>& k) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](int v) { h ^= static_cast<std::size_t>(v + 0x7f) + 0x9e3779b9 + (h << 6) + (h >> 2); };
  for (int v : k.first) mix(v);
  mix(1 << 20);
  for (int v : k.second) mix(v);
  return h;
}

Presentation::Presentation(std::vector<std::string> names, std::vector<bool> invertible_flags,
                           RuleTable rules, PowerRules power_rules, std::size_t fuel)
    : names_(std::move(names)),
      invertible_(std::move(invertible_flags)),
      rules_(std::move(rules)),
      power_rules_(std::move(power_rules)),
      fuel_(fuel) {
  const int n = static_cast<int>(names_.size());
  if (invertible_.size() != names_.size())
    throw InvalidPresentation("invertible flags do not match generator count");
  auto check_letter = [&](Letter l) {
    if (l.gen < 0 || l.gen >= n) throw InvalidPresentation("rule letter out of range");
    if (l.sign != 1 && l.sign != -1) throw InvalidPresentation("letter sign must be +-1");
    if (l.sign < 0 && !invertible(l.gen))
      throw InvalidPresentation("rule uses inverse of non-invertible " + name(l.gen));
  };
  for (const auto& [g, rule] : power_rules_) {
    if (g < 0 || g >= n) throw InvalidPresentation("power rule generator out of range");
    if (invertible(g)) throw InvalidPresentation("power-bounded generator cannot be invertible");
    if (rule.first < 1) throw InvalidPresentation("power bound must be at least 1");
  }
  auto check_rhs = [&](const Elem& rhs, const std::string& what) {
    for (const auto& [m, c] : rhs.terms()) {
      if (m.size() != names_.size()) throw InvalidPresentation(what + ": monomial has wrong arity");
      if (!is_normal(m)) throw InvalidPresentation(what + ": right-hand side not in normal form");
      if (c.is_zero()) throw InvalidPresentation(what + ": zero coefficient stored");
    }
  };
  for (const auto& [key, rhs] : rules_) {
    check_letter(key.first);
    check_letter(key.second);
    if (key.first.gen <= key.second.gen)
      throw InvalidPresentation("rule keys must be out-of-order pairs");
    check_rhs(rhs, letter_text(names_, key.first) + "*" + letter_text(names_, key.second));
  }
  for (const auto& [g, rule] : power_rules_) check_rhs(rule.second, "power rule for " + name(g));
}

std::optional<int> Presentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Presentation::power_bound(int g) const {
  auto it = power_rules_.find(g);
  if (it == power_rules_.end()) return std::nullopt;
  return it->second.first;
}

const Elem* Presentation::rule(Letter left, Letter right) const {
  auto it = rules_.find({left, right});
  return it == rules_.end() ? nullptr : &it->second;
}

bool Presentation::is_normal(const Mono& m) const {
  if (m.size() != size()) return false;
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (m[g] < 0 && !invertible_[g]) return false;
    if (auto b = power_bound(static_cast<int>(g)); b && m[g] > *b) return false;
  }
  return true;
}

Elem Presentation::gen(int g, int exponent) const {
  if (exponent < 0 && !invertible(g)) throw NonInvertibleNegativePower(name(g));
  if (auto b = power_bound(g); b && exponent > *b) {
    const std::pair<int, int> f{g, exponent};
    return normal_form(std::span(&f, 1));
  }
  Mono m = one();
  m[static_cast<std::size_t>(g)] = exponent;
  return Elem::monomial(std::move(m));
}

void Presentation::burn() const {
  if (++tl_burned > fuel_) throw FuelExhausted();
}

std::size_t Presentation::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return cache_.size();
}

Elem Presentation::product(const Mono& a, const Mono& b) const {
  if (grade(b) == 0) return Elem::monomial(a);
  if (grade(a) == 0) return Elem::monomial(b);
  std::pair<Mono, Mono> key{a, b};
  {
    std::shared_lock lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  DepthGuard guard;
  Elem result = product_uncached(a, b);
  std::unique_lock lock(cache_mutex_);
  cache_.try_emplace(std::move(key), result);
  return result;
}

Elem Presentation::product_uncached(const Mono& a, const Mono& b) const {
  // a * b = (a * x) * rest, where x is the first letter of b's word.
  const int i = first_nonzero(b);
  const int s = b[static_cast<std::size_t>(i)] > 0 ? 1 : -1;
  Mono rest = b;
  rest[static_cast<std::size_t>(i)] -= s;
  Elem left = times_letter(a, Letter{i, s});
  if (grade(rest) == 0) return left;
  Elem out;
  for (const auto& [m, c] : left.terms()) out.add_scaled(product(m, rest), c);
  return out;
}

Elem Presentation::times_letter(const Mono& a, Letter x) const {
  const int j = last_nonzero(a);
  const auto xi = static_cast<std::size_t>(x.gen);
  if (j < x.gen) {
    Mono m = a;
    m[xi] = x.sign;
    return Elem::monomial(std::move(m));
  }
  if (j == x.gen) {
    Mono m = a;
    m[xi] += x.sign;
    auto b = power_bound(x.gen);
    if (!b || m[xi] <= *b) return Elem::monomial(std::move(m));
    // prefix * X^(bound+1), prefix only involves earlier generators
    burn();
    m[xi] -= *b + 1;
    Elem out;
    for (const auto& [n, c] : power_rules_.at(x.gen).second.terms()) out.add_scaled(product(m, n), c);
    return out;
  }
  // a = prefix * y with y the last letter of a's word; y*x is straightened by the table.
  const Letter y{j, a[static_cast<std::size_t>(j)] > 0 ? 1 : -1};
  const Elem* rhs = rule(y, x);
  if (rhs == nullptr) throw MissingRule(y, x);
  burn();
  Mono prefix = a;
  prefix[static_cast<std::size_t>(j)] -= y.sign;
  Elem out;
  for (const auto& [n, c] : rhs->terms()) out.add_scaled(product(prefix, n), c);
  return out;
}

Elem Presentation::multiply(const Elem& a, const Elem& b) const {
  DepthGuard guard;
  Elem out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_scaled(product(ma, mb), ca * cb);
  return out;
}

Elem Presentation::commutator(const Elem& a, const Elem& b) const {
  return multiply(a, b) - multiply(b, a);
}

Elem Presentation::power(const Elem& a, int n) const {
  if (n < 0) throw InvalidPresentation("negative power of a general element");
  Elem result = scalar(RatQ(1));
  for (int k = 0; k < n; ++k) result = multiply(result, a);
  return result;
}

Elem Presentation::normal_form(std::span<const std::pair<int, int>> factors) const {
  DepthGuard guard;
  Elem acc = scalar(RatQ(1));
  for (const auto& [g, e] : factors) {
    if (g < 0 || static_cast<std::size_t>(g) >= size())
      throw InvalidPresentation("generator index out of range");
    if (e < 0 && !invertible(g)) throw NonInvertibleNegativePower(name(g));
    const int s = e >= 0 ? 1 : -1;
    Mono letter = one();
    letter[static_cast<std::size_t>(g)] = s;
    for (int k = 0; k < std::abs(e); ++k) {
      Elem next;
      for (const auto& [m, c] : acc.terms()) next.add_scaled(product(m, letter), c);
      acc = std::move(next);
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Localization

namespace {

Mono two_letter(std::size_t n, Letter a, Letter b) {
  Mono m(n, 0);
  m[static_cast<std::size_t>(a.gen)] += a.sign;
  m[static_cast<std::size_t>(b.gen)] += b.sign;
  return m;
}

}  // namespace

PresentationPtr derive_inverse_rules(const Presentation& p, int k) {
  const std::size_t n = p.size();
  if (k < 0 || static_cast<std::size_t>(k) >= n) throw UnderivableInverseRule("generator out of range");
  if (p.power_bound(k)) throw UnderivableInverseRule("cannot invert power-bounded " + p.name(k));

  std::vector<std::string> names = p.names();
  std::vector<bool> inv = p.invertible_flags();
  inv[static_cast<std::size_t>(k)] = true;
  RuleTable rules = p.rules();
  const Letter kinv{k, -1};

  // Pending rule keys together with the existing rule they are solved from.
  struct Pending {
    std::pair<Letter, Letter> key;
    std::pair<Letter, Letter> base;
    bool inverse_on_left;  // key is (X_k^{-1}, x) rather than (y, X_k^{-1})
  };
  std::vector<Pending> pending;
  for (int g = 0; g < static_cast<int>(n); ++g) {
    if (g == k) continue;
    std::vector<int> signs{1};
    if (inv[static_cast<std::size_t>(g)]) signs.push_back(-1);
    for (int s : signs) {
      const Letter other{g, s};
      if (g < k) {
        pending.push_back({{kinv, other}, {Letter{k, 1}, other}, true});
      } else {
        pending.push_back({{other, kinv}, {other, Letter{k, 1}}, false});
      }
    }
  }

  while (!pending.empty()) {
    // Work presentation with every rule derived so far; missing rules abort an attempt.
    auto work = std::make_shared<Presentation>(names, inv, rules, p.power_rules(), p.fuel());
    const Elem xk_inv = work->gen(k, -1);
    std::vector<Pending> deferred;
    for (const auto& item : pending) {
      const Elem* base = work->rule(item.base.first, item.base.second);
      if (base == nullptr)
        throw UnderivableInverseRule("no rule for " + letter_text(names, item.base.first) + "*" +
                                     letter_text(names, item.base.second));
      // base = mu * (swapped pair) + r
      const Letter x = item.inverse_on_left ? item.key.second : item.key.first;
      const Mono swapped = item.inverse_on_left ? two_letter(n, x, Letter{k, 1})
                                                : two_letter(n, Letter{k, 1}, x);
      const RatQ mu = base->coeff(swapped);
      if (mu.is_zero())
        throw UnderivableInverseRule("rule " + letter_text(names, item.base.first) + "*" +
                                     letter_text(names, item.base.second) +
                                     " is not of skew form mu*x*y + r");
      Elem r = *base;
      r.add_term(swapped, -mu);
      try {
        Elem correction = r.is_zero() ? Elem() : work->multiply(work->multiply(xk_inv, r), xk_inv);
        Elem lead = Elem::monomial(two_letter(n, item.inverse_on_left ? x : kinv,
                                              item.inverse_on_left ? kinv : x));
        Elem rhs = lead - correction;
        rhs *= mu.inverse();
        rules.emplace(item.key, std::move(rhs));
      } catch (const MissingRule&) {
        deferred.push_back(item);
      }
    }
    if (deferred.size() == pending.size())
      throw UnderivableInverseRule("inverse rules for " + p.name(k) + " do not close");
    pending = std::move(deferred);
  }
  return std::make_shared<Presentation>(std::move(names), std::move(inv), std::move(rules),
                                        p.power_rules(), p.fuel());
}

}  // namespace qweyl
