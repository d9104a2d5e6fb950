#include "qweyl/gwa.hpp"

#include <algorithm>
#include <cstdlib>

namespace qweyl::gwa {

namespace {

Mono gm(int i, int j) { return Mono{i, j}; }

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      RatQ& slot = out[ea + eb];
      slot += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// prod_{s = from}^{to} sigma^s(a), inclusive, empty product = 1.
Laurent sigma_product(const GwaAlgebra& A, int from, int to) {
  Laurent acc{{0, RatQ(1)}};
  for (int s = from; s <= to; ++s) acc = laurent_mul(acc, twist(A.a, A.rho, s));
  return acc;
}

// X^j1 * X^j2 as (Laurent coefficient, resulting signed exponent).
std::pair<Laurent, int> xy_product(const GwaAlgebra& A, int j1, int j2) {
  if (j1 == 0 || j2 == 0 || (j1 > 0) == (j2 > 0)) return {Laurent{{0, RatQ(1)}}, j1 + j2};
  if (j1 > 0) {
    // x^m y^l = sigma^(m-t)(prod_{s=1}^t sigma^s(a)) X^(m-l)
    const int m = j1;
    const int l = -j2;
    const int t = std::min(m, l);
    return {twist(sigma_product(A, 1, t), A.rho, m - t), m - l};
  }
  // y^l x^m = sigma^-(l-t)(prod_{s=0}^{t-1} sigma^-s(a)) X^(m-l)
  const int l = -j1;
  const int m = j2;
  const int t = std::min(m, l);
  return {twist(sigma_product(A, -(t - 1), 0), A.rho, -(l - t)), m - l};
}

}  // namespace

GwaAlgebra::GwaAlgebra(Laurent a_poly, RatQ twist_scalar) : a(std::move(a_poly)), rho(std::move(twist_scalar)) {
  std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
  if (a.empty()) throw InvalidPresentation("GWA defining polynomial a must be nonzero");
  if (rho.is_zero() || rho == RatQ(1) || rho == RatQ(-1))
    throw InvalidPresentation("GWA twist must not be zero or a root of unity");
}

GwaAlgebra GwaAlgebra::localized_quotient(const RatQ& alpha) {
  Laurent a;
  if (!alpha.is_zero()) a[0] = alpha;
  a[2] = RatQ::q() / (RatQ::q_pow(2) + RatQ(1)).pow(2);
  return GwaAlgebra(std::move(a), RatQ::q_pow(2));
}

GwaElem h_pow(int i, const RatQ& c) { return Elem::monomial(gm(i, 0), c); }
GwaElem x_pow(int j, const RatQ& c) { return Elem::monomial(gm(0, j), c); }
GwaElem y_pow(int j, const RatQ& c) { return Elem::monomial(gm(0, -j), c); }
GwaElem scalar(const RatQ& c) { return Elem::monomial(gm(0, 0), c); }

GwaElem from_laurent(const Laurent& p) {
  GwaElem out;
  for (const auto& [e, c] : p) out.add_term(gm(e, 0), c);
  return out;
}

Laurent twist(const Laurent& p, const RatQ& rho, int s) {
  if (s == 0) return p;
  Laurent out;
  for (const auto& [e, c] : p) out.emplace(e, c * rho.pow(s * e));
  return out;
}

GwaElem gwa_multiply(const GwaAlgebra& A, const GwaElem& u, const GwaElem& v) {
  GwaElem out;
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      const int i1 = mu[0], j1 = mu[1], i2 = mv[0], j2 = mv[1];
      // X^j1 h^i2 = rho^(j1*i2) h^i2 X^j1
      const RatQ c = cu * cv * A.rho.pow(j1 * i2);
      const auto [poly, j] = xy_product(A, j1, j2);
      for (const auto& [k, pk] : poly) out.add_term(gm(i1 + i2 + k, j), c * pk);
    }
  }
  return out;
}

GwaElem gwa_commutator(const GwaAlgebra& A, const GwaElem& u, const GwaElem& v) {
  return gwa_multiply(A, u, v) - gwa_multiply(A, v, u);
}

GwaElem gwa_power(const GwaAlgebra& A, const GwaElem& u, int n) {
  GwaElem acc = scalar(RatQ(1));
  for (int k = 0; k < n; ++k) acc = gwa_multiply(A, acc, u);
  return acc;
}

namespace {

// D(g^n) for a single letter g with image dg, n >= 0: sum_m g^m dg g^(n-1-m).
GwaElem letter_power_image(const GwaAlgebra& A, const GwaElem& g, const GwaElem& dg, int n) {
  GwaElem out;
  for (int m = 0; m < n; ++m)
    out += gwa_multiply(A, gwa_multiply(A, gwa_power(A, g, m), dg), gwa_power(A, g, n - 1 - m));
  return out;
}

}  // namespace

GwaElem apply(const GwaAlgebra& A, const GwaDerivation& D, const GwaElem& u) {
  GwaElem out;
  for (const auto& [m, c] : u.terms()) {
    const int i = m[0];
    const int j = m[1];
    GwaElem dh_part;
    if (i > 0) {
      dh_part = letter_power_image(A, h_pow(1), D.dh, i);
    } else if (i < 0) {
      const GwaElem hinv = h_pow(-1);
      const GwaElem dhinv = -gwa_multiply(A, gwa_multiply(A, hinv, D.dh), hinv);
      dh_part = letter_power_image(A, hinv, dhinv, -i);
    }
    GwaElem dxy_part;
    if (j > 0) dxy_part = letter_power_image(A, x_pow(1), D.dx, j);
    if (j < 0) dxy_part = letter_power_image(A, y_pow(1), D.dy, -j);
    GwaElem term = gwa_multiply(A, dh_part, Elem::monomial(gm(0, j)));
    term += gwa_multiply(A, h_pow(i), dxy_part);
    out.add_scaled(term, c);
  }
  return out;
}

std::vector<Check> derivation_residuals(const GwaAlgebra& A, const GwaDerivation& D) {
  const GwaElem h = h_pow(1), x = x_pow(1), y = y_pow(1);
  const Alphabet abc = Alphabet::gwa_alphabet();
  auto leibniz = [&](const GwaElem& u, const GwaElem& du, const GwaElem& v, const GwaElem& dv) {
    return gwa_multiply(A, du, v) + gwa_multiply(A, u, dv);
  };
  std::vector<Check> out;
  out.push_back(residual_check("gwa.leibniz_yx", "D(y*x - a) = 0",
                               leibniz(y, D.dy, x, D.dx) - apply(A, D, from_laurent(A.a)), abc));
  out.push_back(residual_check("gwa.leibniz_xy", "D(x*y - sigma(a)) = 0",
                               leibniz(x, D.dx, y, D.dy) -
                                   apply(A, D, from_laurent(twist(A.a, A.rho, 1))),
                               abc));
  out.push_back(residual_check("gwa.leibniz_xh", "D(x*h - rho*h*x) = 0",
                               leibniz(x, D.dx, h, D.dh) - A.rho * leibniz(h, D.dh, x, D.dx), abc));
  out.push_back(residual_check(
      "gwa.leibniz_yh", "D(y*h - rho^-1*h*y) = 0",
      leibniz(y, D.dy, h, D.dh) - A.rho.inverse() * leibniz(h, D.dh, y, D.dy), abc));
  return out;
}

bool gwa_derivation_check(const GwaAlgebra& A, const GwaDerivation& D) {
  const auto checks = derivation_residuals(A, D);
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

GwaDerivation inner(const GwaAlgebra& A, const GwaElem& w) {
  return {gwa_commutator(A, w, h_pow(1)), gwa_commutator(A, w, x_pow(1)),
          gwa_commutator(A, w, y_pow(1))};
}

GwaDerivation scalar_derivation(const RatQ& lambda) {
  return {GwaElem(), x_pow(1, lambda), y_pow(1, -lambda)};
}

GwaDerivation operator+(const GwaDerivation& a, const GwaDerivation& b) {
  return {a.dh + b.dh, a.dx + b.dx, a.dy + b.dy};
}

GwaDecomp gwa_decompose(const GwaAlgebra& A, const GwaDerivation& D) {
  if (!gwa_derivation_check(A, D)) throw NotADerivation("input fails the Leibniz check on the GWA relations");

  GwaElem w;
  for (const auto& [m, c] : D.dh.terms()) {
    const int i = m[0];
    const int j = m[1];
    if (j == 0) throw ObstructedShape("D(h) has a component in K[h^+-1]");
    w.add_term(gm(i - 1, j), c / (A.rho.pow(j) - RatQ(1)));
  }

  const GwaDerivation adw = inner(A, w);
  const GwaElem dx = D.dx - adw.dx;
  const GwaElem dy = D.dy - adw.dy;
  if (!(D.dh - adw.dh).is_zero()) throw ObstructedShape("D(h) not removed by the inner part");

  Laurent p;
  for (const auto& [m, c] : dx.terms()) {
    if (m[1] != 1) throw ObstructedShape("D'(x) is not of the form p(h) x");
    p[m[0]] = c;
  }
  // D'(y) = -p(rho^-1 h) y
  GwaElem expected_dy;
  for (const auto& [e, c] : twist(p, A.rho, -1)) expected_dy.add_term(gm(e, -1), -c);
  if (!(dy - expected_dy).is_zero()) throw ObstructedShape("D'(y) inconsistent with D'(x)");

  const RatQ lambda = p.count(0) ? p.at(0) : RatQ();
  for (const auto& [e, c] : p) {
    if (e == 0) continue;
    w.add_term(gm(e, 0), c / (RatQ(1) - A.rho.pow(e)));
  }

  const GwaDerivation rebuilt = inner(A, w) + scalar_derivation(lambda);
  if (!(rebuilt.dh - D.dh).is_zero() || !(rebuilt.dx - D.dx).is_zero() || !(rebuilt.dy - D.dy).is_zero())
    throw ObstructedShape("reconstruction failed");
  return {std::move(w), lambda};
}

}  // namespace qweyl::gwa
