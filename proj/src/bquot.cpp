#include "qweyl/bquot.hpp"

#include <array>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "qweyl/so5.hpp"

namespace qweyl::bquot {

namespace {

using so5::constants;

RatQ qp(int n) { return RatQ::q_pow(n); }

Mono bm(int i, int d, int j) { return Mono{i, d, j}; }

PresentationPtr b_presentation(const Params& params) {
  const auto& k = constants();
  RuleTable rules;
  auto key = [](int a, int b) { return std::make_pair(Letter{a, 1}, Letter{b, 1}); };

  rules.emplace(key(kE2, kE1), Elem::monomial(bm(1, 1, 0), qp(-2)));

  Elem r41 = Elem::monomial(bm(1, 0, 1), qp(2));
  r41.add_term(bm(0, 1, 0), -qp(2));
  rules.emplace(key(kE4, kE1), std::move(r41));

  // E4E2 = E2E4 - (q+q^-1)E3 with E3 = k1*beta - k1*E2E4.
  const RatQ s = qp(1) + qp(-1);
  Elem r42 = Elem::monomial(bm(0, 1, 1), RatQ(1) + s * k.k1);
  r42.add_term(bm(0, 0, 0), -s * k.k1 * params.beta);
  rules.emplace(key(kE4, kE2), std::move(r42));

  // e2^2 = alpha*k2 - beta*k1*k2*e1 + k1*k2*e1*e2*e4
  Elem sq = Elem::monomial(bm(0, 0, 0), params.alpha * k.k2);
  sq.add_term(bm(1, 0, 0), -params.beta * k.k1 * k.k2);
  sq.add_term(bm(1, 1, 1), k.k1 * k.k2);
  PowerRules power;
  power.emplace(kE2, std::make_pair(1, std::move(sq)));

  return std::make_shared<const Presentation>(std::vector<std::string>{"e1", "e2", "e4"},
                                              std::vector<bool>(3, false), std::move(rules),
                                              std::move(power));
}

Elem e3_value(const Presentation& p, const Params& params) {
  const auto& k = constants();
  Elem e3 = p.scalar(k.k1 * params.beta);
  e3.add_term(bm(0, 1, 1), -k.k1);
  return e3;
}

Algebra wrap(const std::string& tag, PresentationPtr pres, const Params& params) {
  Algebra alg{tag, std::move(pres), {}, {{"alpha", params.alpha}, {"beta", params.beta}}};
  alg.aliases.emplace("e3", e3_value(*alg.pres, params));
  return alg;
}

Elem pow_or_one(const Presentation& p, const Elem& z, int n) {
  return n == 0 ? p.scalar(RatQ(1)) : p.power(z, n);
}

}  // namespace

std::string Params::to_string() const { return "alpha=" + alpha.to_string() + ",beta=" + beta.to_string(); }

QuotientAlgebra make_b(const Params& params) {
  if (params.alpha.is_zero() && params.beta.is_zero()) throw BothParamsZero();
  return QuotientAlgebra{params, wrap("b", b_presentation(params), params), false, nullptr};
}

QuotientAlgebra make_r(const Params& params) {
  if (params.beta.is_zero()) throw BetaZero();
  const auto& k = constants();
  PresentationPtr base = b_presentation(params);
  QuotientAlgebra r{params, wrap("r", derive_inverse_rules(*base, kE4), params), true, nullptr};
  const Presentation& p = r.pres();

  const Elem e3 = r.e3();
  const Elem e4inv = r.gen(kE4, -1);
  Elem f2 = r.gen(kE2) + k.p3 * p.multiply(e3, e4inv);
  Elem f1 = r.gen(kE1) + k.p1 * p.multiply(r.gen(kE2), e4inv) + k.p2 * p.multiply(e3, r.gen(kE4, -2));
  r.alg.aliases.emplace("f1", f1);
  r.alg.aliases.emplace("f2", f2);

  // f2 e4 = beta, so f2^-1 = beta^-1 e4.
  const RatQ binv = params.beta.inverse();
  Elem f2inv = binv * r.gen(kE4);
  if (!(p.multiply(f2, f2inv) - p.scalar(RatQ(1))).is_zero() ||
      !(p.multiply(f2inv, f2) - p.scalar(RatQ(1))).is_zero())
    throw InvalidPresentation("f2 is not inverted by beta^-1 e4");

  auto pic = std::make_shared<GwaPicture>(GwaPicture{gwa::GwaAlgebra::localized_quotient(params.alpha),
                                                     f1, f2, f2inv, e3, {}, {}, {}, {}});
  const gwa::GwaAlgebra& A = pic->gwa;
  const gwa::GwaElem y = gwa::y_pow(1);
  const gwa::GwaElem binv_h = gwa::h_pow(1, binv);
  pic->image_e4 = gwa::h_pow(-1, params.beta);
  pic->image_e4_inverse = binv_h;
  pic->image_e2 = gwa::h_pow(1) - k.p3 * gwa::gwa_multiply(A, y, binv_h);
  pic->image_e1 = gwa::x_pow(1) - k.p1 * gwa::gwa_multiply(A, pic->image_e2, binv_h) -
                  k.p2 * gwa::gwa_multiply(A, y, gwa::gwa_multiply(A, binv_h, binv_h));
  r.picture = std::move(pic);
  return r;
}

Elem nf_b(const QuotientAlgebra& b, const std::vector<std::pair<std::string, int>>& word) {
  return b.alg.evaluate(word);
}

Elem from_u(const QuotientAlgebra& b, const Elem& u_elem) {
  const Presentation& p = b.pres();
  const std::array<Elem, 4> images{b.gen(kE1), b.gen(kE2), b.e3(), b.gen(kE4)};
  Elem out;
  for (const auto& [m, c] : u_elem.terms()) {
    if (m.size() != 4) throw std::invalid_argument("from_u expects a four-generator element");
    Elem acc = p.scalar(RatQ(1));
    for (std::size_t g = 0; g < 4; ++g) {
      if (m[g] < 0) throw NonInvertibleNegativePower("E" + std::to_string(g + 1));
      if (m[g] > 0) acc = p.multiply(acc, pow_or_one(p, images[g], m[g]));
    }
    out.add_scaled(acc, c);
  }
  return out;
}

Elem intro_presentation_residual(const QuotientAlgebra& b, const RatQ& lead) {
  const auto& k = constants();
  const Presentation& p = b.pres();
  Elem lhs = lead * p.power(b.gen(kE2), 2);
  Elem rhs = p.scalar(k.p3 * b.params.alpha);
  rhs.add_term(bm(1, 0, 0), -b.params.beta);
  rhs += p.multiply(p.multiply(b.gen(kE1), b.gen(kE2)), b.gen(kE4));
  return lhs - rhs;
}

bool intro_presentation_check(const Params& params) {
  const QuotientAlgebra b = make_b(params);
  return intro_presentation_residual(b, qp(6) / (qp(4) - RatQ(1))).is_zero();
}

std::vector<Check> quotient_checks(const QuotientAlgebra& b) {
  const auto& k = constants();
  const Presentation& p = b.pres();
  const Alphabet abc = Alphabet::of(p);
  const std::string tag = "b[" + b.params.to_string() + "]";
  std::vector<Check> out;

  const Elem e2 = b.gen(kE2), e4 = b.gen(kE4);
  const Elem e3_from_commutator = (qp(1) + qp(-1)).inverse() * p.commutator(e2, e4);
  out.push_back(residual_check(tag + ".e3_relation", "(e2*e4 - e4*e2)/(q+q^-1) = k1*beta - k1*e2*e4",
                               e3_from_commutator - b.e3(), abc));

  Elem sq_rhs = p.scalar(b.params.alpha * k.k2);
  sq_rhs.add_term(bm(1, 0, 0), -b.params.beta * k.k1 * k.k2);
  sq_rhs.add_term(bm(1, 1, 1), k.k1 * k.k2);
  out.push_back(residual_check(tag + ".e2_squared_relation",
                               "e2^2 = alpha*k2 - beta*k1*k2*e1 + k1*k2*e1*e2*e4",
                               p.multiply(e2, e2) - sq_rhs, abc));

  out.push_back(residual_check(tag + ".chi1_is_alpha", "e1*e3 + p4*e2^2 = alpha",
                               from_u(b, so5::chi(1)) - p.scalar(b.params.alpha), abc));
  out.push_back(residual_check(tag + ".chi2_is_beta", "e2*e4 + p3*e3 = beta",
                               from_u(b, so5::chi(2)) - p.scalar(b.params.beta), abc));

  // The six straightening rules of U survive in B.
  const Presentation& u = *so5::make_so5();
  for (const auto& [key, rhs] : u.rules()) {
    const int hi = key.first.gen;
    const int lo = key.second.gen;
    const Elem raw = p.multiply(from_u(b, u.gen(hi)), from_u(b, u.gen(lo)));
    const std::string name = "E" + std::to_string(hi + 1) + "E" + std::to_string(lo + 1);
    out.push_back(residual_check(tag + ".relation_" + name,
                                 "e" + std::to_string(hi + 1) + "*e" + std::to_string(lo + 1) +
                                     " matches the U straightening rule",
                                 raw - from_u(b, rhs), abc));
  }

  out.push_back(residual_check(tag + ".intro_presentation",
                               "q^6/(q^4-1)*e2^2 = p3*alpha - beta*e1 + e1*e2*e4",
                               intro_presentation_residual(b, qp(6) / (qp(4) - RatQ(1))), abc));
  return out;
}

std::vector<Check> lemma_d_f(const QuotientAlgebra& b, int i) {
  if (i < 0) throw std::invalid_argument("lemma_d_f needs i >= 0");
  const Presentation& p = b.pres();
  const Alphabet abc = Alphabet::of(p);
  const std::string tag = "b[" + b.params.to_string() + "]";
  const Elem e1i = pow_or_one(p, b.gen(kE1), i);
  const Elem e3 = b.e3();
  std::vector<Check> out;

  Elem d_side = p.multiply(e3, e1i) - p.multiply(e1i, e3);
  if (i > 0)
    d_side -= so5::Constants::d(i) *
              p.multiply(pow_or_one(p, b.gen(kE1), i - 1), p.power(b.gen(kE2), 2));
  out.push_back(residual_check(tag + ".lemma.d[" + std::to_string(i) + "]",
                               "e3*e1^i = e1^i*e3 + d[i]*e1^(i-1)*e2^2", d_side, abc));

  Elem f_side = p.multiply(b.gen(kE4), e1i) - qp(2 * i) * p.multiply(e1i, b.gen(kE4));
  if (i > 0) f_side += so5::Constants::f(i) * p.multiply(pow_or_one(p, b.gen(kE1), i - 1), b.gen(kE2));
  out.push_back(residual_check(tag + ".lemma.f[" + std::to_string(i) + "]",
                               "e4*e1^i = q^(2i)*e1^i*e4 - f[i]*e1^(i-1)*e2", f_side, abc));
  return out;
}

bool in_basis(const Elem& z, bool localized) {
  for (const auto& [m, c] : z.terms()) {
    if (m.size() != 3 || m[0] < 0 || m[1] < 0 || m[1] > 1) return false;
    if (!localized && m[2] < 0) return false;
  }
  return true;
}

int basis_degree(const Mono& m) { return std::abs(m[0]) + std::abs(m[1]) + std::abs(m[2]); }

std::vector<Mono> basis_monomials(int max_degree, bool localized) {
  std::vector<Mono> out;
  for (int deg = 0; deg <= max_degree; ++deg)
    for (int d = 0; d <= 1; ++d)
      for (int i = 0; i + d <= deg; ++i) {
        const int rest = deg - i - d;
        out.push_back(bm(i, d, rest));
        if (localized && rest > 0) out.push_back(bm(i, d, -rest));
      }
  return out;
}

FElements f_elements(const QuotientAlgebra& r) {
  if (!r.picture) throw std::invalid_argument("f_elements needs the localization R");
  return {r.picture->f1, r.picture->f2};
}

std::vector<Check> r_presentation_checks(const QuotientAlgebra& r) {
  const auto& k = constants();
  const auto [f1, f2] = f_elements(r);
  const Presentation& p = r.pres();
  const Alphabet abc = Alphabet::of(p);
  const Elem e3 = r.e3();
  const std::string tag = "r[" + r.params.to_string() + "]";
  std::vector<Check> out;
  out.push_back(residual_check(tag + ".f1f2", "f1*f2 = q^2*f2*f1",
                               p.multiply(f1, f2) - qp(2) * p.multiply(f2, f1), abc));
  out.push_back(residual_check(tag + ".e3f2", "e3*f2 = q^-2*f2*e3",
                               p.multiply(e3, f2) - qp(-2) * p.multiply(f2, e3), abc));
  out.push_back(residual_check(tag + ".e3f1", "e3*f1 = f1*e3 + (q-q^3)/(1+q^2)*f2^2",
                               p.multiply(e3, f1) - p.multiply(f1, e3) - k.c31 * p.multiply(f2, f2), abc));
  out.push_back(residual_check(tag + ".f1e3_alpha", "f1*e3 - q^5/(1+q^2)^2*f2^2 = alpha",
                               p.multiply(f1, e3) + k.p4 * p.multiply(f2, f2) - p.scalar(r.params.alpha),
                               abc));
  out.push_back(residual_check(tag + ".f2e4_beta", "f2*e4 = beta",
                               p.multiply(f2, r.gen(kE4)) - p.scalar(r.params.beta), abc));
  return out;
}

gwa::GwaElem to_gwa(const QuotientAlgebra& r, const Elem& z) {
  if (!r.picture) throw std::invalid_argument("to_gwa needs the localization R");
  const GwaPicture& pic = *r.picture;
  const gwa::GwaAlgebra& A = pic.gwa;
  std::map<std::pair<int, int>, gwa::GwaElem> cache;
  auto power = [&](int which, int n) -> const gwa::GwaElem& {
    auto it = cache.find({which, n});
    if (it != cache.end()) return it->second;
    const gwa::GwaElem* base = nullptr;
    switch (which) {
      case 0: base = &pic.image_e1; break;
      case 1: base = &pic.image_e2; break;
      case 2: base = &pic.image_e4; break;
      default: base = &pic.image_e4_inverse; break;
    }
    return cache.emplace(std::make_pair(which, n), gwa::gwa_power(A, *base, n)).first->second;
  };
  gwa::GwaElem out;
  for (const auto& [m, c] : z.terms()) {
    if (m[0] < 0 || m[1] < 0) throw NonInvertibleNegativePower(m[0] < 0 ? "e1" : "e2");
    gwa::GwaElem t = gwa::gwa_multiply(A, power(0, m[0]), power(1, m[1]));
    t = gwa::gwa_multiply(A, t, m[2] >= 0 ? power(2, m[2]) : power(3, -m[2]));
    out.add_scaled(t, c);
  }
  return out;
}

Elem from_gwa(const QuotientAlgebra& r, const gwa::GwaElem& g) {
  if (!r.picture) throw std::invalid_argument("from_gwa needs the localization R");
  const GwaPicture& pic = *r.picture;
  const Presentation& p = r.pres();
  // powers[k][n] = base_k^n for the bases f2, f2^-1, f1, e3, grown on demand.
  const std::array<const Elem*, 4> bases = {&pic.f2, &pic.f2_inverse, &pic.f1, &pic.e3};
  std::array<std::vector<Elem>, 4> powers;
  auto power = [&](std::size_t k, int n) -> const Elem& {
    std::vector<Elem>& row = powers[k];
    if (row.empty()) row.push_back(p.scalar(RatQ(1)));
    while (static_cast<int>(row.size()) <= n) row.push_back(p.multiply(row.back(), *bases[k]));
    return row[static_cast<std::size_t>(n)];
  };
  // h^i x^j = rho^(-ij) x^j h^i (likewise for y), and h^i is a single
  // monomial in e4, so the product only straightens at the right end.
  Elem out;
  for (const auto& [m, c] : g.terms()) {
    const int i = m[0];
    const int j = m[1];
    const Elem& hpart = i >= 0 ? power(0, i) : power(1, -i);
    const Elem& xpart = j >= 0 ? power(2, j) : power(3, -j);
    out.add_scaled(p.multiply(xpart, hpart), c * pic.gwa.rho.pow(-i * j));
  }
  return out;
}

}  // namespace qweyl::bquot
