#include "qweyl/so5.hpp"

#include <array>
#include <string>

namespace qweyl::so5 {

namespace {

RatQ qp(int n) { return RatQ::q_pow(n); }

Mono mono(std::initializer_list<int> e) { return Mono(e); }

std::string coefficient(const RatQ& c) {
  const std::string s = c.to_string();
  return c.den().is_constant() && c.num().term_count() > 1 ? "(" + s + ")" : s;
}

}  // namespace

RatQ Constants::d(int i) {
  // (q-q^3)(1-q^{-4i}) / ((1-q^{-4})(1+q^2))
  const RatQ num = (qp(1) - qp(3)) * (RatQ(1) - qp(-4 * i));
  const RatQ den = (RatQ(1) - qp(-4)) * (RatQ(1) + qp(2));
  return num / den;
}

RatQ Constants::f(int i) {
  // q^{2i}(1-q^{-4i}) / (1-q^{-4})
  return qp(2 * i) * (RatQ(1) - qp(-4 * i)) / (RatQ(1) - qp(-4));
}

const Constants& constants() {
  static const Constants c = [] {
    Constants k;
    k.p1 = qp(2) / (RatQ(1) - qp(2));
    k.p2 = qp(3) / (qp(2) - RatQ(1)).pow(2);
    k.p3 = -(qp(3) + qp(1)) / (qp(2) - RatQ(1));
    k.p4 = -qp(5) / (RatQ(1) + qp(2)).pow(2);
    k.k1 = k.p3.inverse();
    k.k2 = k.p4.inverse();
    k.c31 = (qp(1) - qp(3)) / (RatQ(1) + qp(2));
    return k;
  }();
  return c;
}

PresentationPtr make_so5() {
  static const PresentationPtr p = [] {
    const Constants& k = constants();
    RuleTable rules;
    auto key = [](int a, int b) { return std::make_pair(Letter{a, 1}, Letter{b, 1}); };
    Elem r21 = Elem::monomial(mono({1, 1, 0, 0}), qp(-2));
    Elem r41 = Elem::monomial(mono({1, 0, 0, 1}), qp(2));
    r41.add_term(mono({0, 1, 0, 0}), -qp(2));
    Elem r31 = Elem::monomial(mono({1, 0, 1, 0}));
    r31.add_term(mono({0, 2, 0, 0}), k.c31);
    Elem r42 = Elem::monomial(mono({0, 1, 0, 1}));
    r42.add_term(mono({0, 0, 1, 0}), -(qp(1) + qp(-1)));
    Elem r32 = Elem::monomial(mono({0, 1, 1, 0}), qp(-2));
    Elem r43 = Elem::monomial(mono({0, 0, 1, 1}), qp(-2));
    rules.emplace(key(kE2, kE1), std::move(r21));
    rules.emplace(key(kE4, kE1), std::move(r41));
    rules.emplace(key(kE3, kE1), std::move(r31));
    rules.emplace(key(kE4, kE2), std::move(r42));
    rules.emplace(key(kE3, kE2), std::move(r32));
    rules.emplace(key(kE4, kE3), std::move(r43));
    return std::make_shared<const Presentation>(std::vector<std::string>{"E1", "E2", "E3", "E4"},
                                                std::vector<bool>(4, false), std::move(rules));
  }();
  return p;
}

PresentationPtr localized_e4() {
  static const PresentationPtr p = derive_inverse_rules(*make_so5(), kE4);
  return p;
}

PresentationPtr localized_e4_e3() {
  static const PresentationPtr p = derive_inverse_rules(*localized_e4(), kE3);
  return p;
}

Algebra algebra_u() { return Algebra{"so5", make_so5(), {}, {}}; }
Algebra algebra_u4() { return Algebra{"so5-l4", localized_e4(), {}, {}}; }
Algebra algebra_u43() { return Algebra{"so5-l43", localized_e4_e3(), {}, {}}; }

Elem term(const Presentation& p, const RatQ& c, std::initializer_list<std::pair<int, int>> factors) {
  Elem e = p.normal_form(std::span(factors.begin(), factors.size()));
  e *= c;
  return e;
}

std::vector<Check> serre_check() {
  const Presentation& u = *make_so5();
  const Alphabet abc = Alphabet::of(u);
  const Elem e1 = u.gen(kE1);
  const Elem e4 = u.gen(kE4);
  std::vector<Check> out;

  const Elem e2p = u.multiply(e1, e4) - qp(-2) * u.multiply(e4, e1);
  out.push_back(residual_check("serre.e2_definition", "E1*E4 - q^-2*E4*E1 = E2", e2p - u.gen(kE2), abc));

  const Elem e3p = (qp(1) + qp(-1)).inverse() * (u.multiply(e2p, e4) - u.multiply(e4, e2p));
  out.push_back(
      residual_check("serre.e3_definition", "(E2*E4 - E4*E2)/(q+q^-1) = E3", e3p - u.gen(kE3), abc));

  Elem s1 = term(u, 1, {{kE1, 2}, {kE4, 1}});
  s1 -= term(u, qp(2) + qp(-2), {{kE1, 1}, {kE4, 1}, {kE1, 1}});
  s1 += term(u, 1, {{kE4, 1}, {kE1, 2}});
  out.push_back(residual_check("serre.relation_1", "E1^2*E4 - (q^2+q^-2)*E1*E4*E1 + E4*E1^2 = 0", s1, abc));

  const RatQ c = qp(2) + RatQ(1) + qp(-2);
  Elem s2 = term(u, 1, {{kE4, 3}, {kE1, 1}});
  s2 -= term(u, c, {{kE4, 2}, {kE1, 1}, {kE4, 1}});
  s2 += term(u, c, {{kE4, 1}, {kE1, 1}, {kE4, 2}});
  s2 -= term(u, 1, {{kE1, 1}, {kE4, 3}});
  out.push_back(residual_check(
      "serre.relation_2",
      "E4^3*E1 - (q^2+1+q^-2)*E4^2*E1*E4 + (q^2+1+q^-2)*E4*E1*E4^2 - E1*E4^3 = 0", s2, abc));
  return out;
}

std::vector<Check> constant_checks(int max_i) {
  const Constants& k = constants();
  const Alphabet abc = Alphabet::of(*make_so5());
  std::vector<Check> out;
  auto scalar_check = [&](const std::string& name, const std::string& statement, const RatQ& diff) {
    out.push_back(residual_check(name, statement, Elem::scalar(diff, 4), abc));
  };
  scalar_check("constants.p1", "1/(q^-2-1) = q^2/(1-q^2)", RatQ(1) / (qp(-2) - RatQ(1)) - k.p1);
  scalar_check("constants.p2", "(q^-1+q^-3)/((1+q^-2)(1-q^-2)^2) = q^3/(q^2-1)^2",
               (qp(-1) + qp(-3)) / ((RatQ(1) + qp(-2)) * (RatQ(1) - qp(-2)).pow(2)) - k.p2);
  scalar_check("constants.p3", "-(q+q^-1)/(1-q^-2) = -(q^3+q)/(q^2-1)",
               -(qp(1) + qp(-1)) / (RatQ(1) - qp(-2)) - k.p3);
  scalar_check("constants.p4", "(q-q^3)/((1-q^-4)(1+q^2)) = -q^5/(1+q^2)^2",
               (qp(1) - qp(3)) / ((RatQ(1) - qp(-4)) * (RatQ(1) + qp(2))) - k.p4);
  scalar_check("constants.k1", "1/p3 = (1-q^2)/(q^3+q)", (RatQ(1) - qp(2)) / (qp(3) + qp(1)) - k.k1);
  scalar_check("constants.k2", "1/p4 = -q^-5*(1+q^2)^2", -qp(-5) * (RatQ(1) + qp(2)).pow(2) - k.k2);
  scalar_check("constants.k1k2", "k1*k2 = (q^4-1)/q^6", k.k1 * k.k2 - (qp(4) - RatQ(1)) / qp(6));
  for (int i = 0; i <= max_i; ++i) {
    const std::string idx = std::to_string(i);
    scalar_check("constants.d_k2[" + (i < 10 ? "0" + idx : idx) + "]", "d[i]*k2 = 1 - q^(-4i)",
                 Constants::d(i) * k.k2 - (RatQ(1) - qp(-4 * i)));
  }
  return out;
}

std::vector<Check> centrality_checks() {
  std::vector<Check> out;
  const std::array<std::pair<std::string, PresentationPtr>, 2> hosts{
      std::make_pair(std::string("U"), make_so5()), std::make_pair(std::string("U[E4^-1]"), localized_e4())};
  for (const auto& [host_name, host] : hosts) {
    const Alphabet abc = Alphabet::of(*host);
    for (int index = 1; index <= 2; ++index) {
      const Elem z = chi(index);
      for (int g = 0; g < 4; ++g) {
        const std::string gname = "E" + std::to_string(g + 1);
        out.push_back(residual_check(
            "central.chi" + std::to_string(index) + "." + host_name + "." + gname,
            "[chi" + std::to_string(index) + ", " + gname + "] = 0 in " + host_name,
            host->commutator(z, host->gen(g)), abc));
      }
    }
  }
  return out;
}

Elem chi(int index) {
  const Presentation& u = *make_so5();
  const Constants& k = constants();
  if (index == 1) return term(u, 1, {{kE1, 1}, {kE3, 1}}) + term(u, k.p4, {{kE2, 2}});
  if (index == 2) return term(u, 1, {{kE2, 1}, {kE4, 1}}) + term(u, k.p3, {{kE3, 1}});
  throw std::invalid_argument("chi index must be 1 or 2");
}

bool centrality_check(const Presentation& p, const Elem& z) {
  for (int g = 0; g < static_cast<int>(p.size()); ++g)
    if (!p.commutator(z, p.gen(g)).is_zero()) return false;
  return true;
}

DdaElements dda_elements() {
  const Constants& k = constants();
  DdaElements d;
  d.host4 = localized_e4();
  d.host43 = localized_e4_e3();
  const Presentation& l4 = *d.host4;
  const Presentation& l43 = *d.host43;
  d.e14 = term(l4, 1, {{kE1, 1}}) + term(l4, k.p1, {{kE2, 1}, {kE4, -1}}) +
          term(l4, k.p2, {{kE3, 1}, {kE4, -2}});
  d.e24 = term(l4, 1, {{kE2, 1}}) + term(l4, k.p3, {{kE3, 1}, {kE4, -1}});
  Elem e24sq_e3inv = l43.multiply(l43.multiply(d.e24, d.e24), l43.gen(kE3, -1));
  d.e13 = d.e14 + k.p4 * e24sq_e3inv;
  d.t = {d.e13, d.e24, l43.gen(kE3), l43.gen(kE4)};
  return d;
}

std::vector<Check> dda_checks() {
  const Constants& k = constants();
  const DdaElements d = dda_elements();
  const Presentation& l4 = *d.host4;
  const Presentation& l43 = *d.host43;
  const Alphabet abc = Alphabet::of(l4);
  std::vector<Check> out;
  const Elem c1 = chi(1);
  const Elem c2 = chi(2);

  const Elem via_e14 = l4.multiply(d.e14, l4.gen(kE3)) + k.p4 * l4.multiply(d.e24, d.e24);
  out.push_back(residual_check("dda.chi1_first_step", "E14*E3 + p4*E24^2 = chi1", via_e14 - c1, abc));
  out.push_back(residual_check("dda.chi2_first_step", "E24*E4 = chi2",
                               l4.multiply(d.e24, l4.gen(kE4)) - c2, abc));
  out.push_back(residual_check("dda.chi1_cauchon", "T1*T3 = chi1",
                               l43.multiply(d.t[0], d.t[2]) - c1, abc));
  out.push_back(residual_check("dda.chi2_cauchon", "T2*T4 = chi2",
                               l43.multiply(d.t[1], d.t[3]) - c2, abc));

  // E_{3,4} must be E3: substituting E4 does not reproduce chi1.
  const Elem alt = l4.multiply(d.e14, l4.gen(kE4)) + k.p4 * l4.multiply(d.e24, d.e24);
  Check rejected = residual_check("dda.e34_is_e3", "E14*E4 + p4*E24^2 != chi1 (so E_{3,4} = E3)",
                                  alt - c1, abc);
  rejected.pass = !rejected.residual.is_zero() && out[0].pass;
  out.push_back(std::move(rejected));
  return out;
}

std::array<std::array<RatQ, 4>, 4> t_commutation() {
  const DdaElements d = dda_elements();
  const Presentation& l43 = *d.host43;
  std::array<std::array<RatQ, 4>, 4> lambda;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Elem ji = l43.multiply(d.t[j], d.t[i]);
      const Elem ij = l43.multiply(d.t[i], d.t[j]);
      if (ij.is_zero()) throw NotQCommuting("T_i T_j vanished");
      const auto& [m, c] = *ij.terms().begin();
      const RatQ l = ji.coeff(m) / c;
      if (!(ji - l * ij).is_zero())
        throw NotQCommuting("T" + std::to_string(j + 1) + " T" + std::to_string(i + 1) +
                            " is not a scalar multiple of T" + std::to_string(i + 1) + " T" +
                            std::to_string(j + 1));
      lambda[i][j] = l;
    }
  }
  return lambda;
}

std::vector<Check> t_commutation_checks() {
  const auto lambda = t_commutation();
  const Alphabet abc = Alphabet::of(*localized_e4_e3());
  std::vector<Check> out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      const std::string a = std::to_string(i + 1);
      const std::string b = std::to_string(j + 1);
      const RatQ diff = lambda[i][j] * lambda[j][i] - RatQ(1);
      const std::string statement = i == j ? "T" + a + "*T" + a + " = T" + a + "*T" + a
                                           : "T" + b + "*T" + a + " = " +
                                                 (lambda[i][j].is_one() ? "" : coefficient(lambda[i][j]) + "*") +
                                                 "T" + a + "*T" + b + " and lambda[" + a + "][" + b + "]*lambda[" +
                                                 b + "][" + a + "] = 1";
      out.push_back(residual_check("dda.t_commute[" + a + b + "]", statement,
                                   Elem::scalar(i == j ? lambda[i][i] - RatQ(1) : diff, 4), abc));
    }
  }
  return out;
}

std::vector<Check> lemma_d_f(int i) {
  if (i < 0) throw std::invalid_argument("lemma_d_f needs i >= 0");
  const Presentation& u = *make_so5();
  const Alphabet abc = Alphabet::of(u);
  std::vector<Check> out;
  Elem d_side = term(u, 1, {{kE3, 1}, {kE1, i}}) - term(u, 1, {{kE1, i}, {kE3, 1}});
  if (i > 0) d_side -= term(u, Constants::d(i), {{kE1, i - 1}, {kE2, 2}});
  out.push_back(residual_check("lemma.d[" + std::to_string(i) + "]",
                               "E3*E1^i = E1^i*E3 + d[i]*E1^(i-1)*E2^2", d_side, abc));
  Elem f_side = term(u, 1, {{kE4, 1}, {kE1, i}}) - term(u, qp(2 * i), {{kE1, i}, {kE4, 1}});
  if (i > 0) f_side += term(u, Constants::f(i), {{kE1, i - 1}, {kE2, 1}});
  out.push_back(residual_check("lemma.f[" + std::to_string(i) + "]",
                               "E4*E1^i = q^(2i)*E1^i*E4 - f[i]*E1^(i-1)*E2", f_side, abc));
  return out;
}

}  // namespace qweyl::so5
