#include "qweyl/deriv.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "qweyl/so5.hpp"

namespace qweyl::deriv {

using bquot::kE1;
using bquot::kE2;
using bquot::kE4;

namespace {

RatQ qp(int n) { return RatQ::q_pow(n); }

// Value of an element together with its image under D.
struct Sym {
  Elem v;
  Elem dv;
};

Sym times(const Presentation& p, const Sym& a, const Sym& b) {
  return {p.multiply(a.v, b.v), p.multiply(a.dv, b.v) + p.multiply(a.v, b.dv)};
}

Sym scaled(const RatQ& c, Sym s) { return {c * std::move(s.v), c * std::move(s.dv)}; }

Sym operator+(const Sym& a, const Sym& b) { return {a.v + b.v, a.dv + b.dv}; }
Sym operator-(const Sym& a, const Sym& b) { return {a.v - b.v, a.dv - b.dv}; }

// images = D(e1), D(e2), D(e4), D(e4^-1)
Elem apply_impl(const Presentation& p, const std::array<const Elem*, 4>& images, const Elem& z) {
  const std::array<Elem, 4> letters{p.gen(kE1), p.gen(kE2), p.gen(kE4),
                                    p.invertible(kE4) ? p.gen(kE4, -1) : Elem()};
  Elem out;
  for (const auto& [m, c] : z.terms()) {
    Elem u = p.scalar(RatQ(1));
    Elem du;
    auto step = [&](int which, int count) {
      for (int t = 0; t < count; ++t) {
        du = p.multiply(du, letters[which]) + p.multiply(u, *images[which]);
        u = p.multiply(u, letters[which]);
      }
    };
    if (m[0] < 0 || m[1] < 0) throw NonInvertibleNegativePower(m[0] < 0 ? "e1" : "e2");
    step(0, m[0]);
    step(1, m[1]);
    if (m[2] >= 0) {
      step(2, m[2]);
    } else {
      if (images[3] == nullptr) throw NonInvertibleNegativePower("e4");
      step(3, -m[2]);
    }
    out.add_scaled(du, c);
  }
  return out;
}

std::vector<Check> relation_residuals(const QuotientAlgebra& alg, const Sym& e1, const Sym& e2, const Sym& e4) {
  const auto& k = so5::constants();
  const Presentation& p = alg.pres();
  const Alphabet abc = Alphabet::of(p);
  const Sym one{p.scalar(RatQ(1)), Elem()};
  const Sym e3 = scaled(k.k1 * alg.params.beta, one) - scaled(k.k1, times(p, e2, e4));

  std::vector<Check> out;
  auto add = [&](const std::string& name, const std::string& statement, const Sym& rel) {
    out.push_back(residual_check("leibniz." + name, statement, rel.dv, abc));
  };
  add("e2e1", "D(e2*e1 - q^-2*e1*e2) = 0", times(p, e2, e1) - scaled(qp(-2), times(p, e1, e2)));
  add("e4e1", "D(e4*e1 - q^2*e1*e4 + q^2*e2) = 0",
      times(p, e4, e1) - scaled(qp(2), times(p, e1, e4)) + scaled(qp(2), e2));
  add("e3e1", "D(e3*e1 - e1*e3 - (q-q^3)/(1+q^2)*e2^2) = 0",
      times(p, e3, e1) - times(p, e1, e3) - scaled(k.c31, times(p, e2, e2)));
  add("e4e2", "D(e4*e2 - e2*e4 + (q+q^-1)*e3) = 0",
      times(p, e4, e2) - times(p, e2, e4) + scaled(qp(1) + qp(-1), e3));
  add("e3e2", "D(e3*e2 - q^-2*e2*e3) = 0", times(p, e3, e2) - scaled(qp(-2), times(p, e2, e3)));
  add("e4e3", "D(e4*e3 - q^-2*e3*e4) = 0", times(p, e4, e3) - scaled(qp(-2), times(p, e3, e4)));
  add("e2_squared", "D(e2^2 - alpha*k2 + beta*k1*k2*e1 - k1*k2*e1*e2*e4) = 0",
      times(p, e2, e2) + scaled(alg.params.beta * k.k1 * k.k2, e1) -
          scaled(k.k1 * k.k2, times(p, times(p, e1, e2), e4)));
  return out;
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

SparseVec spec_vector(const DerivSpec& d, const std::map<Mono, std::size_t>& index, std::size_t nb,
                      bool* fits) {
  SparseVec v;
  *fits = true;
  const std::array<const Elem*, 3> images{&d.de1, &d.de2, &d.de4};
  for (std::size_t g = 0; g < 3; ++g) {
    for (const auto& [m, c] : images[g]->terms()) {
      auto it = index.find(m);
      if (it == index.end()) {
        *fits = false;
        return {};
      }
      v.emplace(g * nb + it->second, c);
    }
  }
  return v;
}

}  // namespace

Elem e3_image(const QuotientAlgebra& alg, const DerivSpec& d) {
  const auto& k = so5::constants();
  const Presentation& p = alg.pres();
  return -k.k1 * (p.multiply(d.de2, alg.gen(kE4)) + p.multiply(alg.gen(kE2), d.de4));
}

Elem apply(const QuotientAlgebra& b, const DerivSpec& d, const Elem& z) {
  return apply_impl(b.pres(), {&d.de1, &d.de2, &d.de4, nullptr}, z);
}

Elem apply(const QuotientAlgebra& r, const RDerivSpec& d, const Elem& z) {
  return apply_impl(r.pres(), {&d.de1, &d.de2, &d.de4, &d.de4_inverse}, z);
}

std::vector<Check> derivation_residuals(const QuotientAlgebra& b, const DerivSpec& d) {
  return relation_residuals(b, {b.gen(kE1), d.de1}, {b.gen(kE2), d.de2}, {b.gen(kE4), d.de4});
}

bool b_derivation_check(const QuotientAlgebra& b, const DerivSpec& d) {
  return all_pass(derivation_residuals(b, d));
}

RDerivSpec extend_to_r(const QuotientAlgebra& r, const DerivSpec& d) {
  if (r.params.beta.is_zero()) throw BetaZero();
  if (!r.localized) throw std::invalid_argument("extend_to_r needs the localization R");
  const Presentation& p = r.pres();
  const Elem e4inv = r.gen(kE4, -1);
  RDerivSpec out{d.de1, d.de2, d.de4, -p.multiply(p.multiply(e4inv, d.de4), e4inv)};

  std::vector<Check> checks =
      relation_residuals(r, {r.gen(kE1), out.de1}, {r.gen(kE2), out.de2}, {r.gen(kE4), out.de4});
  const Sym e4{r.gen(kE4), out.de4};
  const Sym e4i{e4inv, out.de4_inverse};
  const Alphabet abc = Alphabet::of(p);
  checks.push_back(residual_check("leibniz.e4_e4inv", "D(e4*e4^-1) = 0", times(p, e4, e4i).dv, abc));
  checks.push_back(residual_check("leibniz.e4inv_e4", "D(e4^-1*e4) = 0", times(p, e4i, e4).dv, abc));
  if (!all_pass(checks)) throw NotADerivation("extension to R fails the Leibniz check");
  return out;
}

DerivSpec inner_spec(const QuotientAlgebra& alg, const Elem& x) {
  return {alg.commutator(x, alg.gen(kE1)), alg.commutator(x, alg.gen(kE2)),
          alg.commutator(x, alg.gen(kE4))};
}

Innerization innerize_detailed(const QuotientAlgebra& b, const QuotientAlgebra& r, const DerivSpec& d) {
  if (b.params.beta.is_zero()) throw BetaZero();
  if (!(r.params.alpha == b.params.alpha) || !(r.params.beta == b.params.beta) || !r.localized)
    throw std::invalid_argument("innerize: R does not match B");
  if (!b_derivation_check(b, d)) throw NotADerivation("spec fails the Leibniz check on the relations of B");

  const RDerivSpec rd = extend_to_r(r, d);
  const bquot::GwaPicture& pic = *r.picture;
  gwa::GwaDerivation g{bquot::to_gwa(r, apply(r, rd, pic.f2)), bquot::to_gwa(r, apply(r, rd, pic.f1)),
                       bquot::to_gwa(r, apply(r, rd, pic.e3))};
  gwa::GwaDecomp dec;
  try {
    dec = gwa::gwa_decompose(pic.gwa, g);
  } catch (const ObstructedShape& e) {
    // D satisfies Leibniz, so failing the ad_w + delta_lambda shape rules out ad_x.
    throw NotInner(std::string("not of the form ad_w + delta_lambda: ") + e.what());
  }
  if (!dec.lambda.is_zero()) throw NotInner("scalar part lambda = " + dec.lambda.to_string() + " is nonzero");

  Elem x = bquot::from_gwa(r, dec.w);
  for (const auto& [m, c] : x.terms())
    if (m[2] < 0) throw NotInner("recovered element has a negative power of e4");
  x.add_term(b.pres().one(), -x.coeff(b.pres().one()));

  const DerivSpec check = inner_spec(b, x);
  if (!(check.de1 == d.de1) || !(check.de2 == d.de2) || !(check.de4 == d.de4))
    throw std::logic_error("innerize: ad_x does not reproduce D");
  return {std::move(x), dec.lambda, std::move(dec.w)};
}

Elem innerize(const QuotientAlgebra& b, const DerivSpec& d) {
  if (b.params.alpha.is_zero() || b.params.beta.is_zero()) throw std::domain_error("innerization requires alpha*beta != 0");
  const QuotientAlgebra r = bquot::make_r(b.params);
  return innerize_detailed(b, r, d).x;
}

namespace {

struct UnknownLayout {
  std::vector<Mono> basis;
  std::map<Mono, std::size_t> index;
};

UnknownLayout layout(int n) {
  UnknownLayout l;
  l.basis = bquot::basis_monomials(n);
  for (std::size_t i = 0; i < l.basis.size(); ++i) l.index.emplace(l.basis[i], i);
  return l;
}

std::vector<SparseVec> derivation_space_vectors(const QuotientAlgebra& b, const UnknownLayout& l) {
  const std::size_t nb = l.basis.size();
  std::map<std::pair<std::size_t, Mono>, SparseVec> rows;
  for (std::size_t g = 0; g < 3; ++g) {
    for (std::size_t i = 0; i < nb; ++i) {
      DerivSpec d;
      Elem* slot = g == 0 ? &d.de1 : g == 1 ? &d.de2 : &d.de4;
      *slot = Elem::monomial(l.basis[i]);
      const auto residuals = derivation_residuals(b, d);
      for (std::size_t rel = 0; rel < residuals.size(); ++rel)
        for (const auto& [m, c] : residuals[rel].residual.terms()) rows[{rel, m}].emplace(g * nb + i, c);
    }
  }
  LinSystem sys(3 * nb);
  for (auto& [key, row] : rows) sys.add_row(std::move(row));
  return kernel(sys);
}

DerivSpec spec_from_vector(const SparseVec& v, const UnknownLayout& l) {
  const std::size_t nb = l.basis.size();
  DerivSpec d;
  for (const auto& [col, c] : v) {
    Elem* slot = col / nb == 0 ? &d.de1 : col / nb == 1 ? &d.de2 : &d.de4;
    slot->add_term(l.basis[col % nb], c);
  }
  return d;
}

}  // namespace

std::vector<DerivSpec> solve_derivation_space(const QuotientAlgebra& b, int n) {
  if (n < 1) throw std::invalid_argument("degree bound must be >= 1");
  const UnknownLayout l = layout(n);
  std::vector<DerivSpec> out;
  for (const auto& v : derivation_space_vectors(b, l)) out.push_back(spec_from_vector(v, l));
  return out;
}

Hh1Estimate hh1_estimate(const QuotientAlgebra& b, int n) {
  if (n < 2) throw std::invalid_argument("degree bound must be >= 2");
  const UnknownLayout l = layout(n);
  const std::size_t nb = l.basis.size();
  const std::vector<SparseVec> v = derivation_space_vectors(b, l);

  std::vector<SparseVec> w;
  for (const Mono& m : bquot::basis_monomials(n + 2)) {
    if (bquot::basis_degree(m) == 0) continue;
    bool fits = false;
    SparseVec vec = spec_vector(inner_spec(b, Elem::monomial(m)), l.index, nb, &fits);
    if (fits && !vec.empty()) w.push_back(std::move(vec));
  }

  const std::size_t columns = 3 * nb;
  const std::size_t dim_v = v.size();
  const std::size_t dim_w = rank(w, columns);
  std::vector<SparseVec> both = v;
  both.insert(both.end(), w.begin(), w.end());
  const std::size_t dim_sum = rank(std::move(both), columns);
  Hh1Estimate e;
  e.derivations = dim_v;
  e.inner = dim_v + dim_w - dim_sum;
  e.value = dim_v - e.inner;
  return e;
}

std::size_t hh1_bounded(const QuotientAlgebra& b, int n) { return hh1_estimate(b, n).value; }

std::vector<Elem> bounded_center(const QuotientAlgebra& b, int n) {
  const std::vector<Mono> basis = bquot::basis_monomials(n, b.localized);
  std::map<std::pair<int, Mono>, SparseVec> rows;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Elem z = Elem::monomial(basis[i]);
    for (int g : {kE1, kE2, kE4}) {
      const Elem bracket = b.commutator(z, b.gen(g));
      for (const auto& [m, c] : bracket.terms()) rows[{g, m}].emplace(i, c);
    }
  }
  LinSystem sys(basis.size());
  for (auto& [key, row] : rows) sys.add_row(std::move(row));
  std::vector<Elem> out;
  for (const auto& v : kernel(sys)) {
    Elem z;
    for (const auto& [col, c] : v) z.add_term(basis[col], c);
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace qweyl::deriv
