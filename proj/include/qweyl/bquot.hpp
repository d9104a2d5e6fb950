#pragma once

// The simple quotients B = U / <chi1 - alpha, chi2 - beta> on generators
// e1 < e2 < e4, with e3 = k1*beta - k1*e2*e4 eliminated and e2^2 reduced, so
// that normal forms land on the basis e1^i e2^d e4^j (d in {0, 1}). The
// localization R = B[e4^-1] allows j < 0 and carries the GWA picture
// h <-> f2, x <-> f1, y <-> e3.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/algebra.hpp"
#include "qweyl/gwa.hpp"
#include "qweyl/report.hpp"

namespace qweyl::bquot {

inline constexpr int kE1 = 0;
inline constexpr int kE2 = 1;
inline constexpr int kE4 = 2;

struct Params {
  RatQ alpha;
  RatQ beta;
  std::string to_string() const;
};

/// Translation between R and its GWA presentation.
struct GwaPicture {
  gwa::GwaAlgebra gwa;
  Elem f1;
  Elem f2;
  Elem f2_inverse;
  Elem e3;
  gwa::GwaElem image_e1;
  gwa::GwaElem image_e2;
  gwa::GwaElem image_e4;
  gwa::GwaElem image_e4_inverse;
};

struct QuotientAlgebra {
  Params params;
  Algebra alg;
  bool localized = false;
  std::shared_ptr<const GwaPicture> picture;  // R only

  const Presentation& pres() const { return *alg.pres; }
  Elem gen(int g, int exponent = 1) const { return alg.pres->gen(g, exponent); }
  Elem e3() const { return alg.aliases.at("e3"); }
  Elem mul(const Elem& a, const Elem& b) const { return alg.mul(a, b); }
  Elem commutator(const Elem& a, const Elem& b) const { return alg.commutator(a, b); }
  Elem scalar(const RatQ& c) const { return alg.scalar(c); }
};

/// Throws BothParamsZero when alpha = beta = 0.
QuotientAlgebra make_b(const Params& params);
/// Throws BetaZero when beta = 0.
QuotientAlgebra make_r(const Params& params);

/// Normal form of a product of e1..e4 powers.
Elem nf_b(const QuotientAlgebra& b, const std::vector<std::pair<std::string, int>>& word);

/// Image of a U element under E_i -> e_i.
Elem from_u(const QuotientAlgebra& b, const Elem& u_elem);

/// lead*e2^2 - (p3*alpha - beta*e1 + e1*e2*e4); zero for lead = q^6/(q^4-1).
Elem intro_presentation_residual(const QuotientAlgebra& b, const RatQ& lead);
bool intro_presentation_check(const Params& params);

/// Defining relations, chi specializations and the displayed presentation in B.
std::vector<Check> quotient_checks(const QuotientAlgebra& b);
/// Straightening identities for e3 e1^i and e4 e1^i inside B.
std::vector<Check> lemma_d_f(const QuotientAlgebra& b, int i);

/// Support inside {e1^i e4^j, e1^i e2 e4^j}, with j >= 0 unless localized.
bool in_basis(const Elem& z, bool localized);
/// Degree of a basis monomial: i + d + |j|.
int basis_degree(const Mono& m);
/// All basis monomials of degree <= max_degree, in a fixed order.
std::vector<Mono> basis_monomials(int max_degree, bool localized = false);

struct FElements {
  Elem f1;
  Elem f2;
};
FElements f_elements(const QuotientAlgebra& r);
/// f1 f2 = q^2 f2 f1, e3 f2 = q^-2 f2 e3, e3 f1 = f1 e3 + c f2^2, f1 e3 - q^5/(1+q^2)^2 f2^2 = alpha,
/// plus f2 e4 = beta.
std::vector<Check> r_presentation_checks(const QuotientAlgebra& r);

gwa::GwaElem to_gwa(const QuotientAlgebra& r, const Elem& z);
Elem from_gwa(const QuotientAlgebra& r, const gwa::GwaElem& g);

}  // namespace qweyl::bquot
