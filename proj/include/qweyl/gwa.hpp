#pragma once

// Quantum generalized Weyl algebras K[h^{+-1}](sigma, a) with sigma(h) = rho*h:
//   y x = a(h),  x y = a(rho h),  x h = rho h x,  y h = rho^-1 h y.
// Elements reuse Elem with two-entry monomials (i, j): h^i x^j for j >= 0 and
// h^i y^-j for j < 0.

#include <map>

#include "qweyl/pbw.hpp"
#include "qweyl/report.hpp"

namespace qweyl::gwa {

using Laurent = std::map<int, RatQ>;
using GwaElem = Elem;

struct GwaAlgebra {
  Laurent a;
  RatQ rho;

  /// Validates a != 0 and rho != 0, +-1.
  GwaAlgebra(Laurent a_poly, RatQ twist);
  /// a = alpha + q/(q^2+1)^2 h^2, rho = q^2.
  static GwaAlgebra localized_quotient(const RatQ& alpha);
};

GwaElem h_pow(int i, const RatQ& c = RatQ(1));
GwaElem x_pow(int j, const RatQ& c = RatQ(1));
GwaElem y_pow(int j, const RatQ& c = RatQ(1));
GwaElem from_laurent(const Laurent& p);
GwaElem scalar(const RatQ& c);

/// p(rho^s h)
Laurent twist(const Laurent& p, const RatQ& rho, int s);

GwaElem gwa_multiply(const GwaAlgebra& A, const GwaElem& u, const GwaElem& v);
GwaElem gwa_commutator(const GwaAlgebra& A, const GwaElem& u, const GwaElem& v);
GwaElem gwa_power(const GwaAlgebra& A, const GwaElem& u, int n);

/// Images of the generators under a candidate derivation.
struct GwaDerivation {
  GwaElem dh;
  GwaElem dx;
  GwaElem dy;
};

/// Extends D to any element by the Leibniz rule; D(h^-1) = -h^-1 D(h) h^-1.
GwaElem apply(const GwaAlgebra& A, const GwaDerivation& D, const GwaElem& u);

/// Leibniz images of yx - a, xy - sigma(a), xh - rho hx, yh - rho^-1 hy.
std::vector<Check> derivation_residuals(const GwaAlgebra& A, const GwaDerivation& D);
bool gwa_derivation_check(const GwaAlgebra& A, const GwaDerivation& D);

/// D = ad_w + delta_lambda, with delta_lambda(h) = 0, delta_lambda(x) = lambda x,
/// delta_lambda(y) = -lambda y. w has zero constant term.
struct GwaDecomp {
  GwaElem w;
  RatQ lambda;
};

GwaDerivation inner(const GwaAlgebra& A, const GwaElem& w);
GwaDerivation scalar_derivation(const RatQ& lambda);
GwaDerivation operator+(const GwaDerivation& a, const GwaDerivation& b);

/// Constructive decomposition of a derivation.
///   1. each term c h^i x^j (j != 0) of D(h) comes from the w-term c/(rho^j - 1) h^(i-1) x^j;
///   2. after removing ad_w, D(x) = p(h) x and lambda = p_0;
///   3. s(h) - s(rho h) = p(h) - p_0 is solved termwise and s is added to w;
///   4. D(y) must equal -p(rho^-1 h) y.
/// Throws NotADerivation when the Leibniz check fails and ObstructedShape when
/// D(h) has a K[h^+-1] component or the residual images have the wrong shape.
GwaDecomp gwa_decompose(const GwaAlgebra& A, const GwaDerivation& D);

}  // namespace qweyl::gwa
