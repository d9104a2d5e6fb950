#pragma once

// Derivations of B = B_{alpha,beta}: Leibniz consistency on the defining
// relations, extension to R = B[e4^-1], innerization through the GWA picture
// and a degree-bounded solver for the derivation space.

#include <cstddef>
#include <vector>

#include "qweyl/bquot.hpp"
#include "qweyl/gwa.hpp"
#include "qweyl/linsys.hpp"
#include "qweyl/report.hpp"

namespace qweyl::deriv {

using bquot::QuotientAlgebra;

/// Images of e1, e2, e4. The image of e3 = k1*beta - k1*e2*e4 is derived.
struct DerivSpec {
  Elem de1;
  Elem de2;
  Elem de4;
};

/// Images of e1, e2, e4 and e4^-1 in R.
struct RDerivSpec {
  Elem de1;
  Elem de2;
  Elem de4;
  Elem de4_inverse;
};

/// D(e3) = -k1 (D(e2) e4 + e2 D(e4)).
Elem e3_image(const QuotientAlgebra& alg, const DerivSpec& d);

/// D(z) by the Leibniz rule over the normal monomials of z (B only).
Elem apply(const QuotientAlgebra& b, const DerivSpec& d, const Elem& z);
/// D(z) for z in R, using the extended images.
Elem apply(const QuotientAlgebra& r, const RDerivSpec& d, const Elem& z);

/// Leibniz images of the six commutation relations and of the e2^2 relation.
std::vector<Check> derivation_residuals(const QuotientAlgebra& b, const DerivSpec& d);
bool b_derivation_check(const QuotientAlgebra& b, const DerivSpec& d);

/// Extends D with D(e4^-1) = -e4^-1 D(e4) e4^-1; re-verifies Leibniz on the
/// relations of R including e4 e4^-1 = 1. Throws BetaZero, NotADerivation.
RDerivSpec extend_to_r(const QuotientAlgebra& r, const DerivSpec& d);

/// ad_x on the generators: D(g) = x g - g x.
DerivSpec inner_spec(const QuotientAlgebra& alg, const Elem& x);

struct Innerization {
  Elem x;               // constant term removed
  RatQ lambda;          // scalar part found in the GWA picture (0 for inner D)
  gwa::GwaElem w;       // GWA element with D = ad_w + delta_lambda
};

/// Writes D = ad_x with x in B; r must be make_r of the same parameters.
/// Needs beta != 0 only, so for alpha = 0 it reports the outer derivations as
/// NotInner. Throws NotADerivation for inconsistent input and NotInner when
/// the scalar part is nonzero or x has negative e4 powers.
Innerization innerize_detailed(const QuotientAlgebra& b, const QuotientAlgebra& r, const DerivSpec& d);
/// Requires alpha*beta != 0 (std::domain_error otherwise).
Elem innerize(const QuotientAlgebra& b, const DerivSpec& d);

/// Unknowns: coefficients of D(e1), D(e2), D(e4) on basis monomials of degree <= n,
/// ordered generator-major then by bquot::basis_monomials(n).
std::vector<DerivSpec> solve_derivation_space(const QuotientAlgebra& b, int n);

struct Hh1Estimate {
  std::size_t derivations = 0;   // dim V
  std::size_t inner = 0;         // dim (V and W)
  std::size_t value = 0;         // dim V - dim (V and W)
};

/// Truncated estimate of dim HH^1 at degree bound n. W is spanned by ad_b for
/// basis monomials b of degree <= n + 2 whose generator images have degree <= n.
Hh1Estimate hh1_estimate(const QuotientAlgebra& b, int n);
std::size_t hh1_bounded(const QuotientAlgebra& b, int n);

/// Basis of {z : deg z <= n, [z, e1] = [z, e2] = [z, e4] = 0}.
std::vector<Elem> bounded_center(const QuotientAlgebra& b, int n);

}  // namespace qweyl::deriv
