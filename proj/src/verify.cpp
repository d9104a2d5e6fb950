#include "qweyl/verify.hpp"

#include <algorithm>

#include "qweyl/deriv.hpp"
#include "qweyl/exprio.hpp"
#include "qweyl/so5.hpp"

namespace qweyl::verify {

std::vector<bquot::Params> default_params() {
  return {{RatQ(1), RatQ(1)}, {RatQ::q(), RatQ(1)}, {RatQ(0), RatQ(1)}, {RatQ(1), RatQ(0)}};
}

namespace {

void append(std::vector<Check>& out, std::vector<Check> more) {
  for (auto& c : more) out.push_back(std::move(c));
}

void quotient_suite(std::vector<Check>& out, const bquot::Params& params, int degree) {
  const bquot::QuotientAlgebra b = bquot::make_b(params);
  const Alphabet abc = Alphabet::of(b.pres());
  const std::string tag = "b[" + params.to_string() + "]";
  append(out, bquot::quotient_checks(b));
  for (int i = 0; i <= 6; ++i) append(out, bquot::lemma_d_f(b, i));

  const int center_degree = degree + 1;
  const std::vector<Elem> center = deriv::bounded_center(b, center_degree);
  Elem center_residual;
  for (const Elem& z : center)
    if (!z.as_scalar()) center_residual = z;
  Check c = residual_check(tag + ".center_bounded[" + std::to_string(center_degree) + "]",
                           "elements of degree <= " + std::to_string(center_degree) +
                               " commuting with e1, e2, e4 are scalars",
                           center_residual, abc);
  c.pass = c.pass && center.size() == 1;
  out.push_back(std::move(c));

  const bool generic = !params.alpha.is_zero() && !params.beta.is_zero();
  const std::size_t expected = generic ? 0 : 1;
  const std::size_t hh1 = deriv::hh1_bounded(b, degree);
  const RatQ gap = RatQ(static_cast<long>(hh1)) - RatQ(static_cast<long>(expected));
  out.push_back(residual_check(tag + ".hh1_truncated[" + std::to_string(degree) + "]",
                               "truncated HH^1 estimate at degree " + std::to_string(degree) + " = " +
                                   std::to_string(expected) + " (residual: estimate minus expected)",
                               Elem::scalar(gap, 3), abc));

  if (params.beta.is_zero()) return;
  const bquot::QuotientAlgebra r = bquot::make_r(params);
  append(out, bquot::r_presentation_checks(r));
  if (!generic) return;
  for (const Mono& m : bquot::basis_monomials(2)) {
    if (bquot::basis_degree(m) == 0) continue;
    const Elem x = Elem::monomial(m);
    const std::string name = exprio::print_canonical(x, abc);
    const deriv::Innerization inn = deriv::innerize_detailed(b, r, deriv::inner_spec(b, x));
    Check ic = residual_check(tag + ".innerize[" + name + "]",
                              "ad_x with x = " + name + " is recovered with lambda = 0", inn.x - x, abc);
    ic.pass = ic.pass && inn.lambda.is_zero();
    out.push_back(std::move(ic));
  }
}

}  // namespace

std::vector<Check> run(const Options& options) {
  std::vector<Check> out;
  append(out, so5::serre_check());
  append(out, so5::constant_checks(20));
  append(out, so5::centrality_checks());
  append(out, so5::dda_checks());
  append(out, so5::t_commutation_checks());
  for (int i = 0; i <= 10; ++i) append(out, so5::lemma_d_f(i));
  const std::vector<bquot::Params> params = options.params.empty() ? default_params() : options.params;
  for (const auto& p : params) quotient_suite(out, p, options.degree);
  std::stable_sort(out.begin(), out.end(),
                   [](const Check& a, const Check& b) { return a.identity < b.identity; });
  return out;
}

}  // namespace qweyl::verify
