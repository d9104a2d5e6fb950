#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/gwa.hpp"
#include "support.hpp"

using namespace qweyl;
using namespace qweyl::gwa;

namespace {

GwaElem hx(int i, int j, const RatQ& c = RatQ(1)) { return Elem::monomial(Mono{i, j}, c); }

/// Random GWA element with zero constant term, |i| <= 3 and |j| <= 2.
GwaElem random_w(std::mt19937& rng) {
  std::uniform_int_distribution<int> hi(-3, 3);
  std::uniform_int_distribution<int> xi(-2, 2);
  std::uniform_int_distribution<int> count(0, 4);
  GwaElem w;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    const int i = hi(rng);
    const int j = xi(rng);
    if (i == 0 && j == 0) continue;
    w.add_term(Mono{i, j}, oracle::random_coeff(rng));
  }
  return w;
}

}  // namespace

TEST_CASE("defining relations of the localized quotient GWA") {
  const RatQ alpha = RatQ::q();
  const GwaAlgebra A = GwaAlgebra::localized_quotient(alpha);
  const RatQ s = RatQ::q() / (RatQ::q_pow(2) + RatQ(1)).pow(2);
  CHECK(gwa_multiply(A, y_pow(1), x_pow(1)) == scalar(alpha) + h_pow(2, s));
  CHECK(gwa_multiply(A, x_pow(1), y_pow(1)) == scalar(alpha) + h_pow(2, s * RatQ::q_pow(4)));
  CHECK(gwa_multiply(A, h_pow(1), h_pow(-1)) == scalar(RatQ(1)));
  CHECK(gwa_multiply(A, x_pow(1), h_pow(1)) == hx(1, 1, A.rho));
  CHECK(gwa_multiply(A, y_pow(1), h_pow(1)) == hx(1, -1, A.rho.inverse()));
  const auto alg = exprio::context_for(A, {{"alpha", alpha}});
  CHECK(exprio::parse_elem("y*x - alpha", alg) == h_pow(2, s));
}

TEST_CASE("GWA multiplication is associative") {
  std::mt19937 rng(8);
  const GwaAlgebra A = GwaAlgebra::localized_quotient(RatQ(1));
  for (int n = 0; n < 60; ++n) {
    const GwaElem a = random_w(rng) + scalar(RatQ(2));
    const GwaElem b = random_w(rng);
    const GwaElem c = random_w(rng);
    REQUIRE(gwa_multiply(A, gwa_multiply(A, a, b), c) == gwa_multiply(A, a, gwa_multiply(A, b, c)));
  }
}

TEST_CASE("twisting a Laurent polynomial") {
  const Laurent p = {{-1, RatQ(2)}, {2, RatQ(1)}};
  const Laurent t = twist(p, RatQ::q_pow(2), 1);
  CHECK(t.at(-1) == RatQ(2) * RatQ::q_pow(-2));
  CHECK(t.at(2) == RatQ::q_pow(4));
  CHECK(twist(t, RatQ::q_pow(2), -1) == p);
}

TEST_CASE("derivation check") {
  const GwaAlgebra A = GwaAlgebra::localized_quotient(RatQ(1));
  CHECK(gwa_derivation_check(A, {GwaElem(), x_pow(1), y_pow(1, RatQ(-1))}));
  CHECK(gwa_derivation_check(A, {GwaElem(), GwaElem(), GwaElem()}));
  CHECK_FALSE(gwa_derivation_check(A, {h_pow(1), GwaElem(), GwaElem()}));
  const GwaDerivation ad = inner(A, h_pow(1));
  CHECK(gwa_derivation_check(A, ad));
}

TEST_CASE("decomposition examples") {
  const GwaAlgebra A = GwaAlgebra::localized_quotient(RatQ(1));
  const RatQ rho = A.rho;
  const GwaDerivation ad_h{GwaElem(), hx(1, 1, RatQ(1) - rho), hx(1, -1, RatQ(1) - rho.inverse())};
  CHECK(gwa_derivation_check(A, ad_h));
  const GwaDecomp d1 = gwa_decompose(A, ad_h);
  CHECK(d1.w == h_pow(1));
  CHECK(d1.lambda.is_zero());

  const GwaDecomp d2 = gwa_decompose(A, scalar_derivation(RatQ(1)));
  CHECK(d2.w.is_zero());
  CHECK(d2.lambda.is_one());

  const GwaDecomp d3 = gwa_decompose(A, {GwaElem(), GwaElem(), GwaElem()});
  CHECK(d3.w.is_zero());
  CHECK(d3.lambda.is_zero());
}

TEST_CASE("decomposition round trip on random (w, lambda)") {
  std::mt19937 rng(500);
  for (int n = 0; n < 500; ++n) {
    const GwaAlgebra A = GwaAlgebra::localized_quotient(n % 2 == 0 ? RatQ(1) : RatQ::q());
    const GwaElem w = random_w(rng);
    const RatQ lambda = n % 3 == 0 ? RatQ(0) : oracle::random_coeff(rng);
    const GwaDerivation D = inner(A, w) + scalar_derivation(lambda);
    const GwaDecomp dec = gwa_decompose(A, D);
    REQUIRE(dec.w == w);
    REQUIRE(dec.lambda == lambda);
  }
}

TEST_CASE("the scalar derivation kills the image of e4") {
  const RatQ beta(5);
  const GwaAlgebra A = GwaAlgebra::localized_quotient(RatQ(1));
  for (const RatQ& lambda : {RatQ(1), RatQ::q(), RatQ(-3)})
    CHECK(apply(A, scalar_derivation(lambda), h_pow(-1, beta)).is_zero());
  const GwaDerivation d = scalar_derivation(RatQ(2));
  CHECK(apply(A, d, x_pow(2)) == x_pow(2, RatQ(4)));
}

TEST_CASE("decomposition errors") {
  const GwaAlgebra A = GwaAlgebra::localized_quotient(RatQ(1));
  CHECK_THROWS_AS(gwa_decompose(A, {h_pow(1), GwaElem(), GwaElem()}), NotADerivation);
  CHECK_THROWS_AS(GwaAlgebra(Laurent{}, RatQ::q()), InvalidPresentation);
  CHECK_THROWS_AS(GwaAlgebra(Laurent{{0, RatQ(1)}}, RatQ(1)), InvalidPresentation);
  CHECK_THROWS_AS(GwaAlgebra(Laurent{{0, RatQ(1)}}, RatQ(-1)), InvalidPresentation);
  CHECK_THROWS_AS(GwaAlgebra(Laurent{{0, RatQ(1)}}, RatQ(0)), InvalidPresentation);
}

TEST_CASE("a GWA with a derivation that has a K[h] component") {
  // For a = h the map D(h) = h, D(x) = x, D(y) = 0 satisfies Leibniz on every
  // relation, and its D(h) lies in K[h^+-1].
  const GwaAlgebra A(Laurent{{1, RatQ(1)}}, RatQ::q_pow(2));
  const GwaDerivation euler{h_pow(1), x_pow(1), GwaElem()};
  REQUIRE(gwa_derivation_check(A, euler));
  CHECK_THROWS_AS(gwa_decompose(A, euler), ObstructedShape);
}
