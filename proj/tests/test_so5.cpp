#include "doctest.h"
#include "oracles.hpp"
#include "qweyl/so5.hpp"
#include "support.hpp"

using namespace qweyl;
using so5::kE1;
using so5::kE2;
using so5::kE3;
using so5::kE4;

TEST_CASE("E3 E1 straightening") {
  const auto p = so5::make_so5();
  const auto& k = so5::constants();
  CHECK(p->multiply(p->gen(kE3), p->gen(kE1)) ==
        so5::term(*p, RatQ(1), {{kE1, 1}, {kE3, 1}}) + so5::term(*p, k.c31, {{kE2, 2}}));
  CHECK(p->multiply(p->gen(kE1), p->gen(kE3)) == so5::term(*p, RatQ(1), {{kE1, 1}, {kE3, 1}}));
  const Elem left = p->multiply(p->multiply(p->gen(kE3), p->gen(kE2)), p->gen(kE1));
  const Elem right = p->multiply(p->gen(kE3), p->multiply(p->gen(kE2), p->gen(kE1)));
  CHECK(left == right);
  CHECK(left == oracle::rewrite_word(*p, oracle::factors_to_word({{kE3, 1}, {kE2, 1}, {kE1, 1}}),
                                     oracle::Strategy::Rightmost));
}

TEST_CASE("constants") {
  const auto& k = so5::constants();
  CHECK(k.p1 == RatQ::q_pow(2) / (RatQ(1) - RatQ::q_pow(2)));
  CHECK(k.p3 == support::rq("-(q^3+q)/(q^2-1)"));
  CHECK(k.p4 == support::rq("-q^5/(1+q^2)^2"));
  CHECK((k.k1 * k.p3).is_one());
  CHECK((k.k2 * k.p4).is_one());
  const auto checks = so5::constant_checks();
  CHECK_MESSAGE(support::all_pass(checks), support::first_failure(checks));
}

TEST_CASE("Serre relations and the commutator definitions") {
  const auto checks = so5::serre_check();
  CHECK(checks.size() >= 4);
  CHECK_MESSAGE(support::all_pass(checks), support::first_failure(checks));
  const auto alg = so5::algebra_u();
  CHECK(support::ex(alg, "E1^2*E4 - (q^2+q^-2)*E1*E4*E1 + E4*E1^2").is_zero());
  CHECK(support::ex(alg, "E1*E4 - q^-2*E4*E1 - E2").is_zero());
  CHECK(support::ex(alg, "E4^3*E1 - (q^2+1+q^-2)*E4^2*E1*E4 + (q^2+1+q^-2)*E4*E1*E4^2 - E1*E4^3").is_zero());
}

TEST_CASE("central elements") {
  const auto& k = so5::constants();
  const auto p = so5::make_so5();
  CHECK(so5::chi(2) == so5::term(*p, RatQ(1), {{kE2, 1}, {kE4, 1}}) + so5::term(*p, k.p3, {{kE3, 1}}));
  CHECK(so5::chi(1) == so5::term(*p, RatQ(1), {{kE1, 1}, {kE3, 1}}) + so5::term(*p, k.p4, {{kE2, 2}}));
  CHECK(p->commutator(so5::chi(1), p->gen(kE4)).is_zero());
  CHECK(p->commutator(so5::chi(2), p->gen(kE1)).is_zero());
  CHECK(so5::centrality_check(*p, so5::chi(1)));
  CHECK(so5::centrality_check(*p, p->scalar(RatQ(1))));
  CHECK_FALSE(so5::centrality_check(*p, p->gen(kE1)));
  CHECK(p->commutator(p->gen(kE1), p->gen(kE2)) ==
        so5::term(*p, RatQ(1) - RatQ::q_pow(-2), {{kE1, 1}, {kE2, 1}}));
  for (const auto& host : {so5::localized_e4(), so5::localized_e4_e3()})
    for (int i : {1, 2}) CHECK(so5::centrality_check(*host, so5::chi(i)));
  const auto checks = so5::centrality_checks();
  CHECK(checks.size() == 16);
  CHECK_MESSAGE(support::all_pass(checks), support::first_failure(checks));
}

TEST_CASE("deleting-derivation elements") {
  const auto d = so5::dda_elements();
  const auto& k = so5::constants();
  const Presentation& h4 = *d.host4;
  CHECK(h4.multiply(d.e24, h4.gen(kE4)) == so5::chi(2));
  CHECK(h4.multiply(d.e14, h4.gen(kE3)) + k.p4 * h4.multiply(d.e24, d.e24) == so5::chi(1));
  const Presentation& h43 = *d.host43;
  CHECK(h43.multiply(d.t[0], d.t[2]) == so5::chi(1));
  CHECK(d.t[2] == h43.gen(kE3));
  CHECK(d.t[3] == h43.gen(kE4));
  const auto checks = so5::dda_checks();
  CHECK_MESSAGE(support::all_pass(checks), support::first_failure(checks));
  bool named = false;
  for (const auto& c : checks) named = named || c.identity == "dda.e34_is_e3";
  CHECK(named);
}

TEST_CASE("the T elements q-commute") {
  const auto lambda = so5::t_commutation();
  // Independent hand check: T3 = E3 and T4 = E4, and E4 E3 = q^-2 E3 E4.
  CHECK(lambda[2][3] == RatQ::q_pow(-2));
  const int frozen[4][4] = {{0, -2, 0, 2}, {2, 0, -2, 0}, {0, 2, 0, -2}, {-2, 0, 2, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(lambda[i][j] == RatQ::q_pow(frozen[i][j]));
      CHECK((lambda[i][j] * lambda[j][i]).is_one());
    }
  const auto checks = so5::t_commutation_checks();
  CHECK_MESSAGE(support::all_pass(checks), support::first_failure(checks));
}

TEST_CASE("straightening E3 and E4 past powers of E1") {
  const auto p = so5::make_so5();
  const auto& k = so5::constants();
  CHECK(so5::Constants::f(1) == RatQ::q_pow(2));
  for (int i = 0; i <= 10; ++i) {
    CAPTURE(i);
    const auto checks = so5::lemma_d_f(i);
    CHECK_MESSAGE(support::all_pass(checks), support::first_failure(checks));
    // d(i) from the word oracle: coefficient of E1^(i-1) E2^2 in E3 E1^i.
    if (i >= 1 && i <= 5) {
      const Elem w = oracle::rewrite_word(*p, oracle::factors_to_word({{kE3, 1}, {kE1, i}}),
                                          oracle::Strategy::Leftmost);
      CHECK(w.coeff(Mono{i - 1, 2, 0, 0}) == so5::Constants::d(i));
      const Elem v = oracle::rewrite_word(*p, oracle::factors_to_word({{kE4, 1}, {kE1, i}}),
                                          oracle::Strategy::Rightmost);
      CHECK(v.coeff(Mono{i - 1, 1, 0, 0}) == -so5::Constants::f(i));
      CHECK(v.coeff(Mono{i, 0, 0, 1}) == RatQ::q_pow(2 * i));
    }
  }
  CHECK(so5::Constants::d(1) == k.c31);
}
