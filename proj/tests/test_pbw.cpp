#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/so5.hpp"
#include "support.hpp"

using namespace qweyl;
using oracle::Strategy;
using so5::kE1;
using so5::kE2;
using so5::kE3;
using so5::kE4;

namespace {

Elem engine_word(const Presentation& p, const oracle::Word& w) {
  std::vector<std::pair<int, int>> factors;
  for (const Letter& l : w) factors.emplace_back(l.gen, l.sign);
  return p.normal_form(factors);
}

Elem e(const Presentation& p, std::initializer_list<std::pair<int, int>> factors, RatQ c = RatQ(1)) {
  return so5::term(p, c, factors);
}

}  // namespace

TEST_CASE("straightening of E4 E1") {
  const auto p = so5::make_so5();
  const Elem got = p->multiply(p->gen(kE4), p->gen(kE1));
  const Elem want = e(*p, {{kE1, 1}, {kE4, 1}}, RatQ::q_pow(2)) - e(*p, {{kE2, 1}}, RatQ::q_pow(2));
  CHECK(got == want);
  CHECK(exprio::print_canonical(got, Alphabet::of(*p)) == "q^2*E1*E4 - q^2*E2");
}

TEST_CASE("products that are already normal") {
  const auto p = so5::make_so5();
  const Elem e12 = p->multiply(p->gen(kE1), p->gen(kE2));
  CHECK(e12.size() == 1);
  CHECK(e12.coeff(Mono{1, 1, 0, 0}).is_one());
  const Elem s = p->gen(kE1) + p->gen(kE2);
  CHECK(p->multiply(s, p->scalar(RatQ(1))) == s);
  CHECK(p->multiply(p->gen(kE2), p->gen(kE1)) == e(*p, {{kE1, 1}, {kE2, 1}}, RatQ::q_pow(-2)));
}

TEST_CASE("two-step straightening of E4 E2 E1 agrees with word rewriting") {
  const auto p = so5::make_so5();
  const oracle::Word w = oracle::factors_to_word({{kE4, 1}, {kE2, 1}, {kE1, 1}});
  const Elem engine = engine_word(*p, w);
  CHECK(engine == oracle::rewrite_word(*p, w, Strategy::Leftmost));
  CHECK(engine == oracle::rewrite_word(*p, w, Strategy::Rightmost));
  CHECK(engine == p->multiply(p->gen(kE4), p->multiply(p->gen(kE2), p->gen(kE1))));
  CHECK(engine.size() > 1);
}

TEST_CASE("commutators") {
  const auto p = so5::make_so5();
  CHECK(p->commutator(p->gen(kE4), p->gen(kE3)) ==
        e(*p, {{kE3, 1}, {kE4, 1}}, RatQ::q_pow(-2) - RatQ(1)));
  const Elem a = p->gen(kE1) + e(*p, {{kE2, 1}, {kE4, 1}}, RatQ(3));
  CHECK(p->commutator(a, a).is_zero());
  CHECK(p->commutator(p->gen(kE2), p->gen(kE4)) == e(*p, {{kE3, 1}}, RatQ::q() + RatQ::q_pow(-1)));
}

TEST_CASE("derived inverse rules") {
  const auto p = so5::localized_e4();
  const Elem* rule = p->rule(Letter{kE4, -1}, Letter{kE3, 1});
  REQUIRE(rule != nullptr);
  CHECK(*rule == e(*p, {{kE3, 1}, {kE4, -1}}, RatQ::q_pow(2)));
  CHECK(p->multiply(p->gen(kE4), p->gen(kE4, -1)) == p->scalar(RatQ(1)));
  CHECK(p->multiply(p->gen(kE4, -1), p->gen(kE4)) == p->scalar(RatQ(1)));
  const Elem e4e1 = p->multiply(p->gen(kE4), p->gen(kE1));
  CHECK(p->multiply(p->gen(kE4, -1), e4e1) == p->gen(kE1));
}

TEST_CASE("X^-1 (X z) = z in the localizations") {
  std::mt19937 rng(77);
  for (const auto& p : {so5::localized_e4(), so5::localized_e4_e3()}) {
    const auto monos = support::monomials_up_to(p->invertible_flags(), 3);
    for (int n = 0; n < 40; ++n) {
      const Elem z = oracle::random_elem(rng, monos, 4);
      for (int k = 0; k < static_cast<int>(p->size()); ++k) {
        if (!p->invertible(k)) continue;
        CHECK(p->multiply(p->gen(k, -1), p->multiply(p->gen(k), z)) == z);
        CHECK(p->multiply(p->multiply(z, p->gen(k)), p->gen(k, -1)) == z);
      }
    }
  }
}

TEST_CASE("normal forms do not depend on the reduction strategy") {
  std::mt19937 rng(1000);
  const auto u = so5::make_so5();
  const auto u4 = so5::localized_e4();
  for (int n = 0; n < 1000; ++n) {
    const Presentation& p = n % 2 == 0 ? *u : *u4;
    const oracle::Word w = oracle::random_word(rng, p, 8);
    const Elem engine = engine_word(p, w);
    const Elem left = oracle::rewrite_word(p, w, Strategy::Leftmost);
    const Elem right = oracle::rewrite_word(p, w, Strategy::Rightmost);
    REQUIRE(left == right);
    REQUIRE(engine == left);
  }
}

TEST_CASE("multiplication is associative on random triples of degree <= 4") {
  std::mt19937 rng(5);
  const auto p = so5::make_so5();
  const auto monos = support::monomials_up_to(p->invertible_flags(), 4);
  for (int n = 0; n < 40; ++n) {
    const Elem a = oracle::random_elem(rng, monos, 3);
    const Elem b = oracle::random_elem(rng, monos, 3);
    const Elem c = oracle::random_elem(rng, monos, 3);
    REQUIRE(p->multiply(p->multiply(a, b), c) == p->multiply(a, p->multiply(b, c)));
  }
  const Elem e14 = e(*p, {{kE1, 1}, {kE4, 1}});
  CHECK(p->multiply(e14, e14) ==
        p->multiply(p->multiply(p->gen(kE1), p->multiply(p->gen(kE4), p->gen(kE1))), p->gen(kE4)));
  const oracle::Word w321 = oracle::factors_to_word({{kE3, 1}, {kE2, 1}, {kE1, 1}});
  CHECK(p->multiply(p->multiply(p->gen(kE3), p->gen(kE2)), p->gen(kE1)) ==
        oracle::rewrite_word(*p, w321, Strategy::Leftmost));
}

TEST_CASE("zero, identity and scalar laws") {
  std::mt19937 rng(9);
  const auto p = so5::make_so5();
  const auto monos = support::monomials_up_to(p->invertible_flags(), 3);
  for (int n = 0; n < 50; ++n) {
    const Elem a = oracle::random_elem(rng, monos, 3);
    const Elem b = oracle::random_elem(rng, monos, 3);
    const RatQ c = oracle::random_coeff(rng);
    CHECK(p->multiply(a, Elem()).is_zero());
    CHECK(p->multiply(p->scalar(RatQ(1)), a) == a);
    CHECK(p->multiply(c * a, b) == c * p->multiply(a, b));
    CHECK(p->multiply(a, c * b) == c * p->multiply(a, b));
  }
}

TEST_CASE("monomial order is graded lexicographic") {
  const auto p = so5::make_so5();
  const Elem z = p->gen(kE1) + e(*p, {{kE2, 1}, {kE4, 1}}) + p->scalar(RatQ(2)) + p->gen(kE4);
  std::vector<Mono> order;
  for (const auto& [m, c] : z.terms()) order.push_back(m);
  CHECK(order == std::vector<Mono>{{0, 1, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  CHECK(grade(Mono{1, 0, 0, -2}) == 3);
}

TEST_CASE("presentation validation") {
  auto gen = [](int g, int n) {
    Mono m(2, 0);
    m[static_cast<std::size_t>(g)] = n;
    return m;
  };
  RuleTable good;
  good[{Letter{1, 1}, Letter{0, 1}}] = Elem::monomial(Mono{1, 1}, RatQ::q());
  CHECK_NOTHROW(Presentation({"a", "b"}, {false, false}, good));

  RuleTable negative;
  negative[{Letter{1, 1}, Letter{0, 1}}] = Elem::monomial(gen(0, -1));
  CHECK_THROWS_AS(Presentation({"a", "b"}, {false, false}, negative), InvalidPresentation);

  RuleTable in_order;
  in_order[{Letter{0, 1}, Letter{1, 1}}] = Elem::monomial(Mono{1, 1});
  CHECK_THROWS_AS(Presentation({"a", "b"}, {false, false}, in_order), InvalidPresentation);

  CHECK_THROWS_AS(Presentation({"a", "b"}, {false}, good), InvalidPresentation);

  PowerRules bounded;
  bounded[0] = {1, Elem::scalar(RatQ(1), 2)};
  RuleTable over_bound;
  over_bound[{Letter{1, 1}, Letter{0, 1}}] = Elem::monomial(gen(0, 2));
  CHECK_THROWS_AS(Presentation({"a", "b"}, {false, false}, over_bound, bounded), InvalidPresentation);
}

TEST_CASE("fuel bounds the rewriting work") {
  const auto base = so5::make_so5();
  const Presentation tight(base->names(), base->invertible_flags(), base->rules(), {}, 5);
  std::vector<std::pair<int, int>> word = {{kE4, 3}, {kE3, 2}, {kE2, 2}, {kE1, 3}};
  CHECK_THROWS_AS(tight.normal_form(word), FuelExhausted);
  CHECK_NOTHROW(base->normal_form(word));
}

TEST_CASE("negative powers need invertible generators") {
  const auto p = so5::make_so5();
  CHECK_THROWS_AS(p->gen(kE1, -1), NonInvertibleNegativePower);
  std::vector<std::pair<int, int>> word = {{kE4, -1}};
  CHECK_THROWS_AS(p->normal_form(word), NonInvertibleNegativePower);
  CHECK_NOTHROW(so5::localized_e4()->normal_form(word));
}

TEST_CASE("missing rules are detected when a pair is not covered") {
  RuleTable partial;
  partial[{Letter{1, 1}, Letter{0, 1}}] = Elem::monomial(Mono{1, 1, 0});
  const Presentation p({"a", "b", "c"}, {false, false, false}, partial);
  CHECK_THROWS_AS(p.multiply(p.gen(2), p.gen(0)), MissingRule);
}
