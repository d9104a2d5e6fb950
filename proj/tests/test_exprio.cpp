#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qweyl/bquot.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/exprio.hpp"
#include "qweyl/so5.hpp"
#include "support.hpp"

using namespace qweyl;
using namespace qweyl::exprio;

TEST_CASE("parse trees") {
  const auto t = parse("E4*E1");
  CHECK(t->kind == ExprTree::Kind::Product);
  REQUIRE(t->children.size() == 2);
  CHECK(t->children[0]->kind == ExprTree::Kind::Symbol);
  CHECK(t->children[0]->text == "E4");
  const auto p = parse("-(q^3+q)/(q^2-1)");
  CHECK(p->kind == ExprTree::Kind::Quotient);
  CHECK(p->children[0]->kind == ExprTree::Kind::Negate);
  const auto w = parse("e4^-2");
  CHECK(w->kind == ExprTree::Kind::Power);
  CHECK(w->exponent == -2);
}

TEST_CASE("syntax errors carry the position") {
  auto position = [](const std::string& text) -> long {
    try {
      parse(text);
    } catch (const SyntaxError& e) {
      return static_cast<long>(e.position);
    }
    return -1;
  };
  CHECK(position("E1 $ E2") == 3);
  CHECK(position("E1*") == 3);
  CHECK(position("(E1+E2") == 6);
  CHECK(position("E1^x") == 3);
  CHECK(position("E1^2^3") == 4);
  CHECK(position("E1 E2") == 3);
}

TEST_CASE("evaluation in the algebras") {
  const auto u = so5::algebra_u();
  CHECK(print_canonical(support::ex(u, "E4*E1"), Alphabet::of(*u.pres)) == "q^2*E1*E4 - q^2*E2");
  const auto b = bquot::make_b({RatQ(1), RatQ(1)});
  CHECK(support::ex(b.alg, "e2*e4 + ((-(q^3+q))/(q^2-1))*e3") == b.scalar(RatQ(1)));
  CHECK(support::ex(b.alg, "alpha*e1 - beta*e1").is_zero());
  CHECK_THROWS_AS(support::ex(b.alg, "e4^-1"), NegativePowerNotInvertible);
  CHECK_THROWS_AS(support::ex(b.alg, "E1"), UnknownGenerator);
  CHECK_THROWS_AS(support::ex(b.alg, "e1/e2"), SyntaxError);
  CHECK_THROWS_AS(support::ex(b.alg, "e1/(q-q)"), DivisionByZero);
  const auto r = bquot::make_r({RatQ(1), RatQ(1)});
  CHECK(support::ex(r.alg, "e4^-1*e4") == r.scalar(RatQ(1)));
  CHECK(support::ex(r.alg, "f2*e4") == r.scalar(RatQ(1)));
  CHECK(parse_ratq("(q^-1+q^-3)/((1+q^-2)*(1-q^-2)^2)") == so5::constants().p2);
  CHECK(parse_ratq("alpha^2", {{"alpha", RatQ::q()}}) == RatQ::q_pow(2));
}

TEST_CASE("printing") {
  const auto u = so5::algebra_u();
  const Alphabet abc = Alphabet::of(*u.pres);
  CHECK(print_canonical(Elem(), abc) == "0");
  CHECK(print_canonical(u.scalar(RatQ(-3)), abc) == "-3");
  CHECK(print_canonical(support::ex(u, "(q^3+q)/(q^2-1)*E3 - E2^2"), abc) == "-E2^2 + (q^3+q)/(q^2-1)*E3");
  CHECK(coefficient_text(RatQ::q_pow(2) + RatQ(1)) == "(q^2+1)");
  CHECK(coefficient_text(RatQ::q_pow(-2)) == "1/q^2");
  const Alphabet g = Alphabet::gwa_alphabet();
  CHECK(print_canonical(Elem::monomial(Mono{-1, 2}, RatQ(2)), g) == "2*h^-1*x^2");
  CHECK(print_canonical(Elem::monomial(Mono{1, -1}), g) == "h*y");
}

TEST_CASE("parse(print(z)) = z on random elements") {
  std::mt19937 rng(123);
  const auto u4 = so5::algebra_u4();
  const auto monos = support::monomials_up_to(u4.pres->invertible_flags(), 3);
  const Alphabet abc = Alphabet::of(*u4.pres);
  const Context ctx = context_for(u4);
  for (int n = 0; n < 100; ++n) {
    const Elem z = oracle::random_elem(rng, monos, 4);
    const std::string text = print_canonical(z, abc);
    REQUIRE(parse_elem(text, ctx) == z);
    CHECK(print_canonical(parse_elem(text, ctx), abc) == text);
  }
  const gwa::GwaAlgebra A = gwa::GwaAlgebra::localized_quotient(RatQ(1));
  const Context gctx = context_for(A);
  const std::vector<Mono> gm = {{0, 0}, {1, 0}, {-2, 0}, {1, 1}, {0, -2}, {-1, 3}};
  for (int n = 0; n < 50; ++n) {
    const Elem z = oracle::random_elem(rng, gm, 4);
    REQUIRE(parse_elem(print_canonical(z, Alphabet::gwa_alphabet()), gctx) == z);
  }
}

TEST_CASE("JSON round trips") {
  std::mt19937 rng(321);
  CHECK(from_json(to_json(Elem()), 3).is_zero());
  const auto b = bquot::make_b({RatQ::q(), RatQ(2)});
  const Elem chi2 = bquot::from_u(b, so5::chi(2));
  CHECK(from_json(to_json(chi2), 3) == b.scalar(RatQ(2)));
  const auto monos = bquot::basis_monomials(4, true);
  for (int n = 0; n < 100; ++n) {
    const Elem z = oracle::random_elem(rng, monos, 5);
    REQUIRE(from_json(to_json(z), 3) == z);
    REQUIRE(from_json(json::parse(to_json(z).dump()), 3) == z);
  }
  const RatQ c = so5::constants().p3;
  CHECK(ratq_from_json(to_json(c)) == c);
}

TEST_CASE("JSON schema errors") {
  CHECK_THROWS_AS(from_json(json::array(), 3), SchemaError);
  CHECK_THROWS_AS(from_json(json{{"terms", 5}}, 3), SchemaError);
  CHECK_THROWS_AS(from_json(json::parse(R"({"terms":[{"exp":[1,0],"coeff":{"num":"1","den":"1"}}]})"), 3),
                  SchemaError);
  CHECK_THROWS_AS(from_json(json::parse(R"({"terms":[{"exp":[1,0,0],"coeff":{"num":"1","den":"0"}}]})"), 3),
                  SchemaError);
  CHECK_THROWS_AS(from_json(json::parse(R"({"terms":[{"exp":[1.5,0,0],"coeff":{"num":"1","den":"1"}}]})"), 3),
                  SchemaError);
  CHECK_THROWS_AS(ratq_from_json(json{{"num", "e1"}, {"den", "1"}}), SchemaError);
  CHECK_THROWS_AS(ratq_from_json(json{{"num", 1}}), SchemaError);
}

TEST_CASE("report entries") {
  const auto checks = so5::serre_check();
  const json r = report_json(checks);
  REQUIRE(r.is_array());
  REQUIRE(r.size() == checks.size());
  for (const auto& e : r) {
    CHECK(e.contains("identity"));
    CHECK(e.contains("statement"));
    CHECK(e.at("status") == "pass");
    CHECK(e.contains("residual"));
  }
}
