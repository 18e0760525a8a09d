#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace hyparr;

namespace {

Monomial mono(std::initializer_list<unsigned> exps) {
  Monomial m;
  std::size_t i = 0;
  for (unsigned e : exps) m.set(i++, e);
  return m;
}

}  // namespace

TEST(Monomial, DivisibilityAndLcm) {
  const Monomial a = mono({2, 1, 0}), b = mono({1, 3, 1});
  EXPECT_EQ(lcm(a, b), mono({2, 3, 1}));
  EXPECT_TRUE(mono({1, 1, 0}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_TRUE(mono({2, 0, 0}).coprime(mono({0, 1, 4})));
  EXPECT_EQ((a * b).degree(), 8u);
}

TEST(TermOrder, DegrevlexBreaksTiesOnLastVariable) {
  const auto ord = TermOrder::degrevlex();
  // z1*z3 < z2^2 in degrevlex, opposite in lex
  EXPECT_TRUE(ord.less(mono({1, 0, 1}), mono({0, 2, 0})));
  EXPECT_TRUE(TermOrder::lex().greater(mono({1, 0, 1}), mono({0, 2, 0})));
  EXPECT_TRUE(ord.less(mono({5, 0, 0}), mono({0, 0, 6})));
  EXPECT_TRUE(TermOrder::lex().greater(mono({1, 0, 0}), mono({0, 9, 9})));
}

TEST(TermOrder, EliminationPutsEliminatedBlockFirst) {
  const auto ord = TermOrder::elimination(1);
  EXPECT_TRUE(ord.greater(mono({1, 0, 0}), mono({0, 5, 5})));
  EXPECT_TRUE(ord.less(mono({1, 0, 1}), mono({1, 1, 0})));
  const auto last = TermOrder::eliminating(1u << 2);
  EXPECT_TRUE(last.greater(mono({0, 0, 1}), mono({7, 0, 0})));
}

TEST(TermOrder, IsTotalAndMultiplicative) {
  const auto all = oracle::monomials_of_degree(3, 3);
  auto more = oracle::monomials_of_degree(3, 2);
  for (const auto ord : {TermOrder::degrevlex(), TermOrder::lex(), TermOrder::elimination(2)}) {
    for (const Monomial& a : all)
      for (const Monomial& b : more) {
        EXPECT_NE(ord.compare(a, b), 0);
        EXPECT_EQ(ord.compare(a, b), -ord.compare(b, a));
        EXPECT_EQ(ord.compare(a * mono({0, 1, 2}), b * mono({0, 1, 2})), ord.compare(a, b));
        EXPECT_TRUE(ord.less(b, b * mono({1, 0, 0})));
      }
  }
}

TEST(Poly, ParseAndPrintRoundTrip) {
  const Ring r = make_ring(3);
  const Poly f = parse_poly("z1*z2*z3 + 1/2*z2^2*z3", r);
  EXPECT_EQ(to_string(f), "z1*z2*z3 + 1/2*z2^2*z3");
  EXPECT_EQ(parse_poly(to_string(f), r), f);
  EXPECT_EQ(to_string(parse_poly("(z1 - z2)^2", r)), "z1^2 - 2*z1*z2 + z2^2");
  EXPECT_EQ(to_string(parse_poly("0", r)), "0");
  EXPECT_EQ(to_string(parse_poly("-3/6", r)), "-1/2");
  EXPECT_EQ(parse_poly("z1 - z1", r), Poly(r));
}

TEST(Poly, ParseErrors) {
  const Ring r = make_ring(3);
  EXPECT_THROW(parse_poly("z4", r), ParseError);
  EXPECT_THROW(parse_poly("z1 +", r), ParseError);
  EXPECT_THROW(parse_poly("(z1", r), ParseError);
  EXPECT_THROW(parse_poly("z1^-1", r), ParseError);
  EXPECT_THROW(parse_poly("1/0", r), ParseError);
}

TEST(Poly, RingRules) {
  EXPECT_THROW(make_ring(1), DomainError);
  EXPECT_THROW(make_ring(17), DomainError);
  const Ring a = make_ring(3), b = make_ring(4);
  EXPECT_THROW(Poly::variable(a, 0) + Poly::variable(b, 0), RingMismatch);
  EXPECT_NO_THROW(Poly::variable(a, 0) + Poly::variable(make_ring(3), 1));
}

TEST(Poly, ArithmeticMatchesEvaluation) {
  Rng rng(5);
  const Ring r = make_ring(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly f = oracle::random_poly(rng, r, 4, 5), g = oracle::random_poly(rng, r, 3, 4);
    const auto p = oracle::random_point(rng, 3);
    EXPECT_EQ((f * g).eval(p), f.eval(p) * g.eval(p));
    EXPECT_EQ((f + g).eval(p), f.eval(p) + g.eval(p));
    EXPECT_EQ((f - g).eval(p), f.eval(p) - g.eval(p));
    if (!g.is_zero()) {
      EXPECT_EQ(divide_exact(f * g, g), f);
    }
  }
}

TEST(Poly, PartialDerivativesAndEuler) {
  const Ring r = make_ring(3);
  const Poly q = parse_poly("z1*z2*z3*(z1 + z2 - z3)", r);
  EXPECT_EQ(to_string(partial_derivative(q, 0)), "2*z1*z2*z3 + z2^2*z3 - z2*z3^2");
  // Euler: Σ z_i ∂_i Q = deg Q · Q
  Poly euler(r);
  for (std::size_t i = 0; i < 3; ++i) euler = euler + Poly::variable(r, i) * partial_derivative(q, i);
  EXPECT_EQ(euler, q.scaled(4));
  EXPECT_EQ(is_homogeneous(q).degree, 4u);
  EXPECT_FALSE(is_homogeneous(parse_poly("z1^2 + z2", r)));
  EXPECT_TRUE(partial_derivative(Poly::constant(r, 5), 1).is_zero());
}

TEST(Poly, LinearProducts) {
  const Ring r = make_ring(3);
  EXPECT_EQ(product_of_linears({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, r), parse_poly("z1^2*z2 + z1*z2^2", r));
  EXPECT_THROW(product_of_linears({{0, 0, 0}}, r), DomainError);
  EXPECT_EQ(linear_form(r, {Rat(1, 2), 0, -1}), parse_poly("1/2*z1 - z3", r));
  EXPECT_THROW(leading_term(Poly(r), TermOrder::degrevlex()), DomainError);
  EXPECT_EQ(leading_term(parse_poly("z1*z3 + z2^2", r), TermOrder::degrevlex()).monomial, mono({0, 2, 0}));
}

TEST(Poly, SubstituteAndMap) {
  const Ring r = make_ring(3);
  const Poly f = parse_poly("z1^2*z3 + z2", r);
  EXPECT_EQ(substitute(f, 2, 3), parse_poly("3*z1^2 + z2", r));
  const Ring r4 = make_ring(4);
  EXPECT_EQ(map_variables(f, r4, {1, 2, 3}), parse_poly("z2^2*z4 + z3", r4));
}

TEST(Poly, SmallExamples) {
  const Ring r = make_ring(3);
  auto P = [&](const char* s) { return parse_poly(s, r); };
  EXPECT_EQ(P("z1 + z2") * P("z1 - z2"), P("z1^2 - z2^2"));
  EXPECT_EQ(P("z1*z3 + 4") + Poly(r), P("z1*z3 + 4"));
  EXPECT_TRUE(partial_derivative(P("z2^3"), 0).is_zero());
  EXPECT_EQ(partial_derivative(P("z1^2*z2 + z1*z2^2"), 1), P("z1^2 + 2*z1*z2"));
  EXPECT_EQ(product_of_linears({{1, 1, 0}}, r), P("z1 + z2"));
  EXPECT_EQ(product_of_linears({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}, {1, 0, -1}}, r),
            P("z1*z2*z3*(z1 + z2 - z3)") * P("z1 - z3"));
  EXPECT_EQ(is_homogeneous(P("z1^2*z2 - z2^3")).degree, 3u);
  EXPECT_FALSE(is_homogeneous(P("z1 + z1*z2")));
  const Poly q2 = P("z1*z2*z3*(z1 + z2 - z3)*(z1 - z3)");
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(is_homogeneous(partial_derivative(q2, i)).degree, 4u);
}

TEST(Poly, LeadingTermExamples) {
  const Ring r = make_ring(2);
  Term t = leading_term(parse_poly("z1^2 + 2*z1*z2", r), TermOrder::degrevlex());
  EXPECT_EQ(t.monomial, mono({2, 0}));
  EXPECT_EQ(t.coeff, 1);
  t = leading_term(parse_poly("z1*z2 + z2^3", r), TermOrder::lex());
  EXPECT_EQ(t.monomial, mono({1, 1}));
  EXPECT_EQ(t.coeff, 1);
  t = leading_term(parse_poly("2*z1*z2 + z2^2", r), TermOrder::degrevlex());
  EXPECT_EQ(t.monomial, mono({1, 1}));
  EXPECT_EQ(t.coeff, 2);
}
