#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace hyparr;

namespace {

const Ring& r3() {
  static const Ring r = make_ring(3);
  return r;
}

Ideal I(std::initializer_list<const char*> gens) { return ideal_of(r3(), gens); }

}  // namespace

TEST(HilbertSeries, PolynomialRing) {
  const HilbertSeries hs = hilbert_series(Ideal(r3()));
  EXPECT_EQ(hs.numerator, std::vector<Int>{1});
  EXPECT_EQ(hs.denominator_power, 3u);
  const HilbertPolynomial hp = hilbert_polynomial(hs);
  EXPECT_EQ(hp.normalized_coefficients(), (std::vector<Rat>{1, Rat(3, 2), 1}));
  for (unsigned d = 0; d < 8; ++d) EXPECT_EQ(hp(d), Rat((d + 1) * (d + 2) / 2));
}

TEST(HilbertSeries, UnitIdealIsZero) {
  const HilbertSeries hs = hilbert_series(I({"1"}));
  EXPECT_TRUE(hs.is_zero());
  EXPECT_EQ(hs.projective_dimension(), -1);
  EXPECT_TRUE(hilbert_polynomial(hs).is_zero());
  EXPECT_EQ(deg_m(I({"1"}), 0), 0);
}

TEST(HilbertSeries, CompleteIntersectionNumerator) {
  // (z1^2, z2^3): (1 − t^2)(1 − t^3)/(1 − t)^3 = (1 + t)(1 + t + t^2)/(1 − t)
  const HilbertSeries hs = hilbert_series(I({"z1^2", "z2^3"}));
  EXPECT_EQ(hs.numerator, (std::vector<Int>{1, 2, 2, 1}));
  EXPECT_EQ(hs.denominator_power, 1u);
  EXPECT_EQ(hs.projective_dimension(), 0);
  EXPECT_EQ(deg_m(I({"z1^2", "z2^3"}), 0), 6);
}

TEST(HilbertSeries, NonHomogeneousIsRejected) {
  EXPECT_THROW(hilbert_series(I({"z1^2 + z2"})), DomainError);
}

TEST(HilbertPolynomial, JacobianOfThreeConcurrentLines) {
  const Ideal j = jacobian_ideal_of(parse_poly("z1*z2*(z1 + z2)", r3()));
  const HilbertPolynomial hp = hilbert_polynomial(j);
  EXPECT_EQ(hp.degree(), 0u);
  EXPECT_EQ(hp(0), 4);
  EXPECT_EQ(deg_m(j, 0), 4);
}

TEST(HilbertFunction, MatchesLinearAlgebraOracle) {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> gens;
    const int count = 1 + trial % 4;
    for (int i = 0; i < count; ++i) {
      const unsigned deg = static_cast<unsigned>(detail::uniform(rng, 1, 3));
      Poly g(r3());
      for (const Monomial& m : oracle::monomials_of_degree(3, deg))
        g = g + Poly::monomial(r3(), m, detail::uniform(rng, -2, 2));
      gens.push_back(g);
    }
    const Ideal ideal(r3(), gens);
    const HilbertSeries hs = hilbert_series(ideal);
    const auto lms = ideal.groebner_basis().leading_monomials();
    for (unsigned d = 0; d <= 6; ++d) {
      const Int oracle = oracle::hilbert_function_by_linear_algebra(ideal.generators(), 3, d);
      EXPECT_EQ(hilbert_function(hs, d), oracle) << "trial " << trial << " d " << d;
      EXPECT_EQ(count_standard_monomials(lms, 3, d), oracle);
    }
    // HP agrees with HF past the numerator degree
    const HilbertPolynomial hp = hilbert_polynomial(hs);
    for (unsigned d = unsigned(hs.numerator.size()); d < hs.numerator.size() + 3; ++d)
      EXPECT_EQ(hp(d), Rat(hilbert_function(hs, d)));
  }
}

TEST(DegM, ModesAndEdgeCases) {
  const Ideal line = I({"z1"});
  EXPECT_EQ(deg_m(line, 1), 1);
  EXPECT_EQ(deg_m(line, 2), 0);  // dimension below m
  const Ideal conic_pair = I({"z1*z2"});
  EXPECT_EQ(deg_m(conic_pair, 1), 2);
  EXPECT_EQ(deg_m(conic_pair, 0), 1);  // a_0 = HP(0) = 1, always integral
  EXPECT_THROW(deg_m(conic_pair, 0, true), DomainError);
  EXPECT_THROW(deg_m(Ideal(r3()), 1), DomainError);  // a_1 = 3/2
  EXPECT_EQ(deg_m(Ideal(r3()), 2), 1);
}

TEST(DegM, DoublePointsAndTriplePoints) {
  const Ring& r = r3();
  const Ideal j1 = jacobian_ideal_of(parse_poly("z1*z2*z3*(z1 + z2 - z3)", r));
  const Ideal j2 = jacobian_ideal_of(parse_poly("z1*z2*z3*(z1 + z2 - z3)*(z1 - z3)", r));
  EXPECT_EQ(deg_m(j1, 0), 6);
  EXPECT_EQ(deg_m(j2, 0), 12);
  const Ideal generic5 = jacobian_ideal_of(parse_poly("z1*z2*z3*(z1 + z2 + z3)*(z1 + 2*z2 + 3*z3)", r));
  EXPECT_EQ(deg_m(generic5, 0), 10);
}

TEST(QuotientVecdim, FiniteAndInfinite) {
  EXPECT_EQ(quotient_vecdim(I({"z1", "z2^2", "z3^3"})), Int(6));
  EXPECT_EQ(quotient_vecdim(I({"1"})), Int(0));
  EXPECT_FALSE(quotient_vecdim(I({"z1", "z2"})).has_value());
}

TEST(HilbertSeries, SmallExamples) {
  HilbertSeries hs = hilbert_series(I({"z1", "z2"}));
  EXPECT_EQ(hs.numerator, std::vector<Int>{1});
  EXPECT_EQ(hs.denominator_power, 1u);
  hs = hilbert_series(I({"z1^2", "z2"}));
  EXPECT_EQ(hs.numerator, (std::vector<Int>{1, 1}));
  EXPECT_EQ(hs.denominator_power, 1u);
  const Ring r2 = make_ring(2);
  hs = hilbert_series(ideal_of(r2, {"z1^3", "z2"}));
  EXPECT_EQ(hs.numerator, (std::vector<Int>{1, 1, 1}));
  EXPECT_EQ(hs.denominator_power, 0u);
  EXPECT_EQ(hs.numerator_at_one(), 3);
}

TEST(HilbertPolynomial, SmallExamples) {
  EXPECT_EQ(hilbert_polynomial(I({"z1", "z2"})).normalized_coefficients(), std::vector<Rat>{1});
  EXPECT_EQ(hilbert_polynomial(I({"z1^2", "z2"})).normalized_coefficients(), std::vector<Rat>{2});
  EXPECT_EQ(deg_m(I({"z1^2", "z2"}), 0), 2);
}

TEST(QuotientVecdim, SmallExamples) {
  const Ring r2 = make_ring(2);
  EXPECT_EQ(quotient_vecdim(ideal_of(r2, {"z1", "z2"})), Int(1));
  EXPECT_EQ(quotient_vecdim(jacobian_ideal_of(parse_poly("z1*z2*(z1 + z2)", r2)).plus(Poly::variable(r2, 1))), Int(2));
  EXPECT_FALSE(quotient_vecdim(ideal_of(r2, {"z1"})).has_value());
}
