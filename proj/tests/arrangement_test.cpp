#include <gtest/gtest.h>

#include <fstream>

#include "support/oracles.hpp"

using namespace hyparr;

namespace {

Arrangement load(const std::string& name) {
  std::ifstream in(std::string(HYPARR_DATA_DIR) + "/" + name);
  return parse_arrangement(in);
}

std::size_t error_line(std::string_view text) {
  try {
    parse_arrangement(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Hyperplane, CanonicalCovector) {
  EXPECT_EQ(Hyperplane({-2, 4, 0}).to_string(), "1 -2 0");
  EXPECT_EQ(Hyperplane(std::vector<Rat>{Rat(1, 2), Rat(1, 3), 0}).to_string(), "3 2 0");
  EXPECT_EQ(Hyperplane({0, -3, 6}), Hyperplane({0, 1, -2}));
  EXPECT_THROW(Hyperplane({0, 0, 0}), DomainError);
}

TEST(Arrangement, ParseDataFiles) {
  const Arrangement a1 = load("A1.arr");
  EXPECT_EQ(a1.dim(), 3u);
  EXPECT_EQ(a1.size(), 4u);
  EXPECT_EQ(a1[3], Hyperplane({1, 1, -1}));
  EXPECT_EQ(load("A2.arr").size(), 5u);
  EXPECT_EQ(load("generic5.arr").size(), 5u);
  EXPECT_EQ(parse_arrangement(format_arrangement(a1)).hyperplanes(), a1.hyperplanes());
}

TEST(Arrangement, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("dim 3\n1 0 0\n1 0\n"), 3u);
  EXPECT_EQ(error_line("dim 3\n# comment\n0 0 0\n"), 3u);
  EXPECT_EQ(error_line("dim 3\n1 0 0\n\n2 0 0\n"), 4u);
  EXPECT_EQ(error_line("dim 3\n1 x 0\n"), 2u);
  EXPECT_EQ(error_line("dimension 3\n"), 1u);
  EXPECT_EQ(error_line("dim 1\n"), 1u);
  EXPECT_THROW(parse_arrangement(""), ParseError);
  EXPECT_NO_THROW(parse_arrangement("dim 3 # header\n1/2 0 0  # half\n"));
}

TEST(Arrangement, DefiningPolynomial) {
  const Arrangement a1 = load("A1.arr");
  const Poly q = defining_polynomial(a1);
  EXPECT_EQ(to_string(q), "z1^2*z2*z3 + z1*z2^2*z3 - z1*z2*z3^2");
  EXPECT_EQ(is_homogeneous(q).degree, 4u);
  // vanishes on each hyperplane
  for (const Hyperplane& h : a1.hyperplanes())
    for (const QVector& v : h.flat().basis()) EXPECT_EQ(q.eval(v), 0);
}

TEST(Arrangement, JacobianIdeal) {
  const Arrangement a1 = load("A1.arr");
  const Ideal j = jacobian_ideal(a1);
  ASSERT_EQ(j.generators().size(), 3u);
  EXPECT_EQ(to_string(j.generators()[0]), "2*z1*z2*z3 + z2^2*z3 - z2*z3^2");
  // Euler: Q ∈ J(Q)
  EXPECT_TRUE(ideal_member(defining_polynomial(a1), j));
  EXPECT_TRUE(jacobian_ideal_of(Poly::variable(make_ring(2), 0)).groebner_basis().is_unit());
}

TEST(Arrangement, Validation) {
  EXPECT_THROW(Arrangement(3, {Hyperplane({1, 0, 0}), Hyperplane({2, 0, 0})}), DomainError);
  EXPECT_THROW(Arrangement(3, {Hyperplane({1, 0})}), DomainError);
  EXPECT_TRUE(is_essential(load("A1.arr")));
  EXPECT_FALSE(is_essential(Arrangement(3, {Hyperplane({1, 0, 0}), Hyperplane({0, 1, 0})})));
  EXPECT_TRUE(arrangements_identical(Arrangement(3, {Hyperplane({1, 0, 0}), Hyperplane({0, 1, 0})}),
                                     Arrangement(3, {Hyperplane({0, 2, 0}), Hyperplane({-1, 0, 0})})));
}

TEST(Arrangement, IdealFiles) {
  std::ifstream in(std::string(HYPARR_DATA_DIR) + "/four_points.ideal");
  const Ideal i = parse_ideal(in);
  EXPECT_EQ(i.nvars(), 3u);
  EXPECT_EQ(i.generators().size(), 2u);
  EXPECT_EQ(parse_ideal(format_ideal(i)).generators(), i.generators());
  try {
    parse_ideal("dim 3\nz1 + \n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Arrangement, JacobianExamples) {
  const Ideal j1 = jacobian_ideal(load("A1.arr"));
  for (const Poly& g : j1.generators()) EXPECT_EQ(is_homogeneous(g).degree, 3u);
  EXPECT_TRUE(jacobian_ideal(parse_arrangement("dim 3\n1 0 0\n")).groebner_basis().is_unit());
  const Arrangement node = parse_arrangement("dim 2\n1 0\n0 1\n");
  const Ring& r = node.ring();
  EXPECT_TRUE(same_ideal(jacobian_ideal(node), ideal_of(r, {"z2", "z1"})));
}

TEST(Arrangement, EssentialAndIdentical) {
  EXPECT_TRUE(is_essential(parse_arrangement("dim 3\n1 0 0\n1 1 0\n1 1 1\n")));
  const Arrangement a1 = load("A1.arr");
  EXPECT_TRUE(arrangements_identical(a1, parse_arrangement("dim 3\n7 7 -7\n0 0 7\n-7 0 0\n0 7 0\n")));
  EXPECT_FALSE(arrangements_identical(a1, load("A2.arr")));
  EXPECT_FALSE(arrangements_identical(a1, parse_arrangement("dim 3\n1 0 0\n0 1 0\n0 0 1\n")));
  EXPECT_THROW(arrangements_identical(a1, parse_arrangement("dim 2\n1 0\n")), DomainError);
}
