#include <gtest/gtest.h>

#include <map>

#include "support/oracles.hpp"
#include "hyparr/verify.hpp"

using namespace hyparr;

namespace {

// Whitney: χ(t) = Σ_{B ⊆ A} (−1)^|B| t^{ℓ − rank B}; coefficient of t^{ℓ−k} is Σ_{rank X = k} μ(X).
std::vector<long> whitney(const Arrangement& a) {
  std::vector<long> by_rank(a.dim() + 1, 0);
  const auto cov = a.covectors();
  for (std::size_t mask = 0; mask < (std::size_t{1} << a.size()); ++mask) {
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < a.size(); ++i)
      if ((mask >> i) & 1) rows.push_back(cov[i]);
    const std::size_t r = rows.empty() ? 0 : oracle::minor_rank(QMatrix::from_rows(rows, a.dim()));
    by_rank[r] += __builtin_popcountll(mask) % 2 ? -1 : 1;
  }
  return by_rank;
}

std::map<std::size_t, std::size_t> counts(const Lattice& l) {
  std::map<std::size_t, std::size_t> c;
  for (const LatticeFlat& f : l.flats()) ++c[f.codim()];
  return c;
}

}  // namespace

TEST(Lattice, A1) {
  const Lattice l = intersection_lattice(verify::example_a1());
  EXPECT_EQ(counts(l), (std::map<std::size_t, std::size_t>{{0, 1}, {1, 4}, {2, 6}, {3, 1}}));
  EXPECT_EQ(l.rank(3).front()->mu, -3);
  for (const LatticeFlat* x : l.rank(2)) EXPECT_EQ(x->mu, 1);
  for (const LatticeFlat* x : l.rank(1)) EXPECT_EQ(x->mu, -1);
}

TEST(Lattice, A2TriplePoints) {
  const Lattice l = intersection_lattice(verify::example_a2());
  std::vector<long> mus;
  long sq = 0;
  for (const LatticeFlat* x : l.rank(2)) {
    mus.push_back(x->mu);
    sq += x->mu * x->mu;
    EXPECT_EQ(x->mu, long(x->members.size()) - 1);
  }
  std::sort(mus.begin(), mus.end());
  EXPECT_EQ(mus, (std::vector<long>{1, 1, 1, 1, 2, 2}));
  EXPECT_EQ(sq, 12);
  // the triple point z1 = z3 = 0 lies on H1, H3, H5
  const LatticeFlat* x = l.find(flat_meet(Hyperplane({1, 0, 0}).flat(), Hyperplane({0, 0, 1}).flat()));
  ASSERT_NE(x, nullptr);
  EXPECT_EQ(x->members, (std::vector<std::size_t>{0, 2, 4}));
}

TEST(Lattice, MobiusMatchesWhitneyOracle) {
  Rng rng(101);
  auto items = verify::corpus(rng, 12);
  items.push_back({"boolean4", verify::boolean_arrangement(4)});
  items.push_back({"random4d", random_essential_arrangement(rng, 4, 6, 2)});
  for (const auto& [name, a] : items) {
    const Lattice l = intersection_lattice(a);
    std::vector<long> sums(a.dim() + 1, 0);
    for (const LatticeFlat& f : l.flats()) sums[f.codim()] += f.mu;
    EXPECT_EQ(sums, whitney(a)) << name;
    // rank-2 flats: μ = |A_X| − 1
    for (const LatticeFlat* x : l.rank(2)) EXPECT_EQ(x->mu, long(x->members.size()) - 1) << name;
    // every flat is the meet of its members
    for (const LatticeFlat& f : l.flats()) {
      Flat meet(a.dim());
      for (std::size_t i : f.members) meet = flat_meet(meet, a[i].flat());
      EXPECT_EQ(meet, f.flat) << name;
    }
  }
}

TEST(Lattice, FlatPolynomials) {
  const Arrangement a2 = verify::example_a2();
  const Lattice l = intersection_lattice(a2);
  for (const LatticeFlat* x : l.rank(2))
    EXPECT_EQ(flat_polynomial(a2, *x) * flat_complement_polynomial(a2, *x), defining_polynomial(a2));
}

TEST(MuK, Examples) {
  const Arrangement a1 = verify::example_a1(), a2 = verify::example_a2();
  EXPECT_EQ(mu_K(a1, Hyperplane({1, 0, 0})), 3);
  EXPECT_EQ(mu_K(a2, Hyperplane({1, 0, -1})), 4);
  EXPECT_EQ(mu_K(a2, Hyperplane({1, 1, 0})), 2);
  EXPECT_EQ(mu_K(a1, Hyperplane({1, 2, 3})), 0);
  EXPECT_THROW(mu_K(Arrangement(2, {Hyperplane({1, 0})}), Hyperplane({0, 1})), DomainError);
  EXPECT_THROW(mu_K(a1, Hyperplane({1, 0, 0, 0})), DomainError);
}

TEST(MuK, EqualsSizeMinusOneExactlyOnMembers) {
  Rng rng(5);
  for (const auto& [name, a] : verify::corpus(rng, 15)) {
    const Lattice l = intersection_lattice(a);
    for (const Hyperplane& h : a.hyperplanes()) EXPECT_EQ(mu_K(l, h), long(a.size()) - 1) << name;
    for (const Hyperplane& k : random_probes(rng, a, l, 6)) EXPECT_LT(mu_K(l, k), long(a.size()) - 1) << name;
  }
}

TEST(Lattice, BooleanAndGeneric) {
  const Lattice b = intersection_lattice(verify::boolean_arrangement());
  EXPECT_EQ(b.rank(2).size(), 3u);
  for (const LatticeFlat* x : b.rank(2)) EXPECT_EQ(x->mu, 1);
  EXPECT_EQ(b.rank(3).front()->mu, -1);
  const auto l2 = l2_flats(parse_arrangement("dim 3\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n1 2 3\n"));
  EXPECT_EQ(l2.size(), 10u);
  for (const LatticeFlat& x : l2) EXPECT_EQ(x.mu, 1);
}

TEST(Lattice, A2Memberships) {
  const Arrangement a2 = verify::example_a2();
  const Lattice l = intersection_lattice(a2);
  const Ring& r = a2.ring();
  auto at = [&](std::initializer_list<std::initializer_list<long>> normals) {
    std::vector<QVector> rows;
    for (auto n : normals) rows.emplace_back(n.begin(), n.end());
    const LatticeFlat* x = l.find(Flat(3, QMatrix::from_rows(rows, 3)));
    EXPECT_NE(x, nullptr);
    return x ? x->mu : 0;
  };
  EXPECT_EQ(at({{1, 0, 0}, {0, 1, 0}}), 1);
  EXPECT_EQ(at({{1, 0, 0}, {0, 1, -1}}), 1);
  EXPECT_EQ(at({{0, 1, 0}, {1, 0, -1}}), 2);
  EXPECT_EQ(at({{1, 0, 0}, {0, 0, 1}}), 2);
  EXPECT_EQ(at({{0, 1, 0}, {0, 0, 1}}), 1);
  EXPECT_EQ(at({{1, 1, 0}, {0, 0, 1}}), 1);
  const LatticeFlat* x13 = l.find(flat_meet(Hyperplane({1, 0, 0}).flat(), Hyperplane({0, 0, 1}).flat()));
  ASSERT_NE(x13, nullptr);
  EXPECT_EQ(flat_polynomial(a2, *x13), parse_poly("z1*z3*(z1 - z3)", r));
  const Arrangement a1 = verify::example_a1();
  const Lattice l1 = intersection_lattice(a1);
  const LatticeFlat* x12 = l1.find(flat_meet(Hyperplane({1, 0, 0}).flat(), Hyperplane({0, 1, 0}).flat()));
  ASSERT_NE(x12, nullptr);
  EXPECT_EQ(flat_polynomial(a1, *x12), parse_poly("z1*z2", a1.ring()));
  EXPECT_TRUE(same_ideal(flat_ideal(a1.ring(), x12->flat), ideal_of(a1.ring(), {"z1", "z2"})));
}
