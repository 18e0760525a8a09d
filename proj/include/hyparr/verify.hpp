#pragma once

// Self-verification suites run by `hyparr verify`. Each check records a
// pass/fail line and, on failure, enough detail to reproduce it.

#include <cstdint>
#include <string>
#include <vector>

#include "hyparr/random.hpp"
#include "hyparr/reconstruct.hpp"

namespace hyparr::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample on failure
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

struct NamedArrangement {
  std::string name;
  Arrangement arrangement;
};

inline Arrangement example_a1() { return parse_arrangement("dim 3\n1 0 0\n0 1 0\n0 0 1\n1 1 -1\n"); }
inline Arrangement example_a2() { return parse_arrangement("dim 3\n1 0 0\n0 1 0\n0 0 1\n1 1 -1\n1 0 -1\n"); }
inline Arrangement boolean_arrangement(std::size_t dim = 3) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Rat> c(dim, Rat(0));
    c[i] = 1;
    hs.emplace_back(c);
  }
  return Arrangement(dim, std::move(hs));
}

/// A1, A2, the Boolean arrangement and `random_count` random essential
/// arrangements in dimension 3 with 3 to 6 hyperplanes.
inline std::vector<NamedArrangement> corpus(Rng& rng, std::size_t random_count = 10) {
  std::vector<NamedArrangement> out{{"A1", example_a1()}, {"A2", example_a2()}, {"Boolean3", boolean_arrangement()}};
  for (std::size_t i = 0; i < random_count; ++i) {
    const auto n = static_cast<std::size_t>(detail::uniform(rng, 3, 6));
    out.push_back({"random" + std::to_string(i + 1), random_essential_arrangement(rng, 3, n)});
  }
  return out;
}

inline std::string describe(const Arrangement& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", (" : "(") + a[i].to_string() + ")";
  return s + "}";
}

inline SuiteReport lem2dim(std::uint64_t seed, const GbOptions& opts = {}) {
  SuiteReport rep{"lem2dim", seed, {}};
  Rng rng(seed);
  const Ring ring = make_ring(2);
  const Poly z1 = Poly::variable(ring, 0), z2 = Poly::variable(ring, 1);
  for (unsigned n = 2; n <= 7; ++n) {
    Poly power = Poly::constant(ring, 1);
    for (unsigned k = 1; k < n; ++k) power = power * z1;
    const std::vector<Poly> expected{z2, power};
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const auto slopes = random_slopes(rng, n);
      const Ideal slice = jacobian_ideal_of(binary_form_from_slopes(ring, slopes)).plus(z2);
      const GroebnerBasis& gb = slice.groebner_basis(TermOrder::degrevlex(), opts);
      const auto dim = quotient_vecdim(slice, opts);
      ok = gb.elements() == expected && dim && *dim == n - 1 && all_s_pairs_reduce_to_zero(gb);
      if (!ok) {
        detail = "slopes:";
        for (const Rat& s : slopes) detail += " " + s.get_str();
      }
    }
    rep.checks.push_back({"n=" + std::to_string(n) + ": J(Q)+(z2) = (z1^" + std::to_string(n - 1) + ", z2), dim " +
                              std::to_string(n - 1),
                          ok, detail});
  }
  return rep;
}

inline SuiteReport degree(std::uint64_t seed, const GbOptions& opts = {}) {
  SuiteReport rep{"degree", seed, {}};
  Rng rng(seed);
  for (const auto& [name, a] : corpus(rng)) {
    const Lattice lattice = intersection_lattice(a);
    const Ideal j = jacobian_ideal(a);
    std::vector<Hyperplane> tests = a.hyperplanes();
    for (Hyperplane& k : random_probes(rng, a, lattice, 5)) tests.push_back(std::move(k));
    bool ok = true;
    std::string detail;
    for (const Hyperplane& k : tests) {
      const long combinatorial = mu_K(lattice, k);
      const long scheme = degree_slice(j, k, opts);
      if (combinatorial != scheme) {
        ok = false;
        detail += "K=(" + k.to_string() + "): mu_K=" + std::to_string(combinatorial) +
                  " degree_slice=" + std::to_string(scheme) + "; ";
      }
    }
    rep.checks.push_back({name + " " + describe(a) + ": degree_slice = mu_K on " + std::to_string(tests.size()) +
                              " hyperplanes",
                          ok, detail});
  }
  return rep;
}

inline SuiteReport mull(std::uint64_t seed) {
  SuiteReport rep{"mull", seed, {}};
  Rng rng(seed);
  for (const auto& [name, a] : corpus(rng)) {
    const Lattice lattice = intersection_lattice(a);
    const long top = long(a.size()) - 1;
    bool ok = true;
    std::string detail;
    for (const Hyperplane& k : a.hyperplanes())
      if (long m = mu_K(lattice, k); m != top) {
        ok = false;
        detail += "K=(" + k.to_string() + ") in A: mu_K=" + std::to_string(m) + "; ";
      }
    for (const Hyperplane& k : random_probes(rng, a, lattice, 5))
      if (long m = mu_K(lattice, k); m >= top) {
        ok = false;
        detail += "K=(" + k.to_string() + ") not in A: mu_K=" + std::to_string(m) + "; ";
      }
    rep.checks.push_back({name + " " + describe(a) + ": mu_K = |A|-1 exactly on A", ok, detail});
  }
  return rep;
}

inline SuiteReport radical(const GbOptions& opts = {}) {
  SuiteReport rep{"radical", 0, {}};
  const Ideal j1 = jacobian_ideal(example_a1());
  const Ideal j2 = jacobian_ideal(example_a2());
  const Ring& ring = j1.ring();
  const Ideal primes = [&] {
    std::optional<Ideal> acc;
    for (const char* p : {"z1, z2", "z1, z2 - z3", "z2, z1 - z3", "z1, z3", "z2, z3", "z1 + z2, z3"}) {
      std::string s(p);
      const auto comma = s.find(',');
      Ideal prime(ring, {parse_poly(s.substr(0, comma), ring), parse_poly(s.substr(comma + 1), ring)});
      acc = acc ? intersect(*acc, prime, opts) : prime;
    }
    return *acc;
  }();
  rep.checks.push_back({"sqrt J(Q1) = sqrt J(Q2)", radical_equal(j1, j2, opts), ""});
  rep.checks.push_back({"intersection of the six primes is radical-equal to J(Q1)", radical_equal(primes, j1, opts), ""});
  rep.checks.push_back({"intersection of the six primes is radical-equal to J(Q2)", radical_equal(primes, j2, opts), ""});
  rep.checks.push_back(
      {"Sat J(Q1) != Sat J(Q2)", !same_ideal(saturate_irrelevant(j1, opts), saturate_irrelevant(j2, opts), opts), ""});
  return rep;
}

inline SuiteReport roundtrip(std::uint64_t seed, const ReconstructOptions& opts = {}) {
  SuiteReport rep{"roundtrip", seed, {}};
  Rng rng(seed);
  std::vector<NamedArrangement> items{{"A1", example_a1()}, {"A2", example_a2()}};
  for (std::size_t i = 0; i < 10; ++i) {
    const auto n = static_cast<std::size_t>(detail::uniform(rng, 3, 6));
    items.push_back({"random" + std::to_string(i + 1), random_essential_arrangement(rng, 3, n)});
  }
  for (const auto& [name, a] : items) {
    bool ok = false;
    std::string detail;
    try {
      const ReconstructionReport r = reconstruct(jacobian_ideal(a), std::nullopt, opts);
      ok = r.certificate && arrangements_identical(r.accepted, a);
      if (!ok) detail = "recovered " + describe(r.accepted);
    } catch (const ReconstructionFailed& e) {
      detail = e.what();
    }
    rep.checks.push_back({name + " " + describe(a) + ": reconstructed and certified", ok, detail});
  }
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lem2dim", "degree", "mull", "radical", "roundtrip"};
  return names;
}

inline SuiteReport run(const std::string& suite, std::uint64_t seed, const ReconstructOptions& opts = {}) {
  if (suite == "lem2dim") return lem2dim(seed, opts.gb);
  if (suite == "degree") return degree(seed, opts.gb);
  if (suite == "mull") return mull(seed);
  if (suite == "radical") return radical(opts.gb);
  if (suite == "roundtrip") return roundtrip(seed, opts);
  throw DomainError("unknown suite '" + suite + "'");
}

}  // namespace hyparr::verify
