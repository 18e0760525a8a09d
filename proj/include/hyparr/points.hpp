#pragma once

// Rational points of zero-dimensional projective schemes, found chart by
// chart with lex Gröbner bases and back-substitution.

#include <algorithm>
#include <vector>

#include "hyparr/ideal.hpp"
#include "hyparr/qlinalg.hpp"

namespace hyparr {

/// Primitive integer vector with first nonzero entry positive.
inline std::vector<Int> primitive_normalize(const std::vector<Rat>& v) {
  const Int den = common_denominator(v);
  std::vector<Int> out;
  Int g = 0;
  for (const Rat& c : v) {
    Int x = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.push_back(std::move(x));
  }
  if (g == 0) throw DomainError("primitive_normalize: zero vector");
  int sign = 0;
  for (const Int& x : out)
    if (x != 0) {
      sign = sgn(x);
      break;
    }
  for (Int& x : out) x = x / g * sign;
  return out;
}

/// A point of projective space with canonical integer coordinates.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(const std::vector<Rat>& coords) : coords_(primitive_normalize(coords)) {}
  ProjectivePoint(std::initializer_list<long> coords)
      : ProjectivePoint(std::vector<Rat>(coords.begin(), coords.end())) {}

  const std::vector<Int>& coords() const noexcept { return coords_; }
  std::vector<Rat> rational() const { return std::vector<Rat>(coords_.begin(), coords_.end()); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ":" : "") + coords_[i].get_str();
    return s + "]";
  }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Int> coords_;
};

namespace detail {

using UPoly = std::vector<Rat>;  // coefficients, low degree first

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly umod(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  return a;
}

inline UPoly udiv(UPoly a, const UPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  return q;
}

inline UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline UPoly uderiv(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  return d;
}

inline std::vector<Int> primitive_integer(const UPoly& p) {
  const Int den = common_denominator(p);
  std::vector<Int> out;
  Int g = 0;
  for (const Rat& c : p) {
    Int x = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.push_back(std::move(x));
  }
  for (Int& x : out) x /= g;
  return out;
}

inline Int eval_mod(const std::vector<Int>& f, const Int& x, const Int& mod) {
  Int acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * x + f[i];
    acc %= mod;
  }
  if (acc < 0) acc += mod;
  return acc;
}

// a/b with |a| <= bound_num, 0 < b <= bound_den and a ≡ u·b (mod m).
inline std::optional<Rat> rational_reconstruct(const Int& u, const Int& m, const Int& bound_num, const Int& bound_den) {
  Int r0 = m, r1 = u, t0 = 0, t1 = 1;
  while (abs(r1) > bound_num) {
    const Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound_den) return std::nullopt;
  Rat r(r1, t1);
  r.canonicalize();
  return r;
}

}  // namespace detail

struct RationalRoots {
  std::vector<Rat> roots;  // distinct, ascending
  bool split = true;       // false when the square-free part has non-rational roots
};

/// Distinct rational roots of a nonzero univariate polynomial (coefficients
/// low degree first). Candidates p/q have q | lc and p | a0; they are found by
/// p-adic lifting of simple roots modulo a small prime and rational reconstruction.
inline RationalRoots rational_roots(detail::UPoly coeffs) {
  using namespace detail;
  trim(coeffs);
  if (coeffs.empty()) throw DomainError("rational_roots: zero polynomial");
  RationalRoots out;
  if (coeffs.size() == 1) return out;

  UPoly sf = udiv(coeffs, ugcd(coeffs, uderiv(coeffs)));
  const bool zero_root = sf.front() == 0;
  if (zero_root) {
    out.roots.push_back(0);
    sf.erase(sf.begin());
  }
  const std::size_t degree = sf.size() - 1;
  if (degree > 0) {
    const std::vector<Int> f = primitive_integer(sf);
    std::vector<Int> df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<unsigned long>(i));
    const Int bound_num = abs(f.front());
    const Int bound_den = abs(f.back());
    const Int need = 2 * bound_num * bound_den;

    Int p = 1000;
    for (;;) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      if (bound_den % p == 0) continue;
      std::vector<Int> simple;
      bool bad = false;
      for (Int x = 0; x < p && !bad; ++x) {
        if (eval_mod(f, x, p) != 0) continue;
        if (eval_mod(df, x, p) == 0) bad = true;
        simple.push_back(x);
      }
      if (bad) continue;
      for (Int r : simple) {
        Int m = p;
        while (m <= need) {
          m *= m;
          // Newton step modulo the squared modulus
          Int inv;
          const Int d = eval_mod(df, r, m);
          if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()) == 0) break;
          r = (r - eval_mod(f, r, m) * inv) % m;
          if (r < 0) r += m;
        }
        auto cand = rational_reconstruct(r, m, bound_num, bound_den);
        if (!cand) continue;
        Rat v = 0;
        for (std::size_t i = sf.size(); i-- > 0;) v = v * *cand + sf[i];
        if (v == 0) out.roots.push_back(*cand);
      }
      break;
    }
    out.split = out.roots.size() - (zero_root ? 1 : 0) == degree;
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

namespace detail {

// Monic generator of I ∩ Q[z_var] for zero-dimensional I, found as the first
// linear dependence among the normal forms of 1, z_var, z_var^2, ...
inline UPoly minimal_polynomial(const GroebnerBasis& gb, std::size_t var) {
  const Ring& ring = gb.ring();
  const Poly x = Poly::variable(ring, var);
  std::vector<Poly> powers{normal_form(Poly::constant(ring, 1), gb)};
  for (;;) {
    std::vector<Monomial> support;
    for (const Poly& p : powers)
      for (const Term& t : p.terms())
        if (std::find(support.begin(), support.end(), t.monomial) == support.end()) support.push_back(t.monomial);
    QMatrix m(support.size(), powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < support.size(); ++i) m(i, j) = powers[j].coefficient(support[i]);
    const auto ker = kernel(m);
    if (!ker.empty()) {
      UPoly p = ker.front();
      trim(p);
      const Rat lead = p.back();
      for (Rat& c : p) c /= lead;
      return p;
    }
    powers.push_back(normal_form(x * powers.back(), gb));
  }
}

// Solutions of gens = 0 in the variables 0..k-1 (others already eliminated).
inline std::vector<std::vector<Rat>> affine_solutions(const Ring& ring, const std::vector<Poly>& gens, std::size_t k,
                                                      const GbOptions& opts) {
  if (k == 0) {
    for (const Poly& g : gens)
      if (!g.is_zero()) return {};
    return {{}};
  }
  // A lex basis of a chart with twenty-odd generic points is a shape basis
  // with interpolation-sized coefficients. Instead the eliminant of the last
  // variable comes from degrevlex normal forms and each rational root is
  // substituted back, giving the same triangular solve.
  const GroebnerBasis gb = buchberger(ring, gens, TermOrder::degrevlex(), opts);
  if (gb.size() == 0) throw PositiveDimensional("system has no equations in a chart");
  if (gb.is_unit()) return {};
  const auto lms = gb.leading_monomials();
  for (std::size_t v = 0; v < k; ++v) {
    bool pure = false;
    for (const Monomial& m : lms)
      if (m[v] && m[v] == m.degree()) pure = true;
    if (!pure) throw PositiveDimensional("chart system is not zero-dimensional");
  }
  const std::size_t last = k - 1;
  const RationalRoots rr = rational_roots(minimal_polynomial(gb, last));
  if (!rr.split) throw IrrationalLocus("singular locus has points that are not defined over Q");

  std::vector<std::vector<Rat>> sols;
  for (const Rat& r : rr.roots) {
    std::vector<Poly> sub;
    for (const Poly& g : gb.elements()) sub.push_back(substitute(g, last, r));
    for (auto& s : affine_solutions(ring, sub, k - 1, opts)) {
      s.push_back(r);
      sols.push_back(std::move(s));
    }
  }
  return sols;
}

}  // namespace detail

/// All Q-rational points of the zero-dimensional projective scheme V(I),
/// sorted. Charts: z_n = 1, then z_n = 0 and z_{n-1} = 1, and so on.
inline std::vector<ProjectivePoint> rational_projective_points(const Ideal& ideal, const GbOptions& opts = {}) {
  if (!ideal.is_homogeneous()) throw DomainError("rational_projective_points: ideal is not homogeneous");
  const std::size_t n = ideal.nvars();
  std::vector<ProjectivePoint> points;
  for (std::size_t chart = n; chart-- > 0;) {
    std::vector<Poly> gens;
    for (const Poly& g : ideal.generators()) {
      Poly h = substitute(g, chart, 1);
      for (std::size_t j = chart + 1; j < n; ++j) h = substitute(h, j, 0);
      gens.push_back(std::move(h));
    }
    for (auto& s : detail::affine_solutions(ideal.ring(), gens, chart, opts)) {
      s.push_back(1);
      s.resize(n, Rat(0));
      points.emplace_back(s);
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

/// Singular points of a Jacobian scheme in P^2.
inline std::vector<ProjectivePoint> singular_points_P2(const Ideal& jacobian, const GbOptions& opts = {}) {
  if (jacobian.nvars() != 3) throw DomainError("singular_points_P2: needs exactly 3 variables");
  return rational_projective_points(jacobian, opts);
}

}  // namespace hyparr
