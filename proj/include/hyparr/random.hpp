#pragma once

// Seeded generators for test corpora. Every draw goes through std::mt19937_64
// with explicit distributions on integers, so a seed reproduces bit-exactly.

#include <cstdint>
#include <random>
#include <vector>

#include "hyparr/lattice.hpp"

namespace hyparr {

using Rng = std::mt19937_64;

namespace detail {
inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
}  // namespace detail

/// Random rational in [-range, range] with denominator in [1, max_den].
inline Rat random_rational(Rng& rng, long range, long max_den = 1) {
  const long den = detail::uniform(rng, 1, max_den);
  Rat r(detail::uniform(rng, -range * den, range * den), den);
  r.canonicalize();
  return r;
}

/// `n` distinct rational slopes.
inline std::vector<Rat> random_slopes(Rng& rng, std::size_t n, long range = 6, long max_den = 4) {
  std::vector<Rat> out;
  while (out.size() < n) {
    Rat s = random_rational(rng, range, max_den);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

/// The binary form Π (s·z1 − z2) over the given slopes.
inline Poly binary_form_from_slopes(const Ring& ring, const std::vector<Rat>& slopes) {
  std::vector<QVector> cov;
  for (const Rat& s : slopes) {
    QVector c(ring->nvars(), Rat(0));
    c[0] = s;
    c[1] = -1;
    cov.push_back(std::move(c));
  }
  return product_of_linears(cov, ring);
}

/// Essential arrangement of n distinct hyperplanes with integer covector
/// entries in [-range, range].
inline Arrangement random_essential_arrangement(Rng& rng, std::size_t dim, std::size_t n, long range = 3) {
  if (n < dim) throw DomainError("random_essential_arrangement: need at least dim hyperplanes");
  for (;;) {
    std::vector<Hyperplane> hs;
    while (hs.size() < n) {
      std::vector<Rat> c(dim);
      bool zero = true;
      for (Rat& x : c) {
        x = detail::uniform(rng, -range, range);
        zero = zero && x == 0;
      }
      if (zero) continue;
      Hyperplane h(c);
      if (std::find(hs.begin(), hs.end(), h) == hs.end()) hs.push_back(std::move(h));
    }
    Arrangement a(dim, std::move(hs));
    if (is_essential(a)) return a;
  }
}

/// A point of P^{ℓ−1} on the (projective) point flat X, for codim ℓ−1 flats.
inline QVector flat_point(const Flat& x) {
  const auto basis = x.basis();
  if (basis.size() != 1) throw DomainError("flat_point: flat is not a projective point");
  return basis.front();
}

/// `count` hyperplanes not in A (ℓ = 3), mixing three kinds in turn: lines
/// through two singular points of A, lines through one singular point, and
/// lines in general position. Falls back to the next kind when a kind has
/// no fresh candidate.
inline std::vector<Hyperplane> random_probes(Rng& rng, const Arrangement& a, const Lattice& lattice, std::size_t count,
                                             long range = 5) {
  if (a.dim() != 3) throw DomainError("random_probes: needs dimension 3");
  std::vector<QVector> pts;
  for (const LatticeFlat* x : lattice.rank(2)) pts.push_back(flat_point(x->flat));

  auto cross = [](const QVector& p, const QVector& q) {
    return QVector{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
  };
  auto random_vector = [&] {
    QVector v(3);
    for (Rat& x : v) x = detail::uniform(rng, -range, range);
    return v;
  };
  auto fresh = [&](const QVector& c, const std::vector<Hyperplane>& have) -> std::optional<Hyperplane> {
    if (std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; })) return std::nullopt;
    Hyperplane h(c);
    if (a.contains(h) || std::find(have.begin(), have.end(), h) != have.end()) return std::nullopt;
    return h;
  };

  std::vector<Hyperplane> diagonals;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (auto h = fresh(cross(pts[i], pts[j]), diagonals)) diagonals.push_back(*h);
  std::shuffle(diagonals.begin(), diagonals.end(), rng);

  std::vector<Hyperplane> out;
  std::size_t next_diag = 0;
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    std::optional<Hyperplane> h;
    const std::size_t kind = attempt % 3;
    if (kind == 0 && next_diag < diagonals.size()) {
      h = diagonals[next_diag++];
      if (std::find(out.begin(), out.end(), *h) != out.end()) h.reset();
    } else if (kind <= 1 && !pts.empty()) {
      const QVector& p = pts[static_cast<std::size_t>(detail::uniform(rng, 0, long(pts.size()) - 1))];
      h = fresh(cross(p, random_vector()), out);
    } else {
      h = fresh(random_vector(), out);
    }
    if (h) out.push_back(*h);
  }
  return out;
}

}  // namespace hyparr
