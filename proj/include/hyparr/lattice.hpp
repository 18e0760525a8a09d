#pragma once

// Intersection lattice L(A) with its Möbius function, and the data attached
// to a flat X: A_X, Q_X and the linear prime I(X).

#include <algorithm>
#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr {

struct LatticeFlat {
  Flat flat;
  std::vector<std::size_t> members;  // indices H with X ⊆ H, ascending
  long mu = 0;

  std::size_t codim() const noexcept { return flat.codim(); }
};

class Lattice {
 public:
  Lattice(std::size_t dim, std::vector<LatticeFlat> flats) : dim_(dim), flats_(std::move(flats)) {}

  std::size_t dim() const noexcept { return dim_; }
  /// All flats, sorted by codimension (then by canonical normals).
  const std::vector<LatticeFlat>& flats() const noexcept { return flats_; }

  std::vector<const LatticeFlat*> rank(std::size_t codim) const {
    std::vector<const LatticeFlat*> out;
    for (const LatticeFlat& f : flats_)
      if (f.codim() == codim) out.push_back(&f);
    return out;
  }

  const LatticeFlat* find(const Flat& x) const {
    for (const LatticeFlat& f : flats_)
      if (f.flat == x) return &f;
    return nullptr;
  }

 private:
  std::size_t dim_;
  std::vector<LatticeFlat> flats_;
};

namespace detail {

inline bool normals_less(const Flat& a, const Flat& b) {
  if (a.codim() != b.codim()) return a.codim() < b.codim();
  const QMatrix& x = a.normals();
  const QMatrix& y = b.normals();
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) != y(i, j)) return x(i, j) > y(i, j);
  return false;
}

}  // namespace detail

/// Closes the hyperplanes under intersection (deduplicating on canonical RREF),
/// then runs μ(V) = 1, μ(X) = −Σ_{Y ⊋ X} μ(Y).
inline Lattice intersection_lattice(const Arrangement& a) {
  const std::size_t dim = a.dim();
  std::vector<Flat> atoms;
  for (const Hyperplane& h : a.hyperplanes()) atoms.push_back(h.flat());

  std::vector<Flat> flats{Flat(dim)};
  std::vector<std::size_t> work{0};
  while (!work.empty()) {
    const Flat x = flats[work.back()];
    work.pop_back();
    for (const Flat& h : atoms) {
      Flat y = flat_meet(x, h);
      if (std::find(flats.begin(), flats.end(), y) != flats.end()) continue;
      flats.push_back(std::move(y));
      work.push_back(flats.size() - 1);
    }
  }
  std::sort(flats.begin(), flats.end(), detail::normals_less);

  std::vector<LatticeFlat> out;
  for (Flat& f : flats) {
    LatticeFlat lf{std::move(f), {}, 0};
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (flat_contains(atoms[i], lf.flat)) lf.members.push_back(i);
    out.push_back(std::move(lf));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].codim() == 0) {
      out[i].mu = 1;
      continue;
    }
    long sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (out[j].codim() < out[i].codim() && flat_contains(out[j].flat, out[i].flat)) sum += out[j].mu;
    out[i].mu = -sum;
  }
  return Lattice(dim, std::move(out));
}

/// L_2(A). Each flat's μ comes from the general recursion.
inline std::vector<LatticeFlat> l2_flats(const Lattice& lattice) {
  std::vector<LatticeFlat> out;
  for (const LatticeFlat* f : lattice.rank(2)) out.push_back(*f);
  return out;
}

inline std::vector<LatticeFlat> l2_flats(const Arrangement& a) { return l2_flats(intersection_lattice(a)); }

/// Q_X = Π_{H ∈ A_X} α_H.
inline Poly flat_polynomial(const Arrangement& a, const LatticeFlat& x) {
  std::vector<QVector> cov;
  for (std::size_t i : x.members) cov.push_back(a[i].rational_covector());
  return product_of_linears(cov, a.ring());
}

/// Q / Q_X = Π_{X ⊄ H} α_H.
inline Poly flat_complement_polynomial(const Arrangement& a, const LatticeFlat& x) {
  std::vector<QVector> cov;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!std::binary_search(x.members.begin(), x.members.end(), i)) cov.push_back(a[i].rational_covector());
  return product_of_linears(cov, a.ring());
}

/// I(X): generated by the linear forms of the flat's canonical normals.
inline Ideal flat_ideal(const Ring& ring, const Flat& x) {
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < x.codim(); ++i) gens.push_back(linear_form(ring, x.normals().row(i)));
  return Ideal(ring, gens);
}

/// μ_A(K) = Σ_{X ∈ L_2, X ⊆ K} μ(X).
inline long mu_K(const Lattice& lattice, const Hyperplane& k) {
  if (lattice.dim() < 3) throw DomainError("mu_K: needs dimension at least 3");
  if (k.dim() != lattice.dim()) throw DomainError("mu_K: hyperplane has wrong dimension");
  const Flat kf = k.flat();
  long sum = 0;
  for (const LatticeFlat* x : lattice.rank(2))
    if (flat_contains(kf, x->flat)) sum += x->mu;
  return sum;
}

inline long mu_K(const Arrangement& a, const Hyperplane& k) { return mu_K(intersection_lattice(a), k); }

}  // namespace hyparr
