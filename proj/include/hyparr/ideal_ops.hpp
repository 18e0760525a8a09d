#pragma once

// Ideal calculus on top of Gröbner bases: membership, elimination,
// intersection, quotient, saturation and radical membership.

#include <cstdint>
#include <numeric>
#include <vector>

#include "hyparr/ideal.hpp"

namespace hyparr {

inline bool ideal_member(const Poly& f, const Ideal& ideal, const GbOptions& opts = {}) {
  return normal_form(f, ideal.groebner_basis(TermOrder::degrevlex(), opts)).is_zero();
}

/// J ⊆ I.
inline bool ideal_contains(const Ideal& big, const Ideal& small, const GbOptions& opts = {}) {
  if (!same_ring(big.ring(), small.ring())) throw RingMismatch();
  for (const Poly& g : small.generators())
    if (!ideal_member(g, big, opts)) return false;
  return true;
}

/// Equality of ideals, decided by comparing reduced degrevlex bases.
inline bool same_ideal(const Ideal& a, const Ideal& b, const GbOptions& opts = {}) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  return a.groebner_basis(TermOrder::degrevlex(), opts) == b.groebner_basis(TermOrder::degrevlex(), opts);
}

/// I ∩ Q[variables outside `mask`], kept in the same ring.
inline Ideal eliminate_variables(const Ideal& ideal, std::uint32_t mask, const GbOptions& opts = {}) {
  const GroebnerBasis& gb = ideal.groebner_basis(TermOrder::eliminating(mask), opts);
  std::vector<Poly> kept;
  for (const Poly& g : gb.elements()) {
    bool free = true;
    for (std::size_t v = 0; v < ideal.nvars() && free; ++v)
      if ((mask >> v) & 1u) free = !g.uses_variable(v);
    if (free) kept.push_back(g);
  }
  return Ideal(ideal.ring(), kept);
}

/// I ∩ Q[z_{k+1}, ..., z_n]: eliminates the first k variables.
inline Ideal eliminate(const Ideal& ideal, unsigned k, const GbOptions& opts = {}) {
  if (k == 0 || k >= ideal.nvars()) throw DomainError("eliminate: need 0 < k < nvars");
  return eliminate_variables(ideal, (std::uint32_t{1} << k) - 1, opts);
}

namespace detail {

// Ring with one extra variable, either in front or at the back, plus the
// embedding of the old variables.
struct Extension {
  Ring ring;
  std::vector<std::size_t> embed;
  std::vector<std::size_t> project;  // inverse on the old variables
  std::size_t extra;
};

inline Extension extend(const Ring& base, const std::string& name, bool front) {
  std::vector<std::string> names = base->names();
  const std::string fresh = fresh_name(*base, name);
  const std::size_t n = base->nvars();
  Extension e;
  e.embed.resize(n);
  e.project.assign(n + 1, 0);
  if (front) {
    names.insert(names.begin(), fresh);
    e.extra = 0;
    for (std::size_t i = 0; i < n; ++i) e.embed[i] = i + 1;
  } else {
    names.push_back(fresh);
    e.extra = n;
    std::iota(e.embed.begin(), e.embed.end(), std::size_t{0});
  }
  for (std::size_t i = 0; i < n; ++i) e.project[e.embed[i]] = i;
  e.ring = make_ring(std::move(names));
  return e;
}

inline Ideal restrict_to_base(const Ideal& ext_ideal, const Extension& e, const Ring& base) {
  std::vector<Poly> out;
  for (const Poly& g : ext_ideal.generators()) out.push_back(map_variables(g, base, e.project));
  return Ideal(base, out);
}

}  // namespace detail

/// I ∩ J via t·I + (1 − t)·J and elimination of t.
inline Ideal intersect(const Ideal& a, const Ideal& b, const GbOptions& opts = {}) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  const auto e = detail::extend(a.ring(), "t", true);
  const Poly t = Poly::variable(e.ring, e.extra);
  const Poly one_minus_t = Poly::constant(e.ring, 1) - t;
  std::vector<Poly> gens;
  for (const Poly& f : a.generators()) gens.push_back(t * map_variables(f, e.ring, e.embed));
  for (const Poly& g : b.generators()) gens.push_back(one_minus_t * map_variables(g, e.ring, e.embed));
  return detail::restrict_to_base(eliminate(Ideal(e.ring, gens), 1, opts), e, a.ring());
}

/// (I : f), computed as (I ∩ (f)) / f.
inline Ideal quotient(const Ideal& ideal, const Poly& f, const GbOptions& opts = {}) {
  if (f.is_zero()) throw DomainError("quotient by the zero polynomial");
  const Ideal meet = intersect(ideal, Ideal(ideal.ring(), {f}), opts);
  std::vector<Poly> gens;
  for (const Poly& g : meet.generators()) gens.push_back(divide_exact(g, f));
  return Ideal(ideal.ring(), gens);
}

/// (I : f^∞) via I + (y·f − 1) with y appended last and eliminated.
inline Ideal saturate(const Ideal& ideal, const Poly& f, const GbOptions& opts = {}) {
  if (f.is_zero()) throw DomainError("saturation by the zero polynomial");
  Poly::check_ring(f, Poly(ideal.ring()));
  const auto e = detail::extend(ideal.ring(), "y", false);
  std::vector<Poly> gens;
  for (const Poly& g : ideal.generators()) gens.push_back(map_variables(g, e.ring, e.embed));
  const Poly y = Poly::variable(e.ring, e.extra);
  gens.push_back(y * map_variables(f, e.ring, e.embed) - Poly::constant(e.ring, 1));
  const Ideal elim = eliminate_variables(Ideal(e.ring, gens), std::uint32_t{1} << e.extra, opts);
  return detail::restrict_to_base(elim, e, ideal.ring());
}

/// (I : m^∞) for the irrelevant ideal m = (z1, ..., zn), as ∩ᵢ (I : zᵢ^∞).
inline Ideal saturate_irrelevant(const Ideal& ideal, const GbOptions& opts = {}) {
  if (!ideal.is_homogeneous()) throw DomainError("saturate_irrelevant: ideal is not homogeneous");
  std::optional<Ideal> acc;
  for (std::size_t i = 0; i < ideal.nvars(); ++i) {
    Ideal s = saturate(ideal, Poly::variable(ideal.ring(), i), opts);
    if (s.groebner_basis(TermOrder::degrevlex(), opts).is_unit()) continue;
    acc = acc ? intersect(*acc, s, opts) : s;
  }
  return acc ? *acc : Ideal(ideal.ring(), {Poly::constant(ideal.ring(), 1)});
}

/// Equality of the projective subschemes cut out by two homogeneous ideals.
inline bool scheme_equal(const Ideal& a, const Ideal& b, const GbOptions& opts = {}) {
  return same_ideal(saturate_irrelevant(a, opts), saturate_irrelevant(b, opts), opts);
}

/// f ∈ √I, decided by 1 ∈ I + (1 − y·f) with y appended last.
inline bool radical_member(const Poly& f, const Ideal& ideal, const GbOptions& opts = {}) {
  Poly::check_ring(f, Poly(ideal.ring()));
  if (f.is_zero()) return true;
  const auto e = detail::extend(ideal.ring(), "y", false);
  std::vector<Poly> gens;
  for (const Poly& g : ideal.generators()) gens.push_back(map_variables(g, e.ring, e.embed));
  const Poly y = Poly::variable(e.ring, e.extra);
  gens.push_back(Poly::constant(e.ring, 1) - y * map_variables(f, e.ring, e.embed));
  return Ideal(e.ring, gens).groebner_basis(TermOrder::degrevlex(), opts).is_unit();
}

inline bool radical_equal(const Ideal& a, const Ideal& b, const GbOptions& opts = {}) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  for (const Poly& g : a.generators())
    if (!radical_member(g, b, opts)) return false;
  for (const Poly& g : b.generators())
    if (!radical_member(g, a, opts)) return false;
  return true;
}

}  // namespace hyparr
