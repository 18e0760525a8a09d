#pragma once

// Buchberger's algorithm with the Gebauer-Möller pair criteria and sugar
// selection. Bases come out reduced, monic and sorted by leading monomial,
// so two bases of the same ideal under the same order compare equal.

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "hyparr/errors.hpp"
#include "hyparr/poly.hpp"

namespace hyparr {

namespace detail {
inline std::atomic<unsigned>& default_guard_slot() {
  static std::atomic<unsigned> guard{40};
  return guard;
}
}  // namespace detail

/// Process-wide default degree guard picked up by every default-constructed GbOptions.
inline unsigned default_degree_guard() { return detail::default_guard_slot().load(); }
inline void set_default_degree_guard(unsigned guard) { detail::default_guard_slot().store(guard); }

struct GbOptions {
  unsigned degree_guard = default_degree_guard();
};

class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, TermOrder order, std::vector<Poly> elements)
      : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {}

  const Ring& ring() const noexcept { return ring_; }
  const TermOrder& order() const noexcept { return order_; }
  const std::vector<Poly>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const Poly& g : elements_) out.push_back(leading_term(g, order_).monomial);
    return out;
  }

  /// True iff the basis is {1}.
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  Ring ring_;
  TermOrder order_;
  std::vector<Poly> elements_;
};

/// Called with every basis produced by `buchberger`. Install before starting
/// concurrent work; the callback itself must be thread-safe.
using BasisObserver = std::function<void(const GroebnerBasis&)>;

namespace detail {

inline std::mutex& observer_mutex() {
  static std::mutex m;
  return m;
}
inline BasisObserver& observer_slot() {
  static BasisObserver obs;
  return obs;
}

// Polynomial as terms sorted descending under a fixed order.
using Dense = std::vector<Term>;

inline Dense to_dense(const Poly& f, const TermOrder& ord) { return f.sorted_terms(ord); }

inline Poly from_dense(const Ring& ring, Dense d) { return Poly::from_terms(ring, std::move(d)); }

// h[start..] - c * m * g, all descending under ord.
inline Dense sub_mul(const Dense& h, std::size_t start, const Rat& c, const Monomial& m, const Dense& g,
                     const TermOrder& ord) {
  Dense out;
  out.reserve(h.size() - start + g.size());
  std::size_t i = start, j = 0;
  while (i < h.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(h[i++]);
      continue;
    }
    const Monomial gm = g[j].monomial * m;
    const int cmp = i < h.size() ? ord.compare(h[i].monomial, gm) : -1;
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -c * g[j].coeff});
      ++j;
    } else {
      Rat v = h[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of h modulo the monic polynomials `basis` (selected by `active`).
inline Dense reduce_full(Dense h, const std::vector<Dense>& basis, const std::vector<std::size_t>& active,
                         const TermOrder& ord) {
  Dense result;
  std::size_t start = 0;
  while (start < h.size()) {
    const Term& lead = h[start];
    const Dense* divisor = nullptr;
    for (std::size_t k : active)
      if (basis[k].front().monomial.divides(lead.monomial)) {
        divisor = &basis[k];
        break;
      }
    if (!divisor) {
      result.push_back(lead);
      ++start;
      continue;
    }
    const Rat c = lead.coeff / divisor->front().coeff;
    const Monomial m = lead.monomial / divisor->front().monomial;
    h = sub_mul(h, start, c, m, *divisor, ord);
    start = 0;
  }
  return result;
}

inline void make_monic(Dense& d) {
  if (d.empty() || d.front().coeff == 1) return;
  const Rat inv = 1 / d.front().coeff;
  for (Term& t : d) t.coeff *= inv;
}

inline Dense s_poly(const Dense& f, const Dense& g, const TermOrder& ord) {
  const Monomial l = lcm(f.front().monomial, g.front().monomial);
  Dense a = sub_mul(Dense{}, 0, -1 / f.front().coeff, l / f.front().monomial, f, ord);
  return sub_mul(a, 0, 1 / g.front().coeff, l / g.front().monomial, g, ord);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  Buchberger(Ring ring, TermOrder ord, GbOptions opts) : ring_(std::move(ring)), ord_(ord), opts_(opts) {}

  GroebnerBasis run(const std::vector<Poly>& gens) {
    std::vector<Dense> input;
    for (const Poly& f : gens) {
      Poly::check_ring(f, Poly(ring_));
      if (f.is_zero()) continue;
      guard(*f.total_degree());
      input.push_back(to_dense(f, ord_));
    }
    std::sort(input.begin(), input.end(),
              [&](const Dense& a, const Dense& b) { return ord_.less(a.front().monomial, b.front().monomial); });
    for (Dense& f : input) {
      unsigned sugar = 0;
      for (const Term& t : f) sugar = std::max(sugar, t.monomial.degree());
      add(reduce_full(std::move(f), polys_, active_, ord_), sugar);
      if (unit_) break;
    }
    while (!pairs_.empty() && !unit_) {
      const Pair p = pop_pair();
      guard(p.lcm.degree());
      Dense h = reduce_full(s_poly(polys_[p.i], polys_[p.j], ord_), polys_, active_, ord_);
      add(std::move(h), p.sugar);
    }
    return finish();
  }

 private:
  void guard(unsigned degree) const {
    if (degree > opts_.degree_guard) throw ResourceError(degree, opts_.degree_guard);
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar ? a.sugar < b.sugar : ord_.less(a.lcm, b.lcm)) best = k;
    }
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  const Monomial& lm(std::size_t k) const { return polys_[k].front().monomial; }

  void add(Dense h, unsigned sugar) {
    if (h.empty()) return;
    make_monic(h);
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugars_.push_back(sugar);
    if (lm(hi).is_one()) {
      unit_ = true;
      active_ = {hi};
      pairs_.clear();
      return;
    }
    const Monomial& lh = lm(hi);

    // Gebauer-Möller: new pairs (g, h)
    std::vector<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back(make_pair(g, hi));
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool drop = false;
      if (!lm(p.i).coprime(lh)) {
        for (std::size_t r = k + 1; r < candidates.size() && !drop; ++r)
          drop = candidates[r].lcm.divides(p.lcm);
        for (const Pair& q : kept)
          if (!drop) drop = q.lcm.divides(p.lcm);
      }
      if (!drop) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const Pair& p : kept)
      if (!lm(p.i).coprime(lh)) fresh.push_back(p);

    // chain criterion on old pairs
    std::vector<Pair> old;
    for (const Pair& p : pairs_) {
      const bool removable = lh.divides(p.lcm) && !(lcm(lm(p.i), lh) == p.lcm) && !(lcm(lm(p.j), lh) == p.lcm);
      if (!removable) old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    std::vector<std::size_t> still;
    for (std::size_t g : active_)
      if (!lh.divides(lm(g))) still.push_back(g);
    still.push_back(hi);
    active_ = std::move(still);
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    const Monomial l = lcm(lm(i), lm(j));
    const unsigned s = std::max(sugars_[i] + l.degree() - lm(i).degree(), sugars_[j] + l.degree() - lm(j).degree());
    return Pair{i, j, l, s};
  }

  GroebnerBasis finish() {
    std::vector<Dense> reduced;
    for (std::size_t k : active_) {
      const Dense& g = polys_[k];
      Dense tail(g.begin() + 1, g.end());
      Dense red = reduce_full(std::move(tail), polys_, active_, ord_);
      red.insert(red.begin(), g.front());
      make_monic(red);
      reduced.push_back(std::move(red));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Dense& a, const Dense& b) { return ord_.less(a.front().monomial, b.front().monomial); });
    std::vector<Poly> elements;
    for (Dense& d : reduced) elements.push_back(from_dense(ring_, std::move(d)));
    return GroebnerBasis(ring_, ord_, std::move(elements));
  }

  Ring ring_;
  TermOrder ord_;
  GbOptions opts_;
  std::vector<Dense> polys_;
  std::vector<unsigned> sugars_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace detail

inline void set_basis_observer(BasisObserver obs) {
  std::lock_guard lock(detail::observer_mutex());
  detail::observer_slot() = std::move(obs);
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
/// Throws ResourceError when a pair or input degree exceeds the guard.
inline GroebnerBasis buchberger(const Ring& ring, const std::vector<Poly>& gens, const TermOrder& ord,
                                const GbOptions& opts = {}) {
  GroebnerBasis gb = detail::Buchberger(ring, ord, opts).run(gens);
  BasisObserver obs;
  {
    std::lock_guard lock(detail::observer_mutex());
    obs = detail::observer_slot();
  }
  if (obs) obs(gb);
  return gb;
}

/// Remainder of f on full division by G; no term of the result is divisible
/// by a leading monomial of G.
inline Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  Poly::check_ring(f, Poly(gb.ring()));
  std::vector<detail::Dense> basis;
  std::vector<std::size_t> active;
  for (const Poly& g : gb.elements()) {
    active.push_back(basis.size());
    basis.push_back(detail::to_dense(g, gb.order()));
  }
  return detail::from_dense(gb.ring(), detail::reduce_full(detail::to_dense(f, gb.order()), basis, active, gb.order()));
}

inline Poly s_polynomial(const Poly& f, const Poly& g, const TermOrder& ord) {
  Poly::check_ring(f, g);
  return detail::from_dense(f.ring(), detail::s_poly(detail::to_dense(f, ord), detail::to_dense(g, ord), ord));
}

/// Buchberger's criterion, checked on every pair without shortcuts.
inline bool all_s_pairs_reduce_to_zero(const GroebnerBasis& gb) {
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j)
      if (!normal_form(s_polynomial(el[i], el[j], gb.order()), gb).is_zero()) return false;
  return true;
}

/// Monic leading coefficients and no term divisible by another element's leading monomial.
inline bool is_reduced(const GroebnerBasis& gb) {
  const auto lms = gb.leading_monomials();
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (leading_term(gb.elements()[i], gb.order()).coeff != 1) return false;
    for (const Term& t : gb.elements()[i].terms())
      for (std::size_t j = 0; j < lms.size(); ++j)
        if (j != i && lms[j].divides(t.monomial)) return false;
  }
  return true;
}

}  // namespace hyparr
