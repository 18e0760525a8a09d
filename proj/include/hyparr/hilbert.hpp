#pragma once

// Hilbert series and Hilbert polynomials of S/I for homogeneous I, via the
// leading-term ideal. HP(d) is kept in the normalization
//   HP(d) = Σ_m a_m d^m / m!
// so that a_top is the degree of the top-dimensional part.

#include <algorithm>
#include <optional>
#include <vector>

#include "hyparr/ideal.hpp"

namespace hyparr {

struct HilbertSeries {
  std::vector<Int> numerator;  // G(t) after cancelling (1 − t); empty for the zero ring
  unsigned denominator_power = 0;
  std::size_t nvars = 0;

  bool is_zero() const { return numerator.empty(); }
  Int numerator_at_one() const {
    Int s = 0;
    for (const Int& g : numerator) s += g;
    return s;
  }
  /// Krull dimension minus one, i.e. dim Proj S/I; -1 for the empty scheme.
  int projective_dimension() const { return is_zero() ? -1 : int(denominator_power) - 1; }
};

namespace detail {

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

inline void add_shifted(std::vector<Int>& acc, const std::vector<Int>& p, unsigned shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

// Numerator N(t) of the series of S/M written over (1 − t)^n, by splitting on a
// variable shared by two generators: N(M) = N(M + (x)) + t·N(M : x).
inline std::vector<Int> monomial_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {Int(1)};
  if (gens.front().is_one()) return {};

  for (std::size_t v = 0; v < kMaxVars; ++v) {
    std::size_t uses = 0;
    for (const Monomial& g : gens) uses += g[v] ? 1 : 0;
    if (uses < 2) continue;

    std::vector<Monomial> with_x = gens;
    with_x.push_back(Monomial::variable(v));
    std::vector<Monomial> colon;
    for (const Monomial& g : gens) {
      Monomial h = g;
      if (h[v]) h.set(v, h[v] - 1);
      colon.push_back(h);
    }
    std::vector<Int> out = monomial_numerator(std::move(with_x));
    add_shifted(out, monomial_numerator(std::move(colon)), 1);
    return out;
  }

  // pairwise coprime: a regular sequence, N = Π (1 − t^deg g)
  std::vector<Int> out{Int(1)};
  for (const Monomial& g : gens) {
    std::vector<Int> next(out.size() + g.degree());
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i] += out[i];
      next[i + g.degree()] -= out[i];
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

/// Series of S / (monomial ideal generated by `leading`), fully cancelled.
inline HilbertSeries hilbert_series_of_monomials(const std::vector<Monomial>& leading, std::size_t nvars) {
  HilbertSeries hs;
  hs.nvars = nvars;
  std::vector<Int> num = detail::monomial_numerator(leading);
  while (!num.empty() && num.back() == 0) num.pop_back();
  if (num.empty()) return hs;
  unsigned d = static_cast<unsigned>(nvars);
  for (;;) {
    Int at_one = 0;
    for (const Int& c : num) at_one += c;
    if (at_one != 0 || d == 0) break;
    // N(t) = (1 − t) Q(t): Q's coefficients are the prefix sums of N's
    std::vector<Int> q(num.size() - 1);
    Int run = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) q[i] = (run += num[i]);
    num = std::move(q);
    --d;
  }
  hs.numerator = std::move(num);
  hs.denominator_power = d;
  return hs;
}

/// Hilbert series of S/I; S/I and S/LT(I) share it.
inline HilbertSeries hilbert_series(const Ideal& ideal, const GbOptions& opts = {}) {
  if (!ideal.is_homogeneous()) throw DomainError("hilbert_series: ideal is not homogeneous");
  const GroebnerBasis& gb = ideal.groebner_basis(TermOrder::degrevlex(), opts);
  return hilbert_series_of_monomials(gb.leading_monomials(), ideal.nvars());
}

class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  /// `normalized[m]` is a_m in HP(d) = Σ a_m d^m / m!.
  explicit HilbertPolynomial(std::vector<Rat> normalized) : a_(std::move(normalized)) {
    while (!a_.empty() && a_.back() == 0) a_.pop_back();
  }

  bool is_zero() const noexcept { return a_.empty(); }
  /// Degree in d; absent for the zero polynomial.
  std::optional<unsigned> degree() const {
    if (a_.empty()) return std::nullopt;
    return static_cast<unsigned>(a_.size() - 1);
  }
  Rat normalized_coefficient(unsigned m) const { return m < a_.size() ? a_[m] : Rat(0); }
  const std::vector<Rat>& normalized_coefficients() const noexcept { return a_; }

  Rat operator()(const Rat& d) const {
    Rat sum = 0, power = 1, fact = 1;
    for (std::size_t m = 0; m < a_.size(); ++m) {
      if (m) {
        power *= d;
        fact *= static_cast<unsigned long>(m);
      }
      sum += a_[m] * power / fact;
    }
    return sum;
  }

  friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b) { return a.a_ == b.a_; }

 private:
  std::vector<Rat> a_;
};

/// HP(d) = Σᵢ gᵢ · binom(d − i + D − 1, D − 1); zero when D = 0.
inline HilbertPolynomial hilbert_polynomial(const HilbertSeries& hs) {
  const unsigned D = hs.denominator_power;
  if (hs.is_zero() || D == 0) return HilbertPolynomial{};
  std::vector<Rat> mono(D, Rat(0));  // coefficients of d^m
  Rat fact = 1;
  for (unsigned k = 2; k < D; ++k) fact *= k;
  for (std::size_t i = 0; i < hs.numerator.size(); ++i) {
    if (hs.numerator[i] == 0) continue;
    // Π_{k=1}^{D−1} (d − i + k)
    std::vector<Rat> p{Rat(1)};
    for (unsigned k = 1; k < D; ++k) {
      const Rat shift = Rat(long(k)) - Rat(long(i));
      std::vector<Rat> next(p.size() + 1, Rat(0));
      for (std::size_t j = 0; j < p.size(); ++j) {
        next[j + 1] += p[j];
        next[j] += p[j] * shift;
      }
      p = std::move(next);
    }
    for (std::size_t j = 0; j < p.size(); ++j) mono[j] += Rat(hs.numerator[i]) * p[j] / fact;
  }
  Rat mfact = 1;
  for (std::size_t m = 0; m < mono.size(); ++m) {
    if (m) mfact *= static_cast<unsigned long>(m);
    mono[m] *= mfact;
  }
  return HilbertPolynomial(std::move(mono));
}

inline HilbertPolynomial hilbert_polynomial(const Ideal& ideal, const GbOptions& opts = {}) {
  return hilbert_polynomial(hilbert_series(ideal, opts));
}

/// dim_Q (S/I)_d read off the series: coefficient of t^d.
inline Int hilbert_function(const HilbertSeries& hs, unsigned d) {
  Int total = 0;
  const unsigned D = hs.denominator_power;
  for (std::size_t i = 0; i < hs.numerator.size() && i <= d; ++i) {
    Int b;
    if (D == 0)
      b = (d == i) ? 1 : 0;
    else
      mpz_bin_uiui(b.get_mpz_t(), d - i + D - 1, D - 1);
    total += hs.numerator[i] * b;
  }
  return total;
}

/// Number of degree-d monomials in `nvars` variables outside the monomial
/// ideal generated by `leading`. Brute-force enumeration.
inline Int count_standard_monomials(const std::vector<Monomial>& leading, std::size_t nvars, unsigned d) {
  Int count = 0;
  Monomial m;
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == nvars) {
      m.set(var, left);
      for (const Monomial& g : leading)
        if (g.divides(m)) return;
      ++count;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(var, e);
      self(self, var + 1, left - e);
    }
    m.set(var, 0);
  };
  rec(rec, 0, d);
  return count;
}

/// a_m of HP(S/I). Zero when dim Proj S/I < m. When the dimension exceeds m,
/// `strict` turns that into a DomainError; otherwise a_m is returned if integral.
inline Int deg_m(const Ideal& ideal, unsigned m, bool strict = false, const GbOptions& opts = {}) {
  const HilbertSeries hs = hilbert_series(ideal, opts);
  const int dim = hs.projective_dimension();
  if (dim < int(m)) return 0;
  if (dim > int(m) && strict)
    throw DomainError("deg_m: dim Proj S/I = " + std::to_string(dim) + " exceeds m = " + std::to_string(m));
  const Rat a = hilbert_polynomial(hs).normalized_coefficient(m);
  if (a.get_den() != 1) throw DomainError("deg_m: coefficient a_" + std::to_string(m) + " = " + a.get_str() + " is not an integer");
  return a.get_num();
}

/// dim_Q S/I when finite.
inline std::optional<Int> quotient_vecdim(const Ideal& ideal, const GbOptions& opts = {}) {
  const HilbertSeries hs = hilbert_series(ideal, opts);
  if (hs.is_zero()) return Int(0);
  if (hs.denominator_power != 0) return std::nullopt;
  return hs.numerator_at_one();
}

}  // namespace hyparr
