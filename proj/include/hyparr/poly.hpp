#pragma once

// Sparse multivariate polynomials over Q.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyparr/errors.hpp"
#include "hyparr/monomial.hpp"
#include "hyparr/rational.hpp"
#include "hyparr/term_order.hpp"

namespace hyparr {

/// Polynomial ring Q[z1..zn]: variable count and display names.
class RingCtx {
 public:
  explicit RingCtx(std::size_t nvars) {
    check(nvars);
    for (std::size_t i = 0; i < nvars; ++i) names_.push_back("z" + std::to_string(i + 1));
  }
  explicit RingCtx(std::vector<std::string> names) : names_(std::move(names)) {
    check(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw DomainError("RingCtx: duplicate variable name " + names_[i]);
  }

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const RingCtx& a, const RingCtx& b) { return a.names_ == b.names_; }

 private:
  static void check(std::size_t n) {
    if (n < 2) throw DomainError("RingCtx: need at least 2 variables");
    if (n > kMaxVars) throw DomainError("RingCtx: at most " + std::to_string(kMaxVars) + " variables");
  }

  std::vector<std::string> names_;
};

using Ring = std::shared_ptr<const RingCtx>;

inline Ring make_ring(std::size_t nvars) { return std::make_shared<const RingCtx>(nvars); }
inline Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const RingCtx>(std::move(names));
}

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

/// Picks a variable name not already used in `ring`, starting from `base`.
inline std::string fresh_name(const RingCtx& ring, const std::string& base) {
  std::string n = base;
  for (int k = 1; ring.index_of(n); ++k) n = base + std::to_string(k);
  return n;
}

struct Term {
  Monomial monomial;
  Rat coeff;
};

/// Result of a homogeneity check. The zero polynomial is homogeneous of every
/// degree and so reports `homogeneous` without a degree.
struct Homogeneity {
  bool homogeneous = false;
  std::optional<unsigned> degree;
  explicit operator bool() const noexcept { return homogeneous; }
};

class Poly {
 public:
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  static Poly constant(Ring ring, const Rat& c) { return monomial(std::move(ring), Monomial{}, c); }
  static Poly variable(Ring ring, std::size_t i) {
    if (i >= ring->nvars()) throw DomainError("variable index out of range");
    return monomial(std::move(ring), Monomial::variable(i), 1);
  }
  static Poly monomial(Ring ring, const Monomial& m, const Rat& c) {
    Poly p(std::move(ring));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  /// Combines like terms and drops zeros.
  static Poly from_terms(Ring ring, std::vector<Term> terms) {
    Poly p(std::move(ring));
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
    for (Term& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
        p.terms_.back().coeff += t.coeff;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    }
    return p;
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  /// Terms in storage order (not a term order).
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return is_zero() || (size() == 1 && terms_[0].monomial.is_one()); }

  Rat coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.monomial < x; });
    return it != terms_.end() && it->monomial == m ? it->coeff : Rat(0);
  }

  /// Maximum total degree; absent for the zero polynomial.
  std::optional<unsigned> total_degree() const {
    if (is_zero()) return std::nullopt;
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  /// Terms sorted descending under `ord`.
  std::vector<Term> sorted_terms(const TermOrder& ord) const {
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
    return out;
  }

  bool uses_variable(std::size_t i) const {
    for (const Term& t : terms_)
      if (t.monomial[i]) return true;
    return false;
  }

  Rat eval(const std::vector<Rat>& point) const {
    if (point.size() != nvars()) throw DomainError("eval: point has wrong dimension");
    Rat sum = 0;
    for (const Term& t : terms_) {
      Rat v = t.coeff;
      for (std::size_t i = 0; i < nvars(); ++i) {
        Rat p;
        mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), t.monomial[i]);
        mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), t.monomial[i]);
        v *= p;
      }
      sum += v;
    }
    return sum;
  }

  Poly operator-() const {
    Poly p = *this;
    for (Term& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  friend Poly operator+(const Poly& f, const Poly& g) { return combine(f, g, 1); }
  friend Poly operator-(const Poly& f, const Poly& g) { return combine(f, g, -1); }

  friend Poly operator*(const Poly& f, const Poly& g) {
    check_ring(f, g);
    std::map<Monomial, Rat> acc;
    for (const Term& a : f.terms_)
      for (const Term& b : g.terms_) acc[a.monomial * b.monomial] += a.coeff * b.coeff;
    Poly p(f.ring_);
    for (auto& [m, c] : acc)
      if (c != 0) p.terms_.push_back({m, std::move(c)});
    return p;
  }

  friend Poly operator*(const Rat& c, const Poly& f) { return f.scaled(c); }
  friend Poly operator*(const Poly& f, const Rat& c) { return f.scaled(c); }

  Poly scaled(const Rat& c) const {
    if (c == 0) return Poly(ring_);
    Poly p = *this;
    for (Term& t : p.terms_) t.coeff *= c;
    return p;
  }

  Poly times_monomial(const Monomial& m, const Rat& c) const {
    if (c == 0) return Poly(ring_);
    Poly p(ring_);
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
    // multiplication by a monomial is not monotone for the storage order
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
    return p;
  }

  Poly& operator+=(const Poly& g) { return *this = *this + g; }
  Poly& operator-=(const Poly& g) { return *this = *this - g; }
  Poly& operator*=(const Poly& g) { return *this = *this * g; }

  friend bool operator==(const Poly& f, const Poly& g) {
    if (!same_ring(f.ring_, g.ring_) || f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
      if (!(f.terms_[i].monomial == g.terms_[i].monomial) || f.terms_[i].coeff != g.terms_[i].coeff)
        return false;
    return true;
  }

  static void check_ring(const Poly& f, const Poly& g) {
    if (!same_ring(f.ring_, g.ring_)) throw RingMismatch();
  }

 private:
  static Poly combine(const Poly& f, const Poly& g, int sign) {
    check_ring(f, g);
    Poly p(f.ring_);
    p.terms_.reserve(f.terms_.size() + g.terms_.size());
    auto i = f.terms_.begin(), j = g.terms_.begin();
    while (i != f.terms_.end() || j != g.terms_.end()) {
      if (j == g.terms_.end() || (i != f.terms_.end() && i->monomial < j->monomial)) {
        p.terms_.push_back(*i++);
      } else if (i == f.terms_.end() || j->monomial < i->monomial) {
        p.terms_.push_back({j->monomial, sign > 0 ? j->coeff : Rat(-j->coeff)});
        ++j;
      } else {
        Rat c = sign > 0 ? Rat(i->coeff + j->coeff) : Rat(i->coeff - j->coeff);
        if (c != 0) p.terms_.push_back({i->monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    return p;
  }

  Ring ring_;
  std::vector<Term> terms_;  // sorted by Monomial::operator<, no zero coefficients
};

inline Homogeneity is_homogeneous(const Poly& f) {
  if (f.is_zero()) return {true, std::nullopt};
  const unsigned d = f.terms().front().monomial.degree();
  for (const Term& t : f.terms())
    if (t.monomial.degree() != d) return {false, std::nullopt};
  return {true, d};
}

/// The ord-maximal term. Throws DomainError for the zero polynomial.
inline Term leading_term(const Poly& f, const TermOrder& ord) {
  if (f.is_zero()) throw DomainError("leading_term of the zero polynomial");
  const Term* best = &f.terms().front();
  for (const Term& t : f.terms())
    if (ord.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

inline Poly partial_derivative(const Poly& f, std::size_t var) {
  if (var >= f.nvars()) throw DomainError("partial_derivative: variable index out of range");
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    const unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Poly::from_terms(f.ring(), std::move(out));
}

/// Σ cᵢ zᵢ for a covector c.
inline Poly linear_form(const Ring& ring, const std::vector<Rat>& covector) {
  if (covector.size() != ring->nvars()) throw DomainError("linear_form: covector length mismatch");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < covector.size(); ++i)
    if (covector[i] != 0) terms.push_back({Monomial::variable(i), covector[i]});
  return Poly::from_terms(ring, std::move(terms));
}

/// Expanded product of the linear forms given by `covectors`.
inline Poly product_of_linears(const std::vector<std::vector<Rat>>& covectors, const Ring& ring) {
  Poly q = Poly::constant(ring, 1);
  for (const auto& c : covectors) {
    Poly l = linear_form(ring, c);
    if (l.is_zero()) throw DomainError("product_of_linears: zero covector");
    q = q * l;
  }
  return q;
}

/// f with variable `var` replaced by the constant `value`.
inline Poly substitute(const Poly& f, std::size_t var, const Rat& value) {
  if (var >= f.nvars()) throw DomainError("substitute: variable index out of range");
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    Monomial m = t.monomial;
    const unsigned e = m[var];
    m.set(var, 0);
    Rat p;
    mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), e);
    mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), e);
    out.push_back({m, t.coeff * p});
  }
  return Poly::from_terms(f.ring(), std::move(out));
}

/// Moves f into `target`, sending variable i to variable `var_map[i]`.
inline Poly map_variables(const Poly& f, const Ring& target, const std::vector<std::size_t>& var_map) {
  if (var_map.size() != f.nvars()) throw DomainError("map_variables: map has wrong length");
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (!t.monomial[i]) continue;
      if (var_map[i] >= target->nvars()) throw DomainError("map_variables: target index out of range");
      m.set(var_map[i], m[var_map[i]] + t.monomial[i]);
    }
    out.push_back({m, t.coeff});
  }
  return Poly::from_terms(target, std::move(out));
}

/// Exact division f / g. Throws DomainError when g does not divide f.
inline Poly divide_exact(const Poly& f, const Poly& g) {
  Poly::check_ring(f, g);
  if (g.is_zero()) throw DomainError("divide_exact: division by zero");
  const TermOrder ord = TermOrder::degrevlex();
  const Term lg = leading_term(g, ord);
  Poly rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term lr = leading_term(rest, ord);
    if (!lg.monomial.divides(lr.monomial)) throw DomainError("divide_exact: not divisible");
    const Monomial m = lr.monomial / lg.monomial;
    const Rat c = lr.coeff / lg.coeff;
    quotient.push_back({m, c});
    rest = rest - g.times_monomial(m, c);
  }
  return Poly::from_terms(f.ring(), std::move(quotient));
}

}  // namespace hyparr
