#pragma once

// Central hyperplane arrangements over Q: canonical hyperplanes, defining
// polynomial, Jacobian ideal and the text file format.

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyparr/ideal.hpp"
#include "hyparr/qlinalg.hpp"

namespace hyparr {

/// Kernel of a nonzero covector, stored primitive with first nonzero entry positive.
class Hyperplane {
 public:
  explicit Hyperplane(const std::vector<Rat>& covector) {
    const Int den = common_denominator(covector);
    Int g = 0;
    for (const Rat& c : covector) {
      Int v = c.get_num() * (den / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      coords_.push_back(std::move(v));
    }
    if (g == 0) throw DomainError("hyperplane: zero covector");
    int sign = 0;
    for (const Int& v : coords_)
      if (v != 0) {
        sign = sgn(v);
        break;
      }
    for (Int& v : coords_) v = v / g * sign;
  }
  explicit Hyperplane(const std::vector<Int>& covector)
      : Hyperplane(std::vector<Rat>(covector.begin(), covector.end())) {}
  Hyperplane(std::initializer_list<long> covector)
      : Hyperplane(std::vector<Rat>(covector.begin(), covector.end())) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<Int>& covector() const noexcept { return coords_; }
  QVector rational_covector() const { return QVector(coords_.begin(), coords_.end()); }
  Flat flat() const { return Flat::hyperplane(rational_covector()); }
  Poly linear_form(const Ring& ring) const { return hyparr::linear_form(ring, rational_covector()); }

  bool contains(const Flat& x) const { return flat_contains(flat(), x); }

  std::string to_string() const {
    std::string s;
    for (const Int& v : coords_) s += (s.empty() ? "" : " ") + v.get_str();
    return s;
  }

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Int> coords_;
};

class Arrangement {
 public:
  Arrangement(Ring ring, std::vector<Hyperplane> hyperplanes) : ring_(std::move(ring)), hs_(std::move(hyperplanes)) {
    for (std::size_t i = 0; i < hs_.size(); ++i) {
      if (hs_[i].dim() != ring_->nvars()) throw DomainError("arrangement: hyperplane " + std::to_string(i + 1) + " has wrong dimension");
      for (std::size_t j = 0; j < i; ++j)
        if (hs_[i] == hs_[j])
          throw DomainError("arrangement: hyperplanes " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
    }
  }
  explicit Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes)
      : Arrangement(make_ring(dim), std::move(hyperplanes)) {}

  const Ring& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return ring_->nvars(); }
  std::size_t size() const noexcept { return hs_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const noexcept { return hs_; }
  const Hyperplane& operator[](std::size_t i) const { return hs_.at(i); }

  bool contains(const Hyperplane& h) const { return std::find(hs_.begin(), hs_.end(), h) != hs_.end(); }

  std::vector<QVector> covectors() const {
    std::vector<QVector> out;
    for (const Hyperplane& h : hs_) out.push_back(h.rational_covector());
    return out;
  }

 private:
  Ring ring_;
  std::vector<Hyperplane> hs_;
};

/// Q = Π α_H, expanded.
inline Poly defining_polynomial(const Arrangement& a) { return product_of_linears(a.covectors(), a.ring()); }

/// J(Q) = (∂Q/∂z1, ..., ∂Q/∂zℓ).
inline Ideal jacobian_ideal_of(const Poly& q) {
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < q.nvars(); ++i) partials.push_back(partial_derivative(q, i));
  return Ideal(q.ring(), partials);
}

inline Ideal jacobian_ideal(const Arrangement& a) { return jacobian_ideal_of(defining_polynomial(a)); }

/// Rank of the stacked covectors equals ℓ.
inline bool is_essential(const Arrangement& a) {
  if (a.size() == 0) return false;
  return rank(QMatrix::from_rows(a.covectors(), a.dim())) == a.dim();
}

/// Same set of hyperplanes, i.e. Q_a = c·Q_b.
inline bool arrangements_identical(const Arrangement& a, const Arrangement& b) {
  if (a.dim() != b.dim()) throw DomainError("arrangements_identical: dimension mismatch");
  std::vector<Hyperplane> x = a.hyperplanes(), y = b.hyperplanes();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

namespace detail {

inline std::string strip_comment(std::string line) {
  if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
  return line;
}

inline bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

// Reads the `dim ℓ` header; returns ℓ and leaves `lineno` at the header line.
inline std::size_t read_dim_header(std::istream& in, std::size_t& lineno) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string kw, n, extra;
    ls >> kw >> n;
    if (kw != "dim" || n.empty() || (ls >> extra)) throw ParseError("expected 'dim <n>'", lineno);
    if (!std::all_of(n.begin(), n.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("dimension must be a positive integer", lineno);
    const unsigned long d = std::stoul(n);
    if (d < 2 || d > kMaxVars) throw ParseError("dimension must be between 2 and " + std::to_string(kMaxVars), lineno);
    return d;
  }
  throw ParseError("missing 'dim <n>' header");
}

}  // namespace detail

/// Parses the arrangement format: `dim ℓ`, then one covector of ℓ rationals
/// per line; `#` starts a comment.
inline Arrangement parse_arrangement(std::istream& in) {
  std::size_t lineno = 0;
  const std::size_t dim = detail::read_dim_header(in, lineno);
  std::vector<Hyperplane> hs;
  std::vector<std::size_t> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    std::istringstream ls(line);
    std::vector<Rat> cov;
    std::string tok;
    while (ls >> tok) {
      try {
        cov.push_back(parse_rational(tok));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
    }
    if (cov.size() != dim)
      throw ParseError("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(cov.size()), lineno);
    if (std::all_of(cov.begin(), cov.end(), [](const Rat& r) { return r == 0; }))
      throw ParseError("zero covector", lineno);
    Hyperplane h(cov);
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (hs[i] == h)
        throw ParseError("duplicate hyperplane (same as line " + std::to_string(lines[i]) + ")", lineno);
    hs.push_back(std::move(h));
    lines.push_back(lineno);
  }
  return Arrangement(dim, std::move(hs));
}

inline Arrangement parse_arrangement(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_arrangement(in);
}

inline std::string format_arrangement(const Arrangement& a) {
  std::string out = "dim " + std::to_string(a.dim()) + "\n";
  for (const Hyperplane& h : a.hyperplanes()) out += h.to_string() + "\n";
  return out;
}

/// Ideal file: `dim ℓ`, then one polynomial in z1..zℓ per line.
inline Ideal parse_ideal(std::istream& in) {
  std::size_t lineno = 0;
  const std::size_t dim = detail::read_dim_header(in, lineno);
  const Ring ring = make_ring(dim);
  std::vector<Poly> gens;
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    try {
      gens.push_back(parse_poly(line, ring));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return Ideal(ring, gens);
}

inline Ideal parse_ideal(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_ideal(in);
}

inline std::string format_ideal(const Ideal& ideal) {
  std::string out = "dim " + std::to_string(ideal.nvars()) + "\n";
  for (const Poly& g : ideal.generators()) out += to_string(g) + "\n";
  return out;
}

}  // namespace hyparr
