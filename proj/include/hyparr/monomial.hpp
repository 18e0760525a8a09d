#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>

#include "hyparr/errors.hpp"

namespace hyparr {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with cached total degree. Unused trailing slots stay zero,
/// which lets every term order compare full arrays without knowing nvars.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exps) {
    if (exps.size() > kMaxVars) throw DomainError("Monomial: too many variables");
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (i >= kMaxVars) throw DomainError("Monomial: variable index out of range");
    if (e > 0xFFFFu) throw DomainError("Monomial: exponent overflow");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<Exponent>(e);
  }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// True iff no variable occurs in both.
  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exps_[i] && other.exps_[i]) return false;
    return true;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.recount();
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned e = unsigned(a.exps_[i]) + b.exps_[i];
      if (e > 0xFFFFu) throw DomainError("Monomial: exponent overflow");
      m.exps_[i] = static_cast<Exponent>(e);
    }
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  /// Exact quotient; `b` must divide `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (b.exps_[i] > a.exps_[i]) throw DomainError("Monomial: inexact division");
      m.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
    }
    m.degree_ = a.degree_ - b.degree_;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

  /// Storage order: lexicographic on the raw exponent array. Not a term order
  /// in the Gröbner sense; used only to keep term maps canonical.
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept { return a.exps_ < b.exps_; }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Exponent e : exps_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

 private:
  void recount() {
    degree_ = 0;
    for (Exponent e : exps_) degree_ += e;
  }

  std::array<Exponent, kMaxVars> exps_{};
  unsigned degree_ = 0;
};

}  // namespace hyparr

template <>
struct std::hash<hyparr::Monomial> {
  std::size_t operator()(const hyparr::Monomial& m) const noexcept { return m.hash(); }
};
