#pragma once

#include <cstdint>
#include <string>

#include "hyparr/monomial.hpp"

namespace hyparr {

/// Monomial order. Elimination orders rank any monomial involving an
/// eliminated variable above every monomial free of them: eliminated block
/// first (degrevlex within), then the remaining variables (degrevlex within).
class TermOrder {
 public:
  enum class Kind { degrevlex, lex, elimination };

  static TermOrder degrevlex() { return TermOrder(Kind::degrevlex, 0); }
  static TermOrder lex() { return TermOrder(Kind::lex, 0); }
  /// Eliminates the first `k` variables.
  static TermOrder elimination(unsigned k) {
    if (k == 0 || k >= kMaxVars) throw DomainError("elimination order: bad block size");
    return TermOrder(Kind::elimination, (std::uint32_t{1} << k) - 1);
  }
  /// Eliminates the variables whose bits are set in `mask`.
  static TermOrder eliminating(std::uint32_t mask) {
    if (mask == 0) throw DomainError("elimination order: empty block");
    return TermOrder(Kind::elimination, mask);
  }

  Kind kind() const noexcept { return kind_; }
  std::uint32_t eliminated() const noexcept { return mask_; }
  bool eliminates(std::size_t var) const noexcept { return (mask_ >> var) & 1u; }

  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
      case Kind::lex:
        for (std::size_t i = 0; i < kMaxVars; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::degrevlex:
        return grevlex(a, b, ~std::uint32_t{0});
      case Kind::elimination:
        if (int c = grevlex(a, b, mask_)) return c;
        return grevlex(a, b, ~mask_);
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  std::string name() const {
    switch (kind_) {
      case Kind::lex: return "lex";
      case Kind::degrevlex: return "degrevlex";
      case Kind::elimination: return "elimination(" + std::to_string(mask_) + ")";
    }
    return "?";
  }

  friend bool operator==(const TermOrder& a, const TermOrder& b) noexcept {
    return a.kind_ == b.kind_ && a.mask_ == b.mask_;
  }
  friend bool operator<(const TermOrder& a, const TermOrder& b) noexcept {
    return a.kind_ != b.kind_ ? a.kind_ < b.kind_ : a.mask_ < b.mask_;
  }

 private:
  TermOrder(Kind k, std::uint32_t mask) : kind_(k), mask_(mask) {}

  // degrevlex restricted to the variables selected by `vars`
  static int grevlex(const Monomial& a, const Monomial& b, std::uint32_t vars) noexcept {
    unsigned da = 0, db = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if ((vars >> i) & 1u) {
        da += a[i];
        db += b[i];
      }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = kMaxVars; i-- > 0;)
      if (((vars >> i) & 1u) && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  std::uint32_t mask_;
};

}  // namespace hyparr
