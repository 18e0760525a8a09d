#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "hyparr/groebner.hpp"
#include "hyparr/poly_io.hpp"

namespace hyparr {

/// Ideal given by generators, with a per-order memo of reduced Gröbner bases.
/// Copies share the memo. Zero generators are dropped.
class Ideal {
 public:
  explicit Ideal(Ring ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}
  Ideal(Ring ring, const std::vector<Poly>& gens) : Ideal(std::move(ring)) {
    for (const Poly& g : gens) {
      Poly::check_ring(g, Poly(ring_));
      if (!g.is_zero()) gens_.push_back(g);
    }
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  const std::vector<Poly>& generators() const noexcept { return gens_; }

  bool is_homogeneous() const {
    for (const Poly& g : gens_)
      if (!hyparr::is_homogeneous(g)) return false;
    return true;
  }

  /// Reduced basis under `ord`, computed once per order. Concurrent callers
  /// may both compute; the first stored value wins and both see it.
  const GroebnerBasis& groebner_basis(const TermOrder& ord = TermOrder::degrevlex(),
                                      const GbOptions& opts = {}) const {
    {
      std::lock_guard lock(cache_->mutex);
      auto it = cache_->bases.find(ord);
      if (it != cache_->bases.end()) return *it->second;
    }
    auto gb = std::make_shared<const GroebnerBasis>(buchberger(ring_, gens_, ord, opts));
    std::lock_guard lock(cache_->mutex);
    return *cache_->bases.emplace(ord, std::move(gb)).first->second;
  }

  /// I + (f, ...).
  Ideal plus(const std::vector<Poly>& extra) const {
    std::vector<Poly> g = gens_;
    g.insert(g.end(), extra.begin(), extra.end());
    return Ideal(ring_, g);
  }
  Ideal plus(const Poly& f) const { return plus(std::vector<Poly>{f}); }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<TermOrder, std::shared_ptr<const GroebnerBasis>> bases;
  };

  Ring ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

inline Ideal ideal_of(const Ring& ring, std::initializer_list<const char*> gens) {
  std::vector<Poly> polys;
  for (const char* g : gens) polys.push_back(parse_poly(g, ring));
  return Ideal(ring, polys);
}

}  // namespace hyparr
