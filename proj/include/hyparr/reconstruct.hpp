#pragma once

// Recovering an arrangement from its Jacobian ideal: a hyperplane K belongs
// to A exactly when the (ℓ−3)-dimensional degree of the slice J + (β_K)
// reaches |A| − 1.

#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "hyparr/hilbert.hpp"
#include "hyparr/ideal_ops.hpp"
#include "hyparr/lattice.hpp"
#include "hyparr/points.hpp"

namespace hyparr {

struct SliceResult {
  Hyperplane hyperplane;
  long slice_degree = 0;
};

struct ReconstructionReport {
  std::size_t inferred_n = 0;
  std::vector<ProjectivePoint> singular_points;  // filled only when candidates were generated
  std::vector<SliceResult> candidates;           // canonical hyperplane order
  Arrangement accepted;
  bool certificate = false;
};

class ReconstructionFailed : public Error {
 public:
  ReconstructionFailed(const std::string& why, ReconstructionReport report)
      : Error("reconstruction failed: " + why), report_(std::move(report)) {}
  const ReconstructionReport& report() const noexcept { return report_; }

 private:
  ReconstructionReport report_;
};

/// n = 1 + the least generator degree; partials of a degree-n form have degree n − 1.
inline std::size_t infer_degree(const Ideal& j) {
  if (j.generators().empty()) throw DomainError("infer_degree: zero ideal");
  unsigned least = ~0u;
  for (const Poly& g : j.generators()) {
    const Homogeneity h = is_homogeneous(g);
    if (!h) throw DomainError("infer_degree: generator " + to_string(g) + " is not homogeneous");
    least = std::min(least, *h.degree);
  }
  return least + 1;
}

/// deg_(ℓ−3) Proj S/(J + (β_K)).
inline long degree_slice(const Ideal& j, const Hyperplane& k, const GbOptions& opts = {}) {
  if (j.nvars() < 3) throw DomainError("degree_slice: needs dimension at least 3");
  if (k.dim() != j.nvars()) throw DomainError("degree_slice: hyperplane has wrong dimension");
  const Int d = deg_m(j.plus(k.linear_form(j.ring())), static_cast<unsigned>(j.nvars() - 3), true, opts);
  return d.get_si();
}

/// Lines through every pair of distinct points of P^2, deduplicated and sorted.
inline std::vector<Hyperplane> candidate_hyperplanes(const std::vector<ProjectivePoint>& points) {
  std::vector<Hyperplane> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const auto& p = points[i].coords();
      const auto& q = points[j].coords();
      if (p.size() != 3 || q.size() != 3) throw DomainError("candidate_hyperplanes: points must lie in P^2");
      const std::vector<Int> cross{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
      if (cross[0] == 0 && cross[1] == 0 && cross[2] == 0) continue;
      Hyperplane h(cross);
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
  std::sort(out.begin(), out.end());
  return out;
}

struct ReconstructOptions {
  GbOptions gb{};
  unsigned jobs = 1;
};

namespace detail {

// Runs fn(i) for i in [0, n) on up to `jobs` threads; rethrows the first
// failure by index so errors do not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
  auto body = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
      });
    for (std::thread& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

/// Recovers A from J = J(Q_A). Without explicit candidates (ℓ = 3 only) the
/// pool is every line through two rational singular points. Accepts K when
/// degree_slice(J, K) = n − 1, then certifies Sat(J) = Sat(J(Q_accepted)).
/// Throws ReconstructionFailed (carrying the report) otherwise.
inline ReconstructionReport reconstruct(const Ideal& j, std::optional<std::vector<Hyperplane>> candidates = std::nullopt,
                                        const ReconstructOptions& opts = {}) {
  if (j.nvars() < 3) throw DomainError("reconstruct: needs dimension at least 3");
  if (!j.is_homogeneous()) throw DomainError("reconstruct: ideal is not homogeneous");
  ReconstructionReport report{infer_degree(j), {}, {}, Arrangement(j.ring(), {}), false};

  std::vector<Hyperplane> pool;
  if (candidates) {
    pool = *candidates;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  } else {
    if (j.nvars() != 3) throw DomainError("reconstruct: candidates must be supplied when the dimension exceeds 3");
    report.singular_points = singular_points_P2(j, opts.gb);
    if (report.singular_points.size() < 2)
      throw ReconstructionFailed("fewer than two singular points", std::move(report));
    pool = candidate_hyperplanes(report.singular_points);
  }

  std::vector<long> degrees(pool.size());
  detail::parallel_for(pool.size(), opts.jobs, [&](std::size_t i) { degrees[i] = degree_slice(j, pool[i], opts.gb); });

  std::vector<Hyperplane> accepted;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    report.candidates.push_back({pool[i], degrees[i]});
    if (degrees[i] == long(report.inferred_n) - 1) accepted.push_back(pool[i]);
  }
  report.accepted = Arrangement(j.ring(), accepted);
  if (accepted.size() != report.inferred_n)
    throw ReconstructionFailed(std::to_string(accepted.size()) + " hyperplanes reach degree " +
                                   std::to_string(report.inferred_n - 1) + ", expected " +
                                   std::to_string(report.inferred_n),
                               std::move(report));
  report.certificate = scheme_equal(j, jacobian_ideal(report.accepted), opts.gb);
  if (!report.certificate)
    throw ReconstructionFailed("Jacobian scheme of the accepted arrangement differs from the input", std::move(report));
  return report;
}

}  // namespace hyparr
