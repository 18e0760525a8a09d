#pragma once

// JSON forms of arrangements, lattices and reconstruction reports.
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are always strings ("p" or "p/q").

#include <json.hpp>

#include <limits>

#include "hyparr/lattice.hpp"
#include "hyparr/reconstruct.hpp"

namespace hyparr {

using Json = nlohmann::json;

inline Json int_to_json(const Int& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

inline Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) {
    const Rat r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1) throw ParseError("expected an integer, got " + j.get<std::string>());
    return r.get_num();
  }
  throw ParseError("expected an integer in JSON");
}

inline Json int_vector_to_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& z : v) a.push_back(int_to_json(z));
  return a;
}

inline std::vector<Int> int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<Int> out;
  for (const Json& x : j) out.push_back(int_from_json(x));
  return out;
}

inline Json to_json(const Arrangement& a) {
  Json hs = Json::array();
  for (const Hyperplane& h : a.hyperplanes()) hs.push_back(int_vector_to_json(h.covector()));
  return Json{{"dim", a.dim()}, {"hyperplanes", hs}};
}

inline Arrangement arrangement_from_json(const Json& j) {
  try {
    const std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<Hyperplane> hs;
    for (const Json& h : j.at("hyperplanes")) {
      auto cov = int_vector_from_json(h);
      if (cov.size() != dim) throw ParseError("hyperplane has wrong dimension");
      hs.emplace_back(cov);
    }
    return Arrangement(dim, std::move(hs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("arrangement JSON: ") + e.what());
  }
}

inline Json to_json(const Lattice& lattice) {
  Json flats = Json::array();
  for (const LatticeFlat& f : lattice.flats()) {
    Json normals = Json::array();
    for (std::size_t i = 0; i < f.flat.codim(); ++i) {
      Json row = Json::array();
      for (const Rat& x : f.flat.normals().row(i)) row.push_back(x.get_str());
      normals.push_back(row);
    }
    flats.push_back({{"codim", f.codim()}, {"normals", normals}, {"members", f.members}, {"mu", f.mu}});
  }
  return Json{{"dim", lattice.dim()}, {"flats", flats}};
}

inline Json to_json(const ReconstructionReport& r) {
  Json pts = Json::array();
  for (const ProjectivePoint& p : r.singular_points) pts.push_back(int_vector_to_json(p.coords()));
  Json cands = Json::array();
  for (const SliceResult& c : r.candidates)
    cands.push_back({{"hyperplane", int_vector_to_json(c.hyperplane.covector())}, {"slice_degree", c.slice_degree}});
  return Json{{"inferred_n", r.inferred_n},
              {"singular_points", pts},
              {"candidates", cands},
              {"accepted", to_json(r.accepted)},
              {"certificate", r.certificate}};
}

inline ReconstructionReport report_from_json(const Json& j) {
  try {
    ReconstructionReport r{j.at("inferred_n").get<std::size_t>(), {}, {}, arrangement_from_json(j.at("accepted")),
                           j.at("certificate").get<bool>()};
    for (const Json& p : j.at("singular_points")) {
      auto c = int_vector_from_json(p);
      r.singular_points.emplace_back(std::vector<Rat>(c.begin(), c.end()));
    }
    for (const Json& c : j.at("candidates"))
      r.candidates.push_back({Hyperplane(int_vector_from_json(c.at("hyperplane"))), c.at("slice_degree").get<long>()});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

inline bool operator==(const SliceResult& a, const SliceResult& b) {
  return a.hyperplane == b.hyperplane && a.slice_degree == b.slice_degree;
}

inline bool operator==(const ReconstructionReport& a, const ReconstructionReport& b) {
  return a.inferred_n == b.inferred_n && a.singular_points == b.singular_points && a.candidates == b.candidates &&
         a.accepted.dim() == b.accepted.dim() && a.accepted.hyperplanes() == b.accepted.hyperplanes() &&
         a.certificate == b.certificate;
}

}  // namespace hyparr
