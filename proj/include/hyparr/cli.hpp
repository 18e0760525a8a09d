#pragma once

// Command-line front end. `run_cli` is the whole program minus process
// plumbing, so tests can drive it with string arguments and streams.
//
// Exit codes: 0 success, 1 other error, 2 parse/input error, 3 degree guard,
// 4 reconstruction failed, 5 property failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyparr/json_io.hpp"
#include "hyparr/verify.hpp"

namespace hyparr::cli {

enum ExitCode : int { kOk = 0, kError = 1, kParse = 2, kResource = 3, kReconstruction = 4, kProperty = 5 };

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string order = "degrevlex";
  unsigned degree_guard = 40;
  bool json = false;
  std::string hyperplane;
  std::string candidates_path;
  bool from_arrangement = false;
  std::string suite = "all";
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline TermOrder order_from_name(const std::string& name) {
  return name == "lex" ? TermOrder::lex() : TermOrder::degrevlex();
}

inline Hyperplane parse_covector(const std::string& text, std::size_t dim) {
  std::istringstream ls(text);
  std::vector<Rat> c;
  for (std::string tok; ls >> tok;) c.push_back(parse_rational(tok));
  if (c.size() != dim)
    throw ParseError("--hyperplane needs " + std::to_string(dim) + " coordinates, got " + std::to_string(c.size()));
  if (std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; })) throw ParseError("--hyperplane is zero");
  return Hyperplane(c);
}

inline std::string points_text(const std::vector<ProjectivePoint>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + p.to_string();
  return s;
}

inline int cmd_jacobian(const RunConfig& cfg, std::ostream& out, std::ostream& err, const GbOptions& gb) {
  const Arrangement a = parse_arrangement(read_file(cfg.input_path));
  const TermOrder ord = order_from_name(cfg.order);
  const Poly q = defining_polynomial(a);
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < a.dim(); ++i) partials.push_back(partial_derivative(q, i));
  const Ideal j(a.ring(), partials);
  const GroebnerBasis& basis = j.groebner_basis(ord, gb);
  const bool unit = basis.is_unit();
  if (unit) err << "warning: the Jacobian ideal is the unit ideal (empty singular scheme)\n";
  if (cfg.json) {
    Json gens = Json::array(), gbj = Json::array();
    for (const Poly& p : partials) gens.push_back(to_string(p, ord));
    for (const Poly& p : basis.elements()) gbj.push_back(to_string(p, ord));
    out << Json{{"Q", to_string(q, ord)}, {"generators", gens}, {"groebner_basis", gbj}, {"order", ord.name()},
                {"unit_ideal", unit}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "Q = " << to_string(q, ord) << "\n";
  for (std::size_t i = 0; i < partials.size(); ++i)
    out << "dQ/d" << a.ring()->name(i) << " = " << to_string(partials[i], ord) << "\n";
  out << "reduced Groebner basis (" << ord.name() << "):\n";
  for (const Poly& p : basis.elements()) out << "  " << to_string(p, ord) << "\n";
  return kOk;
}

inline int cmd_lattice(const RunConfig& cfg, std::ostream& out) {
  const Arrangement a = parse_arrangement(read_file(cfg.input_path));
  const Lattice lattice = intersection_lattice(a);
  if (cfg.json) {
    out << to_json(lattice).dump(2) << "\n";
    return kOk;
  }
  for (std::size_t k = 0; k <= a.dim(); ++k) {
    const auto flats = lattice.rank(k);
    if (flats.empty()) continue;
    out << "codim " << k << ": " << flats.size() << " flat" << (flats.size() == 1 ? "" : "s") << "\n";
    for (const LatticeFlat* f : flats) {
      std::string ideal;
      for (std::size_t i = 0; i < f->codim(); ++i)
        ideal += (i ? ", " : "") + to_string(linear_form(a.ring(), f->flat.normals().row(i)));
      std::string members;
      for (std::size_t m : f->members) members += (members.empty() ? "" : ",") + std::to_string(m + 1);
      out << "  (" << ideal << ")  A_X={" << members << "}  mu=" << f->mu << "\n";
    }
  }
  return kOk;
}

inline int cmd_slice(const RunConfig& cfg, std::ostream& out, const GbOptions& gb) {
  if (cfg.hyperplane.empty()) throw ParseError("slice needs --hyperplane");
  const Arrangement a = parse_arrangement(read_file(cfg.input_path));
  const Hyperplane k = parse_covector(cfg.hyperplane, a.dim());
  const long combinatorial = mu_K(a, k);
  const long scheme = degree_slice(jacobian_ideal(a), k, gb);
  const bool agree = combinatorial == scheme;
  if (cfg.json)
    out << Json{{"hyperplane", int_vector_to_json(k.covector())},
                {"in_arrangement", a.contains(k)},
                {"mu_K", combinatorial},
                {"degree_slice", scheme},
                {"agree", agree}}
               .dump(2)
        << "\n";
  else
    out << "K = (" << k.to_string() << ")" << (a.contains(k) ? " in A" : " not in A") << "\n"
        << "mu_K = " << combinatorial << "\n"
        << "degree_slice = " << scheme << "\n"
        << (agree ? "agree" : "DISAGREE") << "\n";
  return agree ? kOk : kProperty;
}

inline void print_report(const ReconstructionReport& r, bool json, std::ostream& out) {
  if (json) {
    out << to_json(r).dump(2) << "\n";
    return;
  }
  out << "inferred n = " << r.inferred_n << "\n";
  if (!r.singular_points.empty()) out << "singular points: " << points_text(r.singular_points) << "\n";
  out << "candidates:\n";
  for (const SliceResult& c : r.candidates)
    out << "  (" << c.hyperplane.to_string() << ")  slice degree " << c.slice_degree
        << (c.slice_degree == long(r.inferred_n) - 1 ? "  accepted" : "") << "\n";
  out << "accepted arrangement:\n" << format_arrangement(r.accepted);
  out << "certificate: " << (r.certificate ? "true" : "false") << "\n";
}

inline int cmd_reconstruct(const RunConfig& cfg, std::ostream& out, std::ostream& err, const ReconstructOptions& ro) {
  const std::string text = read_file(cfg.input_path);
  const Ideal j = cfg.from_arrangement ? jacobian_ideal(parse_arrangement(text)) : parse_ideal(text);
  std::optional<std::vector<Hyperplane>> candidates;
  if (!cfg.candidates_path.empty()) {
    const Arrangement pool = parse_arrangement(read_file(cfg.candidates_path));
    if (pool.dim() != j.nvars()) throw ParseError("candidate file dimension does not match the ideal");
    candidates = pool.hyperplanes();
  }
  try {
    print_report(reconstruct(j, candidates, ro), cfg.json, out);
    return kOk;
  } catch (const ReconstructionFailed& e) {
    print_report(e.report(), cfg.json, out);
    err << "error: " << e.what() << "\n";
    return kReconstruction;
  }
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, const ReconstructOptions& ro) {
  std::vector<std::string> suites;
  if (cfg.suite == "all")
    suites = verify::suite_names();
  else
    suites.push_back(cfg.suite);
  bool all_ok = true;
  Json reports = Json::array();
  if (!cfg.json) out << "seed " << cfg.seed << "\n";
  for (const std::string& s : suites) {
    const verify::SuiteReport rep = verify::run(s, cfg.seed, ro);
    all_ok = all_ok && rep.passed();
    if (cfg.json) {
      Json checks = Json::array();
      for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      reports.push_back({{"suite", s}, {"seed", cfg.seed}, {"passed", rep.passed()}, {"checks", checks}});
      continue;
    }
    for (const auto& c : rep.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << s << ": " << c.name << "\n";
      if (!c.passed && !c.detail.empty()) out << "     counterexample: " << c.detail << "\n";
    }
  }
  if (cfg.json) out << reports.dump(2) << "\n";
  return all_ok ? kOk : kProperty;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"hyparr: Jacobian ideals and reconstruction of hyperplane arrangements", "hyparr"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--order", cfg.order, "Term order for printed polynomials and bases")
      ->check(CLI::IsMember({"degrevlex", "lex"}));
  app.add_option("--degree-guard", cfg.degree_guard, "Maximum total degree allowed in Groebner computations")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "Emit JSON instead of text");
  app.add_option("--seed", cfg.seed, "Seed for randomized suites");
  app.add_option("--jobs", cfg.jobs, "Parallel candidate tests")->check(CLI::PositiveNumber);

  auto* jac = app.add_subcommand("jacobian", "Print Q, its partial derivatives and a reduced Groebner basis of J(Q)");
  jac->add_option("input", cfg.input_path, "Arrangement file")->required();
  auto* lat = app.add_subcommand("lattice", "Print the intersection lattice with A_X and mu(X)");
  lat->add_option("input", cfg.input_path, "Arrangement file")->required();
  auto* sl = app.add_subcommand("slice", "Compare mu_A(K) with the degree of the K-slice of the Jacobian scheme");
  sl->add_option("input", cfg.input_path, "Arrangement file")->required();
  sl->add_option("--hyperplane", cfg.hyperplane, "Covector of K, e.g. \"1 0 -1\"")->required();
  auto* rec = app.add_subcommand("reconstruct", "Recover an arrangement from its Jacobian ideal");
  rec->add_option("input", cfg.input_path, "Ideal file (or arrangement file with --from-arrangement)")->required();
  rec->add_flag("--from-arrangement", cfg.from_arrangement, "Input is an arrangement; build J(Q) first");
  rec->add_option("--candidates", cfg.candidates_path, "Arrangement-format file of candidate hyperplanes");
  auto* ver = app.add_subcommand("verify", "Run the self-verification suites");
  ver->add_option("--suite", cfg.suite, "Suite to run")
      ->check(CLI::IsMember({"lem2dim", "degree", "mull", "radical", "roundtrip", "all"}));
  for (CLI::App* sub : {jac, lat, sl, rec, ver}) sub->fallthrough();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  ReconstructOptions ro;
  ro.gb.degree_guard = cfg.degree_guard;
  ro.jobs = cfg.jobs;
  const unsigned previous_guard = default_degree_guard();
  set_default_degree_guard(cfg.degree_guard);
  struct RestoreGuard {
    unsigned value;
    ~RestoreGuard() { set_default_degree_guard(value); }
  } restore{previous_guard};

  try {
    if (cfg.command == "jacobian") return detail::cmd_jacobian(cfg, out, err, ro.gb);
    if (cfg.command == "lattice") return detail::cmd_lattice(cfg, out);
    if (cfg.command == "slice") return detail::cmd_slice(cfg, out, ro.gb);
    if (cfg.command == "reconstruct") return detail::cmd_reconstruct(cfg, out, err, ro);
    return detail::cmd_verify(cfg, out, ro);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const ReconstructionFailed& e) {
    err << "error: " << e.what() << "\n";
    return kReconstruction;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace hyparr::cli
