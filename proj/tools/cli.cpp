#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "iecp/feasibility.hpp"
#include "iecp/fstab.hpp"
#include "iecp/generators.hpp"
#include "iecp/special_graphs.hpp"
#include "iecp/spectral.hpp"
#include "iecp/stable_sets.hpp"
#include "iecp/weight_lp.hpp"

namespace iecp::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string graph;
  std::string cvec;
  std::string weights;
  bool reduced = false;
  bool fast = false;
  bool json = false;
  bool all_witnesses = false;
  bool full = false;
  bool rays = false;
  std::string eps;
  double tol = kDefaultTolerance;
  std::size_t max_iter = kDefaultMaxIterations;
  std::uint64_t seed = 0;
  int enum_bound = kDefaultEnumerationBound;
  std::vector<std::string> scan;
  std::string kind;
  int n = 0;
  std::string out_prefix;
};

Graph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

CentralityTarget load_target(const std::string& path, const Graph& g) {
  CentralityTarget c = parse_centrality(read_text_file(path));
  require_matching(g, c);
  return c;
}

Json rational_or_null(const std::optional<Rational>& r) {
  return r ? Json(to_string(*r)) : Json(nullptr);
}

Json weights_json(const WeightAssignment& w) {
  Json out = Json::object();
  for (const auto& [e, value] : w.weights) out[e.label()] = to_string(value);
  return out;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  CentralityTarget c = load_target(o.cvec, g);
  StructureTag tag = detect_structure(g);

  if (o.fast) {
    if (auto v = closed_form_check(g, c)) {
      if (o.json) {
        emit(out, Json{{"feasible", v->feasible},
                       {"witness_set", nullptr},
                       {"witness_family", nullptr},
                       {"lhs", to_string(v->lhs)},
                       {"rhs", to_string(v->rhs)},
                       {"conditions_checked", 0},
                       {"path", "closed-form"},
                       {"structure", to_string(tag.kind)},
                       {"clause", v->clause},
                       {"relation", v->relation}});
      } else {
        out << "path: closed-form condition for " << v->clause << " graphs\n"
            << "structure: " << to_string(tag.kind) << '\n'
            << (v->feasible ? "feasible" : "infeasible") << ": " << v->relation << " ("
            << to_string(v->lhs) << " vs " << to_string(v->rhs) << ")\n";
      }
      return v->feasible ? kExitOk : kExitNegative;
    }
  }

  if (g.order() > o.enum_bound) {
    // Too many vertices to enumerate stable sets: decide through the LP instead.
    LpResult r = solve_max_min_weight(g, c);
    const bool feasible = r.status == WeightLpStatus::StrictlyFeasible;
    if (o.json) {
      emit(out, Json{{"feasible", feasible},
                     {"witness_set", nullptr},
                     {"witness_family", nullptr},
                     {"lhs", nullptr},
                     {"rhs", nullptr},
                     {"conditions_checked", 0},
                     {"path", "lp"},
                     {"structure", to_string(tag.kind)},
                     {"lp_status", to_string(r.status)}});
    } else {
      out << "path: exact LP (n = " << g.order() << " exceeds enumeration bound " << o.enum_bound
          << ")\nstructure: " << to_string(tag.kind) << '\n'
          << (feasible ? "feasible" : "infeasible") << ": LP status " << to_string(r.status) << '\n';
    }
    return feasible ? kExitOk : kExitNegative;
  }

  FeasibilityOptions fo;
  fo.use_reduced = o.reduced;
  fo.all_witnesses = o.all_witnesses;
  fo.enumeration_bound = o.enum_bound;
  FeasibilityVerdict v = check_feasibility(g, c, fo);
  if (o.json) {
    Json doc{{"feasible", v.feasible},
             {"witness_set", v.witness ? Json(v.witness->record.set.to_string()) : Json(nullptr)},
             {"witness_family", v.witness ? Json(to_string(v.witness->record.family)) : Json(nullptr)},
             {"lhs", rational_or_null(v.witness ? std::optional(v.witness->lhs) : std::nullopt)},
             {"rhs", rational_or_null(v.witness ? std::optional(v.witness->rhs) : std::nullopt)},
             {"conditions_checked", v.conditions_checked},
             {"path", o.reduced ? "reduced" : "general"},
             {"structure", to_string(tag.kind)}};
    if (o.all_witnesses) {
      Json all = Json::array();
      for (const auto& w : v.violations)
        all.push_back({{"set", w.record.set.to_string()},
                       {"neighborhood", w.record.neighborhood.to_string()},
                       {"family", to_string(w.record.family)},
                       {"lhs", to_string(w.lhs)},
                       {"rhs", to_string(w.rhs)}});
      doc["violations"] = std::move(all);
    }
    emit(out, doc);
  } else {
    out << "path: stable-set conditions ("
        << (o.reduced ? "S1 and reduced S2 family" : "all S1 and S2 sets") << ")\n"
        << "structure: " << to_string(tag.kind) << '\n'
        << explain(v);
  }
  return v.feasible ? kExitOk : kExitNegative;
}

int cmd_solve(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  CentralityTarget c = load_target(o.cvec, g);
  LpResult r = solve_max_min_weight(g, c);

  std::optional<Rational> eps;
  std::optional<std::vector<Rational>> certificate;
  if (!o.eps.empty()) {
    eps = parse_rational(o.eps);
    if (*eps < 0) throw ValidationError("--eps must be nonnegative");
    certificate = farkas_certificate(g, c, *eps);
  }

  if (o.json) {
    Json doc{{"status", to_string(r.status)},
             {"epsilon_star", r.status == WeightLpStatus::Infeasible
                                  ? Json(nullptr)
                                  : Json(to_string(r.epsilon_star))},
             {"weights", r.assignment ? weights_json(*r.assignment) : Json(nullptr)}};
    if (r.boundary) doc["boundary_weights"] = weights_json(*r.boundary);
    doc["path"] = "lp";
    if (eps) {
      doc["eps"] = to_string(*eps);
      doc["eps_solvable"] = !certificate.has_value();
      if (certificate) {
        Json cert = Json::array();
        for (const auto& x : *certificate) cert.push_back(to_string(x));
        doc["farkas_certificate"] = std::move(cert);
      }
    }
    emit(out, doc);
  } else {
    out << "# path: exact LP maximizing the minimum edge weight\n"
        << "# status: " << to_string(r.status) << '\n';
    if (r.status != WeightLpStatus::Infeasible)
      out << "# epsilon_star: " << to_string(r.epsilon_star) << '\n';
    if (r.assignment) out << format_weights(*r.assignment);
    if (r.boundary) out << "# nonnegative solution with zero weights:\n" << format_weights(*r.boundary);
    if (r.status == WeightLpStatus::Infeasible) out << "# no nonnegative weights reproduce c\n";
    if (eps) {
      out << "# weights >= " << to_string(*eps) << ": "
          << (certificate ? "impossible" : "possible") << '\n';
      if (certificate) {
        out << "# Farkas certificate:";
        for (const auto& x : *certificate) out << ' ' << to_string(x);
        out << '\n';
      }
    }
  }
  return r.status == WeightLpStatus::StrictlyFeasible ? kExitOk : kExitNegative;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  CentralityTarget c = load_target(o.cvec, g);
  WeightAssignment w = parse_weights(read_text_file(o.weights), g);
  WeightedAdjacency a = build_matrix(g, w);
  std::vector<Rational> residual(g.order());
  for (int i = 0; i < g.order(); ++i) {
    residual[i] = -c[i];
    for (int j : g.neighbors(i)) residual[i] += a(i, j) * c[j];
  }
  SpectralReport rep = spectral_report(g, w, c, o.tol, o.max_iter);

  if (o.json) {
    Json res = Json::array();
    for (const auto& r : residual) res.push_back(to_string(r));
    emit(out, Json{{"pass", rep.pass()},
                   {"exact_residual_zero", rep.exact_residual_zero},
                   {"support_full", rep.support_full},
                   {"irreducible", rep.irreducible},
                   {"residual", std::move(res)},
                   {"rho_estimate", rep.rho_estimate},
                   {"perron_cosine", rep.perron_cosine},
                   {"gap_estimate", rep.gap_estimate},
                   {"power_converged", rep.power_converged},
                   {"power_iterations", rep.power_iterations},
                   {"path", "exact"}});
  } else {
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << "path: exact residual, support and irreducibility; power iteration as confirmation\n"
        << "A c = c exactly: " << yes(rep.exact_residual_zero) << '\n';
    if (!rep.exact_residual_zero) {
      out << "residual A c - c:";
      for (const auto& r : residual) out << ' ' << to_string(r);
      out << '\n';
    }
    out << "all edge weights positive: " << yes(rep.support_full) << '\n'
        << "irreducible: " << yes(rep.irreducible) << '\n';
    if (rep.irreducible) {
      std::ostringstream num;
      num << std::setprecision(15);
      num << "rho estimate: " << rep.rho_estimate << " ("
          << (rep.power_converged ? "converged" : "not converged") << " after "
          << rep.power_iterations << " iterations)\n"
          << "Perron cosine: " << rep.perron_cosine << '\n'
          << "|lambda_2|/rho estimate: " << rep.gap_estimate << '\n';
      out << num.str();
    }
    out << (rep.pass() ? "pass" : "fail") << '\n';
  }
  return rep.pass() ? kExitOk : kExitNegative;
}

int cmd_fstab(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  const int n = g.order();
  if (!o.scan.empty()) {
    CentralityTarget c = load_target(o.scan[0], g);
    Rational eps = parse_rational(o.scan[1]);
    if (eps < 0) throw ValidationError("--scan: eps must be nonnegative");
    FarkasScan s = farkas_scan(g, c, eps, o.full, o.enum_bound);
    std::vector<RayViolation> failures = s.failures;
    if (failures.empty() && s.first_failure) failures.push_back(*s.first_failure);
    if (o.json) {
      Json list = Json::array();
      for (const auto& f : failures)
        list.push_back({{"ray", f.ray.to_string(n)},
                        {"class", to_string(f.cls)},
                        {"product", to_string(f.product)}});
      emit(out, Json{{"pass", s.pass},
                     {"eps", to_string(eps)},
                     {"rays_checked", s.rays_checked},
                     {"failures", std::move(list)}});
    } else {
      out << "path: Farkas scan over extreme rays at eps = " << to_string(eps) << '\n'
          << "rays checked: " << s.rays_checked << '\n';
      for (const auto& f : failures)
        out << "violated ray: " << f.ray.to_string(n) << " (" << to_string(f.cls)
            << "), q^T x = " << to_string(f.product) << " > 0\n";
      out << (s.pass ? "pass: weight system solvable at this eps"
                     : "fail: weight system unsolvable at this eps")
          << '\n';
    }
    return s.pass ? kExitOk : kExitNegative;
  }

  if (o.rays) {
    auto rays = extreme_rays(g, o.enum_bound);
    if (o.json) {
      Json list = Json::array();
      for (const auto& r : rays) list.push_back({{"ray", r.to_string(n)}, {"class", to_string(classify_ray(r))}});
      emit(out, Json{{"rays", std::move(list)}});
    } else {
      for (const auto& r : rays) out << r.to_string(n) << "  " << to_string(classify_ray(r)) << '\n';
    }
    return kExitOk;
  }

  auto vertices = enumerate_fstab_vertices(g, o.enum_bound);
  if (o.json) {
    Json list = Json::array();
    for (const auto& v : vertices) list.push_back(v.to_string(n));
    emit(out, Json{{"vertices", std::move(list)}});
  } else {
    for (const auto& v : vertices) out << v.to_string(n) << '\n';
  }
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  auto records = enumerate_stable_sets(g, o.enum_bound);
  ReducedFamily f = reduce_family(g, records);
  if (o.json) {
    Json list = Json::array();
    for (const auto& r : f.sets)
      list.push_back({{"set", r.set.to_string()},
                      {"neighborhood", r.neighborhood.to_string()},
                      {"family", to_string(r.family)}});
    emit(out, Json{{"sets", std::move(list)}});
  } else {
    for (const auto& r : f.sets) out << r.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  Fixture fx = generate_fixture(o.kind, o.n, o.seed);
  const std::string graph_text = format_graph(fx.graph);
  const std::string cvec_text = format_centrality(fx.target);
  if (!o.out_prefix.empty()) {
    for (const auto& [suffix, text] : {std::pair{".graph", graph_text}, std::pair{".cvec", cvec_text}}) {
      const std::string path = o.out_prefix + suffix;
      std::ofstream file(path, std::ios::binary);
      if (!(file << text)) throw std::runtime_error("cannot write '" + path + "'");
    }
  }
  if (o.json) {
    Json edges = Json::array();
    for (const auto& e : fx.graph.edges()) edges.push_back({e.u + 1, e.v + 1});
    Json c = Json::array();
    for (const auto& v : fx.target.values()) c.push_back(to_string(v));
    emit(out, Json{{"kind", o.kind},
                   {"label", fx.label},
                   {"n", fx.graph.order()},
                   {"seed", o.seed},
                   {"edges", std::move(edges)},
                   {"centrality", std::move(c)}});
  } else {
    out << "# " << o.kind << " n=" << o.n << " seed=" << o.seed << " label=" << fx.label << '\n'
        << "# graph\n"
        << graph_text << "# centrality\n"
        << cvec_text;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverse eigenvector centrality: feasibility, weights and verification"};
  app.name("iecp");
  app.require_subcommand(1);
  Options o;

  auto bound_flag = [&](CLI::App* sub) {
    sub->add_option("--enum-bound", o.enum_bound, "Largest n for stable-set enumeration")
        ->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "Decide realizability from the stable-set conditions");
  check->add_option("graph", o.graph)->required();
  check->add_option("cvec", o.cvec)->required();
  check->add_flag("--reduced", o.reduced, "Check S2 conditions only on the reduced family");
  check->add_flag("--fast", o.fast, "Use closed-form conditions for special structures");
  check->add_flag("--all-witnesses", o.all_witnesses, "Report every violated condition");
  check->add_flag("--json", o.json);
  bound_flag(check);

  auto* solve = app.add_subcommand("solve", "Compute weights maximizing the minimum edge weight");
  solve->add_option("graph", o.graph)->required();
  solve->add_option("cvec", o.cvec)->required();
  solve->add_option("--eps", o.eps, "Also test weights >= eps (p/q) and print a Farkas certificate");
  solve->add_flag("--json", o.json);

  auto* verify = app.add_subcommand("verify", "Verify that weights reproduce c");
  verify->add_option("graph", o.graph)->required();
  verify->add_option("cvec", o.cvec)->required();
  verify->add_option("weights", o.weights)->required();
  verify->add_option("--tol", o.tol, "Power iteration tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--max-iter", o.max_iter, "Power iteration limit")->check(CLI::PositiveNumber);
  verify->add_flag("--json", o.json);

  auto* fstab = app.add_subcommand("fstab", "Fractional stable set polytope vertices and rays");
  fstab->add_option("graph", o.graph)->required();
  fstab->add_flag("--rays", o.rays, "Print extreme rays x = 2y - 1 with their class");
  fstab->add_option("--scan", o.scan, "Farkas scan of CVEC at EPS")->expected(2)->type_name("CVEC EPS");
  fstab->add_flag("--full", o.full, "Keep scanning after the first violated ray");
  fstab->add_flag("--json", o.json);
  bound_flag(fstab);

  auto* reduce = app.add_subcommand("reduce", "Print the reduced S2 family");
  reduce->add_option("graph", o.graph)->required();
  reduce->add_flag("--json", o.json);
  bound_flag(reduce);

  auto* gen = app.add_subcommand("gen", "Generate a graph and a target");
  gen->add_option("kind", o.kind, "complete, bipartite, star, chain or random-connected")->required();
  gen->add_option("n", o.n)->required();
  gen->add_option("--seed", o.seed, "Random seed (0 gives the canonical target)");
  gen->add_option("--out", o.out_prefix, "Also write PREFIX.graph and PREFIX.cvec");
  gen->add_flag("--json", o.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (fstab->parsed()) return cmd_fstab(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    return cmd_gen(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace iecp::cli
