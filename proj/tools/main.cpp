// Command-line front end: phi computation, realizability decisions, batch
// corpus enumeration with a verdict cache, monoid-preserving transforms,
// hike-monoid invariants, walk series, tree witnesses and the T_n family.
//
// Exit codes for `realize` and `tn`: 0 realizable, 1 unrealizable,
// 3 undecided. Resource or parse failures exit 2 everywhere.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cyclemonoid/enumerate.hpp"
#include "cyclemonoid/graph6.hpp"
#include "cyclemonoid/invariants.hpp"
#include "cyclemonoid/isomorphism.hpp"
#include "cyclemonoid/transforms.hpp"
#include "cyclemonoid/verdict_json.hpp"

using namespace cyclemonoid;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

// H inputs are either a graph6 line or an edge-list file; edge lists are
// interpreted as undirected (direction and multiplicity ignored).
SimpleGraph load_simple_graph(const std::string& path, bool as_graph6) {
  if (as_graph6) {
    auto lines = read_lines(path);
    if (lines.empty()) throw std::runtime_error(path + ": no graph6 line");
    return parse_graph6(lines.front());
  }
  MultiDigraph g = parse_edge_list(read_file(path));
  SimpleGraph h(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.adj[i][j] > 0 || g.adj[j][i] > 0) h.add_edge(i, j);
  return h;
}

std::string default_cache_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  const char* env = std::getenv("CYCLEMONOID_CACHE");
  return env ? env : "";
}

int exit_code_for(const RealizabilityVerdict& v) {
  switch (v.kind) {
    case RealizabilityVerdict::Kind::Realizable: return 0;
    case RealizabilityVerdict::Kind::Unrealizable: return 1;
    case RealizabilityVerdict::Kind::Undecided: return 3;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hike dependency graphs: phi computation and realizability"};
  app.require_subcommand(1);

  RealizeBudgets budgets;
  std::int64_t cycle_budget = budgets.cycle_budget;
  std::int64_t solver_budget = budgets.solver_node_budget;
  std::int64_t cover_budget = budgets.cover_budget;
  app.add_option("--cycle-budget", cycle_budget, "max total simple-cycle count");
  app.add_option("--solver-budget", solver_budget, "max solver nodes per cover");
  app.add_option("--cover-budget", cover_budget, "max covers tried per graph");

  // phi
  auto* cmd_phi = app.add_subcommand("phi", "dependency graph of a multidigraph (edge list)");
  std::string phi_input;
  bool phi_labels = false, phi_graph6 = false;
  cmd_phi->add_option("input", phi_input, "edge-list file")->required();
  cmd_phi->add_flag("--labels", phi_labels, "include cycle vertex sets");
  cmd_phi->add_flag("--graph6", phi_graph6, "also print H as graph6");

  // realize
  auto* cmd_realize = app.add_subcommand("realize", "decide realizability of H");
  std::string rz_input;
  bool rz_graph6 = false, rz_min_cover = false;
  std::string rz_witness_out;
  cmd_realize->add_option("input", rz_input, "graph6 line file or edge-list file")->required();
  cmd_realize->add_flag("--graph6", rz_graph6, "input is graph6");
  cmd_realize->add_flag("--min-cover-only", rz_min_cover, "search minimum-size covers only");
  cmd_realize->add_option("--witness-out", rz_witness_out, "write witness edge list here");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "classify a graph6 corpus");
  std::vector<std::string> enum_corpora;
  int enum_threads = 1, enum_n = 0;
  std::string enum_cache;
  bool enum_pretty = false;
  cmd_enum->add_option("corpus", enum_corpora, "graph6 files, one graph per line")->required();
  cmd_enum->add_option("--n", enum_n, "vertex count label for the report");
  cmd_enum->add_option("--threads", enum_threads, "worker threads");
  cmd_enum->add_option("--cache", enum_cache, "verdict cache path (or CYCLEMONOID_CACHE)");
  cmd_enum->add_flag("--pretty", enum_pretty, "human table instead of JSON");

  // gen-corpus
  auto* cmd_gen = app.add_subcommand("gen-corpus", "emit all unlabelled connected graphs on n vertices");
  int gen_n = 0;
  std::string gen_out;
  cmd_gen->add_option("n", gen_n, "vertex count (<= 8)")->required();
  cmd_gen->add_option("--out", gen_out, "output file (default stdout)");

  // transform
  auto* cmd_transform = app.add_subcommand("transform", "monoid-preserving digraph surgery");
  std::string tr_input, tr_op, tr_other;
  int tr_v1 = 0, tr_v2 = 0;
  cmd_transform->add_option("input", tr_input, "edge-list file")->required();
  cmd_transform->add_option("--op", tr_op, "reverse | jump:v | reduce | cubic | glue")->required();
  cmd_transform->add_option("--other", tr_other, "second edge-list file (glue)");
  cmd_transform->add_option("--v1", tr_v1, "glue vertex in the first graph");
  cmd_transform->add_option("--v2", tr_v2, "glue vertex in the second graph");

  // invariants
  auto* cmd_inv = app.add_subcommand("invariants", "hike-monoid invariants of a multidigraph");
  std::string inv_input;
  int inv_order = 8, inv_vertex = 0;
  cmd_inv->add_option("input", inv_input, "edge-list file")->required();
  cmd_inv->add_option("--order", inv_order, "series truncation order");
  cmd_inv->add_option("--vertex", inv_vertex, "root vertex for the walk resolvent");

  // walk-gf
  auto* cmd_walk = app.add_subcommand("walk-gf", "loop-erased walk series between two vertices");
  std::string walk_input;
  int walk_from = 0, walk_to = 0, walk_len = 12, walk_order = 6;
  cmd_walk->add_option("input", walk_input, "edge-list file")->required();
  cmd_walk->add_option("--from", walk_from, "start vertex");
  cmd_walk->add_option("--to", walk_to, "end vertex");
  cmd_walk->add_option("--max-len", walk_len, "walk length cutoff");
  cmd_walk->add_option("--order", walk_order, "series truncation order");

  // tree
  auto* cmd_tree = app.add_subcommand("tree", "direct witness for a tree");
  std::string tree_input;
  bool tree_graph6 = false;
  cmd_tree->add_option("input", tree_input, "graph6 line file or edge-list file")->required();
  cmd_tree->add_flag("--graph6", tree_graph6, "input is graph6");

  // tn
  auto* cmd_tn = app.add_subcommand("tn", "realizability of the T_n trace monoid");
  int tn_n = 0;
  cmd_tn->add_option("n", tn_n, "number of extra generators")->required();

  CLI11_PARSE(app, argc, argv);

  budgets.cycle_budget = cycle_budget;
  budgets.solver_node_budget = solver_budget;
  budgets.cover_budget = cover_budget;

  try {
    if (*cmd_phi) {
      MultiDigraph g = parse_edge_list(read_file(phi_input));
      CycleOptions opts;
      opts.budget = budgets.cycle_budget;
      CycleCatalog catalog;
      try {
        catalog = build_cycle_catalog(g, opts);
      } catch (const CycleBudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return 2;
      }
      PhiResult p = phi_from_catalog(catalog);
      Json out = phi_to_json(p, phi_labels);
      out["catalog"] = catalog_to_json(catalog);
      if (phi_graph6) {
        if (p.h.vertex_count() > 62) {
          std::cerr << "H too large for graph6 short form\n";
          return 2;
        }
        out["graph6"] = to_graph6(p.h);
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_realize) {
      SimpleGraph h = load_simple_graph(rz_input, rz_graph6);
      budgets.min_cover_only = rz_min_cover;
      RealizabilityVerdict v = realize_components(h, budgets);
      std::string g6 = h.vertex_count() <= 62 ? to_graph6(h) : "";
      std::string canonical = h.vertex_count() <= 12 ? canonical_form(h) : "";
      std::cout << verdict_to_json(g6, canonical, v).dump(2) << "\n";
      if (v.kind == RealizabilityVerdict::Kind::Realizable && !rz_witness_out.empty()) {
        std::ofstream out(rz_witness_out);
        out << format_edge_list(v.witness);
      }
      return exit_code_for(v);
    }

    if (*cmd_enum) {
      std::vector<std::string> lines;
      for (const std::string& path : enum_corpora) {
        auto file_lines = read_lines(path);
        lines.insert(lines.end(), file_lines.begin(), file_lines.end());
      }
      EnumerateOptions opts;
      opts.budgets = budgets;
      opts.threads = enum_threads;
      opts.cache_path = default_cache_path(enum_cache);
      EnumerationReport report = enumerate_corpus(lines, enum_n, opts);
      if (enum_pretty) std::cout << report_table({report});
      else std::cout << report_json(report).dump(2) << "\n";
      return report.undecided == 0 ? 0 : 3;
    }

    if (*cmd_gen) {
      if (gen_n < 1 || gen_n > 8) {
        std::cerr << "gen-corpus: n must be between 1 and 8\n";
        return 2;
      }
      std::ostringstream buf;
      for (const SimpleGraph& h : generate_connected_graphs(gen_n)) buf << to_graph6(h) << "\n";
      if (gen_out.empty()) {
        std::cout << buf.str();
      } else {
        std::ofstream out(gen_out);
        out << buf.str();
      }
      return 0;
    }

    if (*cmd_transform) {
      MultiDigraph g = parse_edge_list(read_file(tr_input));
      MultiDigraph result;
      if (tr_op == "reverse") {
        result = reverse_all(g);
      } else if (tr_op.rfind("jump:", 0) == 0) {
        result = jump(g, std::stoi(tr_op.substr(5)));
      } else if (tr_op == "reduce") {
        result = reduce(g).first;
      } else if (tr_op == "cubic") {
        result = to_cubic(g);
      } else if (tr_op == "glue") {
        if (tr_other.empty()) throw std::runtime_error("glue needs --other");
        result = glue(g, tr_v1, parse_edge_list(read_file(tr_other)), tr_v2);
      } else {
        throw std::runtime_error("unknown --op " + tr_op);
      }
      std::cout << format_edge_list(result);
      return 0;
    }

    if (*cmd_inv) {
      MultiDigraph g = parse_edge_list(read_file(inv_input));
      Json out;
      out["det"] = det_I_minus_A(g).str();
      out["perm"] = perm_I_plus_A(g).str();
      CycleCatalog catalog = build_cycle_catalog(g, CycleOptions{budgets.cycle_budget, false});
      IntPolynomial sa = sa_hike_polynomial_from_catalog(catalog);
      Json sa_json = Json::array();
      for (const BigInt& c : sa.coeffs) sa_json.push_back(c.str());
      out["sa_poly"] = sa_json;
      if (catalog.total() <= 64) {
        TruncatedSeries gf = hike_gf_by_omega(phi_from_catalog(catalog).h, inv_order);
        Json gf_json = Json::array();
        for (const BigInt& c : gf.coeffs) gf_json.push_back(c.str());
        out["hike_gf"] = gf_json;
      }
      RationalSeries r = walk_resolvent_gf(g, inv_vertex, inv_order);
      Json walk;
      Json num = Json::array(), den = Json::array(), series = Json::array();
      for (const BigInt& c : r.num.coeffs) num.push_back(c.str());
      for (const BigInt& c : r.den.coeffs) den.push_back(c.str());
      for (const BigInt& c : r.series.coeffs) series.push_back(c.str());
      walk["num"] = num;
      walk["den"] = den;
      walk["series"] = series;
      out["walk_gf_vertex_" + std::to_string(inv_vertex)] = walk;
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_walk) {
      MultiDigraph g = parse_edge_list(read_file(walk_input));
      LoopErasedSeries s = loop_erased_omega_gf(g, walk_from, walk_to, walk_len, walk_order);
      Json out;
      Json coeffs = Json::array();
      for (const BigInt& c : s.series.coeffs) coeffs.push_back(c.str());
      out["series"] = coeffs;
      out["max_len"] = s.max_len;
      out["complete_through"] = s.length_complete_through;
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_tree) {
      SimpleGraph t = load_simple_graph(tree_input, tree_graph6);
      MultiDigraph g = realize_tree(t);
      PhiResult p = phi(g);
      if (!are_isomorphic(p.h, t, std::max(12, t.vertex_count())))
        throw std::logic_error("tree witness failed phi verification");
      std::cout << format_edge_list(g);
      return 0;
    }

    if (*cmd_tn) {
      RealizabilityVerdict v = trace_monoid_family_check(tn_n, budgets);
      SimpleGraph h = trace_monoid_family_graph(tn_n);
      std::string g6 = h.vertex_count() <= 62 ? to_graph6(h) : "";
      std::cout << verdict_to_json(g6, "", v).dump(2) << "\n";
      return exit_code_for(v);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
