/*
  Command-line dispatch. Every subcommand reads exact inputs, runs one
  pipeline, and prints either the plain text rendering or a single-line
  JSON document. The kac/cells work queue honors --threads, with the
  TORUS_KAC_THREADS environment variable filling in when the flag is
  absent.
*/
#include "kac/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "kac/errors.hpp"
#include "kac/graph.hpp"
#include "kac/kacsum.hpp"
#include "kac/orbits.hpp"
#include "kac/quiver.hpp"
#include "kac/symfunc.hpp"

namespace kac::cli {

namespace {

using nlohmann::json;

json int_json(const Int& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json poly_json(const IntPoly& f) {
  json a = json::array();
  for (const Int& c : f.coeffs()) a.push_back(int_json(c));
  return a;
}

json mu_json(const MultiPartition& mu) {
  json legs = json::array();
  for (const Partition& leg : mu.legs) legs.push_back(leg.parts());
  return legs;
}

json cell_json(const CellReport& cell) {
  json w = json::array();
  for (const Permutation& p : cell.tuple.perms) w.push_back(p.str());
  return json{{"w", w}, {"inv", cell.inversion_count}, {"rw", poly_json(cell.rw)}};
}

json graph_json(const ColoredMultigraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges) edges.push_back({e.u, e.v, e.color});
  return json{{"vertices", g.vertices}, {"edges", edges}};
}

ColoredMultigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("graph file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw InvalidInput("graph JSON needs \"vertices\" and \"edges\"");
  std::vector<Edge> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      throw InvalidInput("each edge is [u, v] or [u, v, color]");
    edges.push_back(Edge{e.at(0).get<int>(), e.at(1).get<int>(),
                         e.size() == 3 ? e.at(2).get<int>() : 0});
  }
  return make_graph(j.at("vertices").get<int>(), std::move(edges));
}

int total_inversions(const PermTuple& wt) {
  int total = 0;
  for (const Permutation& w : wt.perms)
    total += static_cast<int>(inversions(w).size());
  return total;
}

std::string genfun_key_str(const std::vector<Partition>& key) {
  std::string out;
  for (size_t t = 0; t < key.size(); ++t) {
    if (t > 0) out += '*';
    out += "m[";
    const std::vector<int>& parts = key[t].parts();
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(parts[i]);
    }
    out += ']';
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

struct Options {
  std::string format = "text";
  int threads = 1;
  long long budget = 0;
  bool budget_set = false;
  bool all_cells = false;

  bool json_mode() const { return format == "json"; }
  KacOptions kac_options() const {
    KacOptions opts;
    opts.threads = threads;
    opts.all_cells = all_cells;
    if (budget_set) opts.cell_budget = budget;
    return opts;
  }
};

int run_kac(const std::string& input, const Options& opt, bool cells_listing) {
  MultiPartition mu = parse_input(input);
  KacReport report = kac_polynomial(mu, opt.kac_options());
  if (opt.json_mode()) {
    json cells = json::array();
    for (const CellReport& c : report.cells) cells.push_back(cell_json(c));
    emit(json{{"r", mu.r},
              {"mu", mu_json(mu)},
              {"kac", poly_json(report.kac)},
              {"warning_outside_M", report.warning_outside_M},
              {"cells", cells}});
    return 0;
  }
  if (report.warning_outside_M) std::cerr << "warning: v_mu lies outside M\n";
  if (cells_listing) {
    for (const CellReport& c : report.cells)
      std::cout << perm_tuple_str(c.tuple) << " inv=" << c.inversion_count
                << " rw=" << c.rw.str() << "\n";
  } else {
    std::cout << report.kac.str() << "\n";
  }
  return 0;
}

int run_genfun(int r, int k, const Options& opt) {
  USeries series = genfun_series(r, k);
  if (opt.json_mode()) {
    json blocks = json::array();
    for (int s = 1; s <= r; ++s) {
      json terms = json::array();
      for (const auto& [key, c] : series.at(s).terms()) {
        json parts = json::array();
        for (const Partition& lam : key) parts.push_back(lam.parts());
        terms.push_back(json{{"m", parts}, {"coeff", poly_json(c.as_polynomial())}});
      }
      blocks.push_back(json{{"s", s}, {"terms", terms}});
    }
    emit(json{{"r", r}, {"k", k}, {"series", blocks}});
    return 0;
  }
  for (int s = 1; s <= r; ++s)
    for (const auto& [key, c] : series.at(s).terms())
      std::cout << genfun_key_str(key) << ": " << c.as_polynomial().str() << "\n";
  return 0;
}

int run_rw(const std::string& wstr, const std::string& graph_path,
           const Options& opt) {
  if (wstr.empty() == graph_path.empty())
    throw InvalidInput("pass exactly one of --w and --graph");
  if (!wstr.empty()) {
    PermTuple wt = parse_perm_tuple(wstr);
    IntPoly rw = rw_polynomial(wt);
    if (opt.json_mode()) {
      json w = json::array();
      for (const Permutation& p : wt.perms) w.push_back(p.str());
      emit(json{{"w", w}, {"inv", total_inversions(wt)}, {"rw", poly_json(rw)}});
    } else {
      std::cout << rw.str() << "\n";
    }
    return 0;
  }
  ColoredMultigraph g = load_graph(graph_path);
  IntPoly rw = is_connected(g) ? external_activity_tutte(g) : IntPoly();
  if (opt.json_mode()) {
    json j = graph_json(g);
    j["rw"] = poly_json(rw);
    emit(j);
  } else {
    std::cout << rw.str() << "\n";
  }
  return 0;
}

int run_tutte(const std::string& wstr, const std::string& graph_path,
              bool subset_mode, const Options& opt) {
  if (wstr.empty() == graph_path.empty())
    throw InvalidInput("pass exactly one of --w and --graph");
  ColoredMultigraph g = wstr.empty() ? load_graph(graph_path)
                                     : inversion_graph(parse_perm_tuple(wstr));
  BiPoly t = tutte(g, subset_mode ? TutteMode::SubsetExpansion
                                  : TutteMode::DeletionContraction);
  if (opt.json_mode()) {
    json terms = json::array();
    for (const auto& [deg, c] : t.terms())
      terms.push_back({deg.first, deg.second, int_json(c)});
    json j = graph_json(g);
    j["tutte"] = terms;
    emit(j);
  } else {
    std::cout << t.str() << "\n";
  }
  return 0;
}

int run_gm(int r, const Options& opt) {
  IntPoly g = gm_orbit_count(r);
  if (opt.json_mode())
    emit(json{{"r", r}, {"gm", poly_json(g)}});
  else
    std::cout << g.str() << "\n";
  return 0;
}

int run_oracle_rw(const std::string& wstr, int p, const Options& opt) {
  PermTuple wt = parse_perm_tuple(wstr);
  long long count = opt.budget_set ? oracle_cell_count(wt, p, opt.budget)
                                   : oracle_cell_count(wt, p);
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p - 1),
                static_cast<unsigned long>(wt.perms[0].size() - 1));
  Int predicted = scale * poly_eval(rw_polynomial(wt), p);
  bool match = predicted == static_cast<long>(count);
  if (opt.json_mode()) {
    json w = json::array();
    for (const Permutation& perm : wt.perms) w.push_back(perm.str());
    emit(json{{"w", w},
              {"p", p},
              {"count", count},
              {"predicted", int_json(predicted)},
              {"match", match}});
  } else {
    std::cout << "count=" << count << " predicted=" << predicted.get_str()
              << " match=" << (match ? "yes" : "no") << "\n";
  }
  return match ? 0 : 1;
}

int run_oracle_flags(const std::string& input, int p, const Options& opt) {
  MultiPartition mu = parse_input(input);
  FlagOrbitReport report = opt.budget_set
                               ? oracle_flag_orbits(mu, p, opt.budget)
                               : oracle_flag_orbits(mu, p);
  Int predicted = poly_eval(kac_polynomial(mu).kac, p);
  bool match = predicted == static_cast<long>(report.orbit_count);
  if (opt.json_mode()) {
    json strata = json::array();
    for (const auto& [stab, n] : report.strata) strata.push_back({stab, n});
    emit(json{{"r", mu.r},
              {"mu", mu_json(mu)},
              {"p", p},
              {"orbits", report.orbit_count},
              {"predicted", int_json(predicted)},
              {"match", match},
              {"points", report.point_count},
              {"strata", strata}});
  } else {
    std::cout << "orbits=" << report.orbit_count
              << " predicted=" << predicted.get_str()
              << " match=" << (match ? "yes" : "no") << "\n";
    std::cout << "points=" << report.point_count << "\n";
    for (const auto& [stab, n] : report.strata)
      std::cout << "strata " << stab << ": " << n << "\n";
  }
  return match ? 0 : 1;
}

int run_classify(const std::string& input, const Options& opt) {
  MultiPartition mu = parse_input(input);
  auto [qv, v] = build_supernova(mu);
  RootClass rc = classify_root(qv, v);
  long long d = delta(qv, v);
  if (opt.json_mode()) {
    emit(json{{"tag", root_tag_name(rc.tag)},
              {"delta", d},
              {"witness", rc.witness}});
  } else {
    std::cout << "tag=" << root_tag_name(rc.tag) << " delta=" << d << "\n";
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args) {
  CLI::App app{"Kac polynomials of supernova quivers: cell sums, generating "
               "functions, and finite-field oracles", "kacpoly"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", opt.threads, "worker threads for the cell sum")
      ->check(CLI::PositiveNumber)
      ->envname("TORUS_KAC_THREADS");
  CLI::Option* budget_opt =
      app.add_option("--budget", opt.budget, "enumeration budget override");
  app.add_flag("--all-cells", opt.all_cells,
               "report disconnected cells as well");

  std::string input, wstr, graph_path;
  int r = 0, k = 1, p = 0;
  bool subset_mode = false;

  CLI::App* kac_cmd = app.add_subcommand("kac", "Kac polynomial by cell sum");
  kac_cmd->add_option("--input", input, "\"r=5; mu=2\" with legs '|'-separated")
      ->required();

  CLI::App* cells_cmd =
      app.add_subcommand("cells", "per-cell inversion graph reports");
  cells_cmd->add_option("--input", input)->required();

  CLI::App* genfun_cmd =
      app.add_subcommand("genfun", "generating-function series coefficients");
  genfun_cmd->add_option("--r", r, "series order")->required();
  genfun_cmd->add_option("--k", k, "number of alphabets");

  CLI::App* rw_cmd =
      app.add_subcommand("rw", "external activity polynomial of one cell");
  rw_cmd->add_option("--w", wstr, "permutation tuple like 34512 or 123|312");
  rw_cmd->add_option("--graph", graph_path, "graph JSON file");

  CLI::App* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial");
  tutte_cmd->add_option("--w", wstr, "permutation tuple for its inversion graph");
  tutte_cmd->add_option("--graph", graph_path, "graph JSON file");
  tutte_cmd->add_flag("--subset", subset_mode, "use the subset expansion");

  CLI::App* gm_cmd =
      app.add_subcommand("gm", "generic point-configuration orbit count");
  gm_cmd->add_option("--r", r, "number of points")->required();

  CLI::App* orw_cmd = app.add_subcommand(
      "oracle-rw", "finite-field cell count against the predicted value");
  orw_cmd->add_option("--w", wstr)->required();
  orw_cmd->add_option("--p", p, "prime modulus")->required();

  CLI::App* oflags_cmd = app.add_subcommand(
      "oracle-flags", "torus orbit count against the predicted value");
  oflags_cmd->add_option("--input", input)->required();
  oflags_cmd->add_option("--p", p, "odd prime modulus")->required();

  CLI::App* classify_cmd =
      app.add_subcommand("classify-root", "root type of v_mu");
  classify_cmd->add_option("--input", input)->required();

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opt.budget_set = budget_opt->count() > 0;

  try {
    if (app.got_subcommand(kac_cmd)) return run_kac(input, opt, false);
    if (app.got_subcommand(cells_cmd)) return run_kac(input, opt, true);
    if (app.got_subcommand(genfun_cmd)) return run_genfun(r, k, opt);
    if (app.got_subcommand(rw_cmd)) return run_rw(wstr, graph_path, opt);
    if (app.got_subcommand(tutte_cmd))
      return run_tutte(wstr, graph_path, subset_mode, opt);
    if (app.got_subcommand(gm_cmd)) return run_gm(r, opt);
    if (app.got_subcommand(orw_cmd)) return run_oracle_rw(wstr, p, opt);
    if (app.got_subcommand(oflags_cmd)) return run_oracle_flags(input, p, opt);
    if (app.got_subcommand(classify_cmd)) return run_classify(input, opt);
  } catch (const kac::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args));
}

}  // namespace kac::cli
