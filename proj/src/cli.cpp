#include "hyperinv/cli.hpp"

#include "hyperinv/clustertree.hpp"
#include "hyperinv/invariants.hpp"
#include "hyperinv/json_io.hpp"
#include "hyperinv/metgraph.hpp"
#include "hyperinv/symroots.hpp"
#include "hyperinv/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hyperinv {

namespace {

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& text, std::size_t expected, const std::string& flag) {
  const auto parts = split(text);
  if (parts.size() != expected) {
    throw InputError(flag, "expected " + std::to_string(expected) + " comma-separated indices");
  }
  std::vector<std::size_t> out;
  for (const auto& p : parts) {
    try {
      const Rat r = Rat::parse(p);
      if (!r.is_integer() || r.sign() < 0 || !r.num().fits_ulong_p()) throw ValidationError("bad index");
      out.push_back(r.num().get_ui());
    } catch (const ValidationError&) {
      throw InputError(flag, "malformed index \"" + p + "\"");
    }
  }
  return out;
}

std::vector<Rat> parse_rats(const std::string& text, const std::string& flag) {
  std::vector<Rat> out;
  for (const auto& p : split(text)) {
    try {
      out.push_back(Rat::parse(p));
    } catch (const ValidationError& e) {
      throw InputError(flag, e.what());
    }
  }
  return out;
}

Rat parse_rat(const std::string& text, const std::string& flag) {
  try {
    return Rat::parse(text);
  } catch (const ValidationError& e) {
    throw InputError(flag, e.what());
  }
}

double parse_real_flag(const std::string& text, const std::string& flag) {
  try {
    return parse_real(text);
  } catch (const ValidationError& e) {
    throw InputError(flag, e.what());
  }
}

Json diagnostic(const std::string& error, const std::string& path, const std::string& detail) {
  return {{"error", error}, {"path", path}, {"detail", detail}};
}

// -- symroots ----------------------------------------------------------------

Json triple_record(const RootConfig& cfg, const std::optional<Valuation>& v, const Triple& t) {
  Json rec{{"l_pow_2g", symroot_pow(cfg, t).str()}};
  if (v) {
    const Rat nu = symroot_val(cfg, *v, t);
    const Rat pairing = pairing_diff_thmC(cfg, *v, t);
    rec["nu_l"] = nu.str();
    rec["pairing_nu"] = pairing.str();
    rec["pairing_log"] = decimal(pairing.to_double() * std::log(v->prime().get_d()));
  }
  return rec;
}

Json cmd_symroots(const RunConfig& rc) {
  const CurveDocument doc = parse_curve(read_json_file(rc.curve_path));
  const std::optional<long> p = rc.prime ? rc.prime : doc.prime;
  std::optional<Valuation> v;
  if (p) {
    v.emplace(*p);
    v->require_odd();
  }
  const RootConfig cfg = normalize_finite(doc.config);
  Json out = Json::object();
  if (!rc.triple.empty()) {
    const auto idx = parse_indices(rc.triple, 3, "--triple");
    const Triple t{idx[0], idx[1], idx[2]};
    t.validate(cfg.size());
    out = triple_record(cfg, v, t);
  } else if (!rc.cross_ratio.empty()) {
    const auto idx = parse_indices(rc.cross_ratio, 4, "--cross-ratio");
    out["cross_ratio"] = cross_ratio(cfg, idx[0], idx[1], idx[2], idx[3]).str();
    if (v) {
      const Rat pairing = pairing_crossratio(cfg, *v, idx[0], idx[1], idx[2], idx[3]);
      out["pairing_nu"] = pairing.str();
      out["pairing_log"] = decimal(pairing.to_double() * std::log(v->prime().get_d()));
    }
  } else if (rc.discriminants) {
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      for (std::size_t j = 0; j < cfg.size(); ++j) {
        if (i != j) {
          out["(" + std::to_string(i) + "," + std::to_string(j) + ")"] = sym_discriminant(cfg, i, j).str();
        }
      }
    }
  } else {
    for (const Triple& t : all_triples(cfg.size())) out[t.str()] = triple_record(cfg, v, t);
  }
  if (!cfg.note().empty()) out["note"] = cfg.note();
  return out;
}

// -- cluster -----------------------------------------------------------------

Json cmd_cluster(const RunConfig& rc) {
  const CurveDocument doc = parse_curve(read_json_file(rc.curve_path));
  const std::optional<long> p = rc.prime ? rc.prime : doc.prime;
  if (!p) throw InputError("--prime", "a prime is required");
  const Valuation v(*p);
  const RootConfig& cfg = doc.config;
  const KauszReport report = check_kausz_form(cfg, v);
  if (!report.ok()) {
    throw InputError("/roots", "not in Kausz normal form: " + Json(report.violations).dump());
  }
  const ClusterTree tree = build_tree(cfg, v);

  Json nodes = Json::array();
  for (std::size_t id = 0; id < tree.nodes().size(); ++id) {
    const ClusterNode& c = tree.node(id);
    Json node{{"id", id}, {"level", c.level}, {"representative", c.representative}, {"members", c.members}};
    node["parent"] = c.parent ? Json(*c.parent) : Json(nullptr);
    node["mult_y"] = mult_y(tree, id).str();
    nodes.push_back(std::move(node));
  }
  Json roots = Json::array();
  for (std::size_t r = 0; r < tree.root_count(); ++r) {
    roots.push_back({{"index", r}, {"value", tree.root_value(r).str()}, {"component", tree.component_of(r)},
                     {"level", tree.root_level(r)}});
  }

  std::vector<Triple> triples;
  if (!rc.triple.empty()) {
    const auto idx = parse_indices(rc.triple, 3, "--triple");
    triples.push_back({idx[0], idx[1], idx[2]});
    triples.back().validate(cfg.size());
  } else if (rc.all_triples) {
    triples = all_triples(cfg.size());
  }
  const Rat scale(2L * cfg.genus() * (cfg.genus() - 1));
  Json checks = Json::array();
  for (const Triple& t : triples) {
    const Rat combination = pairing_combination(tree, t);
    const Rat expected = scale * symroot_val(cfg, v, t);
    checks.push_back({{"triple", t.str()},
                      {"combination", combination.str()},
                      {"expected", expected.str()},
                      {"ok", combination == expected}});
  }
  return {{"tree", {{"nodes", nodes}, {"roots", roots}}}, {"checks", checks}};
}

// -- graph -------------------------------------------------------------------

std::map<std::size_t, int> parse_subtypes(const std::string& text) {
  std::map<std::size_t, int> out;
  for (const auto& item : split(text)) {
    const auto kv = split(item, ':');
    if (kv.size() != 2) throw InputError("--subtypes", "expected edge:subtype pairs");
    const auto idx = parse_indices(kv[0] + "," + kv[1], 2, "--subtypes");
    out[idx[0]] = static_cast<int>(idx[1]);
  }
  return out;
}

Json cmd_graph(const RunConfig& rc) {
  const MetrizedGraph g = parse_graph(read_json_file(rc.graph_path));
  const GraphInvariants inv = evaluate(g);
  Json out{{"epsilon", inv.epsilon.str()}, {"phi", inv.phi.str()}, {"delta", inv.delta.str()},
           {"genus", std::to_string(inv.genus)}};
  if (rc.with_chi) {
    std::vector<std::string> warnings;
    const PlaceReport place = place_report(g, "graph", 1.0, parse_subtypes(rc.subtypes), &warnings);
    out["d"] = place.d.str();
    out["chi"] = place.chi.str();
    out["warnings"] = warnings;
  }
  return out;
}

// -- genus2 ------------------------------------------------------------------

Json cmd_genus2(const RunConfig& rc) {
  const Genus2Type type = [&] {
    try {
      return parse_genus2_type(rc.genus2_type);
    } catch (const ValidationError& e) {
      throw InputError("--type", e.what());
    }
  }();
  const std::vector<Rat> params = parse_rats(rc.params, "--params");
  const Genus2Row row = [&] {
    try {
      return genus2_row(type, params);
    } catch (const ValidationError& e) {
      throw InputError("--params", e.what());
    }
  }();
  Json ps = Json::array();
  for (const auto& p : params) ps.push_back(p.str());
  Json out{{"type", to_string(type)}, {"params", ps},          {"d_half", row.d_half.str()},
           {"delta", row.delta.str()}, {"epsilon", row.epsilon.str()}, {"chi", row.chi.str()}};
  if (rc.graph_check) {
    const MetrizedGraph g = genus2_graph(type, params);
    const GraphInvariants inv = evaluate(g);
    const Rat defect = verify_admissible(g, admissible_measure(g));
    out["graph_check"] = {{"graph", to_json(g)},
                          {"epsilon", inv.epsilon.str()},
                          {"delta", inv.delta.str()},
                          {"phi", inv.phi.str()},
                          {"admissible_defect", defect.str()},
                          {"epsilon_match", inv.epsilon == row.epsilon},
                          {"delta_match", inv.delta == row.delta},
                          {"phi_equals_chi", inv.phi == row.chi}};
  }
  return out;
}

// -- invariants --------------------------------------------------------------

NodeCounts counts_from_flags(const RunConfig& rc) {
  NodeCounts c;
  c.genus = rc.genus;
  c.xi0 = rc.xi0.empty() ? Rat(0) : parse_rat(rc.xi0, "--xi0");
  c.xi = parse_rats(rc.xi, "--xi");
  c.deltas = parse_rats(rc.deltas, "--deltas");
  // Missing sequences default to zeros of the right length.
  if (rc.xi.empty()) c.xi.assign(static_cast<std::size_t>(std::max(0, (rc.genus - 1) / 2)), Rat(0));
  if (rc.deltas.empty()) c.deltas.assign(static_cast<std::size_t>(std::max(0, rc.genus / 2)), Rat(0));
  return c;
}

Json cmd_invariants(const RunConfig& rc) {
  if (rc.action == "chi") {
    const Rat chi = chi_nonarch(rc.genus, parse_rat(rc.d, "--d"), parse_rat(rc.eps, "--eps"),
                                parse_rat(rc.delta, "--delta"));
    return {{"chi", chi.str()}};
  }
  if (rc.action == "d") return {{"d", d_from_counts(counts_from_flags(rc)).str()}};
  if (rc.action == "yamaki") return {{"bound", yamaki_bound(counts_from_flags(rc)).str()}};
  if (rc.action == "arch") {
    ArchInput a;
    a.genus = rc.genus;
    a.log_norm_delta_g = parse_real_flag(rc.log_norm_delta, "--log-norm-delta");
    a.delta_faltings = parse_real_flag(rc.delta_faltings, "--delta-faltings");
    return {{"chi", decimal(chi_arch(a))}, {"n", std::to_string(a.n())}, {"r", std::to_string(a.r())}};
  }
  if (rc.action == "theorem-b") {
    std::vector<double> sums;
    for (const auto& s : split(rc.pairing_sums)) sums.push_back(parse_real_flag(s, "--pairing-sums"));
    if (sums.empty()) throw InputError("--pairing-sums", "at least one pairing sum is required");
    const double log2 = parse_real_flag(rc.log2, "--log2");
    return {{"chi", decimal(chi_theorem_b(rc.genus, log2, sums.front()))},
            {"spread", decimal(theorem_b_spread(rc.genus, log2, sums))}};
  }
  throw InputError("invariants", "unknown action \"" + rc.action + "\"");
}

// -- global ------------------------------------------------------------------

Json cmd_global(const RunConfig& rc) {
  const std::vector<PlaceReport> places = parse_places(read_json_file(rc.places_path));
  double sum = 0.0;
  for (const auto& p : places) sum += p.chi.to_double() * p.log_nv;
  return {{"omega_a", decimal(aggregate_global(places))},
          {"sum_chi_logNv", decimal(sum)},
          {"places", std::to_string(places.size())}};
}

// -- verify ------------------------------------------------------------------

Json cmd_verify(const RunConfig& rc) {
  try {
    return verify_suite(rc.suite, rc.seed).to_json();
  } catch (const InputError&) {
    throw;
  } catch (const ValidationError& e) {
    throw InputError("--suite", e.what());
  }
}

void build_parser(CLI::App& app, RunConfig& rc) {
  app.require_subcommand(1);
  app.add_option("--out", rc.output_path, "Write the JSON document to this file");

  auto* sym = app.add_subcommand("symroots", "Symmetric roots, discriminants and pairings");
  sym->add_option("--curve", rc.curve_path, "Curve JSON")->required();
  sym->add_option("--prime", rc.prime, "Odd prime for valuations");
  auto* t = sym->add_option("--triple", rc.triple, "i,j,k");
  auto* cr = sym->add_option("--cross-ratio", rc.cross_ratio, "i,j,k,r");
  auto* disc = sym->add_flag("--discriminants", rc.discriminants, "All symmetric discriminants d_ij");
  auto* all = sym->add_flag("--all-triples", rc.all_triples, "Every ordered triple (default)");
  t->excludes(cr, disc, all);
  cr->excludes(disc, all);
  disc->excludes(all);

  auto* cluster = app.add_subcommand("cluster", "Cluster tree and the intersection-number cross-check");
  cluster->add_option("--curve", rc.curve_path, "Curve JSON")->required();
  cluster->add_option("--prime", rc.prime, "Odd prime");
  auto* ct = cluster->add_option("--triple", rc.triple, "i,j,k");
  cluster->add_flag("--all-triples", rc.all_triples, "Check every ordered triple")->excludes(ct);

  auto* graph = app.add_subcommand("graph", "Metrized reduction graphs");
  graph->require_subcommand(1);
  auto* eval = graph->add_subcommand("eval", "epsilon, phi, delta of a reduction graph");
  eval->add_option("--in", rc.graph_path, "Graph JSON")->required();
  eval->add_flag("--with-chi", rc.with_chi, "Also classify edges and report d and chi");
  eval->add_option("--subtypes", rc.subtypes, "edge:subtype pairs for non-separating edges");

  auto* g2 = app.add_subcommand("genus2", "Genus-2 reduction-type table");
  g2->add_option("--type", rc.genus2_type, "I .. VII")->required();
  g2->add_option("--params", rc.params, "Comma-separated positive lengths");
  g2->add_flag("--graph-check", rc.graph_check, "Recompute on the reduction graph");

  auto* inv = app.add_subcommand("invariants", "Scalar invariant algebra");
  inv->require_subcommand(1);
  for (const char* name : {"chi", "d", "yamaki", "arch", "theorem-b"}) {
    auto* sub = inv->add_subcommand(name);
    sub->add_option("--genus", rc.genus)->required();
    if (std::string(name) == "chi") {
      sub->add_option("--d", rc.d)->required();
      sub->add_option("--eps", rc.eps)->required();
      sub->add_option("--delta", rc.delta)->required();
    } else if (std::string(name) == "d" || std::string(name) == "yamaki") {
      sub->add_option("--xi0", rc.xi0);
      sub->add_option("--xi", rc.xi, "xi_1,...");
      sub->add_option("--deltas", rc.deltas, "delta_1,...");
    } else if (std::string(name) == "arch") {
      sub->add_option("--log-norm-delta", rc.log_norm_delta);
      sub->add_option("--delta-faltings", rc.delta_faltings);
    } else {
      sub->add_option("--log2", rc.log2, "log|2|_v");
      sub->add_option("--pairing-sums", rc.pairing_sums, "sum_{k != i} (w_i, w_k)_a for several i")->required();
    }
  }

  auto* global = app.add_subcommand("global", "Adelic aggregation over places");
  global->add_option("--places", rc.places_path, "Place-list JSON")->required();

  auto* verify = app.add_subcommand("verify", "Built-in verification suites");
  verify->add_option("--suite", rc.suite, "identities | cluster-vs-symroots | genus2-table | phi-equals-chi | subdivision")
      ->required();
  verify->add_option("--seed", rc.seed, "Random seed");
}

Json dispatch(const RunConfig& rc) {
  if (rc.subcommand == "symroots") return cmd_symroots(rc);
  if (rc.subcommand == "cluster") return cmd_cluster(rc);
  if (rc.subcommand == "graph") return cmd_graph(rc);
  if (rc.subcommand == "genus2") return cmd_genus2(rc);
  if (rc.subcommand == "invariants") return cmd_invariants(rc);
  if (rc.subcommand == "global") return cmd_global(rc);
  return cmd_verify(rc);
}

void emit(const Json& doc, const RunConfig& rc, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (rc.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(rc.output_path);
  if (!file) throw InputError("--out", "cannot write " + rc.output_path);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  RunConfig rc;
  CLI::App app{"Non-archimedean invariants of semistable hyperelliptic curves", "hyperinv"};
  build_parser(app, rc);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << diagnostic("usage", "", e.what()).dump(2) << "\n";
    return kValidation;
  }

  for (const auto* sub : app.get_subcommands()) {
    rc.subcommand = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) rc.action = inner->get_name();
  }

  try {
    emit(dispatch(rc), rc, out);
    return kOk;
  } catch (const InputError& e) {
    out << diagnostic("validation", e.path(), e.what()).dump(2) << "\n";
    return kValidation;
  } catch (const ValidationError& e) {
    out << diagnostic("validation", "", e.what()).dump(2) << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    out << diagnostic("internal", "", e.what()).dump(2) << "\n";
    return kInternal;
  }
}

}  // namespace hyperinv
