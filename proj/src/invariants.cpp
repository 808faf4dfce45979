#include "hyperinv/invariants.hpp"

#include "hyperinv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace hyperinv {

namespace {

long binomial(long n, long k) {
  long out = 1;
  for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

void require_genus(int g) {
  if (g < 2) throw ValidationError("genus must be at least 2");
}

}  // namespace

// ---------------------------------------------------------------------------
// Node counts

NodeCounts NodeCounts::zero(int genus) {
  require_genus(genus);
  NodeCounts c;
  c.genus = genus;
  c.xi.assign(static_cast<std::size_t>((genus - 1) / 2), Rat(0));
  c.deltas.assign(static_cast<std::size_t>(genus / 2), Rat(0));
  return c;
}

void NodeCounts::validate() const {
  require_genus(genus);
  if (xi.size() != static_cast<std::size_t>((genus - 1) / 2) || deltas.size() != static_cast<std::size_t>(genus / 2)) {
    throw ValidationError("sequence length mismatch: genus " + std::to_string(genus) + " needs " +
                          std::to_string((genus - 1) / 2) + " xi_j and " + std::to_string(genus / 2) + " delta_i");
  }
  auto negative = [](const Rat& x) { return x.sign() < 0; };
  if (negative(xi0) || std::any_of(xi.begin(), xi.end(), negative) ||
      std::any_of(deltas.begin(), deltas.end(), negative)) {
    throw ValidationError("node counts must be non-negative");
  }
}

Rat d_from_counts(const NodeCounts& c) {
  c.validate();
  const long g = c.genus;
  Rat d = Rat(g) * c.xi0;
  for (std::size_t idx = 0; idx < c.xi.size(); ++idx) {
    const long j = static_cast<long>(idx) + 1;
    d += Rat(2 * (j + 1) * (g - j)) * c.xi[idx];
  }
  for (std::size_t idx = 0; idx < c.deltas.size(); ++idx) {
    const long i = static_cast<long>(idx) + 1;
    d += Rat(4 * i * (g - i)) * c.deltas[idx];
  }
  return d;
}

Rat chi_nonarch(int g, const Rat& d, const Rat& eps, const Rat& delta) {
  require_genus(g);
  return (Rat(3) * d - Rat(2L * g + 1) * (eps + delta)) / Rat(2L * g - 2);
}

Rat yamaki_bound(const NodeCounts& c) {
  if (c.genus < 3) throw ValidationError("bound not stated for g=2");
  c.validate();
  const long g = c.genus;
  Rat bound = Rat(2 * g - 5, 24 * g) * c.xi0;
  for (std::size_t idx = 0; idx < c.xi.size(); ++idx) {
    const long j = static_cast<long>(idx) + 1;
    const Rat coeff = g >= 5 ? Rat(3 * j * (g - 1 - j) - g - 2, 3 * g) : Rat(2 * j * (g - 1 - j) - 1, 2 * g);
    bound += coeff * c.xi[idx];
  }
  for (std::size_t idx = 0; idx < c.deltas.size(); ++idx) {
    const long i = static_cast<long>(idx) + 1;
    bound += Rat(2 * i * (g - i), g) * c.deltas[idx];
  }
  return bound;
}

// ---------------------------------------------------------------------------
// Archimedean plumbing and chi from point pairings

long ArchInput::n() const { return binomial(2L * genus, genus + 1L); }

long ArchInput::r() const { return binomial(2L * genus + 1, genus + 1L); }

double chi_arch(const ArchInput& a) {
  require_genus(a.genus);
  const double g = a.genus;
  const double denom = 2.0 * g - 2.0;
  return -(8.0 * g * (2.0 * g + 1.0) / denom) * std::log(2.0 * std::numbers::pi) -
         (3.0 * g / (denom * static_cast<double>(a.n()))) * a.log_norm_delta_g -
         ((2.0 * g + 1.0) / denom) * a.delta_faltings;
}

double chi_theorem_b(int g, double log2v, double pairing_sum) {
  require_genus(g);
  return -2.0 * g * (log2v + pairing_sum);
}

double theorem_b_spread(int g, double log2v, const std::vector<double>& pairing_sums) {
  if (pairing_sums.empty()) return 0.0;
  double lo = chi_theorem_b(g, log2v, pairing_sums.front());
  double hi = lo;
  for (double s : pairing_sums) {
    const double chi = chi_theorem_b(g, log2v, s);
    lo = std::min(lo, chi);
    hi = std::max(hi, chi);
  }
  return hi - lo;
}

// ---------------------------------------------------------------------------
// Genus 2

Genus2Type parse_genus2_type(const std::string& name) {
  static const std::pair<const char*, Genus2Type> names[] = {
      {"I", Genus2Type::I},   {"II", Genus2Type::II}, {"III", Genus2Type::III}, {"IV", Genus2Type::IV},
      {"V", Genus2Type::V},   {"VI", Genus2Type::VI}, {"VII", Genus2Type::VII}};
  for (const auto& [n, t] : names) {
    if (name == n) return t;
  }
  throw ValidationError("unknown genus-2 type \"" + name + "\"");
}

std::string to_string(Genus2Type t) {
  switch (t) {
    case Genus2Type::I: return "I";
    case Genus2Type::II: return "II";
    case Genus2Type::III: return "III";
    case Genus2Type::IV: return "IV";
    case Genus2Type::V: return "V";
    case Genus2Type::VI: return "VI";
    case Genus2Type::VII: return "VII";
  }
  return "?";
}

std::size_t arity(Genus2Type t) {
  switch (t) {
    case Genus2Type::I: return 0;
    case Genus2Type::II:
    case Genus2Type::III: return 1;
    case Genus2Type::IV:
    case Genus2Type::V: return 2;
    case Genus2Type::VI:
    case Genus2Type::VII: return 3;
  }
  return 0;
}

namespace {

void check_params(Genus2Type type, const std::vector<Rat>& params) {
  if (params.size() != arity(type)) {
    throw ValidationError("type " + to_string(type) + " takes " + std::to_string(arity(type)) + " parameters, got " +
                          std::to_string(params.size()));
  }
  for (const auto& p : params) {
    if (p.sign() <= 0) throw ValidationError("genus-2 parameters must be positive");
  }
}

}  // namespace

Genus2Row genus2_row(Genus2Type type, const std::vector<Rat>& params) {
  check_params(type, params);
  const Rat sixth(1, 6);
  const Rat twelfth(1, 12);
  switch (type) {
    case Genus2Type::I: return {Rat(0), Rat(0), Rat(0), Rat(0)};
    case Genus2Type::II: {
      const Rat& a = params[0];
      return {Rat(2) * a, a, a, a};
    }
    case Genus2Type::III: {
      const Rat& a = params[0];
      return {a, a, sixth * a, twelfth * a};
    }
    case Genus2Type::IV: {
      const Rat& a = params[0];
      const Rat& b = params[1];
      return {Rat(2) * a + b, a + b, a + sixth * b, a + twelfth * b};
    }
    case Genus2Type::V: {
      const Rat s = params[0] + params[1];
      return {s, s, sixth * s, twelfth * s};
    }
    case Genus2Type::VI: {
      const Rat& a = params[0];
      const Rat bc = params[1] + params[2];
      return {Rat(2) * a + bc, a + bc, a + sixth * bc, a + twelfth * bc};
    }
    case Genus2Type::VII: {
      const Rat& a = params[0];
      const Rat& b = params[1];
      const Rat& c = params[2];
      const Rat s = a + b + c;
      const Rat q = a * b * c / (a * b + b * c + c * a);
      return {s, s, sixth * s + sixth * q, twelfth * s - Rat(5, 12) * q};
    }
  }
  throw ValidationError("unknown genus-2 type");
}

MetrizedGraph genus2_graph(Genus2Type type, const std::vector<Rat>& params) {
  check_params(type, params);
  switch (type) {
    case Genus2Type::I: return MetrizedGraph({{"v", 2}}, {});
    case Genus2Type::II: return MetrizedGraph({{"v1", 1}, {"v2", 1}}, {{0, 1, params[0]}});
    case Genus2Type::III: return MetrizedGraph({{"v", 1}}, {{0, 0, params[0]}});
    case Genus2Type::IV: return MetrizedGraph({{"v1", 1}, {"v2", 0}}, {{0, 1, params[0]}, {1, 1, params[1]}});
    case Genus2Type::V: return MetrizedGraph({{"v", 0}}, {{0, 0, params[0]}, {0, 0, params[1]}});
    case Genus2Type::VI:
      return MetrizedGraph({{"v1", 1}, {"v2", 0}, {"v3", 0}},
                           {{0, 1, params[0]}, {1, 2, params[1]}, {1, 2, params[2]}});
    case Genus2Type::VII:
      return MetrizedGraph({{"v1", 0}, {"v2", 0}}, {{0, 1, params[0]}, {0, 1, params[1]}, {0, 1, params[2]}});
  }
  throw ValidationError("unknown genus-2 type");
}

// ---------------------------------------------------------------------------
// Edge classification and place reports

namespace {

// Connected component labels of g with edge `skip` removed.
std::vector<std::size_t> components_without(const MetrizedGraph& g, std::size_t skip) {
  std::vector<std::size_t> label(g.vertex_count());
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (e == skip) continue;
      const auto& edge = g.edges()[e];
      const std::size_t m = std::min(label[edge.u], label[edge.v]);
      if (label[edge.u] != m || label[edge.v] != m) {
        label[edge.u] = label[edge.v] = m;
        changed = true;
      }
    }
  }
  return label;
}

}  // namespace

EdgeClassification classify_edges(const MetrizedGraph& g, const std::map<std::size_t, int>& subtypes) {
  if (!g.is_connected()) throw ValidationError("disconnected graph");
  const long genus = g.total_genus();
  EdgeClassification out{NodeCounts::zero(static_cast<int>(genus)), {}};
  for (const auto& [e, j] : subtypes) {
    if (e >= g.edge_count()) throw ValidationError("subtype given for unknown edge " + std::to_string(e));
    if (j < 0 || j > (genus - 1) / 2) throw ValidationError("subtype out of range for edge " + std::to_string(e));
  }

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges()[e];
    const auto label = components_without(g, e);
    const bool bridge = !edge.is_loop() && label[edge.u] != label[edge.v];
    if (bridge) {
      if (subtypes.count(e) != 0) throw ValidationError("edge " + std::to_string(e) + " is a bridge and has no subtype");
      long side_edges = 0;
      long side_vertices = 0;
      long side_genus = 0;
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (label[v] != label[edge.u]) continue;
        ++side_vertices;
        side_genus += g.vertices()[v].genus;
      }
      for (std::size_t f = 0; f < g.edge_count(); ++f) {
        if (f != e && label[g.edges()[f].u] == label[edge.u]) ++side_edges;
      }
      side_genus += side_edges - side_vertices + 1;
      const long i = std::min(side_genus, genus - side_genus);
      if (i < 1) throw ValidationError("bridge " + std::to_string(e) + " cuts off a genus-0 part");
      out.counts.deltas[static_cast<std::size_t>(i - 1)] += edge.length;
      continue;
    }
    const auto it = subtypes.find(e);
    const int j = it == subtypes.end() ? 0 : it->second;
    if (it == subtypes.end() && !out.counts.xi.empty()) {
      out.warnings.push_back("edge " + std::to_string(e) + " has no subtype; counted as subtype 0");
    }
    if (j == 0) {
      out.counts.xi0 += edge.length;
    } else {
      out.counts.xi[static_cast<std::size_t>(j - 1)] += edge.length / Rat(2);
    }
  }
  return out;
}

void PlaceReport::validate() const {
  require_genus(genus);
  if (!(log_nv > 0.0)) throw ValidationError("logNv must be positive");
  if (Rat(2L * genus - 2) * chi != Rat(3) * d - Rat(2L * genus + 1) * (epsilon + delta)) {
    throw ValidationError("place " + label + ": (2g-2) chi != 3d - (2g+1)(eps + delta)");
  }
}

PlaceReport place_report(const MetrizedGraph& g, std::string label, double log_nv,
                         const std::map<std::size_t, int>& subtypes, std::vector<std::string>* warnings) {
  const GraphInvariants inv = evaluate(g);
  EdgeClassification cls = classify_edges(g, subtypes);
  if (warnings != nullptr) {
    warnings->insert(warnings->end(), cls.warnings.begin(), cls.warnings.end());
  }
  PlaceReport report;
  report.label = std::move(label);
  report.genus = static_cast<int>(inv.genus);
  report.log_nv = log_nv;
  report.d = d_from_counts(cls.counts);
  report.epsilon = inv.epsilon;
  report.delta = inv.delta;
  report.phi = inv.phi;
  report.chi = chi_nonarch(report.genus, report.d, report.epsilon, report.delta);
  return report;
}

double aggregate_global(const std::vector<PlaceReport>& places) {
  if (places.empty()) return 0.0;
  const int g = places.front().genus;
  double sum = 0.0;
  for (const auto& p : places) {
    if (p.genus != g) throw ValidationError("places have mixed genus");
    sum += p.chi.to_double() * p.log_nv;
  }
  return (2.0 * g - 2.0) / (2.0 * g + 1.0) * sum;
}

bool NoetherReport::consistent(double tol) const {
  return std::abs(faltings_residual) <= tol && std::abs(noether_residual) <= tol &&
         std::abs(aggregate_residual) <= tol;
}

NoetherReport noether_consistency(int g, double deg_lambda, double omega_sq, const GlobalSums& sums) {
  require_genus(g);
  const double two_g_plus_one = 2.0 * g + 1.0;
  NoetherReport r;
  r.faltings_residual = sums.d - (8.0 * g + 4.0) * deg_lambda;
  r.noether_residual = (omega_sq + sums.delta) - 12.0 * deg_lambda;
  r.admissible_self_intersection = omega_sq - sums.epsilon;
  r.aggregate = (3.0 * sums.d - two_g_plus_one * (sums.epsilon + sums.delta)) / two_g_plus_one;
  r.aggregate_residual = r.admissible_self_intersection - r.aggregate;
  return r;
}

}  // namespace hyperinv
