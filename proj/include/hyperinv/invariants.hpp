#pragma once

// Scalar invariant algebra: d from thickness-weighted node counts, chi from
// (d, epsilon, delta), Yamaki's lower bounds, the archimedean chi formula on
// supplied inputs, the genus-2 reduction-type table and adelic aggregation.

#include "hyperinv/metgraph.hpp"
#include "hyperinv/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace hyperinv {

/// Thickness-weighted node counts of a semistable fiber.
struct NodeCounts {
  int genus = 2;
  Rat xi0;
  std::vector<Rat> xi;      // j = 1 .. floor((g-1)/2)
  std::vector<Rat> deltas;  // i = 1 .. floor(g/2)

  /// Zero counts with sequences of the right lengths.
  static NodeCounts zero(int genus);
  /// Throws on length mismatch, negative entries or genus < 2.
  void validate() const;
};

/// d = g xi0 + sum_j 2(j+1)(g-j) xi_j + sum_i 4i(g-i) delta_i.
Rat d_from_counts(const NodeCounts& c);

/// chi = (3d - (2g+1)(eps + delta)) / (2g - 2).
Rat chi_nonarch(int g, const Rat& d, const Rat& eps, const Rat& delta);

/// Yamaki's lower bound for chi; stated for g >= 3 only.
Rat yamaki_bound(const NodeCounts& c);

struct ArchInput {
  int genus = 2;
  double log_norm_delta_g = 0.0;  // log ||Delta_g||
  double delta_faltings = 0.0;

  /// C(2g, g+1)
  [[nodiscard]] long n() const;
  /// C(2g+1, g+1)
  [[nodiscard]] long r() const;
};

double chi_arch(const ArchInput& a);

/// chi = -2g (log|2|_v + sum_{k != i} (w_i, w_k)_a).
double chi_theorem_b(int g, double log2v, double pairing_sum);

/// Largest deviation between the chi values obtained from the pairing sums
/// for different base indices i; zero when the inputs are consistent.
double theorem_b_spread(int g, double log2v, const std::vector<double>& pairing_sums);

enum class Genus2Type { I, II, III, IV, V, VI, VII };

Genus2Type parse_genus2_type(const std::string& name);
std::string to_string(Genus2Type t);
/// Number of length parameters: 0,1,1,2,2,3,3.
std::size_t arity(Genus2Type t);

struct Genus2Row {
  Rat d_half;
  Rat delta;
  Rat epsilon;
  Rat chi;

  [[nodiscard]] Rat d() const { return Rat(2) * d_half; }
};

/// Closed-form table values for a genus-2 reduction type.
Genus2Row genus2_row(Genus2Type type, const std::vector<Rat>& params);

/// Reduction graph realizing the type; see the README for the drawing.
MetrizedGraph genus2_graph(Genus2Type type, const std::vector<Rat>& params);

struct EdgeClassification {
  NodeCounts counts;
  std::vector<std::string> warnings;
};

/// Bridges become delta_i with i the smaller genus on either side.
/// Non-separating edges are subtype 0 unless `subtypes` maps the edge index
/// to some j >= 1; subtype-j edges come in pairs, so xi_j is half their total length.
EdgeClassification classify_edges(const MetrizedGraph& g, const std::map<std::size_t, int>& subtypes = {});

struct PlaceReport {
  std::string label;
  int genus = 2;
  double log_nv = 1.0;
  Rat d;
  Rat epsilon;
  Rat delta;
  Rat phi;
  Rat chi;

  /// Throws unless (2g-2) chi = 3d - (2g+1)(eps + delta).
  void validate() const;
};

/// Full non-archimedean report for a reduction graph.
PlaceReport place_report(const MetrizedGraph& g, std::string label, double log_nv,
                         const std::map<std::size_t, int>& subtypes = {},
                         std::vector<std::string>* warnings = nullptr);

/// (omega, omega)_a = (2g-2)/(2g+1) sum_v chi_v log Nv.
double aggregate_global(const std::vector<PlaceReport>& places);

struct GlobalSums {
  double d = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
};

struct NoetherReport {
  double faltings_residual = 0.0;  // sum d - (8g+4) deg lambda
  double noether_residual = 0.0;   // (omega^2 + sum delta) - 12 deg lambda
  double admissible_self_intersection = 0.0;  // omega^2 - sum eps
  double aggregate = 0.0;                     // (2g-2)/(2g+1) sum chi_v log Nv from the sums
  double aggregate_residual = 0.0;            // admissible_self_intersection - aggregate

  [[nodiscard]] bool consistent(double tol = 1e-9) const;
};

NoetherReport noether_consistency(int g, double deg_lambda, double omega_sq, const GlobalSums& sums);

}  // namespace hyperinv
