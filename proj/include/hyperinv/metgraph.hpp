#pragma once

// Potential theory on metrized reduction graphs.
//
// Everything is exact. The effective resistance between two vertices comes
// from the inverse of the grounded weighted Laplacian; resistance to points in
// the interior of an edge is obtained in closed form from the vertex values and
// the Foster coefficient of the edge, so no subdivision is needed. Functions
// that are quadratic on each edge (potentials, the Green's function diagonal)
// are carried as PiecewisePoly and integrated exactly.

#include "hyperinv/linalg.hpp"
#include "hyperinv/rat.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace hyperinv {

struct Vertex {
  std::string id;
  int genus = 0;
};

/// Unordered edge; offsets along the edge are measured from u.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rat length;

  [[nodiscard]] bool is_loop() const { return u == v; }
};

class MetrizedGraph {
public:
  /// Validates vertex ids (unique, non-empty), genera >= 0, endpoints and positive lengths.
  /// Connectivity is checked by the potential-theoretic operations.
  MetrizedGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  [[nodiscard]] const std::vector<Vertex>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] std::size_t index_of(const std::string& id) const;

  /// Loops count twice.
  [[nodiscard]] long valence(std::size_t v) const;
  [[nodiscard]] bool is_connected() const;
  /// b1 = E - V + 1 for a connected graph.
  [[nodiscard]] long first_betti() const;
  /// b1 + sum of vertex genera.
  [[nodiscard]] long total_genus() const;

  /// All lengths multiplied by t > 0.
  [[nodiscard]] MetrizedGraph scaled(const Rat& t) const;
  /// Splits edge e at offset s in (0, length) with a new genus-0 vertex. The
  /// two halves replace e: the first keeps index e, the second is appended.
  [[nodiscard]] MetrizedGraph subdivided(std::size_t e, const Rat& s) const;

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// A vertex, or a point in the interior of an edge at a rational offset from its u end.
struct GraphPoint {
  bool on_vertex = true;
  std::size_t index = 0;
  Rat offset;

  static GraphPoint vertex(std::size_t v) { return {true, v, Rat(0)}; }
  /// Offsets 0 and length are folded onto the endpoint vertices; anything
  /// outside [0, length] is rejected.
  static GraphPoint on_edge(const MetrizedGraph& g, std::size_t e, const Rat& offset);
  static GraphPoint midpoint(const MetrizedGraph& g, std::size_t e);
};

/// Integer weights on vertices.
using GraphDivisor = std::vector<long>;

/// K(v) = val(v) - 2 + 2 g(v).
GraphDivisor canonical_divisor(const MetrizedGraph& g);
long degree(const GraphDivisor& d);

/// Point masses at vertices plus a constant density on each edge.
struct Measure {
  std::vector<Rat> vertex_mass;
  std::vector<Rat> edge_density;

  static Measure zero(const MetrizedGraph& g);
  static Measure dirac(const MetrizedGraph& g, const GraphDivisor& d);

  [[nodiscard]] Rat total_mass(const MetrizedGraph& g) const;

  Measure& operator+=(const Measure& o);
  Measure& operator*=(const Rat& s);
  friend Measure operator+(Measure a, const Measure& b) { return a += b; }
  friend Measure operator*(const Rat& s, Measure m) { return m *= s; }
  friend bool operator==(const Measure&, const Measure&) = default;
};

/// Continuous function given by its vertex values and, on each edge, a
/// polynomial c0 + c1 s + c2 s^2 in the offset s from the u end.
struct PiecewisePoly {
  std::vector<Rat> vertex_value;
  std::vector<std::array<Rat, 3>> edge_coeff;

  [[nodiscard]] Rat eval(const MetrizedGraph& g, const GraphPoint& x) const;
  /// Exact integral against a vertex-mass + edge-density measure.
  [[nodiscard]] Rat integrate(const MetrizedGraph& g, const Measure& mu) const;
};

/// Precomputed resistance data for one graph. Immutable after construction,
/// so concurrent queries are safe.
class ResistanceKernel {
public:
  /// Throws ValidationError("disconnected graph") if the graph is not connected.
  explicit ResistanceKernel(const MetrizedGraph& g);

  [[nodiscard]] const MetrizedGraph& graph() const { return graph_; }
  [[nodiscard]] const Rat& vertex_resistance(std::size_t a, std::size_t b) const { return r_(a, b); }
  /// 1/(length + R_e), R_e the resistance between the ends of e in the graph
  /// with e removed; zero for bridges, 1/length for loops.
  [[nodiscard]] const Rat& foster(std::size_t e) const { return foster_.at(e); }

  [[nodiscard]] Rat resistance(const GraphPoint& x, const GraphPoint& y) const;
  /// Integral of r(x, .) against mu.
  [[nodiscard]] Rat potential_at(const GraphPoint& x, const Measure& mu) const;
  /// x -> integral of r(x, .) against mu; quadratic on each edge.
  [[nodiscard]] PiecewisePoly potential(const Measure& mu) const;

private:
  MetrizedGraph graph_;
  RatMatrix r_;
  std::vector<Rat> foster_;
};

/// Green's function of a mass-one measure mu, normalized so that its
/// mu-average in either variable vanishes.
class GreenFunction {
public:
  /// Throws ValidationError unless mu has total mass exactly 1.
  GreenFunction(ResistanceKernel kernel, Measure mu);

  [[nodiscard]] Rat operator()(const GraphPoint& x, const GraphPoint& y) const;
  /// x -> g(x, x).
  [[nodiscard]] PiecewisePoly diagonal() const;
  /// x -> sum_v D(v) g(v, x).
  [[nodiscard]] Rat against_divisor(const GraphDivisor& d, const GraphPoint& x) const;
  [[nodiscard]] const Measure& measure() const { return mu_; }
  [[nodiscard]] const ResistanceKernel& kernel() const { return kernel_; }

private:
  ResistanceKernel kernel_;
  Measure mu_;
  PiecewisePoly potential_;
  Rat half_energy_;  // (1/2) double integral of r against mu x mu
};

Rat resistance(const MetrizedGraph& g, const GraphPoint& x, const GraphPoint& y);

/// Vertex masses 1 - val(v)/2, edge densities 1/(length + R_e).
Measure canonical_measure(const MetrizedGraph& g);
/// (delta_K + 2 mu_can) / (2 g_total); throws "genus too small" if g_total < 2.
Measure admissible_measure(const MetrizedGraph& g);

Rat green(const MetrizedGraph& g, const Measure& mu, const GraphPoint& x, const GraphPoint& y);
PiecewisePoly green_diagonal(const MetrizedGraph& g, const Measure& mu);

/// Total edge length.
Rat delta(const MetrizedGraph& g);
Rat epsilon(const MetrizedGraph& g);
Rat phi(const MetrizedGraph& g);

/// Half the spread of x -> g_mu(K, x) + g_mu(x, x) over vertices and edge
/// midpoints, i.e. the sup-distance to the best constant. Zero for the
/// admissible measure.
Rat verify_admissible(const MetrizedGraph& g, const Measure& mu);

struct GraphInvariants {
  long genus = 0;
  Rat epsilon;
  Rat phi;
  Rat delta;
};

/// epsilon, phi and delta sharing one kernel and Green's function.
GraphInvariants evaluate(const MetrizedGraph& g);

}  // namespace hyperinv
