#include "hyperinv/metgraph.hpp"

#include "hyperinv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hyperinv {

namespace {

// Simpson's rule; exact for quadratics.
Rat simpson(const Rat& width, const Rat& f0, const Rat& fmid, const Rat& f1) {
  return width / Rat(6) * (f0 + Rat(4) * fmid + f1);
}

std::array<Rat, 3> quadratic_through(const Rat& len, const Rat& f0, const Rat& fmid, const Rat& f1) {
  const Rat c2 = Rat(2) * (f0 - Rat(2) * fmid + f1) / (len * len);
  const Rat c1 = (f1 - f0) / len - c2 * len;
  return {f0, c1, c2};
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// MetrizedGraph

MetrizedGraph::MetrizedGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw ValidationError("graph has no vertices");
  std::set<std::string> ids;
  for (const auto& v : vertices_) {
    if (v.id.empty()) throw ValidationError("empty vertex id");
    if (v.genus < 0) throw ValidationError("negative genus at vertex " + v.id);
    if (!ids.insert(v.id).second) throw ValidationError("duplicate vertex id " + v.id);
  }
  for (const auto& e : edges_) {
    if (e.u >= vertices_.size() || e.v >= vertices_.size()) throw ValidationError("edge endpoint out of range");
    if (e.length.sign() <= 0) throw ValidationError("edge lengths must be positive");
  }
}

std::size_t MetrizedGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  throw ValidationError("unknown vertex id " + id);
}

long MetrizedGraph::valence(std::size_t v) const {
  long val = 0;
  for (const auto& e : edges_) {
    if (e.u == v) ++val;
    if (e.v == v) ++val;
  }
  return val;
}

bool MetrizedGraph::is_connected() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : edges_) parent[find_root(parent, e.u)] = find_root(parent, e.v);
  const std::size_t r = find_root(parent, 0);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (find_root(parent, v) != r) return false;
  }
  return true;
}

long MetrizedGraph::first_betti() const {
  return static_cast<long>(edges_.size()) - static_cast<long>(vertices_.size()) + 1;
}

long MetrizedGraph::total_genus() const {
  long g = first_betti();
  for (const auto& v : vertices_) g += v.genus;
  return g;
}

MetrizedGraph MetrizedGraph::scaled(const Rat& t) const {
  if (t.sign() <= 0) throw ValidationError("scale factor must be positive");
  auto edges = edges_;
  for (auto& e : edges) e.length *= t;
  return MetrizedGraph(vertices_, std::move(edges));
}

MetrizedGraph MetrizedGraph::subdivided(std::size_t e, const Rat& s) const {
  const Edge& old = edges_.at(e);
  if (s.sign() <= 0 || s >= old.length) throw ValidationError("subdivision offset outside the edge");
  auto vertices = vertices_;
  std::string id = vertices_[old.u].id + "~" + vertices_[old.v].id;
  while (std::any_of(vertices.begin(), vertices.end(), [&](const Vertex& v) { return v.id == id; })) id += "'";
  vertices.push_back({id, 0});
  const std::size_t mid = vertices.size() - 1;
  auto edges = edges_;
  edges[e] = {old.u, mid, s};
  edges.push_back({mid, old.v, old.length - s});
  return MetrizedGraph(std::move(vertices), std::move(edges));
}

// ---------------------------------------------------------------------------
// Points, divisors, measures, piecewise polynomials

GraphPoint GraphPoint::on_edge(const MetrizedGraph& g, std::size_t e, const Rat& offset) {
  const Edge& edge = g.edges().at(e);
  if (offset.sign() < 0 || offset > edge.length) throw ValidationError("offset outside the edge");
  if (offset.is_zero()) return vertex(edge.u);
  if (offset == edge.length) return vertex(edge.v);
  return {false, e, offset};
}

GraphPoint GraphPoint::midpoint(const MetrizedGraph& g, std::size_t e) {
  return on_edge(g, e, g.edges().at(e).length / Rat(2));
}

GraphDivisor canonical_divisor(const MetrizedGraph& g) {
  GraphDivisor k(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) k[v] = g.valence(v) - 2 + 2L * g.vertices()[v].genus;
  return k;
}

long degree(const GraphDivisor& d) { return std::accumulate(d.begin(), d.end(), 0L); }

Measure Measure::zero(const MetrizedGraph& g) {
  return {std::vector<Rat>(g.vertex_count()), std::vector<Rat>(g.edge_count())};
}

Measure Measure::dirac(const MetrizedGraph& g, const GraphDivisor& d) {
  if (d.size() != g.vertex_count()) throw ValidationError("divisor size does not match the graph");
  Measure m = zero(g);
  for (std::size_t v = 0; v < d.size(); ++v) m.vertex_mass[v] = Rat(d[v]);
  return m;
}

Rat Measure::total_mass(const MetrizedGraph& g) const {
  if (vertex_mass.size() != g.vertex_count() || edge_density.size() != g.edge_count()) {
    throw ValidationError("measure does not match the graph");
  }
  Rat total;
  for (const auto& m : vertex_mass) total += m;
  for (std::size_t e = 0; e < edge_density.size(); ++e) total += edge_density[e] * g.edges()[e].length;
  return total;
}

Measure& Measure::operator+=(const Measure& o) {
  if (o.vertex_mass.size() != vertex_mass.size() || o.edge_density.size() != edge_density.size()) {
    throw ValidationError("measures live on different graphs");
  }
  for (std::size_t i = 0; i < vertex_mass.size(); ++i) vertex_mass[i] += o.vertex_mass[i];
  for (std::size_t i = 0; i < edge_density.size(); ++i) edge_density[i] += o.edge_density[i];
  return *this;
}

Measure& Measure::operator*=(const Rat& s) {
  for (auto& m : vertex_mass) m *= s;
  for (auto& d : edge_density) d *= s;
  return *this;
}

Rat PiecewisePoly::eval(const MetrizedGraph& g, const GraphPoint& x) const {
  if (x.on_vertex) return vertex_value.at(x.index);
  (void)g;
  const auto& c = edge_coeff.at(x.index);
  return c[0] + x.offset * (c[1] + x.offset * c[2]);
}

Rat PiecewisePoly::integrate(const MetrizedGraph& g, const Measure& mu) const {
  Rat total;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) total += mu.vertex_mass.at(v) * vertex_value.at(v);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (mu.edge_density.at(e).is_zero()) continue;
    const Rat& len = g.edges()[e].length;
    const auto& c = edge_coeff.at(e);
    total += mu.edge_density[e] * (c[0] * len + c[1] * len * len / Rat(2) + c[2] * len * len * len / Rat(3));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Resistance

ResistanceKernel::ResistanceKernel(const MetrizedGraph& g) : graph_(g), r_(g.vertex_count()) {
  if (!g.is_connected()) throw ValidationError("disconnected graph");
  const std::size_t n = g.vertex_count();
  if (n > 1) {
    // Laplacian grounded at vertex 0; loops carry no current.
    RatMatrix lap(n - 1);
    for (const auto& e : g.edges()) {
      if (e.is_loop()) continue;
      const Rat c = Rat(1) / e.length;
      if (e.u != 0) lap(e.u - 1, e.u - 1) += c;
      if (e.v != 0) lap(e.v - 1, e.v - 1) += c;
      if (e.u != 0 && e.v != 0) {
        lap(e.u - 1, e.v - 1) -= c;
        lap(e.v - 1, e.u - 1) -= c;
      }
    }
    const RatMatrix green = inverse(std::move(lap));
    auto gval = [&](std::size_t a, std::size_t b) { return (a == 0 || b == 0) ? Rat(0) : green(a - 1, b - 1); };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) r_(a, b) = gval(a, a) + gval(b, b) - Rat(2) * gval(a, b);
    }
  }
  foster_.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    // 1/(L + R_e) with R_e the rest of the graph in parallel: (L - R_uv) / L^2.
    foster_.push_back((e.length - r_(e.u, e.v)) / (e.length * e.length));
  }
}

Rat ResistanceKernel::resistance(const GraphPoint& x, const GraphPoint& y) const {
  if (x.on_vertex && y.on_vertex) return r_(x.index, y.index);
  if (x.on_vertex) return resistance(y, x);
  const Edge& e = graph_.edges().at(x.index);
  const Rat& len = e.length;
  const Rat& c = foster_[x.index];
  if (!y.on_vertex && y.index == x.index) {
    const Rat d = abs(x.offset - y.offset);
    return d - d * d * c;
  }
  // Quadratic in the offset along e with curvature fixed by the Foster coefficient.
  const Rat t = x.offset / len;
  return (Rat(1) - t) * resistance(GraphPoint::vertex(e.u), y) + t * resistance(GraphPoint::vertex(e.v), y) +
         x.offset * (len - x.offset) * c;
}

Rat ResistanceKernel::potential_at(const GraphPoint& x, const Measure& mu) const {
  Rat total;
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
    if (!mu.vertex_mass.at(v).is_zero()) total += mu.vertex_mass[v] * resistance(x, GraphPoint::vertex(v));
  }
  for (std::size_t ei = 0; ei < graph_.edge_count(); ++ei) {
    const Rat& rho = mu.edge_density.at(ei);
    if (rho.is_zero()) continue;
    const Edge& e = graph_.edges()[ei];
    const GraphPoint u = GraphPoint::vertex(e.u);
    const GraphPoint w = GraphPoint::vertex(e.v);
    if (!x.on_vertex && x.index == ei) {
      // r(x, .) has a kink at x; integrate the two quadratic pieces separately.
      const Rat& s = x.offset;
      const Rat left = simpson(s, resistance(x, u), resistance(x, GraphPoint{false, ei, s / Rat(2)}), Rat(0));
      const Rat right = simpson(e.length - s, Rat(0),
                                resistance(x, GraphPoint{false, ei, (s + e.length) / Rat(2)}), resistance(x, w));
      total += rho * (left + right);
    } else {
      total += rho * simpson(e.length, resistance(x, u), resistance(x, GraphPoint::midpoint(graph_, ei)),
                             resistance(x, w));
    }
  }
  return total;
}

PiecewisePoly ResistanceKernel::potential(const Measure& mu) const {
  PiecewisePoly out;
  out.vertex_value.reserve(graph_.vertex_count());
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
    out.vertex_value.push_back(potential_at(GraphPoint::vertex(v), mu));
  }
  out.edge_coeff.reserve(graph_.edge_count());
  for (std::size_t ei = 0; ei < graph_.edge_count(); ++ei) {
    const Edge& e = graph_.edges()[ei];
    const Rat mid = potential_at(GraphPoint::midpoint(graph_, ei), mu);
    out.edge_coeff.push_back(quadratic_through(e.length, out.vertex_value[e.u], mid, out.vertex_value[e.v]));
  }
  return out;
}

Rat resistance(const MetrizedGraph& g, const GraphPoint& x, const GraphPoint& y) {
  return ResistanceKernel(g).resistance(x, y);
}

// ---------------------------------------------------------------------------
// Measures

namespace {

Measure canonical_measure(const ResistanceKernel& kernel) {
  const MetrizedGraph& g = kernel.graph();
  Measure mu = Measure::zero(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) mu.vertex_mass[v] = Rat(1) - Rat(g.valence(v), 2);
  for (std::size_t e = 0; e < g.edge_count(); ++e) mu.edge_density[e] = kernel.foster(e);
  return mu;
}

Measure admissible_measure(const ResistanceKernel& kernel) {
  const MetrizedGraph& g = kernel.graph();
  const long genus = g.total_genus();
  if (genus < 2) throw ValidationError("genus too small");
  Measure mu = Measure::dirac(g, canonical_divisor(g)) + Rat(2) * canonical_measure(kernel);
  mu *= Rat(1, 2 * genus);
  return mu;
}

// Integral of g(x, x) against a * mu_ad + b * delta_K.
Rat diagonal_integral(const GreenFunction& green, const Rat& a, const Rat& b) {
  const MetrizedGraph& g = green.kernel().graph();
  const Measure weight = a * green.measure() + b * Measure::dirac(g, canonical_divisor(g));
  return green.diagonal().integrate(g, weight);
}

}  // namespace

Measure canonical_measure(const MetrizedGraph& g) { return canonical_measure(ResistanceKernel(g)); }

Measure admissible_measure(const MetrizedGraph& g) {
  if (g.total_genus() < 2) throw ValidationError("genus too small");
  return admissible_measure(ResistanceKernel(g));
}

// ---------------------------------------------------------------------------
// Green's function

GreenFunction::GreenFunction(ResistanceKernel kernel, Measure mu) : kernel_(std::move(kernel)), mu_(std::move(mu)) {
  if (mu_.total_mass(kernel_.graph()) != Rat(1)) throw ValidationError("measure must have total mass 1");
  potential_ = kernel_.potential(mu_);
  half_energy_ = potential_.integrate(kernel_.graph(), mu_) / Rat(2);
}

Rat GreenFunction::operator()(const GraphPoint& x, const GraphPoint& y) const {
  const MetrizedGraph& g = kernel_.graph();
  return (potential_.eval(g, x) + potential_.eval(g, y) - kernel_.resistance(x, y)) / Rat(2) - half_energy_;
}

PiecewisePoly GreenFunction::diagonal() const {
  PiecewisePoly out = potential_;
  for (auto& v : out.vertex_value) v -= half_energy_;
  for (auto& c : out.edge_coeff) c[0] -= half_energy_;
  return out;
}

Rat GreenFunction::against_divisor(const GraphDivisor& d, const GraphPoint& x) const {
  Rat total;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] != 0) total += Rat(d[v]) * (*this)(GraphPoint::vertex(v), x);
  }
  return total;
}

Rat green(const MetrizedGraph& g, const Measure& mu, const GraphPoint& x, const GraphPoint& y) {
  return GreenFunction(ResistanceKernel(g), mu)(x, y);
}

PiecewisePoly green_diagonal(const MetrizedGraph& g, const Measure& mu) {
  return GreenFunction(ResistanceKernel(g), mu).diagonal();
}

// ---------------------------------------------------------------------------
// Invariants

Rat delta(const MetrizedGraph& g) {
  Rat total;
  for (const auto& e : g.edges()) total += e.length;
  return total;
}

GraphInvariants evaluate(const MetrizedGraph& g) {
  const long genus = g.total_genus();
  if (genus < 2) throw ValidationError("genus too small");
  ResistanceKernel kernel(g);
  Measure mu = admissible_measure(kernel);
  const GreenFunction green_fn(std::move(kernel), std::move(mu));

  GraphInvariants out;
  out.genus = genus;
  out.delta = delta(g);
  out.epsilon = diagonal_integral(green_fn, Rat(2 * genus - 2), Rat(1));
  out.phi = -out.delta / Rat(4) + diagonal_integral(green_fn, Rat(10 * genus + 2), Rat(-1)) / Rat(4);
  return out;
}

Rat epsilon(const MetrizedGraph& g) { return evaluate(g).epsilon; }

Rat phi(const MetrizedGraph& g) { return evaluate(g).phi; }

Rat verify_admissible(const MetrizedGraph& g, const Measure& mu) {
  const GreenFunction green_fn(ResistanceKernel(g), mu);
  const GraphDivisor k = canonical_divisor(g);
  std::vector<GraphPoint> samples;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) samples.push_back(GraphPoint::vertex(v));
  for (std::size_t e = 0; e < g.edge_count(); ++e) samples.push_back(GraphPoint::midpoint(g, e));

  std::vector<Rat> values;
  values.reserve(samples.size());
  for (const auto& y : samples) values.push_back(green_fn.against_divisor(k, y) + green_fn(y, y));
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return (*hi - *lo) / Rat(2);
}

}  // namespace hyperinv
