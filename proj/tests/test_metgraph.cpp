#include "hyperinv/errors.hpp"
#include "hyperinv/metgraph.hpp"

#include <gtest/gtest.h>

using namespace hyperinv;

namespace {

MetrizedGraph point(int genus) { return MetrizedGraph({{"v", genus}}, {}); }

MetrizedGraph loop(const Rat& a, int genus = 1) { return MetrizedGraph({{"v", genus}}, {{0, 0, a}}); }

MetrizedGraph segment(const Rat& a, int g0 = 1, int g1 = 1) {
  return MetrizedGraph({{"a", g0}, {"b", g1}}, {{0, 1, a}});
}

MetrizedGraph theta(const Rat& a, const Rat& b, const Rat& c) {
  return MetrizedGraph({{"a", 0}, {"b", 0}}, {{0, 1, a}, {0, 1, b}, {0, 1, c}});
}

MetrizedGraph two_loops(const Rat& a, const Rat& b) {
  return MetrizedGraph({{"v", 0}}, {{0, 0, a}, {0, 0, b}});
}

// Genus-1 vertex, a bridge, then a genus-0 vertex carrying two parallel edges to a third vertex.
MetrizedGraph bridge_and_banana(const Rat& a, const Rat& b, const Rat& c) {
  return MetrizedGraph({{"u", 1}, {"w", 0}, {"x", 0}}, {{0, 1, a}, {1, 2, b}, {1, 2, c}});
}

Rat parallel(std::initializer_list<Rat> rs) {
  Rat inv(0);
  for (const Rat& r : rs) inv += Rat(1) / r;
  return Rat(1) / inv;
}

std::vector<MetrizedGraph> sample_graphs() {
  return {loop(3), segment(2), theta(1, 2, 3), two_loops(2, 5), bridge_and_banana(1, 2, 3),
          MetrizedGraph({{"a", 1}, {"b", 0}}, {{0, 1, 2}, {1, 1, 3}})};
}

}  // namespace

TEST(MetrizedGraph, Validation) {
  EXPECT_THROW(MetrizedGraph({{"v", 0}}, {{0, 0, 0}}), ValidationError);
  EXPECT_THROW(MetrizedGraph({{"v", 0}}, {{0, 1, 1}}), ValidationError);
  EXPECT_THROW(MetrizedGraph({{"v", -1}}, {}), ValidationError);
  EXPECT_THROW(MetrizedGraph({{"v", 0}, {"v", 1}}, {{0, 1, 1}}), ValidationError);
}

TEST(MetrizedGraph, GenusAndValence) {
  const MetrizedGraph t = theta(1, 1, 1);
  EXPECT_EQ(t.first_betti(), 2);
  EXPECT_EQ(t.total_genus(), 2);
  EXPECT_EQ(loop(1).valence(0), 2);
  EXPECT_EQ(two_loops(1, 2).total_genus(), 2);
}

TEST(CanonicalDivisor, Examples) {
  EXPECT_EQ(canonical_divisor(point(2)), (GraphDivisor{2}));
  EXPECT_EQ(canonical_divisor(loop(4)), (GraphDivisor{2}));
  EXPECT_EQ(canonical_divisor(theta(1, 2, 3)), (GraphDivisor{1, 1}));
  for (const auto& g : sample_graphs()) EXPECT_EQ(degree(canonical_divisor(g)), 2 * g.total_genus() - 2);
}

TEST(Resistance, SeriesAndParallelLaws) {
  const MetrizedGraph s = segment(Rat(7, 2));
  EXPECT_EQ(resistance(s, GraphPoint::vertex(0), GraphPoint::vertex(1)), Rat(7, 2));
  EXPECT_EQ(resistance(theta(2, 2, 2), GraphPoint::vertex(0), GraphPoint::vertex(1)), Rat(2, 3));
  EXPECT_EQ(resistance(theta(1, 2, 3), GraphPoint::vertex(0), GraphPoint::vertex(1)), parallel({1, 2, 3}));
}

TEST(Resistance, CircleArcDistance) {
  const Rat L(5);
  const MetrizedGraph c = loop(L);
  for (const Rat& s : {Rat(1, 3), Rat(1), Rat(5, 2), Rat(4)}) {
    EXPECT_EQ(resistance(c, GraphPoint::vertex(0), GraphPoint::on_edge(c, 0, s)), s * (L - s) / L);
  }
  // Two interior points at arc distance d.
  const Rat d = Rat(3, 2);
  EXPECT_EQ(resistance(c, GraphPoint::on_edge(c, 0, Rat(1)), GraphPoint::on_edge(c, 0, Rat(1) + d)), d * (L - d) / L);
}

TEST(Resistance, InteriorPointsMatchExplicitSubdivision) {
  for (const auto& g : sample_graphs()) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Rat s = g.edges()[e].length / 3;
      const MetrizedGraph split = g.subdivided(e, s);
      const std::size_t mid = split.vertex_count() - 1;
      const GraphPoint x = GraphPoint::on_edge(g, e, s);
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        EXPECT_EQ(resistance(g, x, GraphPoint::vertex(v)),
                  resistance(split, GraphPoint::vertex(mid), GraphPoint::vertex(v)));
      }
      for (std::size_t f = 0; f < g.edge_count(); ++f) {
        const Rat t = g.edges()[f].length / 2;
        // Edge f keeps its index in the subdivided graph; for f == e the surviving piece has length s.
        const GraphPoint y_split = f == e ? GraphPoint::on_edge(split, split.edge_count() - 1, t - s)
                                          : GraphPoint::on_edge(split, f, t);
        EXPECT_EQ(resistance(g, x, GraphPoint::on_edge(g, f, t)), resistance(split, GraphPoint::vertex(mid), y_split));
      }
    }
  }
}

TEST(Resistance, SymmetricAndZeroOnDiagonal) {
  const MetrizedGraph g = bridge_and_banana(1, 2, 3);
  const GraphPoint x = GraphPoint::on_edge(g, 1, Rat(1, 2));
  const GraphPoint y = GraphPoint::on_edge(g, 0, Rat(1, 4));
  EXPECT_EQ(resistance(g, x, y), resistance(g, y, x));
  EXPECT_EQ(resistance(g, x, x), Rat(0));
  EXPECT_GT(resistance(g, x, y), Rat(0));
}

TEST(Resistance, DisconnectedGraph) {
  const MetrizedGraph g({{"a", 1}, {"b", 1}}, {});
  EXPECT_THROW(ResistanceKernel{g}, ValidationError);
}

TEST(CanonicalMeasure, Examples) {
  const Measure circle = canonical_measure(loop(4, 0));
  EXPECT_EQ(circle.vertex_mass, std::vector<Rat>{Rat(0)});
  EXPECT_EQ(circle.edge_density, std::vector<Rat>{Rat(1, 4)});

  const Measure seg = canonical_measure(segment(3, 0, 0));
  EXPECT_EQ(seg.vertex_mass, (std::vector<Rat>{Rat(1, 2), Rat(1, 2)}));
  EXPECT_EQ(seg.edge_density, std::vector<Rat>{Rat(0)});

  const Measure loops = canonical_measure(two_loops(2, 5));
  EXPECT_EQ(loops.vertex_mass, std::vector<Rat>{Rat(-1)});
  EXPECT_EQ(loops.edge_density, (std::vector<Rat>{Rat(1, 2), Rat(1, 5)}));

  for (const auto& g : sample_graphs()) EXPECT_EQ(canonical_measure(g).total_mass(g), Rat(1));
}

TEST(AdmissibleMeasure, Examples) {
  const Measure l = admissible_measure(loop(3));
  EXPECT_EQ(l.vertex_mass, std::vector<Rat>{Rat(1, 2)});
  EXPECT_EQ(l.edge_density, std::vector<Rat>{Rat(1, 6)});

  const Measure s = admissible_measure(segment(3));
  EXPECT_EQ(s.vertex_mass, (std::vector<Rat>{Rat(1, 2), Rat(1, 2)}));
  EXPECT_EQ(s.edge_density, std::vector<Rat>{Rat(0)});

  const Measure t = admissible_measure(theta(2, 2, 2));
  EXPECT_EQ(t.vertex_mass, (std::vector<Rat>{Rat(0), Rat(0)}));
  EXPECT_EQ(t.edge_density, (std::vector<Rat>{Rat(1, 6), Rat(1, 6), Rat(1, 6)}));

  for (const auto& g : sample_graphs()) EXPECT_EQ(admissible_measure(g).total_mass(g), Rat(1));
  EXPECT_THROW(admissible_measure(loop(1, 0)), ValidationError);
}

TEST(Green, CircleClosedForm) {
  // Uniform measure on a circle of length L: every potential equals L/6, so g = L/12 - r/2.
  const Rat L(6);
  const MetrizedGraph c = loop(L, 0);
  const Measure mu = canonical_measure(c);
  const GraphPoint x = GraphPoint::on_edge(c, 0, Rat(1, 2));
  for (const Rat& s : {Rat(0), Rat(1), Rat(7, 3), Rat(5)}) {
    const GraphPoint y = s.is_zero() ? GraphPoint::vertex(0) : GraphPoint::on_edge(c, 0, s);
    EXPECT_EQ(green(c, mu, x, y), L / 12 - resistance(c, x, y) / 2);
  }
}

TEST(Green, SymmetricAndNormalized) {
  for (const auto& g : sample_graphs()) {
    const Measure mu = admissible_measure(g);
    const GreenFunction gf(ResistanceKernel(g), mu);
    std::vector<GraphPoint> pts;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) pts.push_back(GraphPoint::vertex(v));
    for (std::size_t e = 0; e < g.edge_count(); ++e) pts.push_back(GraphPoint::on_edge(g, e, g.edges()[e].length / 5));
    for (const auto& x : pts) {
      for (const auto& y : pts) ASSERT_EQ(gf(x, y), gf(y, x));
      // The integral of g(x, .) against mu, taken exactly through the per-edge quadratic.
      PiecewisePoly slice;
      slice.vertex_value.resize(g.vertex_count());
      for (std::size_t v = 0; v < g.vertex_count(); ++v) slice.vertex_value[v] = gf(x, GraphPoint::vertex(v));
      Rat integral(0);
      for (std::size_t v = 0; v < g.vertex_count(); ++v) integral += mu.vertex_mass[v] * slice.vertex_value[v];
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (mu.edge_density[e].is_zero()) continue;
        // g(x, .) is quadratic on each side of x; Simpson on each piece is exact.
        const Rat len = g.edges()[e].length;
        std::vector<Rat> cuts{Rat(0), len};
        if (!x.on_vertex && x.index == e) cuts = {Rat(0), x.offset, len};
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
          const Rat a = cuts[k];
          const Rat b = cuts[k + 1];
          auto at = [&](const Rat& s) {
            if (s.is_zero()) return gf(x, GraphPoint::vertex(g.edges()[e].u));
            if (s == len) return gf(x, GraphPoint::vertex(g.edges()[e].v));
            return gf(x, GraphPoint::on_edge(g, e, s));
          };
          integral += mu.edge_density[e] * (b - a) / 6 * (at(a) + 4 * at((a + b) / 2) + at(b));
        }
      }
      ASSERT_EQ(integral, Rat(0));
    }
  }
}

TEST(Green, RequiresUnitMass) {
  const MetrizedGraph g = loop(1);
  EXPECT_THROW(GreenFunction(ResistanceKernel(g), Rat(2) * admissible_measure(g)), ValidationError);
}

TEST(Green, DiagonalContinuousAtVertices) {
  for (const auto& g : sample_graphs()) {
    const PiecewisePoly diag = green_diagonal(g, admissible_measure(g));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edges()[e];
      const auto& c = diag.edge_coeff[e];
      EXPECT_EQ(c[0], diag.vertex_value[edge.u]);
      EXPECT_EQ(c[0] + c[1] * edge.length + c[2] * edge.length * edge.length, diag.vertex_value[edge.v]);
    }
  }
}

TEST(Invariants, Epsilon) {
  EXPECT_EQ(epsilon(loop(5)), Rat(5, 6));
  EXPECT_EQ(epsilon(segment(4)), Rat(4));
  const Rat a(1), b(2), c(3);
  EXPECT_EQ(epsilon(theta(a, b, c)), (a + b + c) / 6 + a * b * c / (6 * (a * b + b * c + c * a)));
  EXPECT_THROW(epsilon(loop(1, 0)), ValidationError);
}

TEST(Invariants, PhiAndDelta) {
  EXPECT_EQ(phi(point(2)), Rat(0));
  EXPECT_EQ(phi(loop(1)), Rat(1, 12));
  EXPECT_EQ(delta(point(3)), Rat(0));
  EXPECT_EQ(delta(theta(1, 2, 3)), Rat(6));
  EXPECT_EQ(delta(loop(7)), Rat(7));
}

TEST(Invariants, Homogeneity) {
  for (const auto& g : sample_graphs()) {
    const GraphInvariants base = evaluate(g);
    for (const Rat& t : {Rat(2), Rat(1, 3), Rat(7, 5)}) {
      const GraphInvariants s = evaluate(g.scaled(t));
      EXPECT_EQ(s.epsilon, t * base.epsilon);
      EXPECT_EQ(s.phi, t * base.phi);
      EXPECT_EQ(s.delta, t * base.delta);
    }
  }
}

TEST(Invariants, SubdivisionInvariance) {
  for (const auto& g : sample_graphs()) {
    const GraphInvariants base = evaluate(g);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const MetrizedGraph split = g.subdivided(e, g.edges()[e].length * Rat(2, 7));
      const GraphInvariants s = evaluate(split);
      EXPECT_EQ(s.epsilon, base.epsilon);
      EXPECT_EQ(s.phi, base.phi);
      EXPECT_EQ(s.delta, base.delta);
    }
  }
}

TEST(VerifyAdmissible, ZeroForAdmissibleMeasure) {
  for (const auto& g : sample_graphs()) EXPECT_EQ(verify_admissible(g, admissible_measure(g)), Rat(0));
}

TEST(VerifyAdmissible, DetectsPerturbation) {
  const MetrizedGraph s = segment(3);
  Measure mu = admissible_measure(s);
  mu.vertex_mass[0] += Rat(1, 100);
  mu.vertex_mass[1] -= Rat(1, 100);
  EXPECT_GT(verify_admissible(s, mu), Rat(0));

  const MetrizedGraph t = theta(1, 2, 3);
  EXPECT_GT(verify_admissible(t, canonical_measure(t)), Rat(0));
}
