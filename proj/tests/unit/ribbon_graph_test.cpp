#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

#include "symvol/algebra/rational.hpp"
#include "symvol/ribbon/enumerate.hpp"
#include "symvol/ribbon/ribbon_graph.hpp"

namespace symvol::ribbon {
namespace {

Permutation cycles(std::size_t size, std::vector<Cycle> c) { return Permutation::from_cycles(size, c); }

// The worked example: gamma0 = (1 5 3)(2 4 6 8 7), gamma1 = (1 2)(3 4)(5 6)(7 8), 0-based.
RibbonGraph figure_example() {
  return RibbonGraph::make(cycles(8, {{0, 4, 2}, {1, 3, 5, 7, 6}}), cycles(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
}

RibbonGraph theta() {
  return RibbonGraph::make(cycles(6, {{0, 1, 2}, {3, 4, 5}}), cycles(6, {{0, 3}, {1, 5}, {2, 4}}));
}

RibbonGraph one_vertex_trivalent_torus() {
  return RibbonGraph::make(cycles(6, {{0, 1, 3}, {2, 4, 5}}), cycles(6, {{0, 2}, {1, 4}, {3, 5}}));
}

RibbonGraph one_vertex_torus() {
  return RibbonGraph::make(cycles(4, {{0, 1, 2, 3}}), cycles(4, {{0, 2}, {1, 3}}));
}

RibbonGraph relabel(const RibbonGraph& g, const std::vector<std::size_t>& sigma) {
  std::vector<std::size_t> g0(g.half_edges());
  std::vector<std::size_t> g1(g.half_edges());
  for (std::size_t h = 0; h < g.half_edges(); ++h) {
    g0[sigma[h]] = sigma[g.gamma0()(h)];
    g1[sigma[h]] = sigma[g.gamma1()(h)];
  }
  std::map<std::size_t, int> labels;
  for (std::size_t b = 0; b < g.boundary_count(); ++b) labels[sigma[g.boundary_starts()[b]]] = g.labels()[b];
  return RibbonGraph::make(Permutation(g0), Permutation(g1), labels);
}

Rational q(long p, long r = 1) { return Rational(BigInt(p), BigInt(r)); }

TEST(Permutation, CompositionAppliesRightFirst) {
  const auto a = cycles(3, {{0, 1}});
  const auto b = cycles(3, {{1, 2}});
  EXPECT_EQ(compose(a, b)(1), 2u);
  EXPECT_EQ(compose(a, b)(0), 1u);
  EXPECT_EQ(compose(b, a)(0), 2u);
}

TEST(Permutation, CyclesAndInverse) {
  const auto p = cycles(6, {{3, 1, 4}, {5, 0}});
  EXPECT_EQ(p.cycles(), (std::vector<Cycle>{{0, 5}, {1, 4, 3}, {2}}));
  EXPECT_EQ(compose(p, p.inverse()), Permutation::identity(6));
  EXPECT_EQ(p.cycle_count(), 3u);
  EXPECT_THROW(cycles(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(cycles(3, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST(RibbonGraph, FigureExampleBoundaries) {
  const auto g = figure_example();
  EXPECT_EQ(g.gamma2(), cycles(8, {{0, 6, 5}, {1, 2}, {3, 4}, {7}}));
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.boundary_count(), 4u);
  EXPECT_EQ(graph_type(g), (GraphType{0, 4}));
}

TEST(RibbonGraph, SmallTypes) {
  EXPECT_EQ(graph_type(theta()), (GraphType{0, 3}));
  EXPECT_EQ(graph_type(one_vertex_trivalent_torus()), (GraphType{1, 1}));
  EXPECT_EQ(graph_type(one_vertex_torus()), (GraphType{1, 1}));
  EXPECT_TRUE(theta().is_trivalent());
  EXPECT_FALSE(one_vertex_torus().is_trivalent());
}

TEST(RibbonGraph, ValidationErrorsAreDistinct) {
  auto kind_of = [](auto&& build) {
    try {
      build();
    } catch (const GraphError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return GraphErrorKind::kBadType;
  };
  EXPECT_EQ(kind_of([] { RibbonGraph::make(cycles(4, {{0, 1, 2, 3}}), Permutation::identity(4)); }),
            GraphErrorKind::kFixedPointInEdges);
  EXPECT_EQ(kind_of([] { RibbonGraph::make(cycles(4, {{0, 1, 2, 3}}), cycles(4, {{0, 1, 2, 3}})); }),
            GraphErrorKind::kEdgesNotInvolution);
  EXPECT_EQ(kind_of([] { RibbonGraph::make(cycles(4, {{0, 1}, {2, 3}}), cycles(4, {{0, 2}, {1, 3}})); }),
            GraphErrorKind::kShortVertexCycle);
  EXPECT_EQ(kind_of([] {
              RibbonGraph::make(cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}), cycles(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}}));
            }),
            GraphErrorKind::kDisconnected);
  EXPECT_EQ(kind_of([] { RibbonGraph::make(cycles(4, {{0, 1, 2, 3}}), cycles(6, {{0, 1}})); }),
            GraphErrorKind::kSizeMismatch);
  EXPECT_EQ(kind_of([] { theta().relabeled({1, 1, 2}); }), GraphErrorKind::kBadLabeling);
  EXPECT_EQ(kind_of([] { theta().relabeled({1, 2}); }), GraphErrorKind::kBadLabeling);
}

TEST(Automorphisms, FigureTwoOrders) {
  EXPECT_EQ(automorphisms(one_vertex_trivalent_torus(), false).size(), 6u);
  EXPECT_EQ(automorphisms(one_vertex_torus(), false).size(), 4u);
  EXPECT_EQ(automorphisms(theta(), false).size(), 6u);
  EXPECT_EQ(automorphisms(theta(), true).size(), 1u);
}

TEST(Automorphisms, CommuteWithStructure) {
  for (const auto& g : {figure_example(), theta(), one_vertex_trivalent_torus(), one_vertex_torus()}) {
    for (bool labeled : {false, true}) {
      const auto autos = automorphisms(g, labeled);
      EXPECT_EQ(autos.size(), canonical_form(g, labeled).automorphism_count);
      for (const auto& a : autos) {
        EXPECT_EQ(compose(a, g.gamma0()), compose(g.gamma0(), a));
        EXPECT_EQ(compose(a, g.gamma1()), compose(g.gamma1(), a));
        if (labeled) {
          for (std::size_t h = 0; h < g.half_edges(); ++h) {
            EXPECT_EQ(g.label_of_boundary(g.boundary_of(a(h))), g.label_of_boundary(g.boundary_of(h)));
          }
        }
      }
    }
  }
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937 rng(23);
  for (const auto& g : {figure_example(), theta(), one_vertex_trivalent_torus()}) {
    const auto reference = canonical_form(g, true).code;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::size_t> sigma(g.half_edges());
      std::iota(sigma.begin(), sigma.end(), 0);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      const auto moved = relabel(g, sigma);
      EXPECT_EQ(canonical_form(moved, true).code, reference);
      EXPECT_EQ(canonical_representative(moved, true).gamma0(), canonical_representative(g, true).gamma0());
    }
  }
}

TEST(CanonicalForm, LabelsDistinguishDumbbells) {
  const auto dumbbell = RibbonGraph::make(cycles(6, {{0, 1, 2}, {3, 4, 5}}), cycles(6, {{0, 1}, {2, 3}, {4, 5}}));
  ASSERT_EQ(graph_type(dumbbell), (GraphType{0, 3}));
  std::set<std::vector<std::size_t>> codes;
  std::vector<int> labels{1, 2, 3};
  do {
    codes.insert(canonical_form(dumbbell.relabeled(labels), true).code);
  } while (std::next_permutation(labels.begin(), labels.end()));
  EXPECT_EQ(codes.size(), 3u);
}

TEST(Enumerate, TorusWithOneBoundary) {
  const auto classes = enumerate(1, 1);
  ASSERT_EQ(classes.size(), 2u);
  std::multiset<std::size_t> orders;
  for (const auto& c : classes) orders.insert(c.automorphisms);
  EXPECT_EQ(orders, (std::multiset<std::size_t>{4, 6}));

  EnumerationOptions trivalent;
  trivalent.trivalent_only = true;
  const auto top = enumerate(1, 1, trivalent);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].representative.edge_count(), 3u);
  EXPECT_EQ(top[0].automorphisms, 6u);
}

TEST(Enumerate, PairOfPantsHasSevenLabeledGraphs) {
  const auto classes = enumerate(0, 3);
  EXPECT_EQ(labeled_count(classes), 7u);
  for (const auto& c : classes) {
    for (const auto& l : c.labelings) EXPECT_EQ(l.automorphisms, 1u);
  }
  EnumerationOptions trivalent;
  trivalent.trivalent_only = true;
  EXPECT_EQ(labeled_count(enumerate(0, 3, trivalent)), 4u);
}

// Signed count of cells: sum over labeled graphs (-1)^e / |Aut| equals
// (-1)^n chi(M_{g,n}), with chi(M_{0,3}) = 1, chi(M_{1,1}) = -1/12 and
// chi(M_{g,n+1}) = (2 - 2g - n) chi(M_{g,n}).
TEST(Enumerate, SignedCellCountIsEulerCharacteristic) {
  auto chi = [](int g, int n) {
    Rational value = g == 0 ? q(1) : q(-1, 12);
    for (int m = g == 0 ? 3 : 1; m < n; ++m) value *= q(2 - 2 * g - m);
    return value;
  };
  for (const auto& [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
    Rational signed_count;
    for (const auto& c : enumerate(g, n)) {
      for (const auto& l : c.labelings) {
        const long sign = l.graph.edge_count() % 2 == 0 ? 1 : -1;
        signed_count += q(sign, static_cast<long>(l.automorphisms));
      }
    }
    EXPECT_EQ(signed_count, (n % 2 == 0 ? q(1) : q(-1)) * chi(g, n)) << "(" << g << "," << n << ")";
  }
}

TEST(Enumerate, EveryGraphIsValidAndOfRequestedType) {
  for (const auto& [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
    for (const auto& c : enumerate(g, n)) {
      EXPECT_EQ(graph_type(c.representative), (GraphType{g, n}));
      EXPECT_EQ(automorphisms(c.representative, false).size(), c.automorphisms);
      for (const auto& l : c.labelings) {
        EXPECT_EQ(graph_type(l.graph), (GraphType{g, n}));
        EXPECT_EQ(automorphisms(l.graph, true).size(), l.automorphisms);
        for (std::size_t h = 0; h < l.graph.half_edges(); ++h) {
          EXPECT_GE(l.graph.degree(h), 3u);
          EXPECT_NE(l.graph.gamma1()(h), h);
        }
      }
    }
  }
}

TEST(Enumerate, OrbitCountingOfLabelings) {
  // Labelings of a class form the orbits of its automorphism group on the n!
  // labelings, so sum |Aut| / |Aut_labeled| over them is n!.
  for (const auto& [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 2}}) {
    for (const auto& c : enumerate(g, n)) {
      Rational total;
      for (const auto& l : c.labelings) total += q(static_cast<long>(c.automorphisms), static_cast<long>(l.automorphisms));
      long factorial = 1;
      for (int i = 2; i <= n; ++i) factorial *= i;
      EXPECT_EQ(total, q(factorial));
    }
  }
}

TEST(Enumerate, StableUnderShuffledCandidates) {
  const auto reference = enumerate(0, 4);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    EnumerationOptions options;
    options.shuffle_seed = seed;
    const auto shuffled = enumerate(0, 4, options);
    ASSERT_EQ(shuffled.size(), reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i) {
      EXPECT_EQ(shuffled[i].representative.gamma0(), reference[i].representative.gamma0());
      EXPECT_EQ(shuffled[i].representative.gamma1(), reference[i].representative.gamma1());
      EXPECT_EQ(shuffled[i].labelings.size(), reference[i].labelings.size());
    }
  }
}

TEST(Enumerate, ResourceGuard) {
  EXPECT_THROW(enumerate(2, 1), ResourceLimitError);
  EnumerationOptions tight;
  tight.max_half_edges = 4;
  EXPECT_THROW(enumerate(1, 1, tight), ResourceLimitError);
  EXPECT_THROW(enumerate(0, 2), std::invalid_argument);
}

TEST(Enumerate, LimitFromEnvironment) {
  ::setenv(kHalfEdgeLimitVariable, "20", 1);
  EXPECT_EQ(half_edge_limit_from_environment(), 20u);
  ::setenv(kHalfEdgeLimitVariable, "nonsense", 1);
  EXPECT_THROW(half_edge_limit_from_environment(), std::invalid_argument);
  ::unsetenv(kHalfEdgeLimitVariable);
  EXPECT_EQ(half_edge_limit_from_environment(), kDefaultHalfEdgeLimit);
}

}  // namespace
}  // namespace symvol::ribbon
