#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pahyper/gen_h.hpp"
#include "pahyper/rng.hpp"
#include "pahyper/selector.hpp"

using namespace pahyper;

namespace {

Hypergraph with_degrees(const std::vector<int>& degrees) {
  Hypergraph h;
  for (std::size_t v = 0; v < degrees.size(); ++v) h.add_vertex();
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    for (int i = 0; i < degrees[v]; ++i) h.add_hyperedge({static_cast<VertexId>(v)});
  }
  return h;
}

double formula(const Hypergraph& h, VertexId u, double gamma) {
  return (double(h.degree(u)) + gamma) / (double(h.degree_sum()) + gamma * double(h.num_vertices()));
}

}  // namespace

TEST(Rng, SameSeedSameSequence) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs |= x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, BelowStaysInRangeAndUniformIsHalfOpen) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    EXPECT_LT(rng.below(7), 7u);
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Rng, SingleOutcomeCategoricalConsumesNothing) {
  Rng a(5), b(5);
  const std::vector<double> w{1.0};
  EXPECT_EQ(a.categorical(w), 0u);
  EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, ReplicaSeedsDiffer) {
  EXPECT_NE(replica_seed(1, 0), replica_seed(1, 1));
  EXPECT_EQ(replica_seed(9, 3), replica_seed(9, 3));
}

TEST(Selector, EqualDegreesGiveQuarterEach) {
  const Hypergraph h = with_degrees({1, 1, 1, 1});
  for (double gamma : {0.0, 0.5, 3.0}) {
    const auto sel = PreferentialSelector::from_hypergraph(h, gamma);
    for (VertexId v = 0; v < 4; ++v) EXPECT_DOUBLE_EQ(sel.marginal(v), 0.25);
  }
}

TEST(Selector, PureDegreeProportional) {
  const auto sel = PreferentialSelector::from_hypergraph(with_degrees({3, 1}), 0.0);
  EXPECT_DOUBLE_EQ(sel.marginal(0), 0.75);
  EXPECT_DOUBLE_EQ(sel.marginal(1), 0.25);
}

TEST(Selector, SmoothedProbabilitiesAndFrequencies) {
  const auto sel = PreferentialSelector::from_hypergraph(with_degrees({3, 1}), 2.0);
  EXPECT_DOUBLE_EQ(sel.marginal(0), 5.0 / 8.0);
  EXPECT_DOUBLE_EQ(sel.marginal(1), 3.0 / 8.0);
  Rng rng(2024);
  const int n = 1'000'000;
  int zero = 0;
  for (int i = 0; i < n; ++i) zero += sel.select(rng) == 0;
  const double p = 5.0 / 8.0;
  const double sigma = std::sqrt(n * p * (1 - p));
  EXPECT_LT(std::abs(zero - n * p), 3 * sigma);
}

TEST(Selector, IncrementGrowsOccurrenceList) {
  Hypergraph h = with_degrees({1, 1});
  auto sel = PreferentialSelector::from_hypergraph(h, 0.0);
  EXPECT_EQ(sel.degree_sum(), 2u);
  sel.record_degree_increment(1);
  EXPECT_EQ(sel.degree_sum(), 3u);
  sel.record_degree_increment(1);
  EXPECT_DOUBLE_EQ(sel.marginal(1), 3.0 / 4.0);
  EXPECT_THROW(sel.record_degree_increment(9), std::out_of_range);
}

TEST(Selector, SelectionLeavesStateUnchanged) {
  const auto sel = PreferentialSelector::from_hypergraph(with_degrees({2, 5, 0}), 1.0);
  const auto before = std::vector<VertexId>(sel.occurrences().begin(), sel.occurrences().end());
  Rng rng(3);
  const auto picks = sel.select_vertices(50, rng);
  EXPECT_EQ(picks.size(), 50u);
  EXPECT_EQ(std::vector<VertexId>(sel.occurrences().begin(), sel.occurrences().end()), before);
}

TEST(Selector, EmptyPopulationThrows) {
  PreferentialSelector sel(1.0);
  Rng rng(1);
  EXPECT_THROW(sel.select(rng), std::logic_error);
  EXPECT_THROW(PreferentialSelector(-1.0), std::invalid_argument);
}

TEST(Selector, MarginalsTrackFormulaAfterRandomEdges) {
  Hypergraph h;
  h.add_vertex();
  h.add_hyperedge({0});
  const double gamma = 0.7;
  auto sel = PreferentialSelector::from_hypergraph(h, gamma);
  std::mt19937_64 eng(11);
  for (int step = 0; step < 100; ++step) {
    if (step % 3 == 0) sel.add_vertex(h.add_vertex());
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(h.num_vertices() - 1));
    std::vector<VertexId> e{pick(eng), pick(eng)};
    for (VertexId v : e) sel.record_degree_increment(v);
    h.add_hyperedge(e);
  }
  double total = 0.0;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    EXPECT_NEAR(sel.marginal(v), formula(h, v, gamma), 1e-15);
    total += sel.marginal(v);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(sel.total_weight(), double(h.degree_sum()) + gamma * double(h.num_vertices()));
}

TEST(Selector, MixtureIdentityForRandomConfigurations) {
  std::mt19937_64 eng(99);
  std::uniform_int_distribution<int> deg(0, 9);
  std::uniform_real_distribution<double> gam(0.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> degrees(2 + trial % 7);
    for (auto& d : degrees) d = deg(eng);
    degrees[0] += 1;  // keep D > 0
    const double gamma = gam(eng);
    const Hypergraph h = with_degrees(degrees);
    const auto sel = PreferentialSelector::from_hypergraph(h, gamma);
    const double D = double(h.degree_sum()), n = double(h.num_vertices());
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      const double mixture = (D / (D + gamma * n)) * (double(h.degree(v)) / D) +
                             (gamma * n / (D + gamma * n)) * (1.0 / n);
      EXPECT_NEAR(mixture, formula(h, v, gamma), 1e-14);
      EXPECT_NEAR(sel.marginal(v), formula(h, v, gamma), 1e-14);
    }
  }
}

TEST(Selector, HugeGammaApproachesUniform) {
  const Hypergraph h = with_degrees({10, 1, 0, 4});
  const auto sel = PreferentialSelector::from_hypergraph(h, 1e6 * double(h.degree_sum()));
  for (VertexId v = 0; v < 4; ++v) EXPECT_LT(std::abs(sel.marginal(v) - 0.25), 1e-6);
}

TEST(Selector, SameSeedGivesIdenticalHypergraphs) {
  HParams p;
  p.p_v = 0.2;
  p.p_ve = 0.4;
  p.p_e = {0.4};
  p.y_dist = CardinalityDistribution::uniform_int(2, 4);
  p.x_dists = {CardinalityDistribution::constant(3)};
  p.gamma = 1.5;
  p.steps = 5000;
  EXPECT_EQ(generate_h(p, 17).graph, generate_h(p, 17).graph);
  EXPECT_FALSE(generate_h(p, 17).graph == generate_h(p, 18).graph);
}
