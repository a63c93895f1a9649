#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pahyper/modularity.hpp"
#include "oracles.hpp"

using namespace pahyper;

namespace {

Hypergraph from_edges(std::size_t n, const std::vector<std::vector<VertexId>>& edges) {
  Hypergraph h;
  for (std::size_t v = 0; v < n; ++v) h.add_vertex();
  for (const auto& e : edges) h.add_hyperedge(e);
  return h;
}

}  // namespace

TEST(Partition, CompactsLabels) {
  const Partition a({7, 7, 3, 9});
  EXPECT_EQ(a.labels(), (std::vector<BlockId>{0, 0, 1, 2}));
  EXPECT_EQ(a.num_blocks(), 3u);
  EXPECT_EQ(a, Partition({1, 1, 0, 5}));
  EXPECT_EQ(Partition::singletons(3).num_blocks(), 3u);
  EXPECT_EQ(Partition::one_block(3).num_blocks(), 1u);
}

TEST(GraphModularity, SingleEdge) {
  const auto g = from_edges(2, {{0, 1}});
  EXPECT_DOUBLE_EQ(graph_modularity_score(g, Partition::one_block(2)).score, 0.0);
  EXPECT_DOUBLE_EQ(graph_modularity_score(g, Partition::singletons(2)).score, -0.5);
}

TEST(GraphModularity, TwoComponents) {
  const auto g = from_edges(4, {{0, 1}, {2, 3}});
  const auto b = graph_modularity_score(g, Partition({0, 0, 1, 1}));
  EXPECT_DOUBLE_EQ(b.score, 0.5);
  EXPECT_DOUBLE_EQ(b.edge_contribution, 1.0);
  EXPECT_DOUBLE_EQ(b.degree_tax, 0.5);
  ASSERT_EQ(b.per_block.size(), 2u);
  EXPECT_EQ(b.per_block[0].volume, 2u);
  EXPECT_EQ(b.per_block[1].internal_edges, 1u);
}

TEST(GraphModularity, SelfLoopIsInternal) {
  const auto g = from_edges(2, {{0, 0}, {0, 1}});
  const Partition part({0, 1});
  const auto b = graph_modularity_score(g, part);
  EXPECT_NEAR(b.score, oracle::naive_graph_modularity(g, part.labels()), 1e-15);
  EXPECT_EQ(b.per_block[0].volume, 3u);
}

TEST(GraphModularity, RejectsOtherCardinalitiesAndEmpty) {
  EXPECT_THROW(graph_modularity_score(from_edges(3, {{0, 1, 2}}), Partition::one_block(3)),
               std::invalid_argument);
  EXPECT_DOUBLE_EQ(graph_modularity_score(from_edges(3, {}), Partition::one_block(3)).score, 0.0);
  EXPECT_THROW(graph_modularity_score(from_edges(3, {{0, 1}}), Partition::one_block(2)),
               std::invalid_argument);
}

TEST(HypergraphModularity, OneBlockScoresZero) {
  std::mt19937_64 eng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_hypergraph(eng, 8, 10, 5);
    EXPECT_NEAR(hypergraph_modularity_score(h, Partition::one_block(8)).score, 0.0, 1e-15);
  }
}

TEST(HypergraphModularity, DisjointTriples) {
  const auto h = from_edges(6, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_DOUBLE_EQ(hypergraph_modularity_score(h, Partition({0, 0, 0, 1, 1, 1})).score, 0.75);
}

TEST(HypergraphModularity, EmptyEdgeSetScoresZero) {
  EXPECT_DOUBLE_EQ(hypergraph_modularity_score(from_edges(3, {}), Partition::singletons(3)).score, 0.0);
}

TEST(HypergraphModularity, AgreesWithGraphScoreOnTwoUniform) {
  std::mt19937_64 eng(2);
  for (int trial = 0; trial < 50; ++trial) {
    Hypergraph g;
    for (int v = 0; v < 9; ++v) g.add_vertex();
    std::uniform_int_distribution<VertexId> pick(0, 8);
    for (int e = 0; e < 15; ++e) g.add_hyperedge({pick(eng), pick(eng)});
    const Partition part(oracle::random_labels(eng, 9, 3));
    const double q1 = graph_modularity_score(g, part).score;
    EXPECT_NEAR(hypergraph_modularity_score(g, part).score, q1, 1e-14);
    EXPECT_NEAR(oracle::naive_graph_modularity(g, part.labels()), q1, 1e-14);
  }
}

TEST(HypergraphModularity, MatchesNaiveRecomputation) {
  std::mt19937_64 eng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const auto h = oracle::random_hypergraph(eng, n, 1 + trial % 12, 6);
    const auto labels = oracle::random_labels(eng, n, 1 + trial % 4);
    const Partition part(labels);
    const auto b = hypergraph_modularity_score(h, part);
    EXPECT_NEAR(b.score, oracle::naive_hypergraph_modularity(h, labels), 1e-12);
    EXPECT_NEAR(b.score, b.edge_contribution - b.degree_tax, 1e-15);
    EXPECT_GT(b.score, -1.0);
    EXPECT_LT(b.score, 1.0);
    EXPECT_NEAR(hypergraph_modularity_score_serial(h, part).score, b.score, 1e-14);
    std::uint64_t vol = 0, internal = 0;
    for (const auto& t : b.per_block) {
      vol += t.volume;
      internal += t.internal_edges;
    }
    EXPECT_EQ(vol, h.degree_sum());
    EXPECT_LE(internal, h.num_edges());
  }
}

TEST(HypergraphModularity, InvariantUnderRelabeling) {
  std::mt19937_64 eng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 9;
    const auto h = oracle::random_hypergraph(eng, n, 12, 4);
    const auto labels = oracle::random_labels(eng, n, 3);
    const double q = hypergraph_modularity_score(h, Partition(labels)).score;

    std::vector<std::uint32_t> shifted(labels);
    for (auto& l : shifted) l = 10 - l;
    EXPECT_NEAR(hypergraph_modularity_score(h, Partition(shifted)).score, q, 1e-14);

    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), eng);
    Hypergraph moved;
    for (std::size_t v = 0; v < n; ++v) moved.add_vertex();
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      std::vector<VertexId> members;
      for (VertexId v : h.edge(e)) members.push_back(perm[v]);
      moved.add_hyperedge(members);
    }
    std::vector<std::uint32_t> moved_labels(n);
    for (std::size_t v = 0; v < n; ++v) moved_labels[perm[v]] = labels[v];
    EXPECT_NEAR(hypergraph_modularity_score(moved, Partition(moved_labels)).score, q, 1e-14);
  }
}

TEST(CardinalityProfile, UniformAndMixed) {
  std::vector<std::vector<VertexId>> twenty(3);
  for (auto& e : twenty) {
    for (VertexId v = 0; v < 20; ++v) e.push_back(v);
  }
  const auto u = cardinality_profile(from_edges(20, twenty));
  EXPECT_EQ(u.a, (std::map<std::uint32_t, double>{{20, 1.0}}));
  EXPECT_DOUBLE_EQ(u.delta, 20.0);
  const auto m = cardinality_profile(from_edges(4, {{0, 1}, {2, 3}, {0, 1, 2}, {1, 2, 3}}));
  EXPECT_EQ(m.a, (std::map<std::uint32_t, double>{{2, 0.5}, {3, 0.5}}));
  EXPECT_DOUBLE_EQ(m.delta, 2.5);
  EXPECT_EQ(m.max_cardinality(), 3u);
  EXPECT_THROW(cardinality_profile(from_edges(2, {})), std::invalid_argument);
}

TEST(BruteForce, TwoTriangles) {
  const auto h = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto best = brute_force_modularity(h);
  EXPECT_NEAR(best.modularity, 0.5, 1e-15);
  EXPECT_EQ(best.partition, Partition({0, 0, 0, 1, 1, 1}));
}

TEST(BruteForce, SingleEdgeWithIsolatedVertices) {
  EXPECT_NEAR(brute_force_modularity(from_edges(4, {{0, 1, 2, 3}})).modularity, 0.0, 1e-15);
  EXPECT_NEAR(brute_force_modularity(from_edges(5, {{1, 3}})).modularity, 0.0, 1e-15);
}

TEST(BruteForce, DominatesRandomPartitions) {
  std::mt19937_64 eng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = oracle::random_hypergraph(eng, 7, 8, 4);
    const auto best = brute_force_modularity(h);
    EXPECT_NEAR(hypergraph_modularity_score(h, best.partition).score, best.modularity, 1e-14);
    for (int k = 0; k < 50; ++k) {
      const Partition part(oracle::random_labels(eng, 7, 1 + k % 5));
      EXPECT_LE(hypergraph_modularity_score(h, part).score, best.modularity + 1e-14);
    }
  }
}

TEST(BruteForce, RejectsLargeInputs) {
  Hypergraph h;
  for (std::size_t v = 0; v <= kBruteForceMaxVertices; ++v) h.add_vertex();
  h.add_hyperedge({0, 1});
  EXPECT_THROW(brute_force_modularity(h), std::invalid_argument);
}
