#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pahyper/hypergraph.hpp"

namespace pahyper {

struct WeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  std::uint64_t weight = 0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Simple undirected graph with positive integer edge weights and no
/// self-loops. Edges are stored once with u < v, sorted by (u, v); a CSR
/// adjacency lists every edge from both endpoints.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Parallel (u, v) entries are merged by summing weights; u == v is rejected.
  WeightedGraph(std::size_t num_vertices, std::vector<WeightedEdge> edges);

  std::size_t num_vertices() const { return weighted_degree_.size(); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  /// Sum of edge weights.
  std::uint64_t total_weight() const { return total_weight_; }
  std::uint64_t weighted_degree(VertexId v) const { return weighted_degree_[v]; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::span<const std::uint64_t> neighbor_weights(VertexId v) const {
    return {adjacency_weights_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

 private:
  void build_from_sorted(std::size_t n);

  std::vector<WeightedEdge> edges_;
  std::vector<std::uint64_t> weighted_degree_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<std::uint64_t> adjacency_weights_;
  std::uint64_t total_weight_ = 0;

  friend WeightedGraph flatten(const Hypergraph&);
  friend WeightedGraph flatten_serial(const Hypergraph&);
};

/// Clique expansion: every unordered pair of distinct members of a hyperedge
/// adds weight 1 to that pair's edge. Repeated members collapse to one, so a
/// hyperedge never produces a self-loop. OpenMP-parallel pair generation.
WeightedGraph flatten(const Hypergraph& h);

/// Single-threaded reference implementation of flatten.
WeightedGraph flatten_serial(const Hypergraph& h);

}  // namespace pahyper
