#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pahyper/hypergraph.hpp"

namespace pahyper {

using BlockId = std::uint32_t;

/// Assignment of every vertex to exactly one block. Block ids are kept
/// compact (0..num_blocks-1, numbered by first appearance), so two label
/// vectors describing the same set partition compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(const std::vector<std::uint32_t>& labels);

  static Partition singletons(std::size_t n);
  static Partition one_block(std::size_t n);

  std::size_t size() const { return block_of_.size(); }
  std::uint32_t num_blocks() const { return num_blocks_; }
  BlockId block_of(VertexId v) const { return block_of_[v]; }
  const std::vector<BlockId>& labels() const { return block_of_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<BlockId> block_of_;
  std::uint32_t num_blocks_ = 0;
};

struct BlockTerm {
  std::uint64_t volume = 0;
  std::uint64_t internal_edges = 0;
  double edge_contribution = 0.0;
  double degree_tax = 0.0;
};

/// Score split into edge contribution minus degree tax, with per-block terms.
struct ModularityBreakdown {
  double edge_contribution = 0.0;
  double degree_tax = 0.0;
  double score = 0.0;
  std::vector<BlockTerm> per_block;
};

/// Empirical hyperedge-size profile: a[l] = |E_l| / |E|, delta = vol(V) / |E|.
struct CardinalityProfile {
  std::map<std::uint32_t, double> a;
  double delta = 0.0;

  std::uint32_t max_cardinality() const { return a.empty() ? 0 : a.rbegin()->first; }
};

CardinalityProfile cardinality_profile(const Hypergraph& h);

/// Graph modularity on a 2-uniform hypergraph:
///   sum_A |E(A)|/|E| - (vol(A) / 2|E|)^2.
/// A self-loop {v, v} is internal to v's block and adds 2 to vol.
/// Throws if some edge does not have cardinality 2. No edges gives 0.
ModularityBreakdown graph_modularity_score(const Hypergraph& g, const Partition& part);

/// Hypergraph modularity:
///   sum_A |E(A)|/|E| - sum_l (|E_l|/|E|) (vol(A)/vol(V))^l
/// where an edge lies within A when every member (with multiplicity) is in A
/// and l counts multiplicity. No edges gives 0. OpenMP-parallel over edges.
ModularityBreakdown hypergraph_modularity_score(const Hypergraph& h, const Partition& part);

/// Single-threaded reference implementation of hypergraph_modularity_score.
ModularityBreakdown hypergraph_modularity_score_serial(const Hypergraph& h, const Partition& part);

struct BruteForceResult {
  Partition partition;
  double modularity = 0.0;
};

inline constexpr std::size_t kBruteForceMaxVertices = 12;

/// Exact maximum of hypergraph modularity over every set partition,
/// enumerated as restricted-growth strings. First maximizer in enumeration
/// order wins ties.
BruteForceResult brute_force_modularity(const Hypergraph& h);

}  // namespace pahyper
