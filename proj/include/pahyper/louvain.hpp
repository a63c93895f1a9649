#pragma once

#include <cstdint>
#include <vector>

#include "pahyper/flatten.hpp"
#include "pahyper/modularity.hpp"

namespace pahyper {

/// Weighted graph modularity: sum_A w_in(A)/W - (vol_w(A) / 2W)^2, with W the
/// total edge weight and vol_w the sum of weighted degrees. Zero when W = 0.
double weighted_modularity(const WeightedGraph& g, const Partition& part);

struct LouvainOptions {
  std::uint64_t seed = 1;
  std::uint32_t max_levels = 32;
  /// A level (or a local-moving pass) must raise modularity by more than this.
  double min_gain = 1e-9;
};

struct LouvainResult {
  Partition partition;
  double modularity = 0.0;
  /// Modularity after each completed level; non-decreasing.
  std::vector<double> level_modularity;
};

/// Louvain-style detection: local moving followed by aggregation, repeated
/// until no level improves modularity by more than min_gain. Visit order is
/// shuffled once per level from the seed; among equally good target blocks
/// the lowest index wins. If the result would score below the one-block
/// partition (0) the one-block partition is returned instead.
LouvainResult louvain(const WeightedGraph& g, const LouvainOptions& options = {});

Partition detect_communities(const WeightedGraph& g, std::uint64_t seed,
                             std::uint32_t max_levels = 32);

/// Incremental bookkeeping used by the local-moving phase, exposed so the
/// O(deg) gain formula can be checked against a full recomputation.
class LocalMovingState {
 public:
  LocalMovingState(const WeightedGraph& g, const Partition& initial);

  /// Change in weighted modularity if v moves to block `target`.
  double move_gain(VertexId v, BlockId target) const;
  void move(VertexId v, BlockId target);
  BlockId block_of(VertexId v) const { return block_[v]; }
  Partition partition() const;

 private:
  const WeightedGraph& g_;
  std::vector<BlockId> block_;
  std::vector<double> block_total_;
};

}  // namespace pahyper
