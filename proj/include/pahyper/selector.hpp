#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pahyper/hypergraph.hpp"
#include "pahyper/rng.hpp"

namespace pahyper {

/// Degree-proportional vertex selection with additive smoothing gamma:
///
///     Pr[u] = (deg(u) + gamma) / (D + gamma * |V|)
///
/// over a population of vertices (the whole hypergraph, or one community).
/// A draw is a two-part mixture: with probability D / W pick a uniform entry
/// of the occurrence list (vertex v appears deg(v) times), otherwise a uniform
/// population member. Both parts are O(1).
class PreferentialSelector {
 public:
  explicit PreferentialSelector(double gamma);

  /// Population containing every vertex of `h`, with its current degree.
  static PreferentialSelector from_hypergraph(const Hypergraph& h, double gamma);
  /// Population restricted to vertices labeled `community`.
  static PreferentialSelector from_community(const Hypergraph& h, CommunityId community,
                                             double gamma);

  /// Adds v to the population with degree 0.
  void add_vertex(VertexId v);
  void record_degree_increment(VertexId v);

  VertexId select(Rng& rng) const;
  std::vector<VertexId> select_vertices(std::size_t n, Rng& rng) const;
  /// Appends n draws to `out`.
  void select_into(std::size_t n, Rng& rng, std::vector<VertexId>& out) const;

  bool contains(VertexId v) const { return v < member_mask_.size() && member_mask_[v]; }
  double gamma() const { return gamma_; }
  std::uint64_t degree_sum() const { return occurrences_.size(); }
  std::size_t population() const { return members_.size(); }
  /// W = D + gamma * |V|.
  double total_weight() const {
    return static_cast<double>(occurrences_.size()) + gamma_ * static_cast<double>(members_.size());
  }

  std::span<const VertexId> occurrences() const { return occurrences_; }
  std::span<const VertexId> members() const { return members_; }

  /// Exact probability that one draw returns v, computed from the mixture
  /// structure itself (linear scan of the occurrence list).
  double marginal(VertexId v) const;

 private:
  double gamma_;
  std::vector<VertexId> occurrences_;
  std::vector<VertexId> members_;
  std::vector<bool> member_mask_;
};

}  // namespace pahyper
