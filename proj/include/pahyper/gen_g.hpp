#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pahyper/cardinality.hpp"
#include "pahyper/gen_h.hpp"
#include "pahyper/hypergraph.hpp"
#include "pahyper/rng.hpp"
#include "pahyper/selector.hpp"

namespace pahyper {

/// Sorted, duplicate-free set of community indices.
using CommunitySet = std::vector<CommunityId>;

/// Sparse inter-community hyperedge profile: probability P(S) for each
/// non-empty community set S that a new hyperedge spans. Only sets with an
/// entry can be drawn, so at most 2^r - 1 values are ever stored.
class InterCommunityProfile {
 public:
  InterCommunityProfile() = default;

  /// Validates indices and set sizes; probabilities summing to within 1e-6
  /// of 1 are renormalized, anything further off is rejected.
  static InterCommunityProfile create(std::uint32_t r,
                                      std::vector<std::pair<CommunitySet, double>> entries);

  /// P({i}) = (1 - alpha) / r on the diagonal, remaining mass alpha spread
  /// evenly over all 2-community sets.
  static InterCommunityProfile diagonal(std::uint32_t r, double alpha);

  std::uint32_t num_communities() const { return r_; }
  /// d: largest |S| carrying an entry.
  std::uint32_t max_set_size() const { return d_; }
  const std::vector<std::pair<CommunitySet, double>>& entries() const { return entries_; }
  double probability(const CommunitySet& set) const;

  /// Index into entries(); a single-entry profile consumes no randomness.
  std::size_t sample(Rng& rng) const { return rng.categorical(probs_); }

 private:
  std::uint32_t r_ = 0;
  std::uint32_t d_ = 0;
  std::vector<std::pair<CommunitySet, double>> entries_;
  std::vector<double> probs_;
};

/// Parameters of the community-structured process G.
struct GParams {
  /// Probability of a vertex step; otherwise a hyperedge step.
  double p = 0.5;
  /// Community membership probabilities m_1..m_r.
  std::vector<double> M;
  InterCommunityProfile profile;
  /// X^{(1..r)}: each community of a new hyperedge is assigned one of these
  /// uniformly at random and contributes that many chosen vertices.
  std::vector<CardinalityDistribution> x_dists;
  double gamma = 0.0;
  std::uint64_t steps = 0;
  /// Optional fixed-size mode: the hyperedge's total cardinality k is drawn
  /// from this distribution instead, every community in S gets one slot and
  /// the max(k, |S|) - |S| remaining slots go to uniformly chosen members of S.
  std::optional<CardinalityDistribution> edge_size;

  std::uint32_t num_communities() const { return static_cast<std::uint32_t>(M.size()); }
  void validate() const;
};

enum class GEventKind { vertex, hyperedge };

struct GEvent {
  GEventKind kind = GEventKind::vertex;
  /// Community of the new vertex.
  CommunityId community = 0;
  /// Index of the drawn set in profile.entries().
  std::size_t set_index = 0;
};

struct GCheckpoint {
  std::uint64_t t = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::vector<std::uint64_t> community_sizes;
  std::vector<std::uint64_t> community_degree_sums;
};

struct GRunStats {
  std::vector<GCheckpoint> checkpoints;
};

struct GRun {
  Hypergraph graph;
  GRunStats stats;
};

/// G_0: r vertices, one per community, each inside its own cardinality-1 edge.
Hypergraph initial_g(std::uint32_t r);

/// One step of G. Draw order: event, community/set, distribution assignments
/// and counts, vertex selections. Selections use the pre-step state.
GEvent g_step(Hypergraph& g, const GParams& params, std::vector<PreferentialSelector>& selectors,
              Rng& rng);

GRun generate_g(const GParams& params, std::uint64_t seed);

/// s_j = sum of P(S) over S containing j.
std::vector<double> community_marginals(const InterCommunityProfile& profile);

/// Single-community view of G as an instance of H: p_v = p m_j, p_ve = 0,
/// p_e^{(i)} = (1-p) s_j / r, same X distributions, m = 1.
HParams reduce_community(const GParams& params, CommunityId j);

}  // namespace pahyper
