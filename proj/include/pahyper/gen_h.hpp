#pragma once

#include <cstdint>
#include <vector>

#include "pahyper/cardinality.hpp"
#include "pahyper/hypergraph.hpp"
#include "pahyper/rng.hpp"
#include "pahyper/selector.hpp"

namespace pahyper {

/// Parameters of the general preferential-attachment process H.
///
/// At every step exactly one event fires:
///   p_v           add an isolated vertex
///   p_ve          add vertex v, draw y ~ Y, then m times add {v} + (y-1) chosen vertices
///   p_e[i]        draw x ~ X[i], then m times add x chosen vertices
///   remainder     nothing
struct HParams {
  double p_v = 0.0;
  double p_ve = 0.0;
  std::vector<double> p_e;
  CardinalityDistribution y_dist;
  std::vector<CardinalityDistribution> x_dists;
  std::uint32_t m = 1;
  double gamma = 0.0;
  /// Redraw cardinalities z >= max(2, ceil(t^{1/4})).
  bool enforce_t_quarter_cap = false;
  std::uint64_t steps = 0;

  std::size_t num_edge_kinds() const { return p_e.size(); }
  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

enum class HEventKind { vertex, vertex_with_edges, edges, nothing };

struct HEvent {
  HEventKind kind = HEventKind::nothing;
  /// Index i of X[i] for an edges event.
  std::size_t distribution = 0;
  friend bool operator==(const HEvent&, const HEvent&) = default;
};

struct HCheckpoint {
  std::uint64_t t = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t degree_sum = 0;
  /// W_t = D_t + gamma * |V_t|
  double weight = 0.0;
};

struct HRunStats {
  std::vector<HCheckpoint> checkpoints;
};

struct HRun {
  Hypergraph graph;
  HRunStats stats;
};

/// H_0: one vertex inside one hyperedge of cardinality 1.
Hypergraph initial_h();

/// Checkpoint cadence: t = 0, powers of two, and the final step.
bool is_checkpoint(std::uint64_t t, std::uint64_t final_step);

/// Draws a cardinality for step t, honouring the t^{1/4} cap when enabled
/// (100 rejections, then 1).
std::uint32_t draw_cardinality(const CardinalityDistribution& dist, bool cap, std::uint64_t t,
                               Rng& rng);

/// Applies one step. Random draws are consumed in the order: event, cardinality,
/// vertex selections. All m hyperedges of a step are drawn against the
/// pre-step selector; degree increments are applied afterwards.
HEvent h_step(Hypergraph& h, const HParams& params, PreferentialSelector& sel, std::uint64_t t,
              Rng& rng);

HRun generate_h(const HParams& params, std::uint64_t seed);

}  // namespace pahyper
