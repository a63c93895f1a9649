#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pahyper/cardinality.hpp"
#include "pahyper/config.hpp"
#include "pahyper/gen_g.hpp"
#include "pahyper/gen_h.hpp"
#include "pahyper/modularity.hpp"

namespace pahyper {

/// Flatten, run Louvain on the weighted graph, score the partition with
/// hypergraph modularity on the original hypergraph.
struct DetectionScore {
  Partition partition;
  double q2 = 0.0;
  double flattened_q = 0.0;
};
DetectionScore detect_and_score(const Hypergraph& h, std::uint64_t seed);

/// Planted-partition model with uniform M, the diagonal profile and
/// k-uniform hyperedges.
struct PlantedSettings {
  std::uint32_t r = 47;
  std::uint32_t uniformity = 2;
  std::uint64_t vertices = 10000;
  /// Vertex-step probability; 1/p - 1 hyperedges per vertex on average.
  double p = 0.1;
  double gamma = 1.0;
};

/// Steps giving `vertices` vertices in expectation.
std::uint64_t steps_for_vertices(std::uint64_t vertices, std::uint64_t initial, double vertex_rate);

GParams planted_params(const PlantedSettings& s, double alpha);

struct Fig1Row {
  double alpha = 0.0;
  std::uint32_t replica = 0;
  /// General bound evaluated on p_i, s_i, a, d measured from the hypergraph.
  double general_bound = 0.0;
  /// Same bound from the profile and the limiting size profile.
  double general_bound_analytic = 0.0;
  double ab_bound = 0.0;
  double planted_q2 = 0.0;
  double detected_q2 = 0.0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
};
Fig1Row fig1_point(const PlantedSettings& s, double alpha, std::uint64_t seed);

/// G against an Avin-style H (p_v = 0, p_ve = p, p_e = 1 - p, m = 1, gamma = 0)
/// with the same vertex target, vertex rate and hyperedge-size distribution.
struct AvinComparisonSettings {
  std::uint32_t r = 47;
  std::uint64_t vertices = 10000;
  double p = 0.1;
  double gamma = 1.0;
  CardinalityDistribution sizes = CardinalityDistribution::uniform_int(2, 6);
};
HParams avin_params(const AvinComparisonSettings& s);
GParams avin_matched_g_params(const AvinComparisonSettings& s, double alpha);

struct AvinRow {
  double alpha = 0.0;
  std::uint32_t replica = 0;
  double q_g = 0.0;
  double q_a = 0.0;
};
AvinRow g_vs_avin_point(const AvinComparisonSettings& s, double alpha, std::uint64_t seed);

struct RecurrenceRow {
  std::uint64_t k = 0;
  double oracle = 0.0;
  double empirical_mean = 0.0;
  /// Standard error of the mean over replicas.
  double standard_error = 0.0;
};
/// Per-vertex degree fractions N_k / |V| at the final step, averaged over
/// replicas run in parallel, next to the limit recurrence.
std::vector<RecurrenceRow> recurrence_check(const HParams& params, std::uint64_t k_max,
                                            std::uint32_t replicas, std::uint64_t seed);

struct BetaSweepRow {
  double value = 0.0;
  double beta_theory = 0.0;
  double beta_hat_mean = 0.0;
  double beta_hat_sd = 0.0;
  std::uint32_t replicas = 0;
};
/// key is one of gamma, p_v, p_ve, m.
std::vector<BetaSweepRow> beta_sweep(const HParams& base, const std::string& key,
                                     const std::vector<double>& values, std::uint32_t replicas,
                                     std::uint64_t seed);

/// Mean fitted exponent of `replicas` independent runs.
std::vector<double> fitted_betas(const HParams& params, std::uint32_t replicas, std::uint64_t seed);

struct ExampleRow {
  std::string name;
  double parameter = 0.0;
  double predicted = 0.0;
  double closed_form = 0.0;
};
/// Barabasi-Albert (m = 1..3), Chung-Lu (p = 0.1, 0.5, 0.9) and Avin-style
/// configurations with their textbook exponents.
std::vector<ExampleRow> example_regressions();
HParams ba_params(std::uint32_t m);
HParams chung_lu_params(double p);
HParams avin_style_params(double p, const CardinalityDistribution& y, const CardinalityDistribution& x);

enum class ExperimentKind { fig1_bound_vs_detected, beta_sweep, example_regressions, recurrence_check, g_vs_avin };

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::example_regressions;
  std::uint32_t replicas = 1;
  std::uint64_t seed = 1;
  std::vector<double> alphas;
  PlantedSettings planted;
  AvinComparisonSettings avin;
  HParams h;
  std::string sweep_key;
  std::vector<double> sweep_values;
  std::uint64_t k_max = 20;
};

ExperimentSpec experiment_from_config(const Config& cfg);

/// Writes the experiment's CSV. Rows come out in a fixed order regardless of
/// how replicas were scheduled.
void run_experiment(const ExperimentSpec& spec, std::ostream& csv);

}  // namespace pahyper
