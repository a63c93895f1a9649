#include "pahyper/experiment.hpp"

#include <cmath>
#include <exception>
#include <ostream>
#include <stdexcept>

#include "pahyper/bounds.hpp"
#include "pahyper/flatten.hpp"
#include "pahyper/louvain.hpp"
#include "pahyper/powerlaw.hpp"
#include "pahyper/rng.hpp"
#include "pahyper/text.hpp"
#include "pahyper/theory.hpp"

namespace pahyper {

namespace {

// Runs fn(i) for i in [0, n) across OpenMP threads; the first exception is
// rethrown after the loop.
template <class Fn>
void parallel_indexed(std::size_t n, Fn&& fn) {
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

std::string fmt(double x) { return format_double(x); }

}  // namespace

DetectionScore detect_and_score(const Hypergraph& h, std::uint64_t seed) {
  const WeightedGraph g = flatten(h);
  LouvainOptions options;
  options.seed = seed;
  const LouvainResult result = louvain(g, options);
  DetectionScore out;
  out.partition = result.partition;
  out.flattened_q = result.modularity;
  out.q2 = hypergraph_modularity_score(h, result.partition).score;
  return out;
}

std::uint64_t steps_for_vertices(std::uint64_t vertices, std::uint64_t initial, double vertex_rate) {
  if (!(vertex_rate > 0.0)) throw std::invalid_argument("vertex rate must be positive");
  if (vertices <= initial) return 0;
  return static_cast<std::uint64_t>(std::ceil(static_cast<double>(vertices - initial) / vertex_rate));
}

GParams planted_params(const PlantedSettings& s, double alpha) {
  GParams g;
  g.p = s.p;
  g.M.assign(s.r, 1.0 / s.r);
  g.profile = InterCommunityProfile::diagonal(s.r, alpha);
  g.edge_size = CardinalityDistribution::constant(s.uniformity);
  g.gamma = s.gamma;
  g.steps = steps_for_vertices(s.vertices, s.r, s.p);
  g.validate();
  return g;
}

Fig1Row fig1_point(const PlantedSettings& s, double alpha, std::uint64_t seed) {
  const GParams params = planted_params(s, alpha);
  const GRun run = generate_g(params, seed);
  const Hypergraph& h = run.graph;
  Fig1Row row;
  row.alpha = alpha;
  row.vertices = h.num_vertices();
  row.edges = h.num_edges();
  row.general_bound = modularity_lower_bound_general(bound_inputs_from_hypergraph(h));
  const CardinalityProfile limit = expected_cardinality_profile(params);
  const BoundInputs analytic = bound_inputs_from_profile(params.profile, limit);
  row.general_bound_analytic = modularity_lower_bound_general(analytic);
  row.ab_bound = modularity_lower_bound_ab(analytic.alpha_noise, analytic.beta_max, limit,
                                               analytic.d, analytic.r);
  row.planted_q2 = hypergraph_modularity_score(h, Partition(h.communities())).score;
  row.detected_q2 = detect_and_score(h, replica_seed(seed, 0x10u)).q2;
  return row;
}

HParams avin_params(const AvinComparisonSettings& s) {
  HParams h = avin_style_params(s.p, s.sizes, s.sizes);
  h.steps = steps_for_vertices(s.vertices, 1, s.p);
  return h;
}

GParams avin_matched_g_params(const AvinComparisonSettings& s, double alpha) {
  GParams g;
  g.p = s.p;
  g.M.assign(s.r, 1.0 / s.r);
  g.profile = InterCommunityProfile::diagonal(s.r, alpha);
  g.edge_size = s.sizes;
  g.gamma = s.gamma;
  g.steps = steps_for_vertices(s.vertices, s.r, s.p);
  g.validate();
  return g;
}

AvinRow g_vs_avin_point(const AvinComparisonSettings& s, double alpha, std::uint64_t seed) {
  AvinRow row;
  row.alpha = alpha;
  const GRun g = generate_g(avin_matched_g_params(s, alpha), seed);
  row.q_g = detect_and_score(g.graph, replica_seed(seed, 0x10u)).q2;
  const HRun a = generate_h(avin_params(s), replica_seed(seed, 0x20u));
  row.q_a = detect_and_score(a.graph, replica_seed(seed, 0x30u)).q2;
  return row;
}

std::vector<RecurrenceRow> recurrence_check(const HParams& params, std::uint64_t k_max,
                                            std::uint32_t replicas, std::uint64_t seed) {
  if (replicas < 2) throw std::invalid_argument("recurrence check needs at least two replicas");
  const DegreeFractionTable table = degree_fraction_oracle(params, k_max);
  std::vector<std::vector<double>> fractions(replicas);
  parallel_indexed(replicas, [&](std::size_t i) {
    const HRun run = generate_h(params, replica_seed(seed, i));
    const DegreeHistogram hist = degree_histogram(run.graph);
    const double n = static_cast<double>(hist.total_vertices);
    fractions[i].resize(k_max + 1);
    for (std::uint64_t k = 0; k <= k_max; ++k) fractions[i][k] = static_cast<double>(hist.at(k)) / n;
  });
  std::vector<RecurrenceRow> rows;
  const double reps = static_cast<double>(replicas);
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    double mean = 0.0;
    for (const auto& f : fractions) mean += f[k];
    mean /= reps;
    double var = 0.0;
    for (const auto& f : fractions) var += (f[k] - mean) * (f[k] - mean);
    var /= reps - 1.0;
    rows.push_back({k, table.per_vertex[k], mean, std::sqrt(var / reps)});
  }
  return rows;
}

std::vector<double> fitted_betas(const HParams& params, std::uint32_t replicas, std::uint64_t seed) {
  std::vector<double> betas(replicas);
  parallel_indexed(replicas, [&](std::size_t i) {
    const HRun run = generate_h(params, replica_seed(seed, i));
    betas[i] = fit_tail_exponent(degree_histogram(run.graph)).beta_hat;
  });
  return betas;
}

std::vector<BetaSweepRow> beta_sweep(const HParams& base, const std::string& key,
                                     const std::vector<double>& values, std::uint32_t replicas,
                                     std::uint64_t seed) {
  std::vector<BetaSweepRow> rows;
  for (std::size_t v = 0; v < values.size(); ++v) {
    HParams params = base;
    const double x = values[v];
    if (key == "gamma") {
      params.gamma = x;
    } else if (key == "p_v") {
      params.p_v = x;
    } else if (key == "p_ve") {
      params.p_ve = x;
    } else if (key == "m") {
      if (!(x >= 1.0) || x != std::floor(x)) throw std::invalid_argument("m must be a positive integer");
      params.m = static_cast<std::uint32_t>(x);
    } else {
      throw std::invalid_argument("cannot sweep '" + key + "' (use gamma, p_v, p_ve or m)");
    }
    params.validate();
    BetaSweepRow row;
    row.value = x;
    row.beta_theory = predict_beta_h(params).beta;
    row.replicas = replicas;
    const auto betas = fitted_betas(params, replicas, replica_seed(seed, v));
    for (double b : betas) row.beta_hat_mean += b;
    row.beta_hat_mean /= replicas;
    if (replicas > 1) {
      for (double b : betas) row.beta_hat_sd += (b - row.beta_hat_mean) * (b - row.beta_hat_mean);
      row.beta_hat_sd = std::sqrt(row.beta_hat_sd / (replicas - 1));
    }
    rows.push_back(row);
  }
  return rows;
}

HParams ba_params(std::uint32_t m) {
  HParams h;
  h.p_ve = 1.0;
  h.y_dist = CardinalityDistribution::constant(2);
  h.m = m;
  return h;
}

HParams chung_lu_params(double p) {
  HParams h;
  h.p_ve = p;
  h.p_e = {1.0 - p};
  h.y_dist = CardinalityDistribution::constant(2);
  h.x_dists = {CardinalityDistribution::constant(2)};
  return h;
}

HParams avin_style_params(double p, const CardinalityDistribution& y, const CardinalityDistribution& x) {
  HParams h;
  h.p_ve = p;
  h.p_e = {1.0 - p};
  h.y_dist = y;
  h.x_dists = {x};
  return h;
}

std::vector<ExampleRow> example_regressions() {
  std::vector<ExampleRow> rows;
  for (std::uint32_t m = 1; m <= 3; ++m) {
    rows.push_back({"barabasi_albert_m", double(m), predict_beta_h(ba_params(m)).beta, 3.0});
  }
  for (double p : {0.1, 0.5, 0.9}) {
    rows.push_back({"chung_lu_p", p, predict_beta_h(chung_lu_params(p)).beta, 2.0 + p / (2.0 - p)});
  }
  const auto y = CardinalityDistribution::uniform_int(2, 4);
  const auto x = CardinalityDistribution::categorical({2, 3, 5}, {0.5, 0.3, 0.2});
  for (double p : {0.25, 0.5, 0.75}) {
    const HParams h = avin_style_params(p, y, x);
    const double d_bar = p * y.mean() + (1.0 - p) * x.mean();
    rows.push_back({"avin_p", p, predict_beta_h(h).beta, 1.0 + d_bar / (d_bar - p)});
  }
  return rows;
}

ExperimentSpec experiment_from_config(const Config& cfg) {
  ExperimentSpec spec;
  const std::string kind = cfg.take_string("kind");
  spec.seed = cfg.take_uint("seed", 1);
  spec.replicas = static_cast<std::uint32_t>(cfg.take_uint("replicas", 1));
  if (spec.replicas == 0) throw ConfigError(cfg.source() + ": key 'replicas': must be at least 1");

  auto planted = [&](PlantedSettings& s) {
    s.r = static_cast<std::uint32_t>(cfg.take_uint("r", s.r));
    s.vertices = cfg.take_uint("vertices", s.vertices);
    s.p = cfg.take_double("p", s.p);
    s.gamma = cfg.take_double("gamma", s.gamma);
    if (s.r < 2) throw ConfigError(cfg.source() + ": key 'r': need at least two communities");
    if (!(s.p > 0.0 && s.p < 1.0)) throw ConfigError(cfg.source() + ": key 'p': must lie in (0, 1)");
    if (!(s.gamma >= 0.0)) throw ConfigError(cfg.source() + ": key 'gamma': must be >= 0");
  };
  auto alphas = [&] {
    spec.alphas = cfg.take_doubles("alphas", std::vector<double>{0.0, 0.1, 0.2, 0.3, 0.4, 0.5});
    for (double a : spec.alphas) {
      if (!(a >= 0.0 && a <= 1.0)) throw ConfigError(cfg.source() + ": key 'alphas': values must lie in [0, 1]");
    }
  };

  if (kind == "fig1_bound_vs_detected") {
    spec.kind = ExperimentKind::fig1_bound_vs_detected;
    planted(spec.planted);
    spec.planted.uniformity = static_cast<std::uint32_t>(cfg.take_uint("uniformity", 2));
    if (spec.planted.uniformity < 2) throw ConfigError(cfg.source() + ": key 'uniformity': must be >= 2");
    alphas();
  } else if (kind == "g_vs_avin") {
    spec.kind = ExperimentKind::g_vs_avin;
    PlantedSettings s{spec.avin.r, 2, spec.avin.vertices, spec.avin.p, spec.avin.gamma};
    planted(s);
    spec.avin.r = s.r;
    spec.avin.vertices = s.vertices;
    spec.avin.p = s.p;
    spec.avin.gamma = s.gamma;
    spec.avin.sizes = cfg.take_distribution("sizes", spec.avin.sizes);
    spec.alphas = cfg.take_doubles("alphas", std::vector<double>{0.21});
  } else if (kind == "beta_sweep") {
    spec.kind = ExperimentKind::beta_sweep;
    spec.sweep_key = cfg.take_string("sweep");
    spec.sweep_values = cfg.take_doubles("values");
    spec.h = hparams_from_config(cfg);
  } else if (kind == "recurrence_check") {
    spec.kind = ExperimentKind::recurrence_check;
    spec.k_max = cfg.take_uint("k_max", 20);
    spec.h = hparams_from_config(cfg);
  } else if (kind == "example_regressions") {
    spec.kind = ExperimentKind::example_regressions;
  } else {
    throw ConfigError(cfg.source() + ": key 'kind': unknown experiment '" + kind + "'");
  }
  return spec;
}

void run_experiment(const ExperimentSpec& spec, std::ostream& csv) {
  switch (spec.kind) {
    case ExperimentKind::fig1_bound_vs_detected: {
      const std::size_t per_alpha = spec.replicas;
      std::vector<Fig1Row> rows(spec.alphas.size() * per_alpha);
      parallel_indexed(rows.size(), [&](std::size_t i) {
        rows[i] = fig1_point(spec.planted, spec.alphas[i / per_alpha], replica_seed(spec.seed, i));
        rows[i].replica = static_cast<std::uint32_t>(i % per_alpha);
      });
      csv << "alpha,replica,lemma3_bound,detected_q2,planted_q2,general_bound_analytic,ab_bound,"
             "vertices,edges\n";
      for (const auto& r : rows) {
        csv << fmt(r.alpha) << ',' << r.replica << ',' << fmt(r.general_bound) << ',' << fmt(r.detected_q2)
            << ',' << fmt(r.planted_q2) << ',' << fmt(r.general_bound_analytic) << ','
            << fmt(r.ab_bound) << ',' << r.vertices << ',' << r.edges << '\n';
      }
      break;
    }
    case ExperimentKind::g_vs_avin: {
      const std::size_t per_alpha = spec.replicas;
      std::vector<AvinRow> rows(spec.alphas.size() * per_alpha);
      parallel_indexed(rows.size(), [&](std::size_t i) {
        rows[i] = g_vs_avin_point(spec.avin, spec.alphas[i / per_alpha], replica_seed(spec.seed, i));
        rows[i].replica = static_cast<std::uint32_t>(i % per_alpha);
      });
      csv << "alpha,replica,q_g,q_a,difference\n";
      for (const auto& r : rows) {
        csv << fmt(r.alpha) << ',' << r.replica << ',' << fmt(r.q_g) << ',' << fmt(r.q_a) << ','
            << fmt(r.q_g - r.q_a) << '\n';
      }
      break;
    }
    case ExperimentKind::beta_sweep: {
      csv << spec.sweep_key << ",beta_theory,beta_hat_mean,beta_hat_sd,replicas\n";
      for (const auto& r : beta_sweep(spec.h, spec.sweep_key, spec.sweep_values, spec.replicas, spec.seed)) {
        csv << fmt(r.value) << ',' << fmt(r.beta_theory) << ',' << fmt(r.beta_hat_mean) << ','
            << fmt(r.beta_hat_sd) << ',' << r.replicas << '\n';
      }
      break;
    }
    case ExperimentKind::recurrence_check: {
      csv << "k,oracle,empirical_mean,standard_error\n";
      for (const auto& r : recurrence_check(spec.h, spec.k_max, spec.replicas, spec.seed)) {
        csv << r.k << ',' << fmt(r.oracle) << ',' << fmt(r.empirical_mean) << ','
            << fmt(r.standard_error) << '\n';
      }
      break;
    }
    case ExperimentKind::example_regressions: {
      csv << "example,parameter,predicted,closed_form,abs_diff\n";
      for (const auto& r : example_regressions()) {
        csv << r.name << ',' << fmt(r.parameter) << ',' << fmt(r.predicted) << ',' << fmt(r.closed_form)
            << ',' << fmt(std::abs(r.predicted - r.closed_form)) << '\n';
      }
      break;
    }
  }
}

}  // namespace pahyper
