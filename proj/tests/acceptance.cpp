// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pahyper/bounds.hpp"
#include "pahyper/cli.hpp"
#include "pahyper/experiment.hpp"
#include "pahyper/flatten.hpp"
#include "pahyper/louvain.hpp"
#include "pahyper/modularity.hpp"
#include "pahyper/powerlaw.hpp"
#include "pahyper/rng.hpp"
#include "pahyper/theory.hpp"

using namespace pahyper;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

template <class... Args>
std::string format(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

Outcome closed_form_examples() {
  Outcome o;
  double worst = 0.0;
  for (std::uint32_t m = 1; m <= 5; ++m) worst = std::max(worst, std::abs(predict_beta_h(ba_params(m)).beta - 3.0));
  for (double p : {0.1, 0.5, 0.9}) {
    worst = std::max(worst, std::abs(predict_beta_h(chung_lu_params(p)).beta - (2.0 + p / (2.0 - p))));
  }
  const auto y = CardinalityDistribution::uniform_int(2, 4);
  const auto x = CardinalityDistribution::categorical({2, 3, 5}, {0.5, 0.3, 0.2});
  for (double p : {0.25, 0.5, 0.75}) {
    const double d_bar = p * 3.0 + (1.0 - p) * 2.9;
    worst = std::max(worst, std::abs(predict_beta_h(avin_style_params(p, y, x)).beta - (1.0 + d_bar / (d_bar - p))));
  }
  o.pass = worst <= 1e-12;
  o.detail = format("max |predicted - closed form| = %.3g", worst);
  return o;
}

Outcome ba_exponent() {
  HParams params = ba_params(2);
  params.steps = 1000000;
  const auto betas = fitted_betas(params, 5, 2024);
  double mean = 0.0;
  for (double b : betas) mean += b;
  mean /= static_cast<double>(betas.size());
  Outcome o;
  o.pass = mean >= 2.7 && mean <= 3.3;
  o.detail = format("mean beta_hat over 5 runs at T=1e6 = %.4f (target [2.7, 3.3])", mean);
  return o;
}

Outcome recurrence_agreement() {
  HParams params;
  params.p_v = 0.3;
  params.p_ve = 0.3;
  params.p_e = {0.4};
  params.y_dist = CardinalityDistribution::constant(3);
  params.x_dists = {CardinalityDistribution::constant(3)};
  params.m = 1;
  params.gamma = 1.0;
  params.steps = 100000;
  const auto rows = recurrence_check(params, 20, 50, 77);
  Outcome o;
  double worst = 0.0;
  std::uint64_t worst_k = 0;
  for (const auto& row : rows) {
    const double z = std::abs(row.empirical_mean - row.oracle) / row.standard_error;
    if (!(z <= 3.0)) o.pass = false;
    if (z > worst) {
      worst = z;
      worst_k = row.k;
    }
  }
  o.detail = format("k = 0..20 over 50 runs, largest deviation %.2f SE at k = %llu", worst,
                    static_cast<unsigned long long>(worst_k));
  return o;
}

Outcome tight_bound_case() {
  Outcome o;
  CardinalityProfile two;
  two.a[2] = 1.0;
  two.delta = 2.0;
  std::ostringstream detail;
  for (std::uint32_t r : {2u, 5u, 10u}) {
    PlantedSettings s;
    s.r = r;
    s.uniformity = 2;
    s.vertices = 10000;
    const GRun run = generate_g(planted_params(s, 0.0), 100 + r);
    const double q = detect_and_score(run.graph, 200 + r).q2;
    const double target = 1.0 - 1.0 / r;
    const double ab = modularity_lower_bound_ab(0.0, 1.0 / r, two, 2, r);
    if (!(std::abs(q - target) <= 0.05)) o.pass = false;
    if (!(std::abs(ab - target) <= 1e-15)) o.pass = false;
    detail << "r=" << r << " detected=" << format("%.4f", q) << " ab-target=" << format("%.2g", ab - target)
           << "; ";
  }
  o.detail = detail.str();
  return o;
}

Outcome bound_sweep() {
  Outcome o;
  std::ostringstream detail;
  for (std::uint32_t k : {2u, 20u}) {
    PlantedSettings s;
    s.r = 47;
    s.uniformity = k;
    s.vertices = 10000;
    double worst_order = -1.0, worst_gap = 0.0;
    for (int i = 0; i <= 5; ++i) {
      const double alpha = 0.1 * i;
      const Fig1Row row = fig1_point(s, alpha, replica_seed(31 + k, i));
      if (!(row.general_bound <= row.planted_q2)) o.pass = false;
      if (!(row.planted_q2 <= row.detected_q2 + 0.02)) o.pass = false;
      worst_order = std::max(worst_order, row.planted_q2 - row.detected_q2);
      const double gap = std::abs(row.detected_q2 - row.general_bound);
      worst_gap = std::max(worst_gap, gap);
      if (k == 20 && !(gap <= 0.05)) o.pass = false;
    }
    detail << k << "-uniform: max(planted - detected)=" << format("%.4f", worst_order)
           << " max|detected - bound|=" << format("%.4f", worst_gap) << "; ";
  }
  o.detail = detail.str();
  return o;
}

Hypergraph random_two_uniform(std::mt19937_64& eng, std::size_t n, std::size_t m) {
  Hypergraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex();
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  for (std::size_t e = 0; e < m; ++e) g.add_hyperedge({pick(eng), pick(eng)});
  return g;
}

Outcome brute_force_equivalence() {
  std::mt19937_64 eng(6);
  std::uniform_int_distribution<std::size_t> n_of(1, 8), m_of(1, 6);
  double worst_a = 0.0, worst_c = 0.0, worst_b = -1.0;
  int two_uniform = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = n_of(eng), m = m_of(eng);
    const bool pairs = trial % 2 == 1;
    const Hypergraph h = pairs ? random_two_uniform(eng, n, m) : oracle::random_hypergraph(eng, n, m, 4);
    const auto best = brute_force_modularity(h);
    for (int rep = 0; rep < 5; ++rep) {
      const auto labels = oracle::random_labels(eng, n, 1 + eng() % n);
      const Partition part(labels);
      const double q = hypergraph_modularity_score(h, part).score;
      worst_a = std::max(worst_a, std::abs(q - oracle::naive_hypergraph_modularity(h, labels)));
      if (pairs) worst_c = std::max(worst_c, std::abs(q - graph_modularity_score(h, part).score));
    }
    worst_a = std::max(worst_a, std::abs(best.modularity -
                                         oracle::naive_hypergraph_modularity(h, best.partition.labels())));
    const Partition detected = detect_communities(flatten(h), 1000 + trial);
    worst_b = std::max(worst_b, hypergraph_modularity_score(h, detected).score - best.modularity);
    if (pairs) {
      ++two_uniform;
      worst_c = std::max(worst_c, std::abs(best.modularity - graph_modularity_score(h, best.partition).score));
    }
  }
  Outcome o;
  o.pass = worst_a <= 1e-12 && worst_b <= 1e-12 && worst_c <= 1e-12;
  o.detail = format("(a) max diff %.2g; (b) max(detected - q*) = %.2g; (c) %d two-uniform, max diff %.2g", worst_a,
                    worst_b, two_uniform, worst_c);
  return o;
}

GParams three_community_params() {
  GParams p;
  p.p = 0.4;
  p.M = {0.5, 0.3, 0.2};
  p.x_dists = {CardinalityDistribution::constant(1), CardinalityDistribution::constant(2),
               CardinalityDistribution::constant(3)};
  p.gamma = 2.0;
  p.profile = InterCommunityProfile::create(
      3, {{{0}, 0.3}, {{1}, 0.3}, {{2}, 0.2}, {{0, 1}, 0.1}, {{1, 2}, 0.05}, {{0, 1, 2}, 0.05}});
  p.steps = 100000;
  return p;
}

Outcome per_community_reduction() {
  const GParams params = three_community_params();
  const GPrediction pred = predict_beta_g(params);
  const GRun run = generate_g(params, 1);
  Outcome o;
  std::ostringstream detail;
  for (CommunityId j = 0; j < 3; ++j) {
    const double hat = fit_tail_exponent(degree_histogram(run.graph, j)).beta_hat;
    if (!(std::abs(hat - pred.per_community[j]) <= 0.4)) o.pass = false;
    detail << "beta_" << j << " " << format("%.3f vs %.3f", hat, pred.per_community[j]) << "; ";
  }
  const double pooled = fit_tail_exponent(degree_histogram(run.graph)).beta_hat;
  if (!(std::abs(pooled - pred.beta) <= 0.4)) o.pass = false;
  detail << "pooled " << format("%.3f vs min %.3f", pooled, pred.beta);
  o.detail = detail.str();
  return o;
}

Outcome community_vs_avin() {
  AvinComparisonSettings s;
  const AvinRow row = g_vs_avin_point(s, 0.21, 21);
  Outcome o;
  o.pass = row.q_g - row.q_a >= 0.4;
  o.detail = format("alpha=0.21: q(G)=%.4f q(A)=%.4f difference %.4f", row.q_g, row.q_a, row.q_g - row.q_a);
  return o;
}

Outcome cli_determinism() {
  const fs::path dir = fs::temp_directory_path() / "pahyper_acceptance";
  fs::create_directories(dir);
  const auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  const std::string h_cfg = write("h.cfg", "model = h\np_v = 0.2\np_ve = 0.5\np_e.1 = 0.3\ny = uniform:2:4\n"
                                           "x.1 = const:3\nm = 2\ngamma = 1\nsteps = 20000\n");
  const std::string g_cfg = write("g.cfg", "model = g\np = 0.2\nM = 0.25,0.25,0.25,0.25\nedge_size = const:3\n"
                                           "profile = diagonal:0.2\ngamma = 1\nsteps = 20000\n");
  const std::string fig1 = write("fig1.cfg", "kind = fig1_bound_vs_detected\nr = 5\nvertices = 3000\n"
                                             "alphas = 0, 0.25, 0.5\nreplicas = 3\nseed = 9\n");
  const std::string rec = write("rec.cfg", "kind = recurrence_check\np_v = 0.5\np_ve = 0.5\ny = const:2\n"
                                           "gamma = 1\nsteps = 5000\nreplicas = 4\nk_max = 10\nseed = 3\n");
  const std::vector<std::vector<std::string>> invocations = {
      {"pahyper", "generate-h", "--config", h_cfg, "--seed", "5"},
      {"pahyper", "generate-g", "--config", g_cfg, "--seed", "5"},
      {"pahyper", "experiment", "--config", fig1},
      {"pahyper", "experiment", "--config", rec},
  };
  Outcome o;
  int compared = 0;
  for (const auto& args : invocations) {
    std::ostringstream first, second, err;
    const int a = run_cli(args, first, err);
    const int b = run_cli(args, second, err);
    if (a != 0 || b != 0 || first.str().empty() || first.str() != second.str()) {
      o.pass = false;
      o.detail += args[1] + " differs or failed (" + err.str() + "); ";
    }
    ++compared;
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = format("%d invocations repeated, outputs byte-identical", compared);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closed-form example exponents", closed_form_examples},
      {"BA exponent by simulation", ba_exponent},
      {"degree fractions vs recurrence", recurrence_agreement},
      {"tight bound with no noise", tight_bound_case},
      {"bound <= planted <= detected sweep", bound_sweep},
      {"brute-force equivalence", brute_force_equivalence},
      {"per-community exponents", per_community_reduction},
      {"community model vs Avin-style model", community_vs_avin},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %zu: %s  %s  [%s] (%.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
