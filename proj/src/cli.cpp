#include "pahyper/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "pahyper/bounds.hpp"
#include "pahyper/config.hpp"
#include "pahyper/experiment.hpp"
#include "pahyper/flatten.hpp"
#include "pahyper/io.hpp"
#include "pahyper/louvain.hpp"
#include "pahyper/modularity.hpp"
#include "pahyper/powerlaw.hpp"
#include "pahyper/text.hpp"
#include "pahyper/theory.hpp"

namespace pahyper {

namespace {

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> steps;
  std::string out;
  std::string hypergraph;
  std::string partition;
  std::string communities;
  std::optional<std::uint64_t> k_min;
  std::optional<std::uint32_t> community;
  std::uint64_t k_max = 20;
  bool brute_force = false;
};

Config load_config(const Flags& f) {
  Config cfg = Config::load(f.config);
  if (f.seed) cfg.set("seed", std::to_string(*f.seed));
  if (f.steps) cfg.set("steps", std::to_string(*f.steps));
  return cfg;
}

void expect_model(const Config& cfg, const std::string& model) {
  const std::string given = cfg.take_string("model", model);
  if (given != model) {
    throw ConfigError(cfg.source() + ": key 'model': expected '" + model + "', got '" + given + "'");
  }
}

// Writes through `--out` when given, else to the command's stdout.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  write(file);
  if (!file) throw std::runtime_error("error while writing " + path);
}

void kv(std::ostream& out, const std::string& key, double value) { out << key << '=' << format_double(value) << '\n'; }
void kv(std::ostream& out, const std::string& key, std::uint64_t value) { out << key << '=' << value << '\n'; }

Hypergraph load_hypergraph(const Flags& f) {
  if (f.hypergraph.empty()) throw ConfigError("--hypergraph is required");
  return parse_hypergraph(f.hypergraph);
}

void cmd_generate_h(const Flags& f, std::ostream& out) {
  const Config cfg = load_config(f);
  expect_model(cfg, "h");
  const std::uint64_t seed = cfg.take_uint("seed", 1);
  const HParams params = hparams_from_config(cfg);
  cfg.check_all_used();
  const HRun run = generate_h(params, seed);
  emit(f.out, out, [&](std::ostream& o) { write_hypergraph(run.graph, o); });
  if (!f.out.empty()) {
    kv(out, "vertices", std::uint64_t(run.graph.num_vertices()));
    kv(out, "edges", std::uint64_t(run.graph.num_edges()));
    kv(out, "degree_sum", run.graph.degree_sum());
  }
}

void cmd_generate_g(const Flags& f, std::ostream& out) {
  const Config cfg = load_config(f);
  expect_model(cfg, "g");
  const std::uint64_t seed = cfg.take_uint("seed", 1);
  const GParams params = gparams_from_config(cfg);
  cfg.check_all_used();
  const GRun run = generate_g(params, seed);
  emit(f.out, out, [&](std::ostream& o) { write_hypergraph(run.graph, o); });
  if (!f.communities.empty()) write_communities(run.graph.communities(), std::filesystem::path(f.communities));
  if (!f.out.empty()) {
    kv(out, "vertices", std::uint64_t(run.graph.num_vertices()));
    kv(out, "edges", std::uint64_t(run.graph.num_edges()));
    kv(out, "degree_sum", run.graph.degree_sum());
    const auto& last = run.stats.checkpoints.back();
    for (std::size_t j = 0; j < last.community_sizes.size(); ++j) {
      kv(out, "community_size." + std::to_string(j), last.community_sizes[j]);
    }
  }
}

void cmd_modularity(const Flags& f, std::ostream& out) {
  const Hypergraph h = load_hypergraph(f);
  if (f.brute_force) {
    const BruteForceResult best = brute_force_modularity(h);
    kv(out, "q_star", best.modularity);
    kv(out, "blocks", std::uint64_t(best.partition.num_blocks()));
    if (!f.out.empty()) write_communities(best.partition.labels(), std::filesystem::path(f.out));
    if (f.partition.empty()) return;
  }
  if (f.partition.empty()) throw ConfigError("--partition is required (or use --brute-force)");
  const Partition part(parse_communities(f.partition, h.num_vertices()));
  if (part.size() != h.num_vertices()) {
    throw std::runtime_error("partition labels " + std::to_string(part.size()) + " vertices, hypergraph has " +
                             std::to_string(h.num_vertices()));
  }
  const ModularityBreakdown q = hypergraph_modularity_score(h, part);
  kv(out, "edge_contribution", q.edge_contribution);
  kv(out, "degree_tax", q.degree_tax);
  kv(out, "score", q.score);
  kv(out, "blocks", std::uint64_t(part.num_blocks()));
}

void cmd_detect(const Flags& f, std::ostream& out) {
  const Hypergraph h = load_hypergraph(f);
  const DetectionScore d = detect_and_score(h, f.seed.value_or(1));
  if (!f.out.empty()) write_communities(d.partition.labels(), std::filesystem::path(f.out));
  kv(out, "score", d.q2);
  kv(out, "flattened_modularity", d.flattened_q);
  kv(out, "blocks", std::uint64_t(d.partition.num_blocks()));
}

void cmd_flatten(const Flags& f, std::ostream& out) {
  const WeightedGraph g = flatten(load_hypergraph(f));
  emit(f.out, out, [&](std::ostream& o) {
    o << "#vertices " << g.num_vertices() << '\n';
    for (const auto& e : g.edges()) o << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  });
}

void cmd_fit(const Flags& f, std::ostream& out) {
  const Hypergraph h = load_hypergraph(f);
  DegreeHistogram hist;
  if (f.community) {
    if (f.communities.empty()) throw ConfigError("--community needs --communities");
    const Hypergraph labeled = with_communities(h, parse_communities(f.communities, h.num_vertices()));
    hist = degree_histogram(labeled, *f.community);
  } else {
    hist = degree_histogram(h);
  }
  const TailFit fit = fit_tail_exponent(hist, f.k_min);
  kv(out, "beta_hat", fit.beta_hat);
  kv(out, "k_min", fit.k_min);
  kv(out, "n_tail", fit.n_tail);
  kv(out, "stderr", fit.stderr_beta);
  kv(out, "ks_distance", fit.ks_distance);
}

void cmd_predict(const Flags& f, std::ostream& out) {
  const Config cfg = load_config(f);
  const std::string model = cfg.take_string("model", "h");
  cfg.take("seed");
  if (model == "h") {
    const HParams params = hparams_from_config(cfg);
    cfg.check_all_used();
    TheoryPrediction pred;
    try {
      pred = predict_beta_h(params);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(cfg.source() + ": " + e.what());
    }
    kv(out, "beta", pred.beta);
    kv(out, "v_bar", pred.v_bar);
    kv(out, "d_bar", pred.d_bar);
    kv(out, "big_d", pred.big_d);
    kv(out, "c", pred.c);
  } else if (model == "g") {
    const GParams params = gparams_from_config(cfg);
    cfg.check_all_used();
    GPrediction pred;
    try {
      pred = predict_beta_g(params);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(cfg.source() + ": " + e.what());
    }
    kv(out, "beta", pred.beta);
    for (std::size_t j = 0; j < pred.per_community.size(); ++j) {
      kv(out, "beta." + std::to_string(j), pred.per_community[j]);
    }
  } else {
    throw ConfigError(cfg.source() + ": key 'model': expected 'h' or 'g', got '" + model + "'");
  }
}

void print_bounds(std::ostream& out, const BoundInputs& b) {
  kv(out, "general_bound", modularity_lower_bound_general(b));
  kv(out, "ab_bound", modularity_lower_bound_ab(b.alpha_noise, b.beta_max, b.a, b.d, b.r));
  kv(out, "alpha", b.alpha_noise);
  kv(out, "beta_max", b.beta_max);
  kv(out, "d", std::uint64_t(b.d));
  kv(out, "delta", b.a.delta);
}

void cmd_bounds(const Flags& f, std::ostream& out) {
  if (!f.hypergraph.empty()) {
    if (f.communities.empty()) throw ConfigError("bounds on a hypergraph need --communities");
    const Hypergraph h = load_hypergraph(f);
    print_bounds(out, bound_inputs_from_hypergraph(
                          with_communities(h, parse_communities(f.communities, h.num_vertices()))));
    return;
  }
  const Config cfg = load_config(f);
  expect_model(cfg, "g");
  cfg.take("seed");
  const GParams params = gparams_from_config(cfg);
  cfg.check_all_used();
  print_bounds(out, bound_inputs_from_profile(params.profile, expected_cardinality_profile(params)));
}

void cmd_oracle(const Flags& f, std::ostream& out) {
  const Config cfg = load_config(f);
  expect_model(cfg, "h");
  cfg.take("seed");
  const HParams params = hparams_from_config(cfg);
  cfg.check_all_used();
  DegreeFractionTable table;
  try {
    table = degree_fraction_oracle(params, f.k_max);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(cfg.source() + ": " + e.what());
  }
  emit(f.out, out, [&](std::ostream& o) {
    o << "k,L,per_vertex\n";
    for (std::size_t k = 0; k < table.L.size(); ++k) {
      o << k << ',' << format_double(table.L[k]) << ',' << format_double(table.per_vertex[k]) << '\n';
    }
  });
}

void cmd_experiment(const Flags& f, std::ostream& out) {
  const Config cfg = load_config(f);
  cfg.take("model");
  const ExperimentSpec spec = experiment_from_config(cfg);
  cfg.check_all_used();
  // Render fully before writing so a failed run leaves no partial file.
  std::ostringstream csv;
  run_experiment(spec, csv);
  emit(f.out, out, [&](std::ostream& o) { o << csv.str(); });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Preferential-attachment hypergraph generator and analysis toolkit", "pahyper"};
  app.require_subcommand(1);
  Flags f;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", f.config, "Configuration file")->required();
    sub->add_option("--seed", f.seed, "Random seed (overrides the config)");
    sub->add_option("--steps", f.steps, "Number of steps T (overrides the config)");
  };
  auto add_hypergraph = [&](CLI::App* sub) {
    sub->add_option("--hypergraph", f.hypergraph, "Hyperedge-list file")->required();
  };

  auto* gen_h = app.add_subcommand("generate-h", "Generate the general model H");
  add_config(gen_h);
  gen_h->add_option("--out", f.out, "Hyperedge-list output (default stdout)");

  auto* gen_g = app.add_subcommand("generate-g", "Generate the community model G");
  add_config(gen_g);
  gen_g->add_option("--out", f.out, "Hyperedge-list output (default stdout)");
  gen_g->add_option("--communities", f.communities, "Write planted labels here");

  auto* mod = app.add_subcommand("modularity", "Score a partition with hypergraph modularity");
  add_hypergraph(mod);
  mod->add_option("--partition", f.partition, "Community file (vertex<TAB>block)");
  mod->add_flag("--brute-force", f.brute_force, "Exact maximum over all partitions (<= 12 vertices)");
  mod->add_option("--out", f.out, "With --brute-force: write the best partition here");

  auto* det = app.add_subcommand("detect", "Louvain on the flattened graph, scored on the hypergraph");
  add_hypergraph(det);
  det->add_option("--seed", f.seed, "Visit-order seed");
  det->add_option("--out", f.out, "Write the detected partition here");

  auto* flat = app.add_subcommand("flatten", "Clique expansion to a weighted graph");
  add_hypergraph(flat);
  flat->add_option("--out", f.out, "Edge list output 'u v weight' (default stdout)");

  auto* fit = app.add_subcommand("fit-powerlaw", "Fit the degree-distribution tail exponent");
  add_hypergraph(fit);
  fit->add_option("--k-min", f.k_min, "Fixed lower cutoff (default: chosen by KS distance)");
  fit->add_option("--communities", f.communities, "Community file, used with --community");
  fit->add_option("--community", f.community, "Fit only this community");

  auto* pred = app.add_subcommand("predict", "Closed-form exponent for an H or G config");
  add_config(pred);

  auto* bnd = app.add_subcommand("bounds", "Modularity lower bounds from a G config or a labeled hypergraph");
  bnd->add_option("--config", f.config, "G configuration file");
  bnd->add_option("--hypergraph", f.hypergraph, "Hyperedge-list file");
  bnd->add_option("--communities", f.communities, "Community file for --hypergraph");

  auto* orc = app.add_subcommand("oracle", "Limit degree fractions of an H config");
  add_config(orc);
  orc->add_option("--k-max", f.k_max, "Largest degree in the table");
  orc->add_option("--out", f.out, "CSV output (default stdout)");

  auto* exp = app.add_subcommand("experiment", "Run an experiment spec, CSV output");
  add_config(exp);
  exp->add_option("--out", f.out, "CSV output (default stdout)");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen_h) cmd_generate_h(f, out);
    else if (*gen_g) cmd_generate_g(f, out);
    else if (*mod) cmd_modularity(f, out);
    else if (*det) cmd_detect(f, out);
    else if (*flat) cmd_flatten(f, out);
    else if (*fit) cmd_fit(f, out);
    else if (*pred) cmd_predict(f, out);
    else if (*bnd) {
      if (f.config.empty() && f.hypergraph.empty()) throw ConfigError("bounds needs --config or --hypergraph");
      cmd_bounds(f, out);
    } else if (*orc) cmd_oracle(f, out);
    else if (*exp) cmd_experiment(f, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace pahyper
