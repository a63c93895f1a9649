#include "pahyper/gen_h.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pahyper {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

HCheckpoint snapshot(const Hypergraph& h, double gamma, std::uint64_t t) {
  return {t, h.num_vertices(), h.num_edges(), h.degree_sum(),
          static_cast<double>(h.degree_sum()) + gamma * static_cast<double>(h.num_vertices())};
}

}  // namespace

void HParams::validate() const {
  if (!is_probability(p_v)) throw std::invalid_argument("p_v must lie in [0, 1]");
  if (!is_probability(p_ve)) throw std::invalid_argument("p_ve must lie in [0, 1]");
  double total = p_v + p_ve;
  for (std::size_t i = 0; i < p_e.size(); ++i) {
    if (!is_probability(p_e[i])) {
      throw std::invalid_argument("p_e[" + std::to_string(i) + "] must lie in [0, 1]");
    }
    total += p_e[i];
  }
  if (!(total > 0.0) || total > 1.0 + 1e-12) {
    throw std::invalid_argument("p_v + p_ve + sum(p_e) must lie in (0, 1]");
  }
  if (x_dists.size() != p_e.size()) {
    throw std::invalid_argument("x_dists must have one distribution per p_e entry");
  }
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be >= 0");
}

Hypergraph initial_h() {
  Hypergraph h;
  h.add_vertex();
  h.add_hyperedge({0});
  return h;
}

bool is_checkpoint(std::uint64_t t, std::uint64_t final_step) {
  return t == 0 || t == final_step || (t & (t - 1)) == 0;
}

std::uint32_t draw_cardinality(const CardinalityDistribution& dist, bool cap, std::uint64_t t,
                               Rng& rng) {
  if (!cap) return dist.sample(rng);
  const double root = std::ceil(std::pow(static_cast<double>(t), 0.25));
  const double limit = std::max(2.0, root);
  for (int attempt = 0; attempt < 100; ++attempt) {
    const std::uint32_t z = dist.sample(rng);
    if (static_cast<double>(z) < limit) return z;
  }
  return 1;
}

HEvent h_step(Hypergraph& h, const HParams& params, PreferentialSelector& sel, std::uint64_t t,
              Rng& rng) {
  const double u = rng.uniform();
  double threshold = params.p_v;
  if (u < threshold) {
    sel.add_vertex(h.add_vertex());
    return {HEventKind::vertex, 0};
  }

  std::vector<std::vector<VertexId>> batch(params.m);
  threshold += params.p_ve;
  if (u < threshold) {
    const std::uint32_t y = draw_cardinality(params.y_dist, params.enforce_t_quarter_cap, t, rng);
    for (auto& members : batch) {
      members.reserve(y);
      sel.select_into(y - 1, rng, members);
    }
    const VertexId v = h.add_vertex();
    for (auto& members : batch) {
      for (VertexId w : members) sel.record_degree_increment(w);
      members.push_back(v);
      h.add_hyperedge(std::move(members));
    }
    sel.add_vertex(v);
    for (std::uint32_t i = 0; i < params.m; ++i) sel.record_degree_increment(v);
    return {HEventKind::vertex_with_edges, 0};
  }

  for (std::size_t i = 0; i < params.p_e.size(); ++i) {
    threshold += params.p_e[i];
    if (u < threshold) {
      const std::uint32_t x =
          draw_cardinality(params.x_dists[i], params.enforce_t_quarter_cap, t, rng);
      for (auto& members : batch) {
        members.reserve(x);
        sel.select_into(x, rng, members);
      }
      for (auto& members : batch) {
        for (VertexId w : members) sel.record_degree_increment(w);
        h.add_hyperedge(std::move(members));
      }
      return {HEventKind::edges, i};
    }
  }
  return {HEventKind::nothing, 0};
}

HRun generate_h(const HParams& params, std::uint64_t seed) {
  params.validate();
  HRun run{initial_h(), {}};
  PreferentialSelector sel = PreferentialSelector::from_hypergraph(run.graph, params.gamma);
  Rng rng(seed);
  run.stats.checkpoints.push_back(snapshot(run.graph, params.gamma, 0));
  for (std::uint64_t t = 1; t <= params.steps; ++t) {
    h_step(run.graph, params, sel, t, rng);
    if (is_checkpoint(t, params.steps)) {
      run.stats.checkpoints.push_back(snapshot(run.graph, params.gamma, t));
    }
  }
  return run;
}

}  // namespace pahyper
