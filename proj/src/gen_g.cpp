#include "pahyper/gen_g.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace pahyper {

InterCommunityProfile InterCommunityProfile::create(
    std::uint32_t r, std::vector<std::pair<CommunitySet, double>> entries) {
  if (r == 0) throw std::invalid_argument("profile needs at least one community");
  if (entries.empty()) throw std::invalid_argument("profile has no entries");
  InterCommunityProfile prof;
  prof.r_ = r;
  std::map<CommunitySet, double> seen;
  double total = 0.0;
  for (auto& [set, prob] : entries) {
    std::sort(set.begin(), set.end());
    if (set.empty()) throw std::invalid_argument("profile sets must be non-empty");
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw std::invalid_argument("profile sets must not repeat a community");
    }
    if (set.back() >= r) {
      throw std::invalid_argument("profile references community " + std::to_string(set.back()) +
                                  " but r = " + std::to_string(r));
    }
    if (!(prob >= 0.0)) throw std::invalid_argument("profile probabilities must be >= 0");
    if (!seen.emplace(set, prob).second) {
      throw std::invalid_argument("profile lists a community set twice");
    }
    total += prob;
  }
  if (std::abs(total - 1.0) > 1e-6) {
    throw std::invalid_argument("profile probabilities sum to " + std::to_string(total) +
                                ", expected 1");
  }
  for (auto& [set, prob] : seen) {
    if (prob == 0.0) continue;
    prof.d_ = std::max<std::uint32_t>(prof.d_, static_cast<std::uint32_t>(set.size()));
    prof.entries_.emplace_back(set, prob / total);
    prof.probs_.push_back(prob / total);
  }
  return prof;
}

InterCommunityProfile InterCommunityProfile::diagonal(std::uint32_t r, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  if (r < 2 && alpha > 0.0) throw std::invalid_argument("noise needs at least two communities");
  std::vector<std::pair<CommunitySet, double>> entries;
  for (CommunityId i = 0; i < r; ++i) entries.push_back({{i}, (1.0 - alpha) / r});
  if (alpha > 0.0) {
    const double pairs = 0.5 * double(r) * double(r - 1);
    for (CommunityId i = 0; i < r; ++i) {
      for (CommunityId j = i + 1; j < r; ++j) entries.push_back({{i, j}, alpha / pairs});
    }
  }
  return create(r, std::move(entries));
}

double InterCommunityProfile::probability(const CommunitySet& set) const {
  CommunitySet key = set;
  std::sort(key.begin(), key.end());
  for (const auto& [s, p] : entries_) {
    if (s == key) return p;
  }
  return 0.0;
}

void GParams::validate() const {
  const auto r = num_communities();
  if (r == 0) throw std::invalid_argument("M must list at least one community");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
  double total = 0.0;
  for (double mj : M) {
    if (!(mj > 0.0)) throw std::invalid_argument("every m_j must be positive");
    total += mj;
  }
  if (std::abs(total - 1.0) > 1e-6) throw std::invalid_argument("M must sum to 1");
  if (profile.num_communities() != r) {
    throw std::invalid_argument("profile community count differs from |M|");
  }
  if (!edge_size && x_dists.size() != r) {
    throw std::invalid_argument("x_dists must hold one distribution per community");
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be >= 0");
}

Hypergraph initial_g(std::uint32_t r) {
  Hypergraph g(r);
  for (CommunityId j = 0; j < r; ++j) {
    const VertexId v = g.add_vertex(j);
    g.add_hyperedge({v});
  }
  return g;
}

GEvent g_step(Hypergraph& g, const GParams& params, std::vector<PreferentialSelector>& selectors,
              Rng& rng) {
  const std::uint32_t r = params.num_communities();
  if (rng.uniform() < params.p) {
    const auto j = static_cast<CommunityId>(rng.categorical(params.M));
    selectors[j].add_vertex(g.add_vertex(j));
    return {GEventKind::vertex, j, 0};
  }

  const std::size_t set_index = params.profile.sample(rng);
  const CommunitySet& set = params.profile.entries()[set_index].first;
  std::vector<std::uint32_t> counts(set.size(), 1);
  if (params.edge_size) {
    const std::uint32_t k = std::max<std::uint32_t>(params.edge_size->sample(rng),
                                                    static_cast<std::uint32_t>(set.size()));
    for (std::uint32_t extra = 0; extra < k - set.size(); ++extra) {
      ++counts[set.size() == 1 ? 0 : rng.below(set.size())];
    }
  } else {
    for (std::size_t s = 0; s < set.size(); ++s) {
      const std::size_t dist = r == 1 ? 0 : rng.below(r);
      counts[s] = params.x_dists[dist].sample(rng);
    }
  }

  std::vector<VertexId> members;
  for (std::size_t s = 0; s < set.size(); ++s) {
    selectors[set[s]].select_into(counts[s], rng, members);
  }
  for (VertexId v : members) selectors[g.community_of(v)].record_degree_increment(v);
  g.add_hyperedge(std::move(members));
  return {GEventKind::hyperedge, 0, set_index};
}

namespace {

GCheckpoint snapshot(const Hypergraph& g, const std::vector<PreferentialSelector>& selectors,
                     std::uint64_t t) {
  GCheckpoint cp{t, g.num_vertices(), g.num_edges(), {}, {}};
  for (const auto& sel : selectors) {
    cp.community_sizes.push_back(sel.population());
    cp.community_degree_sums.push_back(sel.degree_sum());
  }
  return cp;
}

}  // namespace

GRun generate_g(const GParams& params, std::uint64_t seed) {
  params.validate();
  const std::uint32_t r = params.num_communities();
  GRun run{initial_g(r), {}};
  std::vector<PreferentialSelector> selectors;
  selectors.reserve(r);
  for (CommunityId j = 0; j < r; ++j) {
    selectors.push_back(PreferentialSelector::from_community(run.graph, j, params.gamma));
  }
  Rng rng(seed);
  run.stats.checkpoints.push_back(snapshot(run.graph, selectors, 0));
  for (std::uint64_t t = 1; t <= params.steps; ++t) {
    g_step(run.graph, params, selectors, rng);
    if (is_checkpoint(t, params.steps)) {
      run.stats.checkpoints.push_back(snapshot(run.graph, selectors, t));
    }
  }
  return run;
}

std::vector<double> community_marginals(const InterCommunityProfile& profile) {
  std::vector<double> s(profile.num_communities(), 0.0);
  for (const auto& [set, prob] : profile.entries()) {
    for (CommunityId j : set) s[j] += prob;
  }
  return s;
}

HParams reduce_community(const GParams& params, CommunityId j) {
  const std::uint32_t r = params.num_communities();
  if (j >= r) throw std::out_of_range("community index out of range");
  if (params.edge_size) {
    throw std::invalid_argument("community reduction needs per-community X draws (no edge_size)");
  }
  const double s_j = community_marginals(params.profile)[j];
  HParams h;
  h.p_v = params.p * params.M[j];
  h.p_ve = 0.0;
  h.p_e.assign(r, (1.0 - params.p) * s_j / r);
  h.x_dists = params.x_dists;
  h.m = 1;
  h.gamma = params.gamma;
  h.steps = params.steps;
  return h;
}

}  // namespace pahyper
