#include "pahyper/louvain.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pahyper/rng.hpp"

namespace pahyper {

double weighted_modularity(const WeightedGraph& g, const Partition& part) {
  if (part.size() != g.num_vertices()) throw std::invalid_argument("partition size mismatch");
  const double total = static_cast<double>(g.total_weight());
  if (total == 0.0) return 0.0;
  std::vector<double> inside(part.num_blocks(), 0.0), volume(part.num_blocks(), 0.0);
  for (const auto& e : g.edges()) {
    if (part.block_of(e.u) == part.block_of(e.v)) inside[part.block_of(e.u)] += double(e.weight);
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    volume[part.block_of(v)] += double(g.weighted_degree(v));
  }
  double q = 0.0;
  for (std::size_t b = 0; b < inside.size(); ++b) {
    const double x = volume[b] / (2.0 * total);
    q += inside[b] / total - x * x;
  }
  return q;
}

LocalMovingState::LocalMovingState(const WeightedGraph& g, const Partition& initial)
    : g_(g), block_(initial.labels()), block_total_(std::max<std::size_t>(g.num_vertices(), 1), 0.0) {
  if (initial.size() != g.num_vertices()) throw std::invalid_argument("partition size mismatch");
  for (VertexId v = 0; v < g.num_vertices(); ++v) block_total_[block_[v]] += double(g.weighted_degree(v));
}

double LocalMovingState::move_gain(VertexId v, BlockId target) const {
  const BlockId current = block_[v];
  if (target == current) return 0.0;
  const double total = static_cast<double>(g_.total_weight());
  if (total == 0.0) return 0.0;
  double to_current = 0.0, to_target = 0.0;
  const auto nbrs = g_.neighbors(v);
  const auto wts = g_.neighbor_weights(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (block_[nbrs[i]] == current) to_current += double(wts[i]);
    if (block_[nbrs[i]] == target) to_target += double(wts[i]);
  }
  const double k = double(g_.weighted_degree(v));
  const double current_without = block_total_[current] - k;
  return (to_target - to_current) / total -
         k * (block_total_[target] - current_without) / (2.0 * total * total);
}

void LocalMovingState::move(VertexId v, BlockId target) {
  if (target >= block_total_.size()) throw std::out_of_range("block id out of range");
  const double k = double(g_.weighted_degree(v));
  block_total_[block_[v]] -= k;
  block_total_[target] += k;
  block_[v] = target;
}

Partition LocalMovingState::partition() const { return Partition(block_); }

namespace {

// Graph of one Louvain level: aggregated nodes keep their internal weight as
// a self-loop.
struct LevelGraph {
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> neighbor;
  std::vector<double> weight;
  std::vector<double> self_loop;
  std::vector<double> degree;
  double total = 0.0;
};

LevelGraph from_weighted(const WeightedGraph& g) {
  LevelGraph lg;
  lg.n = g.num_vertices();
  lg.offsets.assign(lg.n + 1, 0);
  lg.self_loop.assign(lg.n, 0.0);
  lg.degree.assign(lg.n, 0.0);
  for (VertexId v = 0; v < lg.n; ++v) {
    const auto nbrs = g.neighbors(v);
    const auto wts = g.neighbor_weights(v);
    lg.offsets[v + 1] = lg.offsets[v] + nbrs.size();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      lg.neighbor.push_back(nbrs[i]);
      lg.weight.push_back(double(wts[i]));
    }
    lg.degree[v] = double(g.weighted_degree(v));
  }
  lg.total = double(g.total_weight());
  return lg;
}

double level_modularity(const LevelGraph& lg, const std::vector<std::uint32_t>& block) {
  std::vector<double> inside(lg.n, 0.0), volume(lg.n, 0.0);
  for (std::size_t v = 0; v < lg.n; ++v) {
    inside[block[v]] += lg.self_loop[v];
    volume[block[v]] += lg.degree[v];
    for (std::size_t i = lg.offsets[v]; i < lg.offsets[v + 1]; ++i) {
      if (block[lg.neighbor[i]] == block[v]) inside[block[v]] += 0.5 * lg.weight[i];
    }
  }
  double q = 0.0;
  for (std::size_t b = 0; b < lg.n; ++b) {
    const double x = volume[b] / (2.0 * lg.total);
    q += inside[b] / lg.total - x * x;
  }
  return q;
}

// Returns the number of vertices that ended in a different block.
std::size_t local_moving(const LevelGraph& lg, Rng& rng, double min_gain,
                         std::vector<std::uint32_t>& block) {
  std::vector<std::uint32_t> order(lg.n);
  std::iota(order.begin(), order.end(), 0u);
  for (std::size_t i = lg.n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::vector<double> total(lg.n, 0.0);
  for (std::size_t v = 0; v < lg.n; ++v) total[block[v]] += lg.degree[v];
  std::vector<double> link(lg.n, 0.0);
  std::vector<char> seen(lg.n, 0);
  std::vector<std::uint32_t> touched;
  const std::vector<std::uint32_t> start = block;
  const double two_w = 2.0 * lg.total;
  const double eps = 1e-12 * lg.total;

  double q = level_modularity(lg, block);
  for (;;) {
    std::size_t moves = 0;
    for (std::uint32_t v : order) {
      const std::uint32_t current = block[v];
      const double k = lg.degree[v];
      touched.clear();
      for (std::size_t i = lg.offsets[v]; i < lg.offsets[v + 1]; ++i) {
        const std::uint32_t b = block[lg.neighbor[i]];
        if (!seen[b]) {
          seen[b] = 1;
          touched.push_back(b);
        }
        link[b] += lg.weight[i];
      }
      total[current] -= k;
      const double stay = link[current] - k * total[current] / two_w;
      double best_gain = stay;
      for (std::uint32_t b : touched) {
        if (b == current) continue;
        best_gain = std::max(best_gain, link[b] - k * total[b] / two_w);
      }
      std::uint32_t target = current;
      if (best_gain > stay + eps) {
        target = std::numeric_limits<std::uint32_t>::max();
        for (std::uint32_t b : touched) {
          if (b != current && link[b] - k * total[b] / two_w >= best_gain - eps) target = std::min(target, b);
        }
      }
      total[target] += k;
      block[v] = target;
      if (target != current) ++moves;
      for (std::uint32_t b : touched) {
        link[b] = 0.0;
        seen[b] = 0;
      }
    }
    if (moves == 0) break;
    const double next_q = level_modularity(lg, block);
    const bool improved = next_q - q > min_gain;
    q = next_q;
    if (!improved) break;
  }
  std::size_t changed = 0;
  for (std::size_t v = 0; v < lg.n; ++v) changed += block[v] != start[v];
  return changed;
}

// Renumbers blocks by first appearance and collapses each block to a node.
LevelGraph aggregate(const LevelGraph& lg, std::vector<std::uint32_t>& block) {
  std::vector<std::uint32_t> remap(lg.n, std::numeric_limits<std::uint32_t>::max());
  std::uint32_t next = 0;
  for (std::size_t v = 0; v < lg.n; ++v) {
    if (remap[block[v]] == std::numeric_limits<std::uint32_t>::max()) remap[block[v]] = next++;
    block[v] = remap[block[v]];
  }
  LevelGraph out;
  out.n = next;
  out.total = lg.total;
  out.self_loop.assign(out.n, 0.0);
  out.degree.assign(out.n, 0.0);
  std::vector<std::pair<std::uint64_t, double>> links;
  for (std::size_t v = 0; v < lg.n; ++v) {
    const std::uint32_t bv = block[v];
    out.self_loop[bv] += lg.self_loop[v];
    out.degree[bv] += lg.degree[v];
    for (std::size_t i = lg.offsets[v]; i < lg.offsets[v + 1]; ++i) {
      const std::uint32_t u = lg.neighbor[i];
      if (u < v) continue;
      const std::uint32_t bu = block[u];
      if (bu == bv) {
        out.self_loop[bv] += lg.weight[i];
      } else {
        links.push_back({(std::uint64_t(std::min(bu, bv)) << 32) | std::max(bu, bv), lg.weight[i]});
      }
    }
  }
  std::sort(links.begin(), links.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::uint64_t, double>> merged;
  for (const auto& l : links) {
    if (!merged.empty() && merged.back().first == l.first) {
      merged.back().second += l.second;
    } else {
      merged.push_back(l);
    }
  }
  std::vector<std::size_t> count(out.n + 1, 0);
  for (const auto& [key, w] : merged) {
    ++count[(key >> 32) + 1];
    ++count[(key & 0xFFFFFFFFu) + 1];
  }
  for (std::size_t i = 0; i < out.n; ++i) count[i + 1] += count[i];
  out.offsets = count;
  out.neighbor.resize(count[out.n]);
  out.weight.resize(count[out.n]);
  std::vector<std::size_t> cursor(count.begin(), count.end() - 1);
  for (const auto& [key, w] : merged) {
    const auto a = static_cast<std::uint32_t>(key >> 32);
    const auto b = static_cast<std::uint32_t>(key & 0xFFFFFFFFu);
    out.neighbor[cursor[a]] = b;
    out.weight[cursor[a]++] = w;
    out.neighbor[cursor[b]] = a;
    out.weight[cursor[b]++] = w;
  }
  return out;
}

}  // namespace

LouvainResult louvain(const WeightedGraph& g, const LouvainOptions& options) {
  LouvainResult result;
  const std::size_t n = g.num_vertices();
  if (g.total_weight() == 0) {
    result.partition = Partition::singletons(n);
    return result;
  }
  Rng rng(options.seed);
  LevelGraph level = from_weighted(g);
  std::vector<std::uint32_t> membership(n);
  std::iota(membership.begin(), membership.end(), 0u);
  double previous = level_modularity(level, membership);

  for (std::uint32_t depth = 0; depth < options.max_levels; ++depth) {
    std::vector<std::uint32_t> block(level.n);
    std::iota(block.begin(), block.end(), 0u);
    const std::size_t changed = local_moving(level, rng, options.min_gain, block);
    if (changed == 0) break;
    const double q = level_modularity(level, block);
    if (q < previous) break;  // never accept a worse level
    LevelGraph next = aggregate(level, block);
    for (auto& b : membership) b = block[b];
    level = std::move(next);
    result.level_modularity.push_back(q);
    const bool improved = q - previous > options.min_gain;
    previous = q;
    if (!improved) break;
  }

  result.partition = Partition(membership);
  result.modularity = weighted_modularity(g, result.partition);
  if (result.modularity < 0.0) {
    result.partition = Partition::one_block(n);
    result.modularity = 0.0;
  }
  return result;
}

Partition detect_communities(const WeightedGraph& g, std::uint64_t seed, std::uint32_t max_levels) {
  LouvainOptions options;
  options.seed = seed;
  options.max_levels = max_levels;
  return louvain(g, options).partition;
}

}  // namespace pahyper
