#include "pahyper/modularity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pahyper {

Partition::Partition(const std::vector<std::uint32_t>& labels) {
  std::map<std::uint32_t, BlockId> remap;
  block_of_.reserve(labels.size());
  for (std::uint32_t label : labels) {
    auto [it, inserted] = remap.emplace(label, static_cast<BlockId>(remap.size()));
    block_of_.push_back(it->second);
  }
  num_blocks_ = static_cast<std::uint32_t>(remap.size());
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::uint32_t>(i);
  return Partition(labels);
}

Partition Partition::one_block(std::size_t n) { return Partition(std::vector<std::uint32_t>(n, 0)); }

CardinalityProfile cardinality_profile(const Hypergraph& h) {
  if (h.num_edges() == 0) throw std::invalid_argument("cardinality profile of an empty edge set");
  std::map<std::uint32_t, std::uint64_t> counts;
  for (std::size_t e = 0; e < h.num_edges(); ++e) ++counts[static_cast<std::uint32_t>(h.edge_size(e))];
  CardinalityProfile prof;
  const double m = static_cast<double>(h.num_edges());
  for (const auto& [size, c] : counts) prof.a[size] = static_cast<double>(c) / m;
  prof.delta = static_cast<double>(h.degree_sum()) / m;
  return prof;
}

namespace {

void check_partition(const Hypergraph& h, const Partition& part) {
  if (part.size() != h.num_vertices()) {
    throw std::invalid_argument("partition covers " + std::to_string(part.size()) +
                                " vertices, hypergraph has " + std::to_string(h.num_vertices()));
  }
}

bool edge_internal(Hyperedge e, const Partition& part, BlockId& block) {
  block = part.block_of(e[0]);
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (part.block_of(e[i]) != block) return false;
  }
  return true;
}

// Combines the per-block internal counts and the per-size edge counts into
// the final score.
ModularityBreakdown assemble(const Hypergraph& h, const Partition& part,
                             const std::vector<std::uint64_t>& internal,
                             const std::vector<std::uint64_t>& size_counts) {
  ModularityBreakdown out;
  out.per_block.resize(part.num_blocks());
  for (VertexId v = 0; v < h.num_vertices(); ++v) out.per_block[part.block_of(v)].volume += h.degree(v);
  const std::size_t m = h.num_edges();
  if (m == 0) return out;
  const double edges = static_cast<double>(m);
  const double vol = static_cast<double>(h.degree_sum());
  for (std::size_t b = 0; b < out.per_block.size(); ++b) {
    BlockTerm& term = out.per_block[b];
    term.internal_edges = internal[b];
    term.edge_contribution = static_cast<double>(internal[b]) / edges;
    const double frac = static_cast<double>(term.volume) / vol;
    double tax = 0.0;
    for (std::size_t l = 1; l < size_counts.size(); ++l) {
      if (size_counts[l] == 0) continue;
      tax += (static_cast<double>(size_counts[l]) / edges) * std::pow(frac, static_cast<double>(l));
    }
    term.degree_tax = tax;
    out.edge_contribution += term.edge_contribution;
    out.degree_tax += tax;
  }
  out.score = out.edge_contribution - out.degree_tax;
  return out;
}

}  // namespace

ModularityBreakdown graph_modularity_score(const Hypergraph& g, const Partition& part) {
  check_partition(g, part);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.edge_size(e) != 2) {
      throw std::invalid_argument("graph modularity needs a 2-uniform hypergraph; edge " +
                                  std::to_string(e) + " has cardinality " +
                                  std::to_string(g.edge_size(e)));
    }
  }
  ModularityBreakdown out;
  out.per_block.resize(part.num_blocks());
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.per_block[part.block_of(v)].volume += g.degree(v);
  if (g.num_edges() == 0) return out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto edge = g.edge(e);
    if (part.block_of(edge[0]) == part.block_of(edge[1])) ++out.per_block[part.block_of(edge[0])].internal_edges;
  }
  const double edges = static_cast<double>(g.num_edges());
  for (BlockTerm& term : out.per_block) {
    term.edge_contribution = static_cast<double>(term.internal_edges) / edges;
    const double x = static_cast<double>(term.volume) / (2.0 * edges);
    term.degree_tax = x * x;
    out.edge_contribution += term.edge_contribution;
    out.degree_tax += term.degree_tax;
  }
  out.score = out.edge_contribution - out.degree_tax;
  return out;
}

ModularityBreakdown hypergraph_modularity_score_serial(const Hypergraph& h, const Partition& part) {
  check_partition(h, part);
  std::vector<std::uint64_t> internal(part.num_blocks(), 0);
  std::vector<std::uint64_t> size_counts;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto edge = h.edge(e);
    if (size_counts.size() <= edge.size()) size_counts.resize(edge.size() + 1, 0);
    ++size_counts[edge.size()];
    BlockId b;
    if (edge_internal(edge, part, b)) ++internal[b];
  }
  return assemble(h, part, internal, size_counts);
}

ModularityBreakdown hypergraph_modularity_score(const Hypergraph& h, const Partition& part) {
  check_partition(h, part);
  const auto m = static_cast<std::int64_t>(h.num_edges());
  std::size_t max_size = 0;
#pragma omp parallel for reduction(max : max_size) schedule(static)
  for (std::int64_t e = 0; e < m; ++e) max_size = std::max(max_size, h.edge_size(e));

  std::vector<std::uint64_t> internal(part.num_blocks(), 0);
  std::vector<std::uint64_t> size_counts(max_size + 1, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local_internal(part.num_blocks(), 0);
    std::vector<std::uint64_t> local_sizes(max_size + 1, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t e = 0; e < m; ++e) {
      const auto edge = h.edge(static_cast<std::size_t>(e));
      ++local_sizes[edge.size()];
      BlockId b;
      if (edge_internal(edge, part, b)) ++local_internal[b];
    }
#pragma omp critical
    {
      for (std::size_t b = 0; b < internal.size(); ++b) internal[b] += local_internal[b];
      for (std::size_t l = 0; l < size_counts.size(); ++l) size_counts[l] += local_sizes[l];
    }
  }
  return assemble(h, part, internal, size_counts);
}

BruteForceResult brute_force_modularity(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (n > kBruteForceMaxVertices) {
    throw std::invalid_argument("brute force supports at most " +
                                std::to_string(kBruteForceMaxVertices) + " vertices, got " +
                                std::to_string(n));
  }
  BruteForceResult best{Partition::one_block(n), 0.0};
  if (n == 0 || h.num_edges() == 0) return best;

  std::vector<std::uint64_t> size_counts;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (size_counts.size() <= h.edge_size(e)) size_counts.resize(h.edge_size(e) + 1, 0);
    ++size_counts[h.edge_size(e)];
  }
  const double edges = static_cast<double>(h.num_edges());
  const double vol = static_cast<double>(h.degree_sum());

  std::vector<std::uint32_t> rgs(n, 0), prefix_max(n, 0);
  std::vector<std::uint64_t> volume(n), internal(n);
  bool first = true;
  for (;;) {
    const std::uint32_t blocks = prefix_max[n - 1] + 1;
    std::fill_n(volume.begin(), blocks, 0);
    std::fill_n(internal.begin(), blocks, 0);
    for (std::size_t v = 0; v < n; ++v) volume[rgs[v]] += h.degree(static_cast<VertexId>(v));
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const auto edge = h.edge(e);
      const std::uint32_t b = rgs[edge[0]];
      if (std::all_of(edge.begin(), edge.end(), [&](VertexId v) { return rgs[v] == b; })) ++internal[b];
    }
    double q = 0.0;
    for (std::uint32_t b = 0; b < blocks; ++b) {
      q += static_cast<double>(internal[b]) / edges;
      const double frac = static_cast<double>(volume[b]) / vol;
      for (std::size_t l = 1; l < size_counts.size(); ++l) {
        if (size_counts[l]) q -= (static_cast<double>(size_counts[l]) / edges) * std::pow(frac, double(l));
      }
    }
    if (first || q > best.modularity) {
      best = {Partition(rgs), q};
      first = false;
    }

    // next restricted-growth string
    std::size_t i = n;
    while (--i > 0 && rgs[i] > prefix_max[i - 1]) {
    }
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return best;
}

}  // namespace pahyper
