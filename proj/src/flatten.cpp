#include "pahyper/flatten.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <parallel/algorithm>
#endif

namespace pahyper {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) { return (std::uint64_t(u) << 32) | v; }

std::vector<VertexId> distinct_members(Hyperedge e) {
  std::vector<VertexId> d(e.begin(), e.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

void emit_pairs(Hyperedge e, std::uint64_t* out) {
  const auto d = distinct_members(e);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) *out++ = pair_key(d[i], d[j]);
  }
}

std::vector<WeightedEdge> run_length(const std::vector<std::uint64_t>& keys) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    edges.push_back({static_cast<VertexId>(keys[i] >> 32),
                     static_cast<VertexId>(keys[i] & 0xFFFFFFFFu), j - i});
    i = j;
  }
  return edges;
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t num_vertices, std::vector<WeightedEdge> edges) {
  for (auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("weighted graph does not take self-loops");
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw std::out_of_range("edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const auto& e : edges) {
    if (e.weight == 0) continue;
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().weight += e.weight;
    } else {
      edges_.push_back(e);
    }
  }
  build_from_sorted(num_vertices);
}

void WeightedGraph::build_from_sorted(std::size_t n) {
  weighted_degree_.assign(n, 0);
  std::vector<std::size_t> count(n + 1, 0);
  total_weight_ = 0;
  for (const auto& e : edges_) {
    ++count[e.u + 1];
    ++count[e.v + 1];
    weighted_degree_[e.u] += e.weight;
    weighted_degree_[e.v] += e.weight;
    total_weight_ += e.weight;
  }
  for (std::size_t i = 0; i < n; ++i) count[i + 1] += count[i];
  offsets_ = count;
  adjacency_.resize(offsets_[n]);
  adjacency_weights_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[cursor[e.u]] = e.v;
    adjacency_weights_[cursor[e.u]++] = e.weight;
    adjacency_[cursor[e.v]] = e.u;
    adjacency_weights_[cursor[e.v]++] = e.weight;
  }
}

WeightedGraph flatten_serial(const Hypergraph& h) {
  std::vector<std::uint64_t> keys;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto d = distinct_members(h.edge(e));
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) keys.push_back(pair_key(d[i], d[j]));
    }
  }
  std::sort(keys.begin(), keys.end());
  WeightedGraph g;
  g.edges_ = run_length(keys);
  g.build_from_sorted(h.num_vertices());
  return g;
}

WeightedGraph flatten(const Hypergraph& h) {
  const auto m = static_cast<std::int64_t>(h.num_edges());
  std::vector<std::size_t> offsets(h.num_edges() + 1, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < m; ++e) {
    const auto edge = h.edge(static_cast<std::size_t>(e));
    std::size_t distinct = edge.empty() ? 0 : 1;
    for (std::size_t i = 1; i < edge.size(); ++i) distinct += edge[i] != edge[i - 1];
    offsets[e + 1] = distinct * (distinct - 1) / 2;
  }
  for (std::size_t e = 0; e < h.num_edges(); ++e) offsets[e + 1] += offsets[e];

  std::vector<std::uint64_t> keys(offsets.back());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t e = 0; e < m; ++e) {
    emit_pairs(h.edge(static_cast<std::size_t>(e)), keys.data() + offsets[e]);
  }
#ifdef _OPENMP
  __gnu_parallel::sort(keys.begin(), keys.end());
#else
  std::sort(keys.begin(), keys.end());
#endif
  WeightedGraph g;
  g.edges_ = run_length(keys);
  g.build_from_sorted(h.num_vertices());
  return g;
}

}  // namespace pahyper
