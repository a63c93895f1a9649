#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace pahyper {

using VertexId = std::uint32_t;
using CommunityId = std::uint32_t;

/// Read-only view of one hyperedge: member ids sorted ascending, repetitions
/// kept, so size() is the cardinality |e| counting multiplicity.
using Hyperedge = std::span<const VertexId>;

/// Number of vertices N_k for every degree k that occurs (k = 0 included).
struct DegreeHistogram {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t total_vertices = 0;

  std::uint64_t at(std::uint64_t degree) const {
    auto it = counts.find(degree);
    return it == counts.end() ? 0 : it->second;
  }
};

/// Growth-only hypergraph with multiset hyperedges.
///
/// Edges live in one flat pin array (CSR layout); degrees are maintained
/// incrementally. When constructed with a community count every vertex
/// carries exactly one community label in [0, r).
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::uint32_t num_communities);

  VertexId add_vertex(std::optional<CommunityId> community = std::nullopt);

  /// Members may come in any order; they are stored sorted.
  std::size_t add_hyperedge(std::vector<VertexId> members);

  std::size_t num_vertices() const { return degrees_.size(); }
  std::size_t num_edges() const { return offsets_.size() - 1; }
  std::size_t num_pins() const { return pins_.size(); }

  Hyperedge edge(std::size_t e) const {
    return {pins_.data() + offsets_[e], offsets_[e + 1] - offsets_[e]};
  }
  std::size_t edge_size(std::size_t e) const { return offsets_[e + 1] - offsets_[e]; }

  std::uint64_t degree(VertexId v) const { return degrees_[v]; }
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }

  /// D = Σ_v deg(v) = Σ_e |e| = vol(V).
  std::uint64_t degree_sum() const { return pins_.size(); }

  bool has_communities() const { return num_communities_.has_value(); }
  std::uint32_t num_communities() const { return num_communities_.value_or(0); }
  CommunityId community_of(VertexId v) const { return communities_[v]; }
  const std::vector<CommunityId>& communities() const { return communities_; }

  /// Recounts degrees from the pin array and compares against the cache.
  bool degrees_consistent() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<VertexId> pins_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint64_t> degrees_;
  std::optional<std::uint32_t> num_communities_;
  std::vector<CommunityId> communities_;
};

DegreeHistogram degree_histogram(const Hypergraph& h);

/// Histogram restricted to vertices labeled with `community`.
DegreeHistogram degree_histogram(const Hypergraph& h, CommunityId community);

}  // namespace pahyper
