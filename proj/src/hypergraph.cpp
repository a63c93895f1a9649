#include "pahyper/hypergraph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace pahyper {

Hypergraph::Hypergraph(std::uint32_t num_communities) : num_communities_(num_communities) {
  if (num_communities == 0) {
    throw std::invalid_argument("community count must be positive");
  }
}

VertexId Hypergraph::add_vertex(std::optional<CommunityId> community) {
  if (num_communities_) {
    if (!community) {
      throw std::invalid_argument("labeled hypergraph requires a community for every vertex");
    }
    if (*community >= *num_communities_) {
      throw std::out_of_range("community " + std::to_string(*community) + " out of range [0, " +
                              std::to_string(*num_communities_) + ")");
    }
    communities_.push_back(*community);
  } else if (community) {
    throw std::invalid_argument("unlabeled hypergraph does not accept a community");
  }
  degrees_.push_back(0);
  return static_cast<VertexId>(degrees_.size() - 1);
}

std::size_t Hypergraph::add_hyperedge(std::vector<VertexId> members) {
  if (members.empty()) {
    throw std::invalid_argument("hyperedge must be non-empty");
  }
  for (VertexId v : members) {
    if (v >= degrees_.size()) {
      throw std::out_of_range("invalid vertex id " + std::to_string(v));
    }
  }
  std::sort(members.begin(), members.end());
  for (VertexId v : members) ++degrees_[v];
  pins_.insert(pins_.end(), members.begin(), members.end());
  offsets_.push_back(pins_.size());
  assert(degrees_consistent() || num_pins() > 4096);
  return num_edges() - 1;
}

bool Hypergraph::degrees_consistent() const {
  std::vector<std::uint64_t> recount(degrees_.size(), 0);
  for (VertexId v : pins_) ++recount[v];
  return recount == degrees_;
}

DegreeHistogram degree_histogram(const Hypergraph& h) {
  DegreeHistogram hist;
  for (std::uint64_t d : h.degrees()) ++hist.counts[d];
  hist.total_vertices = h.num_vertices();
  return hist;
}

DegreeHistogram degree_histogram(const Hypergraph& h, CommunityId community) {
  if (!h.has_communities()) {
    throw std::invalid_argument("hypergraph carries no community labels");
  }
  DegreeHistogram hist;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (h.community_of(v) == community) {
      ++hist.counts[h.degree(v)];
      ++hist.total_vertices;
    }
  }
  return hist;
}

}  // namespace pahyper
