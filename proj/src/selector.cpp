#include "pahyper/selector.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pahyper {

PreferentialSelector::PreferentialSelector(double gamma) : gamma_(gamma) {
  if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be non-negative");
}

PreferentialSelector PreferentialSelector::from_hypergraph(const Hypergraph& h, double gamma) {
  PreferentialSelector sel(gamma);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    sel.add_vertex(v);
    for (std::uint64_t i = 0; i < h.degree(v); ++i) sel.occurrences_.push_back(v);
  }
  return sel;
}

PreferentialSelector PreferentialSelector::from_community(const Hypergraph& h,
                                                          CommunityId community, double gamma) {
  PreferentialSelector sel(gamma);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (h.community_of(v) != community) continue;
    sel.add_vertex(v);
    for (std::uint64_t i = 0; i < h.degree(v); ++i) sel.occurrences_.push_back(v);
  }
  return sel;
}

void PreferentialSelector::add_vertex(VertexId v) {
  if (contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " already present");
  if (member_mask_.size() <= v) member_mask_.resize(static_cast<std::size_t>(v) + 1, false);
  member_mask_[v] = true;
  members_.push_back(v);
}

void PreferentialSelector::record_degree_increment(VertexId v) {
  if (!contains(v)) throw std::out_of_range("invalid vertex id " + std::to_string(v));
  occurrences_.push_back(v);
}

VertexId PreferentialSelector::select(Rng& rng) const {
  if (members_.empty()) throw std::logic_error("cannot select from an empty population");
  if (gamma_ == 0.0) {
    if (occurrences_.empty()) throw std::logic_error("all vertices have zero selection weight");
    return occurrences_[rng.below(occurrences_.size())];
  }
  const double degree_mass = static_cast<double>(occurrences_.size());
  const double u = rng.uniform() * total_weight();
  if (u < degree_mass) {
    auto idx = static_cast<std::size_t>(u);
    return occurrences_[std::min(idx, occurrences_.size() - 1)];
  }
  auto idx = static_cast<std::size_t>((u - degree_mass) / gamma_);
  return members_[std::min(idx, members_.size() - 1)];
}

void PreferentialSelector::select_into(std::size_t n, Rng& rng, std::vector<VertexId>& out) const {
  for (std::size_t i = 0; i < n; ++i) out.push_back(select(rng));
}

std::vector<VertexId> PreferentialSelector::select_vertices(std::size_t n, Rng& rng) const {
  std::vector<VertexId> out;
  out.reserve(n);
  select_into(n, rng, out);
  return out;
}

double PreferentialSelector::marginal(VertexId v) const {
  if (!contains(v)) return 0.0;
  const double w = total_weight();
  const double d = static_cast<double>(occurrences_.size());
  const double copies = static_cast<double>(std::count(occurrences_.begin(), occurrences_.end(), v));
  const double from_degree = d > 0.0 ? (d / w) * (copies / d) : 0.0;
  const double from_uniform = (gamma_ * static_cast<double>(members_.size()) / w) /
                              static_cast<double>(members_.size());
  return from_degree + from_uniform;
}

}  // namespace pahyper
