#include "pahyper/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pahyper {

namespace {

void check_profile(const CardinalityProfile& a) {
  if (a.a.empty() || !(a.delta > 0.0)) throw std::invalid_argument("bound needs a non-empty size profile");
}

std::map<std::uint32_t, double> convolve(const std::map<std::uint32_t, double>& x,
                                         const std::map<std::uint32_t, double>& y) {
  std::map<std::uint32_t, double> out;
  for (const auto& [i, pi] : x) {
    for (const auto& [j, pj] : y) out[i + j] += pi * pj;
  }
  return out;
}

}  // namespace

double modularity_lower_bound_general(const BoundInputs& b) {
  check_profile(b.a);
  if (b.p.size() != b.s.size()) throw std::invalid_argument("p and s must have the same length");
  const double d = static_cast<double>(b.d);
  double bound = 0.0;
  for (double pi : b.p) bound += pi;
  for (std::size_t i = 0; i < b.p.size(); ++i) {
    const double x = ((d - 1.0) * b.s[i] + b.p[i]) / b.a.delta;
    for (const auto& [l, al] : b.a.a) bound -= al * std::pow(x, static_cast<double>(l));
  }
  return bound;
}

double modularity_lower_bound_ab(double alpha_noise, double beta_max, const CardinalityProfile& a,
                                 std::uint32_t d, std::uint32_t r) {
  check_profile(a);
  if (!(alpha_noise >= 0.0 && alpha_noise <= 1.0) || !(beta_max >= 0.0 && beta_max <= 1.0)) {
    throw std::invalid_argument("alpha and beta must lie in [0, 1]");
  }
  const double dd = static_cast<double>(d);
  const double ratio = dd / a.delta;
  double bound = 1.0 - alpha_noise;
  for (const auto& [l, al] : a.a) {
    if (l == 1) {
      bound -= al * ratio * ((dd - 2.0) * alpha_noise + 1.0);
    } else {
      const double ld = static_cast<double>(l);
      bound -= al * std::pow(ratio, ld) *
               ((r - 1.0) * std::pow(beta_max, ld) + std::pow((dd - 1.0) * alpha_noise + beta_max, ld));
    }
  }
  return bound;
}

BoundInputs bound_inputs_from_profile(const InterCommunityProfile& profile, const CardinalityProfile& a) {
  BoundInputs b;
  b.r = profile.num_communities();
  b.p.assign(b.r, 0.0);
  for (CommunityId i = 0; i < b.r; ++i) b.p[i] = profile.probability({i});
  b.s = community_marginals(profile);
  b.a = a;
  b.d = a.max_cardinality();
  double within = 0.0;
  for (double pi : b.p) within += pi;
  b.alpha_noise = std::clamp(1.0 - within, 0.0, 1.0);
  b.beta_max = b.p.empty() ? 0.0 : *std::max_element(b.p.begin(), b.p.end());
  return b;
}

BoundInputs bound_inputs_from_hypergraph(const Hypergraph& h) {
  if (!h.has_communities()) throw std::invalid_argument("hypergraph carries no community labels");
  BoundInputs b;
  b.r = h.num_communities();
  b.a = cardinality_profile(h);
  b.d = b.a.max_cardinality();
  std::vector<std::uint64_t> within(b.r, 0), touch(b.r, 0);
  std::vector<CommunityId> seen;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    seen.clear();
    for (VertexId v : h.edge(e)) seen.push_back(h.community_of(v));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (CommunityId c : seen) ++touch[c];
    if (seen.size() == 1) ++within[seen[0]];
  }
  const double m = static_cast<double>(h.num_edges());
  double total_within = 0.0;
  for (std::uint32_t i = 0; i < b.r; ++i) {
    b.p.push_back(static_cast<double>(within[i]) / m);
    b.s.push_back(static_cast<double>(touch[i]) / m);
    total_within += b.p.back();
    b.beta_max = std::max(b.beta_max, b.p.back());
  }
  b.alpha_noise = std::clamp(1.0 - total_within, 0.0, 1.0);
  return b;
}

CardinalityProfile expected_cardinality_profile(const GParams& params) {
  params.validate();
  std::map<std::uint32_t, double> mixture;
  if (!params.edge_size) {
    const double share = 1.0 / static_cast<double>(params.x_dists.size());
    for (const auto& x : params.x_dists) {
      for (const auto& [v, pv] : x.pmf()) mixture[v] += share * pv;
    }
  }
  std::map<std::size_t, std::map<std::uint32_t, double>> by_set_size;
  CardinalityProfile out;
  for (const auto& [set, prob] : params.profile.entries()) {
    auto& dist = by_set_size[set.size()];
    if (dist.empty()) {
      if (params.edge_size) {
        const auto n = static_cast<std::uint32_t>(set.size());
        for (const auto& [k, pk] : params.edge_size->pmf()) dist[std::max(k, n)] += pk;
      } else {
        dist = mixture;
        for (std::size_t i = 1; i < set.size(); ++i) dist = convolve(dist, mixture);
      }
    }
    for (const auto& [l, pl] : dist) out.a[l] += prob * pl;
  }
  for (const auto& [l, al] : out.a) out.delta += static_cast<double>(l) * al;
  return out;
}

}  // namespace pahyper
