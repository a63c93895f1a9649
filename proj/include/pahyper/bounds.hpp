#pragma once

#include <cstdint>
#include <vector>

#include "pahyper/gen_g.hpp"
#include "pahyper/modularity.hpp"

namespace pahyper {

/// Inputs of the modularity lower bounds for a community-structured hypergraph.
///   p[i]         probability that a hyperedge lies entirely within community i
///   s[i]         probability that a hyperedge touches community i
///   a            hyperedge-size profile
///   d            largest hyperedge cardinality
///   alpha_noise  1 - sum_i p[i]
///   beta_max     max_i p[i]
struct BoundInputs {
  std::vector<double> p;
  std::vector<double> s;
  CardinalityProfile a;
  std::uint32_t d = 0;
  std::uint32_t r = 0;
  double alpha_noise = 0.0;
  double beta_max = 0.0;
};

/// sum_i p_i - sum_i sum_l a_l (((d - 1) s_i + p_i) / delta)^l
double modularity_lower_bound_general(const BoundInputs& b);

/// 1 - alpha - a_1 (d/delta) ((d-2) alpha + 1)
///   - sum_{l>=2} a_l (d/delta)^l ((r-1) beta^l + ((d-1) alpha + beta)^l)
double modularity_lower_bound_ab(double alpha_noise, double beta_max, const CardinalityProfile& a,
                                 std::uint32_t d, std::uint32_t r);

/// p_i = P({i}), s_i = community marginals, d = a.max_cardinality().
BoundInputs bound_inputs_from_profile(const InterCommunityProfile& profile, const CardinalityProfile& a);

/// Measured from a labeled hypergraph: p_i and s_i are edge fractions, a and
/// d come from the observed cardinalities.
BoundInputs bound_inputs_from_hypergraph(const Hypergraph& h);

/// Limiting size profile of hyperedges created by G (the initial
/// cardinality-1 edges are not counted).
CardinalityProfile expected_cardinality_profile(const GParams& params);

}  // namespace pahyper
