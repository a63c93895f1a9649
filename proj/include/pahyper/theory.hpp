#pragma once

#include <cstdint>
#include <vector>

#include "pahyper/gen_g.hpp"
#include "pahyper/gen_h.hpp"

namespace pahyper {

/// Closed-form asymptotics of H.
///   v_bar = p_v + p_ve
///   d_bar = m (p_ve mu_0 + sum_i p_e[i] mu_i)
///   big_d = (d_bar + gamma v_bar) / (d_bar - m p_ve)
///   beta  = 2 + (gamma v_bar + m p_ve) / (d_bar - m p_ve)  (= 1 + big_d)
///   c     = p_v D G(gamma+D)/G(gamma) + p_ve D G(m+gamma+D)/G(m+gamma)
/// with G the gamma function; the first term of c vanishes when gamma = 0.
struct TheoryPrediction {
  double beta = 0.0;
  double v_bar = 0.0;
  double d_bar = 0.0;
  double big_d = 0.0;
  double c = 0.0;
};

/// Throws std::invalid_argument when d_bar <= m p_ve.
TheoryPrediction predict_beta_h(const HParams& params);

struct GPrediction {
  /// min over communities
  double beta = 0.0;
  std::vector<double> per_community;
};

/// Each community's exponent comes from reduce_community + predict_beta_h.
/// Throws std::invalid_argument if a community never takes part in a
/// hyperedge (s_j = 0) or if p = 1.
GPrediction predict_beta_g(const GParams& params);

/// beta_j = 2 + gamma p m_j / ((1 - p) s_j (mu_1 + ... + mu_r) / r), evaluated
/// directly without going through the single-community reduction.
std::vector<double> community_betas_closed_form(const GParams& params);

/// Limit fractions L_k = lim N_{k,t} / t of vertices with degree k:
///   L_0 = p_v D / (gamma + D)
///   L_k = [L_{k-1} (k - 1 + gamma) + [k == m] p_ve D] / (k + gamma + D)
/// per_vertex[k] = L_k / (p_v + p_ve).
struct DegreeFractionTable {
  std::vector<double> L;
  std::vector<double> per_vertex;
};

/// Throws std::invalid_argument for degenerate parameters or k_max < m.
DegreeFractionTable degree_fraction_oracle(const HParams& params, std::uint64_t k_max);

}  // namespace pahyper
