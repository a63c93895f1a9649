#include "pahyper/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pahyper {

TheoryPrediction predict_beta_h(const HParams& params) {
  params.validate();
  TheoryPrediction out;
  const double m = static_cast<double>(params.m);
  out.v_bar = params.p_v + params.p_ve;
  double edge_mass = params.p_ve * params.y_dist.mean();
  for (std::size_t i = 0; i < params.p_e.size(); ++i) edge_mass += params.p_e[i] * params.x_dists[i].mean();
  out.d_bar = m * edge_mass;
  const double excess = out.d_bar - m * params.p_ve;
  if (!(excess > 0.0)) {
    throw std::invalid_argument("degenerate parameters: d_bar = " + std::to_string(out.d_bar) +
                                " does not exceed m * p_ve = " + std::to_string(m * params.p_ve));
  }
  const double gamma = params.gamma;
  out.big_d = (out.d_bar + gamma * out.v_bar) / excess;
  out.beta = 2.0 + (gamma * out.v_bar + m * params.p_ve) / excess;

  const double D = out.big_d;
  if (gamma > 0.0 && params.p_v > 0.0) {
    out.c += params.p_v * D * std::exp(std::lgamma(gamma + D) - std::lgamma(gamma));
  }
  if (params.p_ve > 0.0) {
    out.c += params.p_ve * D * std::exp(std::lgamma(m + gamma + D) - std::lgamma(m + gamma));
  }
  return out;
}

GPrediction predict_beta_g(const GParams& params) {
  params.validate();
  if (params.p >= 1.0) throw std::invalid_argument("p = 1 adds no hyperedges; no exponent exists");
  const auto s = community_marginals(params.profile);
  GPrediction out;
  out.beta = std::numeric_limits<double>::infinity();
  for (CommunityId j = 0; j < params.num_communities(); ++j) {
    if (s[j] <= 0.0) {
      throw std::invalid_argument("community " + std::to_string(j) +
                                  " gains vertices but never takes part in a hyperedge (s_j = 0)");
    }
    const double beta = predict_beta_h(reduce_community(params, j)).beta;
    out.per_community.push_back(beta);
    out.beta = std::min(out.beta, beta);
  }
  return out;
}

std::vector<double> community_betas_closed_form(const GParams& params) {
  params.validate();
  const auto s = community_marginals(params.profile);
  const double r = static_cast<double>(params.num_communities());
  double mu_sum = 0.0;
  for (const auto& x : params.x_dists) mu_sum += x.mean();
  std::vector<double> out;
  for (CommunityId j = 0; j < params.num_communities(); ++j) {
    out.push_back(2.0 + params.gamma * params.p * params.M[j] / ((1.0 - params.p) * s[j] * mu_sum / r));
  }
  return out;
}

DegreeFractionTable degree_fraction_oracle(const HParams& params, std::uint64_t k_max) {
  const TheoryPrediction pred = predict_beta_h(params);
  if (k_max < params.m) {
    throw std::invalid_argument("k_max = " + std::to_string(k_max) + " is below m = " +
                                std::to_string(params.m));
  }
  if (!(pred.v_bar > 0.0)) throw std::invalid_argument("no vertex events: p_v + p_ve = 0");
  const double D = pred.big_d;
  const double gamma = params.gamma;
  DegreeFractionTable table;
  table.L.resize(k_max + 1);
  table.L[0] = params.p_v * D / (gamma + D);
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const double kd = static_cast<double>(k);
    double num = table.L[k - 1] * (kd - 1.0 + gamma);
    if (k == params.m) num += params.p_ve * D;
    table.L[k] = num / (kd + gamma + D);
  }
  table.per_vertex.reserve(table.L.size());
  for (double l : table.L) table.per_vertex.push_back(l / pred.v_bar);
  return table;
}

}  // namespace pahyper
