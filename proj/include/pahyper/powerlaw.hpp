#pragma once

#include <cstdint>
#include <optional>

#include "pahyper/hypergraph.hpp"

namespace pahyper {

struct TailFit {
  double beta_hat = 0.0;
  std::uint64_t k_min = 1;
  std::uint64_t n_tail = 0;
  double stderr_beta = 0.0;
  /// Kolmogorov-Smirnov distance between the tail and the fitted law.
  double ks_distance = 0.0;
};

inline constexpr std::uint64_t kMinTailSamples = 50;

/// Hurwitz zeta sum_{n>=0} (n + q)^{-s}, s > 1, q > 0.
double hurwitz_zeta(double s, double q);

/// Discrete power-law fit Pr[k] = k^{-beta} / zeta(beta, k_min) for k >= k_min.
/// beta_hat maximizes the exact likelihood. Without k_min, every degree value
/// leaving at least 50 tail samples is tried and the one with the smallest KS
/// distance is kept. Degree 0 never enters the tail. Throws
/// std::invalid_argument when the tail has fewer than 50 samples or only one
/// distinct value.
TailFit fit_tail_exponent(const DegreeHistogram& hist,
                          std::optional<std::uint64_t> k_min = std::nullopt);

}  // namespace pahyper
