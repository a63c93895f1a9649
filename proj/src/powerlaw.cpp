#include "pahyper/powerlaw.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace pahyper {

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) throw std::invalid_argument("hurwitz_zeta needs s > 1 and q > 0");
  // GSL's default handler aborts; status codes are checked here instead.
  static const bool handler_off = (gsl_set_error_handler_off(), true);
  (void)handler_off;
  gsl_sf_result result;
  const int status = gsl_sf_hzeta_e(s, q, &result);
  if (status == GSL_EUNDRFLW) return 0.0;
  if (status != GSL_SUCCESS) {
    throw std::runtime_error(std::string("hurwitz zeta failed: ") + gsl_strerror(status));
  }
  return result.val;
}

namespace {

struct Tail {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> values;  // (degree, count), ascending
  std::uint64_t n = 0;
  double log_sum = 0.0;
};

Tail collect_tail(const DegreeHistogram& hist, std::uint64_t k_min) {
  Tail tail;
  for (auto it = hist.counts.lower_bound(std::max<std::uint64_t>(k_min, 1)); it != hist.counts.end(); ++it) {
    if (it->second == 0) continue;
    tail.values.push_back(*it);
    tail.n += it->second;
    tail.log_sum += static_cast<double>(it->second) * std::log(static_cast<double>(it->first));
  }
  return tail;
}

double fit_beta(const Tail& tail, std::uint64_t k_min) {
  const double n = static_cast<double>(tail.n);
  const double q = static_cast<double>(k_min);
  auto nll = [&](double beta) { return n * std::log(hurwitz_zeta(beta, q)) + beta * tail.log_sum; };
  const auto [beta, value] = boost::math::tools::brent_find_minima(nll, 1.0 + 1e-9, 30.0, 50);
  (void)value;
  return beta;
}

double ks_distance(const Tail& tail, double beta, std::uint64_t k_min) {
  const double z_min = hurwitz_zeta(beta, static_cast<double>(k_min));
  const double n = static_cast<double>(tail.n);
  double seen = 0.0, worst = 0.0;
  for (const auto& [k, count] : tail.values) {
    // model CDF just below k and at k
    const double below = 1.0 - hurwitz_zeta(beta, static_cast<double>(k)) / z_min;
    const double at = 1.0 - hurwitz_zeta(beta, static_cast<double>(k + 1)) / z_min;
    worst = std::max(worst, std::abs(seen / n - below));
    seen += static_cast<double>(count);
    worst = std::max(worst, std::abs(seen / n - at));
  }
  return worst;
}

TailFit fit_at(const DegreeHistogram& hist, std::uint64_t k_min) {
  const Tail tail = collect_tail(hist, k_min);
  if (tail.n < kMinTailSamples) {
    throw std::invalid_argument("power-law fit needs at least " + std::to_string(kMinTailSamples) +
                                " vertices with degree >= " + std::to_string(k_min) + ", got " +
                                std::to_string(tail.n));
  }
  if (tail.values.size() < 2) {
    throw std::invalid_argument("power-law fit needs at least two distinct degrees in the tail");
  }
  TailFit fit;
  fit.k_min = k_min;
  fit.n_tail = tail.n;
  fit.beta_hat = fit_beta(tail, k_min);
  fit.stderr_beta = (fit.beta_hat - 1.0) / std::sqrt(static_cast<double>(tail.n));
  fit.ks_distance = ks_distance(tail, fit.beta_hat, k_min);
  return fit;
}

}  // namespace

TailFit fit_tail_exponent(const DegreeHistogram& hist, std::optional<std::uint64_t> k_min) {
  if (k_min) {
    if (*k_min == 0) throw std::invalid_argument("k_min must be at least 1");
    return fit_at(hist, *k_min);
  }
  std::vector<std::uint64_t> candidates;
  std::uint64_t remaining = 0;
  for (const auto& [k, count] : hist.counts) {
    if (k > 0) remaining += count;
  }
  for (const auto& [k, count] : hist.counts) {
    if (k == 0 || count == 0) continue;
    if (remaining < kMinTailSamples) break;
    candidates.push_back(k);
    remaining -= count;
  }
  // The last candidate's tail must still hold two distinct values.
  while (!candidates.empty() && collect_tail(hist, candidates.back()).values.size() < 2) {
    candidates.pop_back();
  }
  if (candidates.empty()) return fit_at(hist, 1);  // throws with the reason

  TailFit best;
  double best_ks = std::numeric_limits<double>::infinity();
  for (std::uint64_t k : candidates) {
    const TailFit fit = fit_at(hist, k);
    if (fit.ks_distance < best_ks) {
      best_ks = fit.ks_distance;
      best = fit;
    }
  }
  return best;
}

}  // namespace pahyper
