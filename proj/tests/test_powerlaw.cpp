#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pahyper/powerlaw.hpp"
#include "oracles.hpp"

using namespace pahyper;

namespace {

DegreeHistogram zeta_histogram(double beta, std::size_t n, std::uint64_t seed) {
  oracle::ZetaSampler sample(beta);
  std::mt19937_64 eng(seed);
  DegreeHistogram hist;
  for (std::size_t i = 0; i < n; ++i) ++hist.counts[sample(eng)];
  hist.total_vertices = n;
  return hist;
}

}  // namespace

TEST(HurwitzZeta, AgreesWithDirectSummation) {
  for (double s : {1.5, 2.0, 2.5, 3.7}) {
    for (double q : {1.0, 2.0, 7.0, 30.0}) {
      EXPECT_NEAR(hurwitz_zeta(s, q), oracle::zeta_tail(s, q), 1e-10 * oracle::zeta_tail(s, q));
    }
  }
  EXPECT_NEAR(hurwitz_zeta(2.0, 1.0), M_PI * M_PI / 6.0, 1e-14);
  EXPECT_THROW(hurwitz_zeta(1.0, 1.0), std::invalid_argument);
}

TEST(TailFit, RecoversZetaExponentAtFixedCutoff) {
  const auto hist = zeta_histogram(2.5, 100000, 11);
  const auto fit = fit_tail_exponent(hist, 1);
  EXPECT_GE(fit.beta_hat, 2.45);
  EXPECT_LE(fit.beta_hat, 2.55);
  EXPECT_EQ(fit.k_min, 1u);
  EXPECT_EQ(fit.n_tail, 100000u);
  EXPECT_NEAR(fit.stderr_beta, (fit.beta_hat - 1.0) / std::sqrt(100000.0), 1e-15);
}

TEST(TailFit, AutomaticCutoffStaysClose) {
  const auto hist = zeta_histogram(2.2, 50000, 12);
  const auto fit = fit_tail_exponent(hist);
  EXPECT_NEAR(fit.beta_hat, 2.2, 0.1);
  EXPECT_GE(fit.n_tail, kMinTailSamples);
  EXPECT_GE(fit.ks_distance, 0.0);
}

TEST(TailFit, DoublingHistogramLeavesEstimateUnchanged) {
  auto hist = zeta_histogram(2.8, 20000, 13);
  const auto once = fit_tail_exponent(hist, 2);
  for (auto& [k, c] : hist.counts) c *= 2;
  hist.total_vertices *= 2;
  const auto twice = fit_tail_exponent(hist, 2);
  EXPECT_NEAR(once.beta_hat, twice.beta_hat, 1e-9);
  EXPECT_EQ(twice.n_tail, 2 * once.n_tail);
}

TEST(TailFit, IgnoresDegreeZero) {
  auto hist = zeta_histogram(2.5, 5000, 14);
  const auto before = fit_tail_exponent(hist, 1);
  hist.counts[0] += 100000;
  EXPECT_NEAR(fit_tail_exponent(hist, 1).beta_hat, before.beta_hat, 1e-12);
}

TEST(TailFit, Errors) {
  DegreeHistogram equal;
  equal.counts[4] = 1000;
  EXPECT_THROW(fit_tail_exponent(equal), std::invalid_argument);
  EXPECT_THROW(fit_tail_exponent(equal, 4), std::invalid_argument);
  DegreeHistogram small;
  small.counts[1] = 20;
  small.counts[2] = 20;
  EXPECT_THROW(fit_tail_exponent(small, 1), std::invalid_argument);
  EXPECT_THROW(fit_tail_exponent(zeta_histogram(2.5, 1000, 1), 0), std::invalid_argument);
}
