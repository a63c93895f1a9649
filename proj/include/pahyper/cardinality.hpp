#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pahyper/rng.hpp"

namespace pahyper {

/// Sampleable distribution over hyperedge cardinalities (support within [1, inf)).
///
/// Text form, used by config files:
///   const:V                constant V
///   uniform:LO:HI          uniform integer in [LO, HI]
///   categorical:V=P,V=P..  explicit values with probabilities
///   poisson:LAMBDA:SHIFT   SHIFT + Poisson(LAMBDA), SHIFT >= 1
class CardinalityDistribution {
 public:
  struct Constant {
    std::uint32_t value;
  };
  struct UniformInt {
    std::uint32_t lo, hi;
  };
  struct Categorical {
    std::vector<std::uint32_t> values;
    std::vector<double> probs;
  };
  struct ShiftedPoisson {
    double lambda;
    std::uint32_t shift;
  };

  CardinalityDistribution() : kind_(Constant{1}) {}

  static CardinalityDistribution constant(std::uint32_t value);
  static CardinalityDistribution uniform_int(std::uint32_t lo, std::uint32_t hi);
  static CardinalityDistribution categorical(std::vector<std::uint32_t> values,
                                             std::vector<double> probs);
  static CardinalityDistribution shifted_poisson(double lambda, std::uint32_t shift);

  /// Throws std::invalid_argument on malformed text.
  static CardinalityDistribution parse(std::string_view text);
  std::string to_string() const;

  double mean() const;
  std::uint32_t sample(Rng& rng) const;

  /// Probability mass over the support; the Poisson tail is truncated once
  /// the remaining mass drops below 1e-15.
  std::map<std::uint32_t, double> pmf() const;
  std::uint32_t max_value() const;

  const auto& kind() const { return kind_; }

 private:
  explicit CardinalityDistribution(std::variant<Constant, UniformInt, Categorical, ShiftedPoisson> k)
      : kind_(std::move(k)) {}

  std::variant<Constant, UniformInt, Categorical, ShiftedPoisson> kind_;
};

}  // namespace pahyper
