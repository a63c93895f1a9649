#include "pahyper/cardinality.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pahyper/text.hpp"

namespace pahyper {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kPoissonTail = 1e-15;

}  // namespace

CardinalityDistribution CardinalityDistribution::constant(std::uint32_t value) {
  if (value < 1) throw std::invalid_argument("cardinality must be >= 1");
  return CardinalityDistribution(Constant{value});
}

CardinalityDistribution CardinalityDistribution::uniform_int(std::uint32_t lo, std::uint32_t hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("uniform cardinality needs 1 <= lo <= hi");
  return CardinalityDistribution(UniformInt{lo, hi});
}

CardinalityDistribution CardinalityDistribution::categorical(std::vector<std::uint32_t> values,
                                                             std::vector<double> probs) {
  if (values.empty() || values.size() != probs.size()) {
    throw std::invalid_argument("categorical cardinality needs matching non-empty values/probs");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1) throw std::invalid_argument("cardinality must be >= 1");
    if (!(probs[i] >= 0.0)) throw std::invalid_argument("categorical probabilities must be >= 0");
    total += probs[i];
  }
  if (std::abs(total - 1.0) > 1e-6) {
    throw std::invalid_argument("categorical probabilities must sum to 1");
  }
  for (double& p : probs) p /= total;
  return CardinalityDistribution(Categorical{std::move(values), std::move(probs)});
}

CardinalityDistribution CardinalityDistribution::shifted_poisson(double lambda,
                                                                 std::uint32_t shift) {
  if (!(lambda >= 0.0) || lambda > 100.0) {
    throw std::invalid_argument("poisson lambda must lie in [0, 100]");
  }
  if (shift < 1) throw std::invalid_argument("poisson shift must be >= 1");
  return CardinalityDistribution(ShiftedPoisson{lambda, shift});
}

CardinalityDistribution CardinalityDistribution::parse(std::string_view text) {
  const auto parts = split(trim(text), ':');
  if (parts.empty()) throw std::invalid_argument("empty cardinality distribution");
  const std::string_view tag = parts[0];
  auto need = [&](std::size_t n) {
    if (parts.size() != n) {
      throw std::invalid_argument("malformed cardinality distribution '" + std::string(text) + "'");
    }
  };
  if (tag == "const") {
    need(2);
    return constant(parse_number<std::uint32_t>(parts[1]));
  }
  if (tag == "uniform") {
    need(3);
    return uniform_int(parse_number<std::uint32_t>(parts[1]), parse_number<std::uint32_t>(parts[2]));
  }
  if (tag == "categorical") {
    need(2);
    std::vector<std::uint32_t> values;
    std::vector<double> probs;
    for (auto item : split(parts[1], ',')) {
      const auto kv = split(item, '=');
      if (kv.size() != 2) throw std::invalid_argument("categorical entries are VALUE=PROB");
      values.push_back(parse_number<std::uint32_t>(kv[0]));
      probs.push_back(parse_number<double>(kv[1]));
    }
    return categorical(std::move(values), std::move(probs));
  }
  if (tag == "poisson") {
    need(3);
    return shifted_poisson(parse_number<double>(parts[1]), parse_number<std::uint32_t>(parts[2]));
  }
  throw std::invalid_argument("unknown cardinality distribution '" + std::string(tag) + "'");
}

std::string CardinalityDistribution::to_string() const {
  return std::visit(
      overloaded{
          [](const Constant& c) { return "const:" + std::to_string(c.value); },
          [](const UniformInt& u) {
            return "uniform:" + std::to_string(u.lo) + ":" + std::to_string(u.hi);
          },
          [](const Categorical& c) {
            std::string s = "categorical:";
            for (std::size_t i = 0; i < c.values.size(); ++i) {
              if (i) s += ',';
              s += std::to_string(c.values[i]) + "=" + format_double(c.probs[i]);
            }
            return s;
          },
          [](const ShiftedPoisson& p) {
            return "poisson:" + format_double(p.lambda) + ":" + std::to_string(p.shift);
          },
      },
      kind_);
}

double CardinalityDistribution::mean() const {
  return std::visit(overloaded{
                        [](const Constant& c) { return static_cast<double>(c.value); },
                        [](const UniformInt& u) { return 0.5 * (double(u.lo) + double(u.hi)); },
                        [](const Categorical& c) {
                          double m = 0.0;
                          for (std::size_t i = 0; i < c.values.size(); ++i) {
                            m += c.probs[i] * c.values[i];
                          }
                          return m;
                        },
                        [](const ShiftedPoisson& p) { return p.shift + p.lambda; },
                    },
                    kind_);
}

std::uint32_t CardinalityDistribution::sample(Rng& rng) const {
  return std::visit(
      overloaded{
          [](const Constant& c) { return c.value; },
          [&](const UniformInt& u) {
            if (u.lo == u.hi) return u.lo;
            return static_cast<std::uint32_t>(u.lo + rng.below(std::uint64_t(u.hi) - u.lo + 1));
          },
          [&](const Categorical& c) { return c.values[rng.categorical(c.probs)]; },
          [&](const ShiftedPoisson& p) {
            // inversion; lambda is capped so exp(-lambda) stays representable
            const double u = rng.uniform();
            double term = std::exp(-p.lambda);
            double cdf = term;
            std::uint32_t k = 0;
            while (u >= cdf && term > 0.0) {
              ++k;
              term *= p.lambda / k;
              cdf += term;
            }
            return p.shift + k;
          },
      },
      kind_);
}

std::map<std::uint32_t, double> CardinalityDistribution::pmf() const {
  std::map<std::uint32_t, double> out;
  std::visit(overloaded{
                 [&](const Constant& c) { out[c.value] = 1.0; },
                 [&](const UniformInt& u) {
                   const double w = 1.0 / (u.hi - u.lo + 1);
                   for (std::uint32_t v = u.lo; v <= u.hi; ++v) out[v] = w;
                 },
                 [&](const Categorical& c) {
                   for (std::size_t i = 0; i < c.values.size(); ++i) out[c.values[i]] += c.probs[i];
                 },
                 [&](const ShiftedPoisson& p) {
                   double term = std::exp(-p.lambda);
                   double mass = 0.0;
                   for (std::uint32_t k = 0;; ++k) {
                     if (k > 0) term *= p.lambda / k;
                     out[p.shift + k] = term;
                     mass += term;
                     if (1.0 - mass < kPoissonTail && k >= p.lambda) break;
                   }
                 },
             },
             kind_);
  return out;
}

std::uint32_t CardinalityDistribution::max_value() const {
  const auto p = pmf();
  std::uint32_t best = 1;
  for (const auto& [v, prob] : p) {
    if (prob > 0.0) best = v;
  }
  return best;
}

}  // namespace pahyper
