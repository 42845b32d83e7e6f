#include "generators.hpp"

#include <numeric>
#include <stdexcept>

namespace epseff {

namespace {
constexpr std::uint64_t kWindowSize = 100000;
constexpr std::uint64_t kMinAcceptsPerWindow = 10;  // rate 1e-4
}  // namespace

UniformBoxSampler::UniformBoxSampler(Box box, FeasibilityPredicate feasible,
                                     std::uint64_t seed)
    : box_(std::move(box)), feasible_(std::move(feasible)), rng_(seed) {
  if (box_.dim() == 0) {
    throw std::invalid_argument("UniformBoxSampler: empty box");
  }
}

DecisionVector UniformBoxSampler::next() {
  DecisionVector x(box_.dim());
  for (;;) {
    ++total_draws_;
    ++window_draws_;
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = rng_.uniform(box_.lower[i], box_.upper[i]);
    }
    if (!feasible_ || feasible_(x)) {
      ++window_accepts_;
      if (window_draws_ >= kWindowSize) {
        window_draws_ = 0;
        window_accepts_ = 0;
      }
      return x;
    }
    if (window_draws_ >= kWindowSize) {
      if (window_accepts_ < kMinAcceptsPerWindow) {
        throw std::runtime_error(
            "generate_uniform: feasible region too small (acceptance rate below 1e-4)");
      }
      window_draws_ = 0;
      window_accepts_ = 0;
    }
  }
}

std::vector<DecisionVector> UniformBoxSampler::generate(std::size_t count) {
  std::vector<DecisionVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

BinaryFeasibleSampler::BinaryFeasibleSampler(std::vector<double> weights,
                                             double capacity, std::uint64_t seed)
    : weights_(std::move(weights)), capacity_(capacity), rng_(seed) {
  if (weights_.empty()) {
    throw std::invalid_argument("BinaryFeasibleSampler: no items");
  }
  for (double w : weights_) {
    if (!(w > 0.0)) {
      throw std::invalid_argument("BinaryFeasibleSampler: weights must be positive");
    }
  }
  if (capacity_ < 0.0) {
    throw std::invalid_argument("BinaryFeasibleSampler: capacity must be >= 0");
  }
  order_.resize(weights_.size());
  std::iota(order_.begin(), order_.end(), 0u);
}

DecisionVector BinaryFeasibleSampler::next() {
  ++total_draws_;
  // Fisher-Yates shuffle for the visiting order.
  for (std::size_t i = order_.size() - 1; i > 0; --i) {
    std::swap(order_[i], order_[rng_.below(i + 1)]);
  }
  DecisionVector x(weights_.size(), 0.0);
  double load = 0.0;
  for (std::uint32_t j : order_) {
    if (load + weights_[j] <= capacity_ && rng_.coin()) {
      x[j] = 1.0;
      load += weights_[j];
    }
  }
  return x;
}

std::vector<DecisionVector> BinaryFeasibleSampler::generate(std::size_t count) {
  std::vector<DecisionVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

DecisionVector bitflip_mutate(const DecisionVector& parent,
                              const std::vector<double>& weights,
                              double capacity, Rng& rng) {
  if (parent.size() != weights.size()) {
    throw std::invalid_argument("bitflip_mutate: dimension mismatch");
  }
  const std::size_t n = parent.size();
  DecisionVector x = parent;
  const double rate = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.uniform() < rate) x[i] = (x[i] == 0.0) ? 1.0 : 0.0;
  }
  double load = 0.0;
  std::vector<std::size_t> included;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != 0.0) {
      load += weights[i];
      included.push_back(i);
    }
  }
  while (load > capacity && !included.empty()) {
    const std::size_t pick = rng.below(included.size());
    const std::size_t item = included[pick];
    x[item] = 0.0;
    load -= weights[item];
    included[pick] = included.back();
    included.pop_back();
  }
  return x;
}

std::vector<DecisionVector> generate_uniform(const Box& box,
                                             const FeasibilityPredicate& feasible,
                                             std::uint64_t seed,
                                             std::size_t count) {
  UniformBoxSampler sampler(box, feasible, seed);
  return sampler.generate(count);
}

std::vector<DecisionVector> generate_binary(std::size_t n,
                                            const std::vector<double>& weights,
                                            double capacity, std::uint64_t seed,
                                            std::size_t count) {
  std::vector<double> w = weights;
  if (w.empty()) w.assign(n, 1.0);
  if (w.size() != n) {
    throw std::invalid_argument("generate_binary: weights length must equal n");
  }
  BinaryFeasibleSampler sampler(std::move(w), capacity, seed);
  return sampler.generate(count);
}

}  // namespace epseff
