/**
 * @file generators.hpp
 * @brief Candidate generators for the stochastic search loop. All of them
 *        emit only feasible points and have positive probability of reaching
 *        any neighborhood of the feasible set.
 */

#ifndef EPSEFF_GENERATORS_HPP
#define EPSEFF_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "rng.hpp"
#include "types.hpp"

namespace epseff {

using FeasibilityPredicate = std::function<bool(const DecisionVector&)>;

/**
 * @brief Rejection sampler for {x in box : feasible(x)}.
 *
 * Aborts with a runtime error when the acceptance rate over a full
 * 100,000-draw window falls below 1e-4.
 */
class UniformBoxSampler {
 public:
  UniformBoxSampler(Box box, FeasibilityPredicate feasible, std::uint64_t seed);

  DecisionVector next();
  std::vector<DecisionVector> generate(std::size_t count);

  [[nodiscard]] std::uint64_t total_draws() const { return total_draws_; }

 private:
  Box box_;
  FeasibilityPredicate feasible_;
  Rng rng_;
  std::uint64_t total_draws_ = 0;
  std::uint64_t window_draws_ = 0;
  std::uint64_t window_accepts_ = 0;
};

/**
 * @brief Samples feasible 0/1 vectors under a single weight constraint.
 *
 * Visits the items in a uniformly random order and includes each with
 * probability 1/2 while the capacity still allows it; every feasible point
 * has positive probability.
 */
class BinaryFeasibleSampler {
 public:
  BinaryFeasibleSampler(std::vector<double> weights, double capacity,
                        std::uint64_t seed);

  DecisionVector next();
  std::vector<DecisionVector> generate(std::size_t count);

  [[nodiscard]] std::uint64_t total_draws() const { return total_draws_; }

 private:
  std::vector<double> weights_;
  double capacity_;
  Rng rng_;
  std::vector<std::uint32_t> order_;
  std::uint64_t total_draws_ = 0;
};

/**
 * @brief Flips each bit of a parent with probability 1/n and repairs to
 *        feasibility by dropping uniformly chosen included items.
 */
DecisionVector bitflip_mutate(const DecisionVector& parent,
                              const std::vector<double>& weights,
                              double capacity, Rng& rng);

/// One-shot form of UniformBoxSampler (rejection sampling, same abort rule).
std::vector<DecisionVector> generate_uniform(const Box& box,
                                             const FeasibilityPredicate& feasible,
                                             std::uint64_t seed,
                                             std::size_t count);

/// One-shot form of BinaryFeasibleSampler.
std::vector<DecisionVector> generate_binary(std::size_t n,
                                            const std::vector<double>& weights,
                                            double capacity, std::uint64_t seed,
                                            std::size_t count);

}  // namespace epseff

#endif  // EPSEFF_GENERATORS_HPP
