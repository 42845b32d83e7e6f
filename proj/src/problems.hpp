/**
 * @file problems.hpp
 * @brief Benchmark problem suite: the constrained two-circle problem, the
 *        nine-component tiled problem, a reliability/cost production model,
 *        a four-bar plane truss, a bi-objective knapsack, and three small
 *        analytic problems with closed-form efficient sets.
 *
 * All problems are minimization; maximization objectives are stored
 * pre-negated.
 */

#ifndef EPSEFF_PROBLEMS_HPP
#define EPSEFF_PROBLEMS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "types.hpp"

namespace epseff {

enum class VariableKind { Continuous, Binary };

/**
 * @brief One optimization problem behind a uniform interface: objective
 *        evaluator, box domain, extra feasibility constraints, and optional
 *        analytic gradients. Immutable after construction.
 */
struct Problem {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  Box domain;
  VariableKind kind = VariableKind::Continuous;
  ObjectiveVector default_epsilon;

  std::function<ObjectiveVector(const DecisionVector&)> evaluate;
  /// constraints beyond the box; null means the whole box is feasible
  std::function<bool(const DecisionVector&)> constraints;
  /// k gradient vectors of length n; null when not available
  std::function<std::vector<ObjectiveVector>(const DecisionVector&)> gradient;

  /// binary problems only: item weights and knapsack capacity
  std::vector<double> weights;
  double capacity = 0.0;

  [[nodiscard]] bool has_gradient() const { return static_cast<bool>(gradient); }

  /// Box membership (for binary problems: coordinates in {0,1}) plus constraints.
  [[nodiscard]] bool feasible(const DecisionVector& x) const;
};

/// Constrained problem on [0,pi]^2 with identity objectives and a wavy
/// ring constraint; (0,0) is infeasible.
Problem tanaka();

/// Unconstrained problem on [-20,20]^2 whose Pareto set has nine connected
/// components with identical images.
Problem rudolph(double a = 0.5, double b = 5.0, double c = 5.0);

/// Production cost vs. total failure rate model on [0,40]^n, n >= 3.
Problem production(std::size_t n = 5);

/// Four-bar plane truss: volume vs. joint displacement.
Problem truss(double length = 200.0, double elasticity = 2e5,
              double sigma = 10.0, double load = 10.0);

/// Reproducible bi-objective knapsack instance: profits uniform in [8,12]
/// from the given seed, unit weights, capacity bounds the item count.
struct KnapsackInstance {
  std::size_t n = 0;
  double capacity = 0.0;
  std::vector<double> c1;
  std::vector<double> c2;
  std::vector<double> weights;
};

KnapsackInstance make_knapsack_instance(std::size_t n, std::uint64_t seed,
                                        double capacity);

Problem knapsack(std::size_t n = 30, std::uint64_t seed = 12345,
                 double capacity = 15.0);

/// F(x) = x on [0,5]; the eps-efficient set is [0, eps].
Problem example_line();

/// f1 = |x+1|, f2 = |x-1| for x <= 1 and alpha*|x-1| beyond, on [-4,8].
/// Requires 0 < alpha < 1.
Problem example_piecewise(double alpha);

/// Constant map on [0,1]^n; every feasible point is efficient.
Problem constant(std::size_t n, ObjectiveVector c0);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Closed-form eps-efficient decision interval of example_line: [0, eps].
Interval example_line_efficient_interval(double eps);

/// Closed-form eps-efficient decision interval of example_piecewise for
/// epsilon = (eps_bar, eps_bar): (-1-eps_bar, 1+eps_bar/alpha], lo open.
Interval example_piecewise_efficient_interval(double alpha, double eps_bar);

/**
 * @brief Factory by name with numeric parameters; used by the CLI.
 *
 * Names: tanaka, rudolph (a,b,c), production (n), truss (L,E,sigma,load),
 * knapsack (n,seed,capacity), line, piecewise (alpha), constant (n,k,c0).
 */
Problem make_problem(const std::string& name,
                     const std::map<std::string, double>& params = {});

/// Names accepted by make_problem.
std::vector<std::string> problem_names();

}  // namespace epseff

#endif  // EPSEFF_PROBLEMS_HPP
