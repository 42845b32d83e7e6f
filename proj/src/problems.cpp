#include "problems.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "rng.hpp"

namespace epseff {

bool Problem::feasible(const DecisionVector& x) const {
  if (x.size() != n) return false;
  if (!all_finite(x)) return false;
  if (kind == VariableKind::Binary) {
    for (double v : x) {
      if (v != 0.0 && v != 1.0) return false;
    }
  } else if (!domain.contains(x)) {
    return false;
  }
  return !constraints || constraints(x);
}

Problem tanaka() {
  Problem p;
  p.name = "tanaka";
  p.n = 2;
  p.k = 2;
  p.domain = Box({0.0, 0.0}, {std::numbers::pi, std::numbers::pi});
  p.default_epsilon = {0.1, 0.1};
  p.evaluate = [](const DecisionVector& x) { return ObjectiveVector{x[0], x[1]}; };
  p.constraints = [](const DecisionVector& x) {
    if (x[0] == 0.0 && x[1] == 0.0) return false;  // C1 -> -1.1 along any approach
    // atan2 realizes arctan(x1/x2) on the closed positive quadrant
    const double c1 =
        x[0] * x[0] + x[1] * x[1] - 1.0 - 0.1 * std::cos(16.0 * std::atan2(x[0], x[1]));
    if (c1 < 0.0) return false;
    const double dx = x[0] - 0.5;
    const double dy = x[1] - 0.5;
    return dx * dx + dy * dy <= 0.5;
  };
  p.gradient = [](const DecisionVector&) {
    return std::vector<ObjectiveVector>{{1.0, 0.0}, {0.0, 1.0}};
  };
  return p;
}

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

/// Tile index in {-1, 0, 1}: sgn(v) * min(ceil((|v| - half_gap) / period), 1)
double tile_index(double v, double half_gap, double period) {
  const double r = std::ceil((std::fabs(v) - half_gap) / period);
  return sgn(v) * std::min(r, 1.0);
}

}  // namespace

Problem rudolph(double a, double b, double c) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0)) {
    throw std::invalid_argument("rudolph: a, b, c must be positive");
  }
  Problem p;
  p.name = "rudolph";
  p.n = 2;
  p.k = 2;
  p.domain = Box({-20.0, -20.0}, {20.0, 20.0});
  p.default_epsilon = {0.1, 0.1};
  p.evaluate = [a, b, c](const DecisionVector& x) {
    const double t1 = tile_index(x[0], a + c / 2.0, 2.0 * a + c);
    const double t2 = tile_index(x[1], b / 2.0, b);
    const double u = x[0] - t1 * (c + 2.0 * a);
    const double v = x[1] - t2 * b;
    return ObjectiveVector{(u + a) * (u + a) + v * v, (u - a) * (u - a) + v * v};
  };
  return p;
}

Problem production(std::size_t n) {
  if (n < 3) throw std::invalid_argument("production: n must be >= 3");
  Problem p;
  p.name = "production";
  p.n = n;
  p.k = 2;
  p.domain = Box(std::vector<double>(n, 0.0), std::vector<double>(n, 40.0));
  p.default_epsilon = {0.1, 0.001};

  auto rate = [](std::size_t j, double z) {
    return j < 2 ? 0.01 * std::exp(-std::pow(z / 20.0, 2.5))
                 : 0.01 * std::exp(-z / 15.0);
  };
  auto rate_deriv = [rate](std::size_t j, double z) {
    return j < 2 ? -rate(j, z) * 0.125 * std::pow(z / 20.0, 1.5)
                 : -rate(j, z) / 15.0;
  };

  p.evaluate = [rate](const DecisionVector& x) {
    double cost = 0.0;
    double reliability = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      cost += x[j];
      reliability *= 1.0 - rate(j, x[j]);
    }
    return ObjectiveVector{cost, 1.0 - reliability};
  };
  p.gradient = [rate, rate_deriv, n](const DecisionVector& x) {
    std::vector<ObjectiveVector> g(2, ObjectiveVector(n, 1.0));
    // d f2 / d x_j = w_j'(x_j) * prod_{i != j} (1 - w_i(x_i))
    for (std::size_t j = 0; j < n; ++j) {
      double others = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j) others *= 1.0 - rate(i, x[i]);
      }
      g[1][j] = rate_deriv(j, x[j]) * others;
    }
    return g;
  };
  return p;
}

Problem truss(double length, double elasticity, double sigma, double load) {
  if (!(length > 0.0 && elasticity > 0.0 && sigma > 0.0 && load > 0.0)) {
    throw std::invalid_argument("truss: all constants must be positive");
  }
  const double r = load / sigma;
  const double rt2 = std::numbers::sqrt2;
  Problem p;
  p.name = "truss";
  p.n = 4;
  p.k = 2;
  p.domain = Box({r, rt2 * r, rt2 * r, r}, {3.0 * r, 3.0 * r, 3.0 * r, 3.0 * r});
  p.default_epsilon = {50.0, 0.0005};
  const double fl_e = load * length / elasticity;
  p.evaluate = [length, fl_e, rt2](const DecisionVector& x) {
    const double volume = length * (2.0 * x[0] + rt2 * x[1] + rt2 * x[2] + x[3]);
    const double displacement =
        fl_e * (2.0 / x[0] + 2.0 * rt2 / x[1] - 2.0 * rt2 / x[2] + 1.0 / x[3]);
    return ObjectiveVector{volume, displacement};
  };
  p.gradient = [length, fl_e, rt2](const DecisionVector& x) {
    return std::vector<ObjectiveVector>{
        {2.0 * length, rt2 * length, rt2 * length, length},
        {-2.0 * fl_e / (x[0] * x[0]), -2.0 * rt2 * fl_e / (x[1] * x[1]),
         2.0 * rt2 * fl_e / (x[2] * x[2]), -fl_e / (x[3] * x[3])}};
  };
  return p;
}

KnapsackInstance make_knapsack_instance(std::size_t n, std::uint64_t seed,
                                        double capacity) {
  if (n < 1) throw std::invalid_argument("knapsack: n must be >= 1");
  if (capacity < 0.0) throw std::invalid_argument("knapsack: capacity must be >= 0");
  KnapsackInstance inst;
  inst.n = n;
  inst.capacity = capacity;
  inst.c1.resize(n);
  inst.c2.resize(n);
  inst.weights.assign(n, 1.0);
  Rng rng(seed);
  for (std::size_t j = 0; j < n; ++j) inst.c1[j] = rng.uniform(8.0, 12.0);
  for (std::size_t j = 0; j < n; ++j) inst.c2[j] = rng.uniform(8.0, 12.0);
  return inst;
}

Problem knapsack(std::size_t n, std::uint64_t seed, double capacity) {
  auto inst = make_knapsack_instance(n, seed, capacity);
  Problem p;
  p.name = "knapsack";
  p.n = n;
  p.k = 2;
  p.domain = Box(std::vector<double>(n, 0.0), std::vector<double>(n, 1.0));
  p.kind = VariableKind::Binary;
  p.default_epsilon = {2.0, 2.0};
  p.weights = inst.weights;
  p.capacity = inst.capacity;
  p.evaluate = [inst](const DecisionVector& x) {
    double p1 = 0.0;
    double p2 = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] != 0.0) {
        p1 += inst.c1[j];
        p2 += inst.c2[j];
      }
    }
    // stored as minimization of the negated profits
    return ObjectiveVector{-p1, -p2};
  };
  p.constraints = [inst](const DecisionVector& x) {
    double load = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] != 0.0) load += inst.weights[j];
    }
    return load <= inst.capacity;
  };
  return p;
}

Problem example_line() {
  Problem p;
  p.name = "line";
  p.n = 1;
  p.k = 1;
  p.domain = Box({0.0}, {5.0});
  p.default_epsilon = {1.0};
  p.evaluate = [](const DecisionVector& x) { return ObjectiveVector{x[0]}; };
  p.gradient = [](const DecisionVector&) {
    return std::vector<ObjectiveVector>{{1.0}};
  };
  return p;
}

Problem example_piecewise(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("example_piecewise: alpha must lie in (0,1)");
  }
  Problem p;
  p.name = "piecewise";
  p.n = 1;
  p.k = 2;
  p.domain = Box({-4.0}, {8.0});
  p.default_epsilon = {0.5, 0.5};
  p.evaluate = [alpha](const DecisionVector& x) {
    const double f1 = std::fabs(x[0] + 1.0);
    const double f2 = x[0] <= 1.0 ? std::fabs(x[0] - 1.0) : alpha * (x[0] - 1.0);
    return ObjectiveVector{f1, f2};
  };
  return p;
}

Problem constant(std::size_t n, ObjectiveVector c0) {
  if (n < 1) throw std::invalid_argument("constant: n must be >= 1");
  if (c0.empty() || !all_finite(c0)) {
    throw std::invalid_argument("constant: c0 must be non-empty and finite");
  }
  Problem p;
  p.name = "constant";
  p.n = n;
  p.k = c0.size();
  p.domain = Box(std::vector<double>(n, 0.0), std::vector<double>(n, 1.0));
  p.default_epsilon.assign(c0.size(), 1.0);
  p.evaluate = [c0](const DecisionVector&) { return c0; };
  p.gradient = [n, k = c0.size()](const DecisionVector&) {
    return std::vector<ObjectiveVector>(k, ObjectiveVector(n, 0.0));
  };
  return p;
}

Interval example_line_efficient_interval(double eps) {
  return {0.0, eps};
}

Interval example_piecewise_efficient_interval(double alpha, double eps_bar) {
  return {-1.0 - eps_bar, 1.0 + eps_bar / alpha};
}

namespace {

class ParamReader {
 public:
  explicit ParamReader(const std::map<std::string, double>& params)
      : params_(params) {}

  double get(const std::string& key, double fallback) {
    used_.insert(key);
    auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }

  void finish(const std::string& problem) const {
    for (const auto& [key, value] : params_) {
      (void)value;
      if (!used_.count(key)) {
        throw std::invalid_argument("make_problem: unknown parameter '" + key +
                                    "' for problem '" + problem + "'");
      }
    }
  }

 private:
  const std::map<std::string, double>& params_;
  std::set<std::string> used_;
};

}  // namespace

Problem make_problem(const std::string& name,
                     const std::map<std::string, double>& params) {
  ParamReader reader(params);
  Problem p;
  if (name == "tanaka") {
    p = tanaka();
  } else if (name == "rudolph") {
    p = rudolph(reader.get("a", 0.5), reader.get("b", 5.0), reader.get("c", 5.0));
  } else if (name == "production") {
    p = production(static_cast<std::size_t>(reader.get("n", 5)));
  } else if (name == "truss") {
    p = truss(reader.get("L", 200.0), reader.get("E", 2e5),
              reader.get("sigma", 10.0), reader.get("load", 10.0));
  } else if (name == "knapsack") {
    p = knapsack(static_cast<std::size_t>(reader.get("n", 30)),
                 static_cast<std::uint64_t>(reader.get("seed", 12345)),
                 reader.get("capacity", 15.0));
  } else if (name == "line") {
    p = example_line();
  } else if (name == "piecewise") {
    p = example_piecewise(reader.get("alpha", 0.1));
  } else if (name == "constant") {
    const auto n = static_cast<std::size_t>(reader.get("n", 2));
    const auto k = static_cast<std::size_t>(reader.get("k", 2));
    p = constant(n, ObjectiveVector(k, reader.get("c0", 0.5)));
  } else {
    std::string names;
    for (const auto& s : problem_names()) names += " " + s;
    throw std::invalid_argument("make_problem: unknown problem '" + name +
                                "'; available:" + names);
  }
  reader.finish(name);
  return p;
}

std::vector<std::string> problem_names() {
  return {"tanaka", "rudolph", "production", "truss",
          "knapsack", "line",  "piecewise",  "constant"};
}

}  // namespace epseff
