#include "metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dominance.hpp"

namespace epseff {

double semi_dist(const std::vector<ObjectiveVector>& B,
                 const std::vector<ObjectiveVector>& A) {
  if (A.empty() || B.empty()) {
    throw std::invalid_argument("semi_dist: both sets must be non-empty");
  }
  double worst = 0.0;
  for (const auto& u : B) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& v : A) {
      nearest = std::min(nearest, chebyshev_distance(u, v));
      if (nearest == 0.0) break;
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

double hausdorff(const std::vector<ObjectiveVector>& A,
                 const std::vector<ObjectiveVector>& B) {
  return std::max(semi_dist(A, B), semi_dist(B, A));
}

ReferenceSet reference_set(const Problem& problem, const ObjectiveVector& epsilon,
                           std::vector<double> steps, std::size_t cell_cap,
                           ParetoNotion notion) {
  if (epsilon.size() != problem.k) {
    throw std::invalid_argument("reference_set: epsilon dimension mismatch");
  }
  if (steps.size() == 1 && problem.n > 1) {
    steps.assign(problem.n, steps.front());
  }
  if (steps.size() != problem.n) {
    throw std::invalid_argument("reference_set: steps must be scalar or length n");
  }
  for (double s : steps) {
    if (!(s > 0.0)) throw std::invalid_argument("reference_set: steps must be > 0");
  }
  if (cell_cap == 0) cell_cap = kDefaultCellCap;

  const Box& box = problem.domain;
  std::vector<std::size_t> counts(problem.n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < problem.n; ++i) {
    const double span = box.width(i) / steps[i];
    counts[i] = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    if (counts[i] > cell_cap || total > cell_cap / counts[i]) {
      throw std::length_error("reference_set: grid exceeds the cell cap");
    }
    total *= counts[i];
  }

  // enumerate the feasible grid
  std::vector<DecisionVector> xs;
  std::vector<ObjectiveVector> ys;
  DecisionVector x(problem.n);
  std::vector<std::size_t> idx(problem.n, 0);
  for (std::size_t cell = 0; cell < total; ++cell) {
    std::size_t rem = cell;
    for (std::size_t i = 0; i < problem.n; ++i) {
      idx[i] = rem % counts[i];
      rem /= counts[i];
      x[i] = box.lower[i] + static_cast<double>(idx[i]) * steps[i];
      if (x[i] > box.upper[i]) x[i] = box.upper[i];
    }
    if (!problem.feasible(x)) continue;
    ObjectiveVector y = problem.evaluate(x);
    if (!all_finite(y)) continue;
    xs.push_back(x);
    ys.push_back(std::move(y));
  }

  // pairwise scan: keep points no other grid point shift-dominates
  ReferenceSet ref;
  ref.step = steps;
  ref.epsilon = epsilon;
  const std::size_t m = xs.size();
  for (std::size_t i = 0; i < m; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < m && !dominated; ++j) {
      if (j == i) continue;
      dominated = notion == ParetoNotion::Efficient
                      ? shifted_dominates(ys[j], ys[i], epsilon)
                      : shifted_dominates_strictly(ys[j], ys[i], epsilon);
    }
    if (!dominated) {
      ref.xs.push_back(xs[i]);
      ref.ys.push_back(ys[i]);
    }
  }
  return ref;
}

double archive_bound_image(const ObjectiveVector& epsilon,
                           const ObjectiveVector& delta,
                           const ObjectiveVector& delta_star,
                           const ObjectiveVector& image_min,
                           const ObjectiveVector& image_max) {
  const std::size_t k = epsilon.size();
  if (delta.size() != k || delta_star.size() != k || image_min.size() != k ||
      image_max.size() != k) {
    throw std::invalid_argument("archive_bound_image: dimension mismatch");
  }
  for (double d : delta_star) {
    if (!(d > 0.0)) {
      throw std::domain_error("archive_bound_image: delta_star must be > 0");
    }
  }
  double inv_cell = 1.0;
  for (double d : delta_star) inv_cell /= d;
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double term = epsilon[i] + 2.0 * delta[i] + delta_star[i];
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) term *= image_max[j] - image_min[j] + delta_star[j];
    }
    sum += term;
  }
  return inv_cell * sum;
}

double archive_bound_image(const ObjectiveVector& epsilon, double delta,
                           double delta_star, const ObjectiveVector& image_min,
                           const ObjectiveVector& image_max) {
  return archive_bound_image(epsilon, ObjectiveVector(epsilon.size(), delta),
                             ObjectiveVector(epsilon.size(), delta_star),
                             image_min, image_max);
}

double archive_bound_param(double delta_star, const Box& box) {
  if (!(delta_star > 0.0)) {
    throw std::domain_error("archive_bound_param: delta_star must be > 0");
  }
  double bound = 1.0;
  for (std::size_t j = 0; j < box.dim(); ++j) {
    bound *= box.width(j);
  }
  return bound * std::pow(1.0 / delta_star + 1.0, static_cast<double>(box.dim()));
}

namespace {

/// Solves the KKT system of min ||G alpha||^2 s.t. sum alpha = 1 restricted
/// to a support subset. Returns false when the system is singular.
bool solve_support(const std::vector<ObjectiveVector>& gradients,
                   const std::vector<std::size_t>& support,
                   std::vector<double>& alpha_out) {
  const std::size_t m = support.size();
  const std::size_t dim = m + 1;
  std::vector<double> a(dim * dim, 0.0);
  std::vector<double> rhs(dim, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      double dot = 0.0;
      const auto& gr = gradients[support[r]];
      const auto& gc = gradients[support[c]];
      for (std::size_t t = 0; t < gr.size(); ++t) dot += gr[t] * gc[t];
      a[r * dim + c] = 2.0 * dot;
    }
    a[r * dim + m] = 1.0;
    a[m * dim + r] = 1.0;
  }
  rhs[m] = 1.0;

  // Gaussian elimination with partial pivoting
  std::vector<std::size_t> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    double best = std::fabs(a[perm[col] * dim + col]);
    for (std::size_t r = col + 1; r < dim; ++r) {
      const double v = std::fabs(a[perm[r] * dim + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best < 1e-12) return false;
    std::swap(perm[col], perm[pivot]);
    const double diag = a[perm[col] * dim + col];
    for (std::size_t r = col + 1; r < dim; ++r) {
      const double factor = a[perm[r] * dim + col] / diag;
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < dim; ++c) {
        a[perm[r] * dim + c] -= factor * a[perm[col] * dim + c];
      }
      rhs[perm[r]] -= factor * rhs[perm[col]];
    }
  }
  std::vector<double> sol(dim);
  for (std::size_t col = dim; col-- > 0;) {
    double v = rhs[perm[col]];
    for (std::size_t c = col + 1; c < dim; ++c) {
      v -= a[perm[col] * dim + c] * sol[c];
    }
    sol[col] = v / a[perm[col] * dim + col];
  }
  alpha_out.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) alpha_out[i] = sol[i];
  return true;
}

}  // namespace

MinNormResult min_norm_direction(const std::vector<ObjectiveVector>& gradients) {
  const std::size_t k = gradients.size();
  if (k == 0) throw std::domain_error("min_norm_direction: no gradients");
  if (k > 20) {
    throw std::invalid_argument("min_norm_direction: subset enumeration supports k <= 20");
  }
  const std::size_t n = gradients.front().size();
  for (const auto& g : gradients) {
    if (g.size() != n) {
      throw std::invalid_argument("min_norm_direction: gradient length mismatch");
    }
  }

  MinNormResult best;
  best.norm_sq = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> support;
  std::vector<double> alpha_sub;
  std::vector<double> q(n);

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    support.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) support.push_back(i);
    }
    if (support.size() == 1) {
      alpha_sub.assign(1, 1.0);
    } else if (!solve_support(gradients, support, alpha_sub)) {
      continue;
    }
    bool feasible = true;
    for (double& a : alpha_sub) {
      if (a < -1e-12) {
        feasible = false;
        break;
      }
      if (a < 0.0) a = 0.0;
    }
    if (!feasible) continue;

    std::fill(q.begin(), q.end(), 0.0);
    for (std::size_t i = 0; i < support.size(); ++i) {
      const auto& g = gradients[support[i]];
      for (std::size_t t = 0; t < n; ++t) q[t] += alpha_sub[i] * g[t];
    }
    double norm_sq = 0.0;
    for (double v : q) norm_sq += v * v;
    if (norm_sq < best.norm_sq) {
      best.norm_sq = norm_sq;
      best.q = q;
      best.alpha.assign(k, 0.0);
      for (std::size_t i = 0; i < support.size(); ++i) {
        best.alpha[support[i]] = alpha_sub[i];
      }
    }
  }
  return best;
}

std::vector<std::size_t> region_of_interest(const std::vector<ObjectiveVector>& ys,
                                            const ObjectiveVector& y0,
                                            const ObjectiveVector& tol) {
  for (double t : tol) {
    if (t < 0.0) throw std::invalid_argument("region_of_interest: tol must be >= 0");
  }
  if (y0.size() != tol.size()) {
    throw std::invalid_argument("region_of_interest: y0/tol dimension mismatch");
  }
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (within_box(ys[i], y0, tol)) hits.push_back(i);
  }
  return hits;
}

std::vector<std::size_t> region_of_interest(const Archive& archive,
                                            const ObjectiveVector& y0,
                                            const ObjectiveVector& tol) {
  if (y0.size() != archive.settings.k()) {
    throw std::invalid_argument("region_of_interest: y0 dimension mismatch");
  }
  return region_of_interest(archive.images(), y0, tol);
}

std::size_t hamming(const DecisionVector& x1, const DecisionVector& x2) {
  if (x1.size() != x2.size()) {
    throw std::invalid_argument("hamming: dimension mismatch");
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < x1.size(); ++i) {
    if (x1[i] != x2[i]) ++count;
  }
  return count;
}

std::vector<std::size_t> nondominated_indices(const std::vector<ObjectiveVector>& ys) {
  std::vector<std::size_t> out;
  const ObjectiveVector zero(ys.empty() ? 0 : ys.front().size(), 0.0);
  for (std::size_t i = 0; i < ys.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < ys.size() && !dominated; ++j) {
      if (j != i) dominated = shifted_dominates(ys[j], ys[i], zero);
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

}  // namespace epseff
