/**
 * @file metrics.hpp
 * @brief Set distances, brute-force reference sets, archive-size bounds,
 *        the min-norm descent direction, and decision-support queries.
 */

#ifndef EPSEFF_METRICS_HPP
#define EPSEFF_METRICS_HPP

#include <cstddef>
#include <vector>

#include "problems.hpp"
#include "types.hpp"

namespace epseff {

/// dist(B, A) = max over u in B of min over v in A of d_inf(u, v).
/// @throws std::invalid_argument when either set is empty.
double semi_dist(const std::vector<ObjectiveVector>& B,
                 const std::vector<ObjectiveVector>& A);

/// d_H(A, B) = max(dist(A,B), dist(B,A)).
double hausdorff(const std::vector<ObjectiveVector>& A,
                 const std::vector<ObjectiveVector>& B);

/// Which notion of grid efficiency the reference set realizes.
enum class ParetoNotion {
  Efficient,     ///< not shift-dominated by any grid point
  WeakEfficient  ///< no grid point is strictly better in every objective
};

/**
 * @brief Grid restriction of the eps-efficient set, used as the ground-truth
 *        oracle. With epsilon = 0 this is the grid Pareto set.
 */
struct ReferenceSet {
  std::vector<DecisionVector> xs;
  std::vector<ObjectiveVector> ys;
  std::vector<double> step;    ///< per-dimension grid spacing
  ObjectiveVector epsilon;

  [[nodiscard]] std::size_t size() const { return xs.size(); }
};

inline constexpr std::size_t kDefaultCellCap = 250000;

/**
 * @brief Enumerates the feasible grid of the problem's box at the given
 *        per-dimension steps (a single step is broadcast) and keeps the
 *        points no other feasible grid point shift-dominates.
 *
 * @throws std::length_error when the grid exceeds cell_cap points.
 */
ReferenceSet reference_set(const Problem& problem, const ObjectiveVector& epsilon,
                           std::vector<double> steps,
                           std::size_t cell_cap = kDefaultCellCap,
                           ParetoNotion notion = ParetoNotion::Efficient);

/**
 * @brief Upper bound on the archive size in image-space mode for an image
 *        box [m_1,M_1] x ... x [m_k,M_k]:
 *
 *        (1/d*)^k * sum_i (eps_i + 2 delta + d*) * prod_{j != i} (M_j - m_j + d*)
 *
 * @throws std::domain_error when delta_star <= 0 (no finite bound).
 */
double archive_bound_image(const ObjectiveVector& epsilon, double delta,
                           double delta_star, const ObjectiveVector& image_min,
                           const ObjectiveVector& image_max);

/// Vector-delta variant; per-objective delta/delta_star replace the scalars.
double archive_bound_image(const ObjectiveVector& epsilon,
                           const ObjectiveVector& delta,
                           const ObjectiveVector& delta_star,
                           const ObjectiveVector& image_min,
                           const ObjectiveVector& image_max);

/**
 * @brief Upper bound for parameter-space discretization over the box:
 *        (1/d* + 1)^n * prod_j (upper_j - lower_j).
 *
 * @throws std::domain_error when delta_star <= 0.
 */
double archive_bound_param(double delta_star, const Box& box);

/**
 * @brief Minimizer of || sum_i alpha_i g_i ||_2^2 over the unit simplex and
 *        the resulting direction q. q = 0 certifies first-order Pareto
 *        criticality; otherwise -q descends every objective.
 *
 * Solved exactly by enumerating support subsets with an equality-constrained
 * least-squares solve per subset (intended for small k).
 */
struct MinNormResult {
  std::vector<double> q;
  std::vector<double> alpha;
  double norm_sq = 0.0;
};

MinNormResult min_norm_direction(const std::vector<ObjectiveVector>& gradients);

/// Indices of entries with |F(a)_i - y0_i| <= tol_i for all i.
std::vector<std::size_t> region_of_interest(const Archive& archive,
                                            const ObjectiveVector& y0,
                                            const ObjectiveVector& tol);

/// Same filter over a plain image list (used by the CLI on loaded CSVs).
std::vector<std::size_t> region_of_interest(const std::vector<ObjectiveVector>& ys,
                                            const ObjectiveVector& y0,
                                            const ObjectiveVector& tol);

/// Number of differing coordinates between two equal-length vectors.
std::size_t hamming(const DecisionVector& x1, const DecisionVector& x2);

/// Indices of images not dominated (shift 0) by any other listed image.
std::vector<std::size_t> nondominated_indices(const std::vector<ObjectiveVector>& ys);

}  // namespace epseff

#endif  // EPSEFF_METRICS_HPP
