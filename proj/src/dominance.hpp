/**
 * @file dominance.hpp
 * @brief Shifted dominance predicates and the Chebyshev distance.
 *
 * One predicate covers the three relations used throughout: with shift 0 it
 * is plain Pareto dominance, with shift +eps the stronger -eps-dominance,
 * and with shift -eps the weaker eps-dominance.
 */

#ifndef EPSEFF_DOMINANCE_HPP
#define EPSEFF_DOMINANCE_HPP

#include <cmath>
#include <span>
#include <stdexcept>

namespace epseff {

/**
 * @brief True iff (y_a + shift) <= y_b componentwise and y_a + shift != y_b.
 *
 * Vector equality is exact on the stored doubles; there is no tolerance
 * inside the predicate.
 */
inline bool shifted_dominates(std::span<const double> y_a,
                              std::span<const double> y_b,
                              std::span<const double> shift) {
  if (y_a.size() != y_b.size() || y_a.size() != shift.size()) {
    throw std::invalid_argument("shifted_dominates: dimension mismatch");
  }
  bool some_strict = false;
  for (std::size_t i = 0; i < y_a.size(); ++i) {
    const double shifted = y_a[i] + shift[i];
    if (shifted > y_b[i]) return false;
    if (shifted != y_b[i]) some_strict = true;
  }
  return some_strict;
}

/// Weak variant: (y_a + shift) <= y_b componentwise, equality allowed.
inline bool shifted_dominates_weakly(std::span<const double> y_a,
                                     std::span<const double> y_b,
                                     std::span<const double> shift) {
  if (y_a.size() != y_b.size() || y_a.size() != shift.size()) {
    throw std::invalid_argument("shifted_dominates_weakly: dimension mismatch");
  }
  for (std::size_t i = 0; i < y_a.size(); ++i) {
    if (y_a[i] + shift[i] > y_b[i]) return false;
  }
  return true;
}

/// Strict variant: (y_a + shift) < y_b in every component.
inline bool shifted_dominates_strictly(std::span<const double> y_a,
                                       std::span<const double> y_b,
                                       std::span<const double> shift) {
  if (y_a.size() != y_b.size() || y_a.size() != shift.size()) {
    throw std::invalid_argument("shifted_dominates_strictly: dimension mismatch");
  }
  for (std::size_t i = 0; i < y_a.size(); ++i) {
    if (y_a[i] + shift[i] >= y_b[i]) return false;
  }
  return !y_a.empty();
}

/// d_inf(y_a, y_b) = max_i |y_a_i - y_b_i|.
inline double chebyshev_distance(std::span<const double> y_a,
                                 std::span<const double> y_b) {
  if (y_a.size() != y_b.size()) {
    throw std::invalid_argument("chebyshev_distance: dimension mismatch");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < y_a.size(); ++i) {
    d = std::max(d, std::fabs(y_a[i] - y_b[i]));
  }
  return d;
}

/// True iff |y_a_i - y_b_i| <= radius_i for all i (closed box membership).
inline bool within_box(std::span<const double> y_a, std::span<const double> y_b,
                       std::span<const double> radius) {
  if (y_a.size() != y_b.size() || y_a.size() != radius.size()) {
    throw std::invalid_argument("within_box: dimension mismatch");
  }
  for (std::size_t i = 0; i < y_a.size(); ++i) {
    if (std::fabs(y_a[i] - y_b[i]) > radius[i]) return false;
  }
  return true;
}

}  // namespace epseff

#endif  // EPSEFF_DOMINANCE_HPP
