/**
 * @file types.hpp
 * @brief Core value types: decision/objective vectors, tolerance settings,
 *        boxes, and the archive container shared by all modules.
 */

#ifndef EPSEFF_TYPES_HPP
#define EPSEFF_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace epseff {

/// Point in parameter space R^n (binary problems store 0/1 coordinates).
using DecisionVector = std::vector<double>;

/// Point in image space R^k.
using ObjectiveVector = std::vector<double>;

inline bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

/**
 * @brief Axis-aligned box [lower_1,upper_1] x ... x [lower_n,upper_n].
 */
struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  Box() = default;
  Box(std::vector<double> lo, std::vector<double> up)
      : lower(std::move(lo)), upper(std::move(up)) {
    if (lower.size() != upper.size()) {
      throw std::invalid_argument("Box: lower/upper dimension mismatch");
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (!(lower[i] < upper[i])) {
        throw std::invalid_argument("Box: lower must be strictly below upper in every dimension");
      }
    }
  }

  [[nodiscard]] std::size_t dim() const { return lower.size(); }

  [[nodiscard]] bool contains(const std::vector<double>& x) const {
    if (x.size() != lower.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < lower[i] || x[i] > upper[i]) return false;
    }
    return true;
  }

  [[nodiscard]] double width(std::size_t i) const { return upper[i] - lower[i]; }
};

/**
 * @brief Tolerances of the archiving scheme: the acceptable loss epsilon,
 *        the image-space discretization delta (stored per objective; a scalar
 *        delta is broadcast), and the exclusion radius delta_star.
 *
 * Invariants enforced by make():
 *   - epsilon_i > 0 for all i
 *   - delta_i >= 0 for all i
 *   - 0 <= delta_star <= min_i delta_i
 */
struct ToleranceSettings {
  ObjectiveVector epsilon;
  ObjectiveVector delta;
  double delta_star = 0.0;

  [[nodiscard]] std::size_t k() const { return epsilon.size(); }

  [[nodiscard]] double min_delta() const {
    return delta.empty() ? 0.0 : *std::min_element(delta.begin(), delta.end());
  }

  [[nodiscard]] bool scalar_delta() const {
    return std::all_of(delta.begin(), delta.end(),
                       [&](double d) { return d == delta.front(); });
  }

  /// Shift used when pruning dominated archive members: epsilon + delta.
  [[nodiscard]] ObjectiveVector removal_shift() const {
    ObjectiveVector s(epsilon);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += delta[i];
    return s;
  }

  /// Per-objective exclusion box radius. Equals delta_star for a scalar
  /// delta and delta_i for a vector delta with delta_star = min delta;
  /// in between, the box scales with delta_star / min delta.
  [[nodiscard]] ObjectiveVector exclusion_radius() const {
    ObjectiveVector r(delta.size(), 0.0);
    const double dmin = min_delta();
    if (dmin <= 0.0) return r;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = delta[i] * (delta_star / dmin);
    return r;
  }

  /**
   * @brief Validates and builds tolerance settings.
   *
   * @param epsilon     k strictly positive entries.
   * @param delta       either k entries or a single entry broadcast to k.
   * @param delta_star  exclusion radius; pass a negative value to default it
   *                    to min_i delta_i.
   */
  static ToleranceSettings make(ObjectiveVector epsilon, ObjectiveVector delta,
                                double delta_star = -1.0) {
    if (epsilon.empty()) {
      throw std::invalid_argument("ToleranceSettings: epsilon must be non-empty");
    }
    if (!all_finite(epsilon)) {
      throw std::invalid_argument("ToleranceSettings: epsilon must be finite");
    }
    for (double e : epsilon) {
      if (!(e > 0.0)) {
        throw std::invalid_argument("ToleranceSettings: epsilon entries must be > 0");
      }
    }
    if (delta.size() == 1 && epsilon.size() > 1) {
      delta.assign(epsilon.size(), delta.front());
    }
    if (delta.size() != epsilon.size()) {
      throw std::invalid_argument("ToleranceSettings: delta must be scalar or length k");
    }
    if (!all_finite(delta)) {
      throw std::invalid_argument("ToleranceSettings: delta must be finite");
    }
    for (double d : delta) {
      if (d < 0.0) throw std::invalid_argument("ToleranceSettings: delta entries must be >= 0");
    }
    ToleranceSettings s;
    s.epsilon = std::move(epsilon);
    s.delta = std::move(delta);
    s.delta_star = delta_star < 0.0 ? s.min_delta() : delta_star;
    if (s.delta_star > s.min_delta()) {
      throw std::invalid_argument("ToleranceSettings: delta_star must not exceed min delta");
    }
    return s;
  }
};

/// Where the exclusion test of the archiver is applied.
enum class ArchiveMode {
  ImageSpace,      ///< exclusion on d_inf between images (default)
  ParameterSpace,  ///< exclusion on d_inf between decision vectors
  Unbounded        ///< no exclusion; keep everything not -eps-dominated
};

[[nodiscard]] inline const char* to_string(ArchiveMode m) {
  switch (m) {
    case ArchiveMode::ImageSpace: return "image-space";
    case ArchiveMode::ParameterSpace: return "parameter-space";
    case ArchiveMode::Unbounded: return "unbounded";
  }
  return "?";
}

/**
 * @brief One stored solution: decision vector, cached image, and the
 *        iteration at which it entered the archive.
 */
struct ArchiveEntry {
  DecisionVector x;
  ObjectiveVector y;
  std::uint64_t birth_iteration = 0;
};

/**
 * @brief Ordered solution store. Entries keep insertion order; all updates
 *        go through the archiver module so the separation and
 *        non-domination invariants hold between calls.
 */
struct Archive {
  std::vector<ArchiveEntry> entries;
  ToleranceSettings settings;
  ArchiveMode mode = ArchiveMode::ImageSpace;

  [[nodiscard]] std::size_t size() const { return entries.size(); }
  [[nodiscard]] bool empty() const { return entries.empty(); }

  [[nodiscard]] std::vector<ObjectiveVector> images() const {
    std::vector<ObjectiveVector> ys;
    ys.reserve(entries.size());
    for (const auto& e : entries) ys.push_back(e.y);
    return ys;
  }
};

}  // namespace epseff

#endif  // EPSEFF_TYPES_HPP
