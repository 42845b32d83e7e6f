/**
 * @file csv.hpp
 * @brief CSV serialization: point sets with header x1..xn,f1..fk written at
 *        full precision (17 significant digits), and knapsack instances.
 */

#ifndef EPSEFF_CSV_HPP
#define EPSEFF_CSV_HPP

#include <string>
#include <vector>

#include "metrics.hpp"
#include "problems.hpp"
#include "types.hpp"

namespace epseff {

/// Rows of paired decision/objective vectors, as stored in an archive CSV.
struct PointSet {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<DecisionVector> xs;
  std::vector<ObjectiveVector> ys;

  [[nodiscard]] std::size_t size() const { return xs.size(); }
};

void save_points_csv(const std::string& path, const std::vector<DecisionVector>& xs,
                     const std::vector<ObjectiveVector>& ys);

/// Explicit-dimension variant; required when the row list may be empty.
void save_points_csv(const std::string& path, const std::vector<DecisionVector>& xs,
                     const std::vector<ObjectiveVector>& ys, std::size_t n,
                     std::size_t k);

void save_archive_csv(const std::string& path, const Archive& archive);

void save_reference_csv(const std::string& path, const ReferenceSet& ref);

/**
 * @brief Parses a point CSV; n and k are recovered from the header.
 * @throws std::runtime_error naming the offending line on malformed input.
 */
PointSet load_points_csv(const std::string& path);

/// Columns: j, c1, c2, w.
void save_knapsack_instance_csv(const std::string& path,
                                const KnapsackInstance& instance);

}  // namespace epseff

#endif  // EPSEFF_CSV_HPP
