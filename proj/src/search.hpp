/**
 * @file search.hpp
 * @brief Generic stochastic search: generate candidate batches, evaluate,
 *        and feed the archiver until the feasible-sample budget is spent.
 */

#ifndef EPSEFF_SEARCH_HPP
#define EPSEFF_SEARCH_HPP

#include <cstdint>
#include <string>

#include "archiver.hpp"
#include "problems.hpp"

namespace epseff {

enum class GeneratorKind { UniformBox, BinaryFeasible, BitflipMutation };

[[nodiscard]] const char* to_string(GeneratorKind k);
GeneratorKind generator_kind_from_string(const std::string& s);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::UniformBox;
  std::uint32_t batch_size = 1;
  std::uint64_t seed = 0;
};

/**
 * @brief Run statistics and configuration echo. The accounting identity
 *        total_accepted - total_removed == final_archive_size holds on
 *        every successful run.
 */
struct RunSummary {
  std::string problem;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint32_t batch_size = 1;
  GeneratorKind generator = GeneratorKind::UniformBox;
  ToleranceSettings settings;
  ArchiveMode mode = ArchiveMode::ImageSpace;

  std::uint64_t total_generated = 0;   ///< raw draws, including infeasible
  std::uint64_t total_feasible = 0;    ///< candidates offered to the archiver
  std::uint64_t total_accepted = 0;
  std::uint64_t total_removed = 0;
  std::uint64_t skipped_nonfinite = 0;
  std::uint64_t final_archive_size = 0;

  double wall_time_seconds = 0.0;
  double update_time_seconds = 0.0;  ///< archiver share of the wall time

  /// Empirical per-objective min/max over all offered candidates.
  ObjectiveVector image_min;
  ObjectiveVector image_max;
};

struct RunResult {
  Archive archive;
  RunSummary summary;
};

/**
 * @brief Runs the search loop until exactly `budget` feasible evaluated
 *        points have been offered to the archiver. Deterministic for a
 *        fixed (seed, config).
 *
 * @throws std::invalid_argument when the generator kind does not match the
 *         problem kind or the settings dimension mismatches the problem.
 * @throws std::runtime_error when the feasible region is effectively
 *         unreachable (see UniformBoxSampler) or evaluations keep producing
 *         non-finite values.
 */
RunResult run(const Problem& problem, const GeneratorSpec& generator,
              const ArchiverConfig& archiver, std::uint64_t budget);

}  // namespace epseff

#endif  // EPSEFF_SEARCH_HPP
