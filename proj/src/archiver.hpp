/**
 * @file archiver.hpp
 * @brief Archive update strategies: the discretized image-space rule
 *        (scalar or vector delta), its parameter-space variant, and the
 *        unbounded rule that stores every point not -eps-dominated.
 */

#ifndef EPSEFF_ARCHIVER_HPP
#define EPSEFF_ARCHIVER_HPP

#include <cstdint>
#include <span>
#include <string>

#include "types.hpp"

namespace epseff {

/**
 * @brief Archiver configuration: tolerance settings plus the space in which
 *        the exclusion test runs. Unbounded mode forces delta = delta_star = 0.
 */
struct ArchiverConfig {
  ToleranceSettings settings;
  ArchiveMode mode = ArchiveMode::ImageSpace;

  static ArchiverConfig image_space(ToleranceSettings s) {
    return ArchiverConfig{std::move(s), ArchiveMode::ImageSpace};
  }
  static ArchiverConfig parameter_space(ToleranceSettings s) {
    return ArchiverConfig{std::move(s), ArchiveMode::ParameterSpace};
  }
  /// Unbounded archiver of the base update rule; only epsilon is used.
  static ArchiverConfig unbounded(ObjectiveVector epsilon) {
    ToleranceSettings s = ToleranceSettings::make(
        std::move(epsilon), ObjectiveVector{0.0}, 0.0);
    return ArchiverConfig{std::move(s), ArchiveMode::Unbounded};
  }
};

/// Fresh empty archive for the given configuration.
Archive make_archive(const ArchiverConfig& config);

/// One evaluated point offered to the archiver.
struct Candidate {
  DecisionVector x;
  ObjectiveVector y;
};

/// Why a candidate was not inserted.
enum class RejectReason {
  None,       ///< accepted
  Dominated,  ///< (D1) some member -eps-dominates it
  Excluded,   ///< (D2) some member within the exclusion radius
  NonFinite   ///< objective vector contains NaN/inf; skipped
};

/**
 * @brief Acceptance decision for a single candidate against the current
 *        archive, including the witness index for a rejection.
 */
struct CandidateDecision {
  bool accepted = false;
  RejectReason reason = RejectReason::None;
  std::ptrdiff_t witness = -1;  ///< index of the rejecting member, -1 if none
};

/// Evaluates the acceptance test only; does not modify the archive.
CandidateDecision classify_candidate(const Archive& archive, const Candidate& p);

/// Counters for one update call; accepted - removed is the archive growth.
struct UpdateStats {
  std::uint64_t offered = 0;
  std::uint64_t accepted = 0;
  std::uint64_t removed = 0;
  std::uint64_t skipped_nonfinite = 0;
};

/**
 * @brief Processes the batch P in order against the archive, in place.
 *
 * A candidate is accepted iff no member -eps-dominates it and no member lies
 * within the exclusion radius (image boxes in image-space mode, parameter
 * d_inf in parameter-space mode). On acceptance every member that the new
 * point -(eps+delta)-dominates is removed. Later candidates in the same
 * batch see earlier acceptances. In unbounded mode this delegates to
 * archive_update_unbounded().
 *
 * Candidates with non-finite objective values are skipped and counted.
 *
 * @param iteration birth stamp recorded on accepted entries.
 */
UpdateStats archive_update(Archive& archive, std::span<const Candidate> batch,
                           std::uint64_t iteration = 0);

/**
 * @brief Base update rule without discretization: the result holds exactly
 *        the points of P u A that no point of P u A -eps-dominates.
 *
 * Distinct points with identical images are all retained; an exact
 * duplicate of a stored decision vector is dropped (set semantics).
 */
UpdateStats archive_update_unbounded(Archive& archive,
                                     std::span<const Candidate> batch,
                                     std::uint64_t iteration = 0);

/**
 * @brief Checks the archive invariants: pairwise separation by more than the
 *        exclusion radius (in the mode's space) and absence of internal
 *        -(eps+delta)-domination.
 *
 * @param why optional; receives a description of the first violation.
 */
bool archive_invariants_hold(const Archive& archive, std::string* why = nullptr);

}  // namespace epseff

#endif  // EPSEFF_ARCHIVER_HPP
