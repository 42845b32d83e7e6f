#include "archiver.hpp"

#include <algorithm>

#include "dominance.hpp"

namespace epseff {

Archive make_archive(const ArchiverConfig& config) {
  Archive a;
  a.settings = config.settings;
  a.mode = config.mode;
  if (a.mode == ArchiveMode::Unbounded) {
    a.settings.delta.assign(a.settings.k(), 0.0);
    a.settings.delta_star = 0.0;
  }
  return a;
}

namespace {

void check_candidate_dims(const Archive& archive, const Candidate& p) {
  if (p.y.size() != archive.settings.k()) {
    throw std::invalid_argument("archive_update: candidate objective dimension mismatch");
  }
  if (!archive.entries.empty() && p.x.size() != archive.entries.front().x.size()) {
    throw std::invalid_argument("archive_update: candidate decision dimension mismatch");
  }
}

bool excluded_by(const Archive& archive, const ArchiveEntry& a, const Candidate& p,
                 const ObjectiveVector& radius) {
  if (archive.mode == ArchiveMode::ParameterSpace) {
    return chebyshev_distance(a.x, p.x) <= archive.settings.delta_star;
  }
  return within_box(a.y, p.y, radius);
}

}  // namespace

CandidateDecision classify_candidate(const Archive& archive, const Candidate& p) {
  check_candidate_dims(archive, p);
  if (!all_finite(p.y)) {
    return {false, RejectReason::NonFinite, -1};
  }
  const ObjectiveVector& eps = archive.settings.epsilon;
  if (archive.mode == ArchiveMode::Unbounded) {
    for (std::size_t i = 0; i < archive.entries.size(); ++i) {
      if (shifted_dominates(archive.entries[i].y, p.y, eps)) {
        return {false, RejectReason::Dominated, static_cast<std::ptrdiff_t>(i)};
      }
    }
    for (std::size_t i = 0; i < archive.entries.size(); ++i) {
      if (archive.entries[i].x == p.x) {
        return {false, RejectReason::Excluded, static_cast<std::ptrdiff_t>(i)};
      }
    }
    return {true, RejectReason::None, -1};
  }

  const ObjectiveVector radius = archive.settings.exclusion_radius();
  for (std::size_t i = 0; i < archive.entries.size(); ++i) {
    if (shifted_dominates(archive.entries[i].y, p.y, eps)) {
      return {false, RejectReason::Dominated, static_cast<std::ptrdiff_t>(i)};
    }
  }
  for (std::size_t i = 0; i < archive.entries.size(); ++i) {
    if (excluded_by(archive, archive.entries[i], p, radius)) {
      return {false, RejectReason::Excluded, static_cast<std::ptrdiff_t>(i)};
    }
  }
  return {true, RejectReason::None, -1};
}

UpdateStats archive_update(Archive& archive, std::span<const Candidate> batch,
                           std::uint64_t iteration) {
  if (archive.mode == ArchiveMode::Unbounded) {
    return archive_update_unbounded(archive, batch, iteration);
  }

  UpdateStats stats;
  const ObjectiveVector& eps = archive.settings.epsilon;
  const ObjectiveVector radius = archive.settings.exclusion_radius();
  const ObjectiveVector removal_shift = archive.settings.removal_shift();

  for (const Candidate& p : batch) {
    check_candidate_dims(archive, p);
    if (!all_finite(p.y)) {
      ++stats.skipped_nonfinite;
      continue;
    }
    ++stats.offered;

    bool rejected = false;
    for (const ArchiveEntry& a : archive.entries) {
      if (shifted_dominates(a.y, p.y, eps) || excluded_by(archive, a, p, radius)) {
        rejected = true;
        break;
      }
    }
    if (rejected) continue;

    // Accept, then prune every member the new point -(eps+delta)-dominates.
    // The new entry cannot remove itself (F(p)+eps <= F(p) is impossible).
    archive.entries.push_back(ArchiveEntry{p.x, p.y, iteration});
    ++stats.accepted;
    const ObjectiveVector& py = archive.entries.back().y;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < archive.entries.size(); ++i) {
      if (shifted_dominates(py, archive.entries[i].y, removal_shift)) {
        ++stats.removed;
        continue;
      }
      if (kept != i) archive.entries[kept] = std::move(archive.entries[i]);
      ++kept;
    }
    archive.entries.resize(kept);
  }
  return stats;
}

UpdateStats archive_update_unbounded(Archive& archive,
                                     std::span<const Candidate> batch,
                                     std::uint64_t iteration) {
  UpdateStats stats;
  const ObjectiveVector& eps = archive.settings.epsilon;

  for (const Candidate& p : batch) {
    check_candidate_dims(archive, p);
    if (!all_finite(p.y)) {
      ++stats.skipped_nonfinite;
      continue;
    }
    ++stats.offered;

    bool rejected = false;
    for (const ArchiveEntry& a : archive.entries) {
      if (shifted_dominates(a.y, p.y, eps) || a.x == p.x) {
        rejected = true;
        break;
      }
    }
    if (rejected) continue;

    archive.entries.push_back(ArchiveEntry{p.x, p.y, iteration});
    ++stats.accepted;
    const ObjectiveVector& py = archive.entries.back().y;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < archive.entries.size(); ++i) {
      if (shifted_dominates(py, archive.entries[i].y, eps)) {
        ++stats.removed;
        continue;
      }
      if (kept != i) archive.entries[kept] = std::move(archive.entries[i]);
      ++kept;
    }
    archive.entries.resize(kept);
  }
  return stats;
}

bool archive_invariants_hold(const Archive& archive, std::string* why) {
  const auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const ObjectiveVector radius = archive.settings.exclusion_radius();
  const ObjectiveVector removal_shift = archive.settings.removal_shift();
  const auto& entries = archive.entries;

  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].y.size() != archive.settings.k()) {
      return fail("entry " + std::to_string(i) + " has wrong objective dimension");
    }
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (i == j) continue;
      if (shifted_dominates(entries[i].y, entries[j].y, removal_shift)) {
        return fail("entry " + std::to_string(i) + " -(eps+delta)-dominates entry " +
                    std::to_string(j));
      }
      if (j < i) continue;
      switch (archive.mode) {
        case ArchiveMode::ImageSpace:
          if (within_box(entries[i].y, entries[j].y, radius)) {
            return fail("entries " + std::to_string(i) + "," + std::to_string(j) +
                        " violate image-space separation");
          }
          break;
        case ArchiveMode::ParameterSpace:
          if (chebyshev_distance(entries[i].x, entries[j].x) <= archive.settings.delta_star) {
            return fail("entries " + std::to_string(i) + "," + std::to_string(j) +
                        " violate parameter-space separation");
          }
          break;
        case ArchiveMode::Unbounded:
          if (entries[i].x == entries[j].x) {
            return fail("entries " + std::to_string(i) + "," + std::to_string(j) +
                        " are exact duplicates");
          }
          break;
      }
    }
  }
  return true;
}

}  // namespace epseff
