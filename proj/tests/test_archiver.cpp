#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "archiver.hpp"
#include "dominance.hpp"

using namespace epseff;

namespace {

Candidate cand1(double x) { return Candidate{{x}, {x}}; }

Archive identity_archive(double eps, double delta, double delta_star = -1.0) {
  return make_archive(
      ArchiverConfig::image_space(ToleranceSettings::make({eps}, {delta}, delta_star)));
}

/// Brute-force realization of the base update rule on the pooled points
/// (set semantics on x): keep x iff no pool member -eps-dominates it.
std::vector<Candidate> unbounded_oracle(std::vector<Candidate> pool,
                                        const ObjectiveVector& eps) {
  std::vector<Candidate> dedup;
  for (auto& c : pool) {
    const bool seen = std::any_of(dedup.begin(), dedup.end(),
                                  [&](const Candidate& d) { return d.x == c.x; });
    if (!seen) dedup.push_back(std::move(c));
  }
  std::vector<Candidate> kept;
  for (const auto& c : dedup) {
    const bool dominated = std::any_of(dedup.begin(), dedup.end(), [&](const Candidate& d) {
      return shifted_dominates(d.y, c.y, eps);
    });
    if (!dominated) kept.push_back(c);
  }
  return kept;
}

std::set<ObjectiveVector> image_set(const Archive& a) {
  std::set<ObjectiveVector> s;
  for (const auto& e : a.entries) s.insert(e.y);
  return s;
}

}  // namespace

TEST_CASE("insertion keeps a distant efficient point") {
  // 1-D identity objective, eps=1, delta=delta_star=0.1: starting from {1.2},
  // the point 0.1 is accepted and does not evict 1.2
  auto archive = identity_archive(1.0, 0.1);
  archive_update(archive, std::vector<Candidate>{cand1(1.2)});
  REQUIRE(archive.size() == 1);
  archive_update(archive, std::vector<Candidate>{cand1(0.1)});
  REQUIRE(archive.size() == 2);
  CHECK(archive.entries[0].x[0] == 1.2);
  CHECK(archive.entries[1].x[0] == 0.1);
}

TEST_CASE("exclusion radius rejects close points, tie included") {
  auto archive = identity_archive(1.0, 0.1);
  archive_update(archive, std::vector<Candidate>{cand1(1.2), cand1(0.1)});
  const auto stats = archive_update(archive, std::vector<Candidate>{cand1(0.15)});
  CHECK(stats.accepted == 0);
  CHECK(archive.size() == 2);

  // d_inf exactly delta_star is also rejected
  const auto tie = archive_update(archive, std::vector<Candidate>{cand1(0.2)});
  CHECK(tie.accepted == 0);

  const auto decision = classify_candidate(archive, cand1(0.15));
  CHECK_FALSE(decision.accepted);
  CHECK(decision.reason == RejectReason::Excluded);
  CHECK(archive.entries[decision.witness].x[0] == 0.1);
}

TEST_CASE("empty archive accepts any feasible point") {
  auto archive = identity_archive(1.0, 0.1);
  const auto stats = archive_update(archive, std::vector<Candidate>{cand1(4.2)});
  CHECK(stats.accepted == 1);
  CHECK(archive.size() == 1);
}

TEST_CASE("accepted point evicts -(eps+delta)-dominated members") {
  auto archive = identity_archive(1.0, 0.1);
  archive_update(archive, std::vector<Candidate>{cand1(5.0)});
  const auto stats = archive_update(archive, std::vector<Candidate>{cand1(3.0)});
  CHECK(stats.accepted == 1);
  CHECK(stats.removed == 1);
  REQUIRE(archive.size() == 1);
  CHECK(archive.entries[0].x[0] == 3.0);
}

TEST_CASE("rejection by domination reports the witness") {
  auto archive = identity_archive(1.0, 0.1);
  archive_update(archive, std::vector<Candidate>{cand1(0.5)});
  const auto decision = classify_candidate(archive, cand1(3.0));
  CHECK_FALSE(decision.accepted);
  CHECK(decision.reason == RejectReason::Dominated);
  CHECK(decision.witness == 0);
  // the witness indeed -eps-dominates the candidate
  CHECK(shifted_dominates(archive.entries[0].y, ObjectiveVector{3.0},
                          archive.settings.epsilon));
}

TEST_CASE("non-finite candidates are skipped and counted") {
  auto archive = identity_archive(1.0, 0.1);
  const double nan = std::nan("");
  const auto stats =
      archive_update(archive, std::vector<Candidate>{Candidate{{0.3}, {nan}}, cand1(0.3)});
  CHECK(stats.skipped_nonfinite == 1);
  CHECK(stats.accepted == 1);
  CHECK(archive.size() == 1);
}

TEST_CASE("candidate dimension mismatch throws") {
  auto archive = identity_archive(1.0, 0.1);
  CHECK_THROWS_AS(
      archive_update(archive, std::vector<Candidate>{Candidate{{0.1, 0.2}, {0.1, 0.2}}}),
      std::invalid_argument);
}

TEST_CASE("unbounded update matches the pooled definition") {
  // eps=1 on the 1-D identity: 0.1 -eps-dominates both 3.0 and 1.2
  auto archive = make_archive(ArchiverConfig::unbounded({1.0}));
  archive_update_unbounded(archive,
                           std::vector<Candidate>{cand1(0.1), cand1(3.0), cand1(1.2)});
  const auto oracle = unbounded_oracle({cand1(0.1), cand1(3.0), cand1(1.2)}, {1.0});
  REQUIRE(oracle.size() == 1);
  CHECK(oracle[0].x[0] == 0.1);
  REQUIRE(archive.size() == 1);
  CHECK(archive.entries[0].x[0] == 0.1);
}

TEST_CASE("unbounded update is idempotent on duplicates") {
  auto archive = make_archive(ArchiverConfig::unbounded({1.0}));
  archive_update_unbounded(archive, std::vector<Candidate>{cand1(0.7)});
  archive_update_unbounded(archive, std::vector<Candidate>{cand1(0.7)});
  CHECK(archive.size() == 1);
}

TEST_CASE("unbounded update keeps mutually non-dominating points") {
  auto archive = make_archive(ArchiverConfig::unbounded({1.0, 1.0}));
  const std::vector<Candidate> batch{{{0.0}, {0.0, 2.0}},
                                     {{1.0}, {1.0, 1.0}},
                                     {{2.0}, {2.0, 0.0}}};
  archive_update_unbounded(archive, batch);
  CHECK(archive.size() == 3);
}

TEST_CASE("unbounded update retains image duplicates on distinct points") {
  auto archive = make_archive(ArchiverConfig::unbounded({1.0, 1.0}));
  const std::vector<Candidate> batch{{{0.0}, {1.0, 1.0}}, {{2.0}, {1.0, 1.0}}};
  archive_update_unbounded(archive, batch);
  CHECK(archive.size() == 2);
}

namespace {

struct RandomInstance {
  std::vector<Candidate> pool;  // n=1, k=2, distinct x
  ObjectiveVector eps;
};

RandomInstance random_instance(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> size_dist(1, 20);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::uniform_real_distribution<double> eps_dist(0.05, 0.5);
  RandomInstance inst;
  inst.eps = {eps_dist(gen), eps_dist(gen)};
  const int m = size_dist(gen);
  for (int i = 0; i < m; ++i) {
    // a few exact image duplicates on purpose
    if (!inst.pool.empty() && coord(gen) < 0.15) {
      auto dup = inst.pool.back();
      dup.x[0] += 1.0;
      inst.pool.push_back(dup);
    } else {
      const double a = coord(gen);
      const double b = coord(gen);
      inst.pool.push_back(Candidate{{a * 100.0 + b}, {a, b}});
    }
  }
  return inst;
}

}  // namespace

TEST_CASE("delta=0 image archiver equals the unbounded rule up to image duplicates") {
  std::mt19937_64 gen(1234);
  for (int trial = 0; trial < 500; ++trial) {
    auto inst = random_instance(gen);
    for (int perm = 0; perm < 3; ++perm) {
      std::shuffle(inst.pool.begin(), inst.pool.end(), gen);

      auto image_archive = make_archive(ArchiverConfig::image_space(
          ToleranceSettings::make(inst.eps, {0.0}, 0.0)));
      archive_update(image_archive, inst.pool);

      auto unbounded_archive = make_archive(ArchiverConfig::unbounded(inst.eps));
      archive_update_unbounded(unbounded_archive, inst.pool);

      std::set<ObjectiveVector> oracle_images;
      for (const auto& c : unbounded_oracle(inst.pool, inst.eps)) {
        oracle_images.insert(c.y);
      }
      CHECK(image_set(image_archive) == oracle_images);
      CHECK(image_set(unbounded_archive) == oracle_images);
      // image-space delta=0 keeps exactly one point per distinct image
      CHECK(image_archive.size() == image_set(image_archive).size());
    }
  }
}

TEST_CASE("order-universal invariants after random update sequences") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double delta = std::uniform_real_distribution<double>(0.01, 0.3)(gen);
    auto archive = make_archive(ArchiverConfig::image_space(
        ToleranceSettings::make({0.2, 0.2}, {delta})));
    std::vector<Candidate> offered;
    for (int batch = 0; batch < 5; ++batch) {
      std::vector<Candidate> cs;
      for (int i = 0; i < 8; ++i) {
        const double a = coord(gen);
        const double b = coord(gen);
        cs.push_back(Candidate{{a, b}, {a, b}});
      }
      archive_update(archive, cs, batch);
      offered.insert(offered.end(), cs.begin(), cs.end());
    }
    std::string why;
    CHECK_MESSAGE(archive_invariants_hold(archive, &why), why);

    // every offered point stays covered: weakly -eps-dominated by a member
    // or within delta of one in the image
    for (const auto& c : offered) {
      bool covered = false;
      for (const auto& e : archive.entries) {
        if (shifted_dominates_weakly(e.y, c.y, archive.settings.epsilon) ||
            chebyshev_distance(e.y, c.y) <= delta) {
          covered = true;
          break;
        }
      }
      CHECK(covered);
    }
  }
}

TEST_CASE("parameter-space mode separates decision vectors") {
  auto archive = make_archive(ArchiverConfig::parameter_space(
      ToleranceSettings::make({10.0, 10.0}, {0.1}, 0.099)));
  std::vector<Candidate> grid;
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const double a = 0.1 * i;
      const double b = 0.1 * j;
      grid.push_back(Candidate{{a, b}, {0.5, 0.5}});
    }
  }
  archive_update(archive, grid);
  CHECK(archive.size() == 121);
  // a midpoint is within 0.05 of a grid point, hence rejected
  const auto decision = classify_candidate(archive, Candidate{{0.05, 0.05}, {0.5, 0.5}});
  CHECK_FALSE(decision.accepted);
  CHECK(decision.reason == RejectReason::Excluded);
  std::string why;
  CHECK_MESSAGE(archive_invariants_hold(archive, &why), why);
}

TEST_CASE("vector delta runs the per-objective box exclusion") {
  // delta=(0.5, 0.005): a candidate inside the asymmetric box is rejected
  // even though its first-coordinate distance exceeds min(delta)
  auto archive = make_archive(ArchiverConfig::image_space(
      ToleranceSettings::make({1.0, 1.0}, {0.5, 0.005})));
  archive_update(archive, std::vector<Candidate>{Candidate{{0.0}, {0.0, 0.0}}});
  const auto inside = classify_candidate(archive, Candidate{{1.0}, {0.4, 0.004}});
  CHECK_FALSE(inside.accepted);
  CHECK(inside.reason == RejectReason::Excluded);
  const auto outside = classify_candidate(archive, Candidate{{2.0}, {0.4, 0.006}});
  CHECK(outside.accepted);
}

TEST_CASE("batch accounting identity") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  auto archive = make_archive(ArchiverConfig::image_space(
      ToleranceSettings::make({0.1, 0.1}, {0.05})));
  std::uint64_t accepted = 0;
  std::uint64_t removed = 0;
  for (int batch = 0; batch < 50; ++batch) {
    std::vector<Candidate> cs;
    for (int i = 0; i < 4; ++i) {
      const double a = coord(gen);
      const double b = coord(gen);
      cs.push_back(Candidate{{a, b}, {a, b}});
    }
    const auto stats = archive_update(archive, cs, batch);
    accepted += stats.accepted;
    removed += stats.removed;
  }
  CHECK(accepted - removed == archive.size());
}
