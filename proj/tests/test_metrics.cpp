#include "doctest.h"

#include <cmath>
#include <random>

#include "archiver.hpp"
#include "dominance.hpp"
#include "metrics.hpp"
#include "problems.hpp"

using namespace epseff;

TEST_CASE("semi_dist and hausdorff on small sets") {
  const std::vector<ObjectiveVector> s{{0.0}, {1.5}};
  CHECK(semi_dist(s, s) == 0.0);
  CHECK(hausdorff(s, s) == 0.0);

  const std::vector<ObjectiveVector> zero{{0.0}};
  const std::vector<ObjectiveVector> pair{{1.0}, {2.0}};
  CHECK(semi_dist(zero, pair) == 1.0);
  CHECK(semi_dist(pair, zero) == 2.0);
  CHECK(hausdorff(zero, pair) == 2.0);

  CHECK_THROWS_AS(semi_dist({}, pair), std::invalid_argument);
  CHECK_THROWS_AS(semi_dist(pair, {}), std::invalid_argument);
}

TEST_CASE("reference set spans the efficient interval of the line example") {
  const auto p = example_line();
  const auto ref = reference_set(p, {1.0}, {0.001});
  REQUIRE(ref.size() > 0);
  double lo = 1e30;
  double hi = -1e30;
  for (const auto& x : ref.xs) {
    lo = std::min(lo, x[0]);
    hi = std::max(hi, x[0]);
  }
  CHECK(lo == 0.0);
  CHECK(hi == doctest::Approx(1.0).epsilon(3e-3));
  // oracle internal consistency: no member -eps-dominates another
  for (const auto& a : ref.ys) {
    for (const auto& b : ref.ys) {
      CHECK_FALSE(shifted_dominates(a, b, ref.epsilon));
    }
  }
}

TEST_CASE("reference set spans the piecewise example interval") {
  const auto p = example_piecewise(0.1);
  const auto ref = reference_set(p, {0.5, 0.5}, {0.001});
  double lo = 1e30;
  double hi = -1e30;
  for (const auto& x : ref.xs) {
    lo = std::min(lo, x[0]);
    hi = std::max(hi, x[0]);
  }
  // the set reaches from -1-eps to 1+eps/alpha up to one grid step (the
  // exact endpoints hinge on the != clause and are not asserted)
  CHECK(lo == doctest::Approx(-1.5).epsilon(3e-3));
  CHECK(hi == doctest::Approx(6.0).epsilon(3e-3));
}

TEST_CASE("reference set with huge epsilon keeps the whole feasible grid") {
  const auto p = example_line();
  const auto ref = reference_set(p, {100.0}, {0.01});
  CHECK(ref.size() == 501);
}

TEST_CASE("reference set with zero-like epsilon and weak notion") {
  // epsilon must stay positive in settings, but the oracle accepts any shift
  const auto p = example_piecewise(0.5);
  const auto pareto = reference_set(p, {0.0, 0.0}, {0.01});
  // grid Pareto set of the piecewise example is [-1, 1]
  double lo = 1e30;
  double hi = -1e30;
  for (const auto& x : pareto.xs) {
    lo = std::min(lo, x[0]);
    hi = std::max(hi, x[0]);
  }
  CHECK(lo == doctest::Approx(-1.0).epsilon(1e-2));
  CHECK(hi == doctest::Approx(1.0).epsilon(1e-2));

  const auto weak = reference_set(p, {0.0, 0.0}, {0.01}, kDefaultCellCap,
                                  ParetoNotion::WeakEfficient);
  CHECK(weak.size() >= pareto.size());
}

TEST_CASE("reference set rejects oversized grids") {
  const auto p = tanaka();
  CHECK_THROWS_AS(reference_set(p, {0.1, 0.1}, {1e-5}), std::length_error);
  CHECK_THROWS_AS(reference_set(p, {0.1, 0.1}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(reference_set(p, {0.1}, {0.01}), std::invalid_argument);
}

TEST_CASE("image bound hand values") {
  CHECK(archive_bound_image({1.0}, 0.1, 0.1, {0.0}, {5.0}) ==
        doctest::Approx(13.0).epsilon(1e-12));
  CHECK(archive_bound_image({1.0, 1.0}, 1.0, 1.0, {0.0, 0.0}, {1.0, 1.0}) ==
        doctest::Approx(16.0).epsilon(1e-12));
  CHECK_THROWS_AS(archive_bound_image({1.0}, 0.1, 0.0, {0.0}, {5.0}),
                  std::domain_error);
}

TEST_CASE("image bound grows like (1/delta)^(k-1)") {
  // with eps_i = c_i * delta and delta_star = delta, halving delta
  // asymptotically doubles the bound per extra objective
  const ObjectiveVector m{0.0, 0.0};
  const ObjectiveVector M{1.0, 1.0};
  double prev_ratio = 0.0;
  for (double delta : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const ObjectiveVector eps{2.0 * delta, 3.0 * delta};
    const ObjectiveVector eps_half{delta, 1.5 * delta};
    const double b = archive_bound_image(eps, delta, delta, m, M);
    const double b_half = archive_bound_image(eps_half, delta / 2, delta / 2, m, M);
    prev_ratio = b_half / b;
  }
  CHECK(prev_ratio == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("parameter bound hand values") {
  CHECK(archive_bound_param(0.5, Box({0.0}, {1.0})) == doctest::Approx(3.0));
  // widths scale the bound linearly per dimension
  const double thin = archive_bound_param(0.25, Box({0.0, 0.0}, {1.0, 0.1}));
  const double wide = archive_bound_param(0.25, Box({0.0, 0.0}, {1.0, 0.2}));
  CHECK(wide == doctest::Approx(2.0 * thin));
  CHECK_THROWS_AS(archive_bound_param(0.0, Box({0.0}, {1.0})), std::domain_error);
}

TEST_CASE("tightness of the parameter bound on the constant problem") {
  const auto p = constant(2, {0.5, 0.5});
  auto archive = make_archive(ArchiverConfig::parameter_space(
      ToleranceSettings::make(p.default_epsilon, {0.1}, 0.099)));
  std::vector<Candidate> grid;
  const int s = 10;
  for (int i = 0; i <= s; ++i) {
    for (int j = 0; j <= s; ++j) {
      DecisionVector x{i / 10.0, j / 10.0};
      grid.push_back(Candidate{x, p.evaluate(x)});
    }
  }
  archive_update(archive, grid);
  CHECK(archive.size() == 121);
  CHECK(static_cast<double>(archive.size()) <=
        archive_bound_param(0.099, p.domain));
}

TEST_CASE("min-norm direction closed forms") {
  const auto orthogonal = min_norm_direction({{1.0, 0.0}, {0.0, 1.0}});
  CHECK(orthogonal.alpha[0] == doctest::Approx(0.5));
  CHECK(orthogonal.alpha[1] == doctest::Approx(0.5));
  CHECK(orthogonal.q[0] == doctest::Approx(0.5));
  CHECK(orthogonal.q[1] == doctest::Approx(0.5));

  const auto opposite = min_norm_direction({{2.0, 1.0}, {-2.0, -1.0}});
  CHECK(opposite.norm_sq == doctest::Approx(0.0).epsilon(1e-12));

  const auto single = min_norm_direction({{3.0, -4.0}});
  CHECK(single.q == std::vector<double>{3.0, -4.0});
  CHECK(single.alpha == std::vector<double>{1.0});

  CHECK_THROWS_AS(min_norm_direction({}), std::domain_error);
  CHECK_THROWS_AS(min_norm_direction({{1.0}, {1.0, 2.0}}), std::invalid_argument);
}

TEST_CASE("min-norm optimality condition on random gradient sets") {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_int_distribution<int> kd(1, 5);
  std::uniform_int_distribution<int> nd(1, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    const int k = kd(gen);
    const int n = nd(gen);
    std::vector<ObjectiveVector> g(k, ObjectiveVector(n));
    for (auto& gi : g) {
      for (auto& v : gi) v = coord(gen);
    }
    const auto result = min_norm_direction(g);
    // simplex-QP optimality: <g_i, q> >= ||q||^2 for every i
    for (const auto& gi : g) {
      double dot = 0.0;
      for (int t = 0; t < n; ++t) dot += gi[t] * result.q[t];
      CHECK(dot >= result.norm_sq - 1e-9);
    }
    // alpha stays on the simplex
    double total = 0.0;
    for (double a : result.alpha) {
      CHECK(a >= 0.0);
      total += a;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("region of interest and hamming") {
  auto archive = make_archive(ArchiverConfig::unbounded({1.0, 1.0}));
  const std::vector<Candidate> batch{
      {{0.0}, {0.0, 2.0}}, {{1.0}, {1.0, 1.0}}, {{2.0}, {2.0, 0.0}}};
  archive_update(archive, batch);

  const auto all = region_of_interest(archive, {1.0, 1.0}, {1.0, 1.0});
  CHECK(all.size() == 3);
  const auto exact = region_of_interest(archive, {1.0, 1.0}, {0.0, 0.0});
  REQUIRE(exact.size() == 1);
  CHECK(archive.entries[exact[0]].y == ObjectiveVector{1.0, 1.0});
  CHECK_THROWS_AS(region_of_interest(archive, {1.0}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(region_of_interest(archive, {1.0, 1.0}, {-0.5, 0.0}),
                  std::invalid_argument);

  CHECK(hamming({1.0, 0.0, 1.0}, {1.0, 0.0, 1.0}) == 0);
  CHECK(hamming(DecisionVector(30, 0.0), DecisionVector(30, 1.0)) == 30);
  CHECK_THROWS_AS(hamming({1.0}, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("nondominated indices") {
  const std::vector<ObjectiveVector> ys{{0.0, 2.0}, {1.0, 1.0}, {2.0, 0.0}, {1.5, 1.5}};
  const auto idx = nondominated_indices(ys);
  CHECK(idx == std::vector<std::size_t>{0, 1, 2});
}
