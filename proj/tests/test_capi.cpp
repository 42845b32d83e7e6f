// Exercises the shared-library surface through the C header only.

#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "epseff.h"

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("problem lifecycle and evaluation") {
  epseff_problem* p = nullptr;
  REQUIRE(epseff_problem_create("tanaka", nullptr, nullptr, 0, &p) == EPSEFF_OK);
  size_t n = 0;
  size_t k = 0;
  CHECK(epseff_problem_dims(p, &n, &k) == EPSEFF_OK);
  CHECK(n == 2);
  CHECK(k == 2);
  int kind = -1;
  CHECK(epseff_problem_kind(p, &kind) == EPSEFF_OK);
  CHECK(kind == EPSEFF_VAR_CONTINUOUS);
  const char* name = nullptr;
  CHECK(epseff_problem_name(p, &name) == EPSEFF_OK);
  CHECK(std::string(name) == "tanaka");

  double x[2] = {1.0, 1.0};
  double y[2] = {0, 0};
  CHECK(epseff_problem_evaluate(p, x, 2, y, 2) == EPSEFF_OK);
  CHECK(y[0] == 1.0);
  CHECK(y[1] == 1.0);
  CHECK(epseff_problem_evaluate(p, x, 1, y, 2) == EPSEFF_ERR_DIMENSION);

  int feasible = 0;
  CHECK(epseff_problem_feasible(p, x, 2, &feasible) == EPSEFF_OK);
  CHECK(feasible == 1);

  int has_grad = 0;
  CHECK(epseff_problem_has_gradient(p, &has_grad) == EPSEFF_OK);
  CHECK(has_grad == 1);
  double grads[4] = {0, 0, 0, 0};
  CHECK(epseff_problem_gradient(p, x, 2, grads, 2) == EPSEFF_OK);
  CHECK(grads[0] == 1.0);
  CHECK(grads[3] == 1.0);

  double eps[2] = {0, 0};
  CHECK(epseff_problem_default_epsilon(p, eps) == EPSEFF_OK);
  CHECK(eps[0] == 0.1);

  epseff_problem_free(p);
}

TEST_CASE("unknown problems and parameters fail cleanly") {
  epseff_problem* p = nullptr;
  CHECK(epseff_problem_create("nope", nullptr, nullptr, 0, &p) ==
        EPSEFF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(epseff_last_error()).find("nope") != std::string::npos);

  const char* keys[] = {"alpha"};
  const double values[] = {2.0};
  CHECK(epseff_problem_create("piecewise", keys, values, 1, &p) ==
        EPSEFF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("run, archive access, and CSV export") {
  epseff_problem* p = nullptr;
  REQUIRE(epseff_problem_create("line", nullptr, nullptr, 0, &p) == EPSEFF_OK);

  const double epsilon[] = {1.0};
  const double delta[] = {0.1};
  epseff_run_config config{};
  config.epsilon = epsilon;
  config.epsilon_len = 1;
  config.delta = delta;
  config.delta_len = 1;
  config.delta_star = -1.0;
  config.mode = EPSEFF_MODE_IMAGE;
  config.generator = EPSEFF_GEN_UNIFORM_BOX;
  config.batch_size = 1;
  config.seed = 3;
  config.budget = 10000;

  epseff_archive* archive = nullptr;
  epseff_run_summary summary{};
  double image_min = 0.0;
  double image_max = 0.0;
  REQUIRE(epseff_run(p, &config, &archive, &summary, &image_min, &image_max) ==
          EPSEFF_OK);
  CHECK(summary.total_feasible == 10000);
  CHECK(summary.total_accepted - summary.total_removed == summary.final_archive_size);
  CHECK(image_min >= 0.0);
  CHECK(image_max <= 5.0);

  size_t size = 0;
  CHECK(epseff_archive_size(archive, &size) == EPSEFF_OK);
  CHECK(size == summary.final_archive_size);
  CHECK(size >= 5);

  double x = 0.0;
  double y = 0.0;
  uint64_t birth = 0;
  for (size_t i = 0; i < size; ++i) {
    CHECK(epseff_archive_entry(archive, i, &x, &y, &birth) == EPSEFF_OK);
    CHECK(x == y);          // identity objective
    CHECK(x <= 1.2 + 1e-9); // contained in the widened efficient set
  }
  CHECK(epseff_archive_entry(archive, size, &x, &y, nullptr) ==
        EPSEFF_ERR_INVALID_ARGUMENT);

  int ok = 0;
  CHECK(epseff_archive_check_invariants(archive, &ok) == EPSEFF_OK);
  CHECK(ok == 1);
  size_t nondominated = 0;
  CHECK(epseff_archive_nondominated_count(archive, &nondominated) == EPSEFF_OK);
  CHECK(nondominated >= 1);

  const std::string csv = temp_path("epseff_capi_archive.csv");
  CHECK(epseff_archive_save_csv(archive, csv.c_str()) == EPSEFF_OK);

  epseff_pointset* loaded = nullptr;
  REQUIRE(epseff_pointset_load_csv(csv.c_str(), &loaded) == EPSEFF_OK);
  size_t rows = 0;
  CHECK(epseff_pointset_size(loaded, &rows) == EPSEFF_OK);
  CHECK(rows == size);
  size_t ln = 0;
  size_t lk = 0;
  CHECK(epseff_pointset_dims(loaded, &ln, &lk) == EPSEFF_OK);
  CHECK(ln == 1);
  CHECK(lk == 1);
  double lx = -1.0;
  double ly = -1.0;
  CHECK(epseff_pointset_row(loaded, 0, &lx, &ly) == EPSEFF_OK);
  CHECK(epseff_archive_entry(archive, 0, &x, &y, nullptr) == EPSEFF_OK);
  CHECK(lx == x);
  CHECK(ly == y);

  epseff_pointset_free(loaded);
  std::remove(csv.c_str());
  epseff_archive_free(archive);
  epseff_problem_free(p);
}

TEST_CASE("manual archive updates through the C API") {
  const double epsilon[] = {1.0};
  const double delta[] = {0.1};
  epseff_archive* archive = nullptr;
  REQUIRE(epseff_archive_create(1, 1, epsilon, delta, 1, -1.0, EPSEFF_MODE_IMAGE,
                                &archive) == EPSEFF_OK);

  const double x1 = 1.2;
  const double y1 = 1.2;
  int accepted = 0;
  CHECK(epseff_archive_offer(archive, &x1, 1, &y1, 1, &accepted) == EPSEFF_OK);
  CHECK(accepted == 1);
  const double x2 = 0.1;
  CHECK(epseff_archive_offer(archive, &x2, 1, &x2, 1, &accepted) == EPSEFF_OK);
  CHECK(accepted == 1);
  const double x3 = 0.15;
  CHECK(epseff_archive_offer(archive, &x3, 1, &x3, 1, &accepted) == EPSEFF_OK);
  CHECK(accepted == 0);
  size_t size = 0;
  CHECK(epseff_archive_size(archive, &size) == EPSEFF_OK);
  CHECK(size == 2);

  const double bad[2] = {0.0, 0.0};
  CHECK(epseff_archive_offer(archive, bad, 2, &y1, 1, &accepted) ==
        EPSEFF_ERR_DIMENSION);
  epseff_archive_free(archive);
}

TEST_CASE("reference sets and metrics through the C API") {
  epseff_problem* p = nullptr;
  REQUIRE(epseff_problem_create("line", nullptr, nullptr, 0, &p) == EPSEFF_OK);
  const double epsilon[] = {1.0};
  const double step[] = {0.01};
  epseff_pointset* ref = nullptr;
  REQUIRE(epseff_reference_set(p, epsilon, 1, step, 1, 0, 0, &ref) == EPSEFF_OK);
  size_t rows = 0;
  CHECK(epseff_pointset_size(ref, &rows) == EPSEFF_OK);
  CHECK(rows == 101);  // grid restriction of [0, 1]

  const double cap_small[] = {1e-9};
  epseff_pointset* too_big = nullptr;
  CHECK(epseff_reference_set(p, epsilon, 1, cap_small, 1, 100, 0, &too_big) ==
        EPSEFF_ERR_SIZE);

  const double b[] = {0.0};
  const double a[] = {1.0, 2.0};
  double d = -1.0;
  CHECK(epseff_semi_dist(b, 1, a, 2, 1, &d) == EPSEFF_OK);
  CHECK(d == 1.0);
  CHECK(epseff_hausdorff(b, 1, a, 2, 1, &d) == EPSEFF_OK);
  CHECK(d == 2.0);
  CHECK(epseff_semi_dist(b, 0, a, 2, 1, &d) == EPSEFF_ERR_INVALID_ARGUMENT);

  double bound = 0.0;
  const double m[] = {0.0};
  const double M[] = {5.0};
  const double delta[] = {0.1};
  CHECK(epseff_bound_image(epsilon, 1, delta, 1, 0.1, m, M, &bound) == EPSEFF_OK);
  CHECK(std::fabs(bound - 13.0) < 1e-9);
  CHECK(epseff_bound_image(epsilon, 1, delta, 1, 0.0, m, M, &bound) ==
        EPSEFF_ERR_DOMAIN);

  const double lower[] = {0.0};
  const double upper[] = {1.0};
  CHECK(epseff_bound_param(0.5, lower, upper, 1, &bound) == EPSEFF_OK);
  CHECK(std::fabs(bound - 3.0) < 1e-12);

  const double grads[] = {1.0, 0.0, 0.0, 1.0};
  double q[2] = {0, 0};
  double alpha[2] = {0, 0};
  CHECK(epseff_min_norm_direction(grads, 2, 2, q, alpha) == EPSEFF_OK);
  CHECK(std::fabs(q[0] - 0.5) < 1e-9);
  CHECK(std::fabs(alpha[0] - 0.5) < 1e-9);

  const double ys[] = {0.0, 2.0, 1.0, 1.0, 2.0, 0.0};
  const double y0[] = {1.0, 1.0};
  const double tol[] = {1.0, 1.0};
  size_t indices[3] = {0, 0, 0};
  size_t count = 3;
  CHECK(epseff_roi_select(ys, 3, 2, y0, tol, indices, &count) == EPSEFF_OK);
  CHECK(count == 3);
  const double tol0[] = {0.0, 0.0};
  count = 3;
  CHECK(epseff_roi_select(ys, 3, 2, y0, tol0, indices, &count) == EPSEFF_OK);
  CHECK(count == 1);
  CHECK(indices[0] == 1);

  size_t dist = 0;
  const double h1[] = {0.0, 1.0, 1.0};
  const double h2[] = {1.0, 1.0, 0.0};
  CHECK(epseff_hamming(h1, h2, 3, &dist) == EPSEFF_OK);
  CHECK(dist == 2);

  epseff_pointset_free(ref);
  epseff_problem_free(p);
}

TEST_CASE("knapsack instance dump through the C API") {
  epseff_problem* p = nullptr;
  const char* keys[] = {"n", "seed", "capacity"};
  const double values[] = {10, 5, 4};
  REQUIRE(epseff_problem_create("knapsack", keys, values, 3, &p) == EPSEFF_OK);
  const std::string path = temp_path("epseff_capi_instance.csv");
  CHECK(epseff_problem_dump_instance_csv(p, path.c_str()) == EPSEFF_OK);
  std::FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f);
  char header[32] = {0};
  REQUIRE(std::fgets(header, sizeof header, f));
  CHECK(std::string(header) == "j,c1,c2,w\n");
  std::fclose(f);
  std::remove(path.c_str());
  epseff_problem_free(p);

  epseff_problem* line = nullptr;
  REQUIRE(epseff_problem_create("line", nullptr, nullptr, 0, &line) == EPSEFF_OK);
  CHECK(epseff_problem_dump_instance_csv(line, path.c_str()) ==
        EPSEFF_ERR_INVALID_ARGUMENT);
  epseff_problem_free(line);
}

TEST_CASE("version and status names") {
  CHECK(std::string(epseff_version()) == "0.1.0");
  CHECK(std::string(epseff_status_name(EPSEFF_OK)) == "ok");
  CHECK(std::string(epseff_status_name(EPSEFF_ERR_DIMENSION)) == "dimension-mismatch");
}
