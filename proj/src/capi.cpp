/**
 * @file capi.cpp
 * @brief extern "C" layer: opaque handles over the C++ core, exceptions
 *        mapped to status codes, thread-local error messages.
 */

#include "epseff.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "archiver.hpp"
#include "csv.hpp"
#include "dominance.hpp"
#include "metrics.hpp"
#include "problems.hpp"
#include "search.hpp"
#include "types.hpp"

struct epseff_problem {
  epseff::Problem impl;
};

struct epseff_archive {
  epseff::Archive impl;
  std::size_t n = 0;  // fixed decision dimension
};

struct epseff_pointset {
  epseff::PointSet impl;
};

namespace {

thread_local std::string g_last_error = "";

epseff_status fail(epseff_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

epseff_status from_exception() {
  try {
    throw;
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    const bool dims = what.find("dimension") != std::string::npos ||
                      what.find("mismatch") != std::string::npos ||
                      what.find("length") != std::string::npos;
    return fail(dims ? EPSEFF_ERR_DIMENSION : EPSEFF_ERR_INVALID_ARGUMENT, what);
  } catch (const std::domain_error& e) {
    return fail(EPSEFF_ERR_DOMAIN, e.what());
  } catch (const std::length_error& e) {
    return fail(EPSEFF_ERR_SIZE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(EPSEFF_ERR_RUNTIME, "out of memory");
  } catch (const std::exception& e) {
    return fail(EPSEFF_ERR_RUNTIME, e.what());
  } catch (...) {
    return fail(EPSEFF_ERR_RUNTIME, "unknown error");
  }
}

epseff_status require(bool condition, const char* message) {
  return condition ? EPSEFF_OK : fail(EPSEFF_ERR_INVALID_ARGUMENT, message);
}

std::vector<double> make_vec(const double* data, std::size_t len) {
  return std::vector<double>(data, data + len);
}

epseff_status build_settings_and_mode(const double* epsilon, std::size_t k,
                                      const double* delta, std::size_t delta_len,
                                      double delta_star, int mode,
                                      epseff::ArchiverConfig& out) {
  if (epseff_status s = require(epsilon && k > 0, "epsilon is required"); s) return s;
  if (mode < 0 || mode > 2) return fail(EPSEFF_ERR_INVALID_ARGUMENT, "bad archive mode");
  const auto archive_mode = static_cast<epseff::ArchiveMode>(mode);
  if (archive_mode == epseff::ArchiveMode::Unbounded) {
    out = epseff::ArchiverConfig::unbounded(make_vec(epsilon, k));
    return EPSEFF_OK;
  }
  if (epseff_status s = require(delta && delta_len > 0, "delta is required"); s) return s;
  out.settings = epseff::ToleranceSettings::make(
      make_vec(epsilon, k), make_vec(delta, delta_len), delta_star);
  out.mode = archive_mode;
  return EPSEFF_OK;
}

std::vector<epseff::ObjectiveVector> rows_of(const double* data, std::size_t rows,
                                             std::size_t k) {
  std::vector<epseff::ObjectiveVector> out;
  out.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    out.emplace_back(data + r * k, data + (r + 1) * k);
  }
  return out;
}

}  // namespace

extern "C" {

const char* epseff_version(void) { return "0.1.0"; }

const char* epseff_last_error(void) { return g_last_error.c_str(); }

const char* epseff_status_name(epseff_status status) {
  switch (status) {
    case EPSEFF_OK: return "ok";
    case EPSEFF_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case EPSEFF_ERR_DIMENSION: return "dimension-mismatch";
    case EPSEFF_ERR_DOMAIN: return "domain-error";
    case EPSEFF_ERR_SIZE: return "size-exceeded";
    case EPSEFF_ERR_IO: return "io-error";
    case EPSEFF_ERR_RUNTIME: return "runtime-error";
  }
  return "unknown";
}

/* ---------------- problems ---------------- */

epseff_status epseff_problem_create(const char* name, const char* const* param_keys,
                                    const double* param_values, size_t nparams,
                                    epseff_problem** out) {
  if (epseff_status s = require(name && out, "name and out are required"); s) return s;
  if (epseff_status s =
          require(nparams == 0 || (param_keys && param_values), "parameter arrays are null");
      s) {
    return s;
  }
  try {
    std::map<std::string, double> params;
    for (size_t i = 0; i < nparams; ++i) params[param_keys[i]] = param_values[i];
    *out = new epseff_problem{epseff::make_problem(name, params)};
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

void epseff_problem_free(epseff_problem* problem) { delete problem; }

epseff_status epseff_problem_name(const epseff_problem* problem, const char** out) {
  if (epseff_status s = require(problem && out, "null argument"); s) return s;
  *out = problem->impl.name.c_str();
  return EPSEFF_OK;
}

epseff_status epseff_problem_dims(const epseff_problem* problem, size_t* n, size_t* k) {
  if (epseff_status s = require(problem && n && k, "null argument"); s) return s;
  *n = problem->impl.n;
  *k = problem->impl.k;
  return EPSEFF_OK;
}

epseff_status epseff_problem_kind(const epseff_problem* problem, int* kind) {
  if (epseff_status s = require(problem && kind, "null argument"); s) return s;
  *kind = problem->impl.kind == epseff::VariableKind::Binary ? EPSEFF_VAR_BINARY
                                                             : EPSEFF_VAR_CONTINUOUS;
  return EPSEFF_OK;
}

epseff_status epseff_problem_domain(const epseff_problem* problem, double* lower,
                                    double* upper) {
  if (epseff_status s = require(problem && lower && upper, "null argument"); s) return s;
  const auto& box = problem->impl.domain;
  std::memcpy(lower, box.lower.data(), box.dim() * sizeof(double));
  std::memcpy(upper, box.upper.data(), box.dim() * sizeof(double));
  return EPSEFF_OK;
}

epseff_status epseff_problem_default_epsilon(const epseff_problem* problem,
                                             double* epsilon) {
  if (epseff_status s = require(problem && epsilon, "null argument"); s) return s;
  const auto& eps = problem->impl.default_epsilon;
  std::memcpy(epsilon, eps.data(), eps.size() * sizeof(double));
  return EPSEFF_OK;
}

epseff_status epseff_problem_evaluate(const epseff_problem* problem, const double* x,
                                      size_t n, double* y, size_t k) {
  if (epseff_status s = require(problem && x && y, "null argument"); s) return s;
  if (n != problem->impl.n || k != problem->impl.k) {
    return fail(EPSEFF_ERR_DIMENSION, "evaluate: dimension mismatch");
  }
  try {
    const auto out = problem->impl.evaluate(make_vec(x, n));
    std::memcpy(y, out.data(), k * sizeof(double));
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_problem_feasible(const epseff_problem* problem, const double* x,
                                      size_t n, int* feasible) {
  if (epseff_status s = require(problem && x && feasible, "null argument"); s) return s;
  if (n != problem->impl.n) return fail(EPSEFF_ERR_DIMENSION, "feasible: dimension mismatch");
  try {
    *feasible = problem->impl.feasible(make_vec(x, n)) ? 1 : 0;
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_problem_has_gradient(const epseff_problem* problem, int* available) {
  if (epseff_status s = require(problem && available, "null argument"); s) return s;
  *available = problem->impl.has_gradient() ? 1 : 0;
  return EPSEFF_OK;
}

epseff_status epseff_problem_gradient(const epseff_problem* problem, const double* x,
                                      size_t n, double* gradients, size_t k) {
  if (epseff_status s = require(problem && x && gradients, "null argument"); s) return s;
  if (n != problem->impl.n || k != problem->impl.k) {
    return fail(EPSEFF_ERR_DIMENSION, "gradient: dimension mismatch");
  }
  if (!problem->impl.has_gradient()) {
    return fail(EPSEFF_ERR_DOMAIN, "problem has no analytic gradient");
  }
  try {
    const auto g = problem->impl.gradient(make_vec(x, n));
    for (size_t i = 0; i < k; ++i) {
      std::memcpy(gradients + i * n, g[i].data(), n * sizeof(double));
    }
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_problem_dump_instance_csv(const epseff_problem* problem,
                                               const char* path) {
  if (epseff_status s = require(problem && path, "null argument"); s) return s;
  if (problem->impl.name != "knapsack") {
    return fail(EPSEFF_ERR_INVALID_ARGUMENT,
                "instance dump is only defined for knapsack problems");
  }
  try {
    epseff::KnapsackInstance inst;
    inst.n = problem->impl.n;
    inst.capacity = problem->impl.capacity;
    inst.weights = problem->impl.weights;
    inst.c1.resize(inst.n);
    inst.c2.resize(inst.n);
    // profits recovered from single-item evaluations of the stored instance
    epseff::DecisionVector x(inst.n, 0.0);
    for (std::size_t j = 0; j < inst.n; ++j) {
      x[j] = 1.0;
      const auto y = problem->impl.evaluate(x);
      inst.c1[j] = -y[0];
      inst.c2[j] = -y[1];
      x[j] = 0.0;
    }
    epseff::save_knapsack_instance_csv(path, inst);
    return EPSEFF_OK;
  } catch (const std::runtime_error& e) {
    return fail(EPSEFF_ERR_IO, e.what());
  } catch (...) {
    return from_exception();
  }
}

/* ---------------- runs ---------------- */

epseff_status epseff_run(const epseff_problem* problem, const epseff_run_config* config,
                         epseff_archive** out_archive, epseff_run_summary* out_summary,
                         double* image_min, double* image_max) {
  if (epseff_status s = require(problem && config && out_archive, "null argument"); s) {
    return s;
  }
  try {
    epseff::ArchiverConfig archiver;
    if (epseff_status s = build_settings_and_mode(config->epsilon, config->epsilon_len,
                                                  config->delta, config->delta_len,
                                                  config->delta_star, config->mode,
                                                  archiver);
        s) {
      return s;
    }
    if (config->generator < 0 || config->generator > 2) {
      return fail(EPSEFF_ERR_INVALID_ARGUMENT, "bad generator kind");
    }
    epseff::GeneratorSpec gen;
    gen.kind = static_cast<epseff::GeneratorKind>(config->generator);
    gen.batch_size = config->batch_size;
    gen.seed = config->seed;

    auto result = epseff::run(problem->impl, gen, archiver, config->budget);
    if (out_summary) {
      const auto& s = result.summary;
      *out_summary = epseff_run_summary{s.total_generated,   s.total_feasible,
                                        s.total_accepted,    s.total_removed,
                                        s.skipped_nonfinite, s.final_archive_size,
                                        s.wall_time_seconds, s.update_time_seconds};
    }
    if (image_min) {
      std::memcpy(image_min, result.summary.image_min.data(),
                  problem->impl.k * sizeof(double));
    }
    if (image_max) {
      std::memcpy(image_max, result.summary.image_max.data(),
                  problem->impl.k * sizeof(double));
    }
    auto* handle = new epseff_archive{std::move(result.archive), problem->impl.n};
    *out_archive = handle;
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

/* ---------------- archives ---------------- */

epseff_status epseff_archive_create(size_t n, size_t k, const double* epsilon,
                                    const double* delta, size_t delta_len,
                                    double delta_star, int mode, epseff_archive** out) {
  if (epseff_status s = require(out && n > 0, "out and n are required"); s) return s;
  try {
    epseff::ArchiverConfig config;
    if (epseff_status s = build_settings_and_mode(epsilon, k, delta, delta_len,
                                                  delta_star, mode, config);
        s) {
      return s;
    }
    *out = new epseff_archive{epseff::make_archive(config), n};
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

void epseff_archive_free(epseff_archive* archive) { delete archive; }

epseff_status epseff_archive_size(const epseff_archive* archive, size_t* size) {
  if (epseff_status s = require(archive && size, "null argument"); s) return s;
  *size = archive->impl.size();
  return EPSEFF_OK;
}

epseff_status epseff_archive_dims(const epseff_archive* archive, size_t* n, size_t* k) {
  if (epseff_status s = require(archive && n && k, "null argument"); s) return s;
  *n = archive->n;
  *k = archive->impl.settings.k();
  return EPSEFF_OK;
}

epseff_status epseff_archive_offer(epseff_archive* archive, const double* x, size_t n,
                                   const double* y, size_t k, int* accepted) {
  if (epseff_status s = require(archive && x && y, "null argument"); s) return s;
  if (n != archive->n || k != archive->impl.settings.k()) {
    return fail(EPSEFF_ERR_DIMENSION, "offer: dimension mismatch");
  }
  try {
    const epseff::Candidate candidate{make_vec(x, n), make_vec(y, k)};
    const auto stats = epseff::archive_update(archive->impl, {&candidate, 1});
    if (accepted) *accepted = stats.accepted > 0 ? 1 : 0;
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_archive_entry(const epseff_archive* archive, size_t index,
                                   double* x, double* y, uint64_t* birth_iteration) {
  if (epseff_status s = require(archive && x && y, "null argument"); s) return s;
  if (index >= archive->impl.size()) {
    return fail(EPSEFF_ERR_INVALID_ARGUMENT, "entry index out of range");
  }
  const auto& e = archive->impl.entries[index];
  std::memcpy(x, e.x.data(), e.x.size() * sizeof(double));
  std::memcpy(y, e.y.data(), e.y.size() * sizeof(double));
  if (birth_iteration) *birth_iteration = e.birth_iteration;
  return EPSEFF_OK;
}

epseff_status epseff_archive_check_invariants(const epseff_archive* archive, int* ok) {
  if (epseff_status s = require(archive && ok, "null argument"); s) return s;
  try {
    std::string why;
    *ok = epseff::archive_invariants_hold(archive->impl, &why) ? 1 : 0;
    if (!*ok) g_last_error = why;
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_archive_nondominated_count(const epseff_archive* archive,
                                                size_t* count) {
  if (epseff_status s = require(archive && count, "null argument"); s) return s;
  try {
    *count = epseff::nondominated_indices(archive->impl.images()).size();
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_archive_save_csv(const epseff_archive* archive, const char* path) {
  if (epseff_status s = require(archive && path, "null argument"); s) return s;
  try {
    epseff::save_archive_csv(path, archive->impl);
    return EPSEFF_OK;
  } catch (const std::runtime_error& e) {
    return fail(EPSEFF_ERR_IO, e.what());
  } catch (...) {
    return from_exception();
  }
}

/* ---------------- point sets ---------------- */

epseff_status epseff_reference_set(const epseff_problem* problem, const double* epsilon,
                                   size_t k, const double* steps, size_t steps_len,
                                   size_t cell_cap, int weak, epseff_pointset** out) {
  if (epseff_status s = require(problem && epsilon && steps && out, "null argument"); s) {
    return s;
  }
  try {
    const auto ref = epseff::reference_set(
        problem->impl, make_vec(epsilon, k), make_vec(steps, steps_len), cell_cap,
        weak ? epseff::ParetoNotion::WeakEfficient : epseff::ParetoNotion::Efficient);
    auto* handle = new epseff_pointset;
    handle->impl.n = problem->impl.n;
    handle->impl.k = problem->impl.k;
    handle->impl.xs = ref.xs;
    handle->impl.ys = ref.ys;
    *out = handle;
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_pointset_load_csv(const char* path, epseff_pointset** out) {
  if (epseff_status s = require(path && out, "null argument"); s) return s;
  try {
    auto ps = epseff::load_points_csv(path);
    *out = new epseff_pointset{std::move(ps)};
    return EPSEFF_OK;
  } catch (const std::runtime_error& e) {
    return fail(EPSEFF_ERR_IO, e.what());
  } catch (...) {
    return from_exception();
  }
}

void epseff_pointset_free(epseff_pointset* points) { delete points; }

epseff_status epseff_pointset_size(const epseff_pointset* points, size_t* size) {
  if (epseff_status s = require(points && size, "null argument"); s) return s;
  *size = points->impl.size();
  return EPSEFF_OK;
}

epseff_status epseff_pointset_dims(const epseff_pointset* points, size_t* n, size_t* k) {
  if (epseff_status s = require(points && n && k, "null argument"); s) return s;
  *n = points->impl.n;
  *k = points->impl.k;
  return EPSEFF_OK;
}

epseff_status epseff_pointset_row(const epseff_pointset* points, size_t index,
                                  double* x, double* y) {
  if (epseff_status s = require(points && y, "null argument"); s) return s;
  if (index >= points->impl.size()) {
    return fail(EPSEFF_ERR_INVALID_ARGUMENT, "row index out of range");
  }
  if (points->impl.n > 0) {
    if (!x) return fail(EPSEFF_ERR_INVALID_ARGUMENT, "x buffer required");
    std::memcpy(x, points->impl.xs[index].data(), points->impl.n * sizeof(double));
  }
  std::memcpy(y, points->impl.ys[index].data(), points->impl.k * sizeof(double));
  return EPSEFF_OK;
}

epseff_status epseff_pointset_save_csv(const epseff_pointset* points, const char* path) {
  if (epseff_status s = require(points && path, "null argument"); s) return s;
  try {
    epseff::save_points_csv(path, points->impl.xs, points->impl.ys, points->impl.n,
                            points->impl.k);
    return EPSEFF_OK;
  } catch (const std::runtime_error& e) {
    return fail(EPSEFF_ERR_IO, e.what());
  } catch (...) {
    return from_exception();
  }
}

/* ---------------- metrics ---------------- */

epseff_status epseff_semi_dist(const double* b, size_t b_rows, const double* a,
                               size_t a_rows, size_t k, double* out) {
  if (epseff_status s = require(b && a && out && k > 0, "null argument"); s) return s;
  try {
    *out = epseff::semi_dist(rows_of(b, b_rows, k), rows_of(a, a_rows, k));
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_hausdorff(const double* a, size_t a_rows, const double* b,
                               size_t b_rows, size_t k, double* out) {
  if (epseff_status s = require(b && a && out && k > 0, "null argument"); s) return s;
  try {
    *out = epseff::hausdorff(rows_of(a, a_rows, k), rows_of(b, b_rows, k));
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_bound_image(const double* epsilon, size_t k, const double* delta,
                                 size_t delta_len, double delta_star,
                                 const double* image_min, const double* image_max,
                                 double* out) {
  if (epseff_status s =
          require(epsilon && delta && image_min && image_max && out && k > 0,
                  "null argument");
      s) {
    return s;
  }
  try {
    auto d = make_vec(delta, delta_len);
    if (d.size() == 1 && k > 1) d.assign(k, d.front());
    *out = epseff::archive_bound_image(make_vec(epsilon, k), d,
                                       epseff::ObjectiveVector(k, delta_star),
                                       make_vec(image_min, k), make_vec(image_max, k));
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_bound_param(double delta_star, const double* lower,
                                 const double* upper, size_t n, double* out) {
  if (epseff_status s = require(lower && upper && out && n > 0, "null argument"); s) {
    return s;
  }
  try {
    *out = epseff::archive_bound_param(delta_star,
                                       epseff::Box(make_vec(lower, n), make_vec(upper, n)));
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_min_norm_direction(const double* gradients, size_t k, size_t n,
                                        double* q, double* alpha) {
  if (epseff_status s = require(gradients && q && n > 0, "null argument"); s) return s;
  try {
    std::vector<epseff::ObjectiveVector> g;
    g.reserve(k);
    for (size_t i = 0; i < k; ++i) {
      g.emplace_back(gradients + i * n, gradients + (i + 1) * n);
    }
    const auto result = epseff::min_norm_direction(g);
    std::memcpy(q, result.q.data(), n * sizeof(double));
    if (alpha) std::memcpy(alpha, result.alpha.data(), k * sizeof(double));
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_roi_select(const double* ys, size_t rows, size_t k,
                                const double* y0, const double* tol, size_t* indices,
                                size_t* count) {
  if (epseff_status s = require(ys && y0 && tol && count, "null argument"); s) return s;
  try {
    const auto hits = epseff::region_of_interest(rows_of(ys, rows, k),
                                                 make_vec(y0, k), make_vec(tol, k));
    const size_t capacity = indices ? *count : 0;
    *count = hits.size();
    if (!indices) return EPSEFF_OK;
    if (hits.size() > capacity) {
      std::memcpy(indices, hits.data(), capacity * sizeof(size_t));
      return fail(EPSEFF_ERR_SIZE, "index buffer too small");
    }
    std::memcpy(indices, hits.data(), hits.size() * sizeof(size_t));
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

epseff_status epseff_hamming(const double* x1, const double* x2, size_t n, size_t* out) {
  if (epseff_status s = require(x1 && x2 && out, "null argument"); s) return s;
  try {
    *out = epseff::hamming(make_vec(x1, n), make_vec(x2, n));
    return EPSEFF_OK;
  } catch (...) {
    return from_exception();
  }
}

} /* extern "C" */
