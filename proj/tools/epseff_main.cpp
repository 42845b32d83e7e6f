/**
 * @file epseff_main.cpp
 * @brief Command-line front end. Subcommands: run, reference, metrics,
 *        bound, roi. Talks to the library exclusively through the C API.
 */

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "epseff.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(epseff_status status, const std::string& context) {
  if (status != EPSEFF_OK) {
    throw CliError(context + ": " + epseff_status_name(status) + ": " +
                   epseff_last_error());
  }
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string field =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw CliError(flag + ": expected a comma-separated list of numbers, got '" +
                     text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

struct ProblemHandle {
  epseff_problem* p = nullptr;
  ~ProblemHandle() { epseff_problem_free(p); }
};

struct ArchiveHandle {
  epseff_archive* a = nullptr;
  ~ArchiveHandle() { epseff_archive_free(a); }
};

struct PointsetHandle {
  epseff_pointset* ps = nullptr;
  ~PointsetHandle() { epseff_pointset_free(ps); }
};

void create_problem(const std::string& name, const std::vector<std::string>& params,
                    ProblemHandle& out) {
  std::vector<std::string> keys;
  std::vector<double> values;
  for (const auto& kv : params) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CliError("--param expects key=value, got '" + kv + "'");
    }
    keys.push_back(kv.substr(0, eq));
    values.push_back(parse_list(kv.substr(eq + 1), "--param " + kv).front());
  }
  std::vector<const char*> key_ptrs;
  for (const auto& k : keys) key_ptrs.push_back(k.c_str());
  check(epseff_problem_create(name.c_str(), key_ptrs.data(), values.data(),
                              key_ptrs.size(), &out.p),
        "create problem '" + name + "'");
}

std::vector<double> flatten_pointset_images(const epseff_pointset* ps) {
  std::size_t rows = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  check(epseff_pointset_size(ps, &rows), "pointset size");
  check(epseff_pointset_dims(ps, &n, &k), "pointset dims");
  std::vector<double> x(n);
  std::vector<double> flat(rows * k);
  for (std::size_t r = 0; r < rows; ++r) {
    check(epseff_pointset_row(ps, r, n ? x.data() : nullptr, flat.data() + r * k),
          "pointset row");
  }
  return flat;
}

int archive_mode_from_string(const std::string& mode) {
  if (mode == "image" || mode == "image-space") return EPSEFF_MODE_IMAGE;
  if (mode == "param" || mode == "parameter-space") return EPSEFF_MODE_PARAMETER;
  if (mode == "unbounded") return EPSEFF_MODE_UNBOUNDED;
  throw CliError("--mode must be image, param, or unbounded");
}

const char* archive_mode_name(int mode) {
  switch (mode) {
    case EPSEFF_MODE_IMAGE: return "image-space";
    case EPSEFF_MODE_PARAMETER: return "parameter-space";
    default: return "unbounded";
  }
}

int generator_from_string(const std::string& gen) {
  if (gen == "uniform" || gen == "uniform-box") return EPSEFF_GEN_UNIFORM_BOX;
  if (gen == "binary" || gen == "binary-feasible") return EPSEFF_GEN_BINARY_FEASIBLE;
  if (gen == "bitflip" || gen == "bitflip-mutation") return EPSEFF_GEN_BITFLIP_MUTATION;
  throw CliError("--generator must be uniform, binary, or bitflip");
}

const char* generator_name(int gen) {
  switch (gen) {
    case EPSEFF_GEN_UNIFORM_BOX: return "uniform-box";
    case EPSEFF_GEN_BINARY_FEASIBLE: return "binary-feasible";
    default: return "bitflip-mutation";
  }
}

/* ---------------- run ---------------- */

struct RunOptions {
  std::string problem;
  std::vector<std::string> params;
  std::string epsilon;
  std::string delta = "0";
  double delta_star = -1.0;
  std::string mode = "image";
  std::string generator;
  std::uint64_t budget = 0;
  std::uint32_t batch = 1;
  std::uint64_t seed = 1;
  std::string out_archive;
  std::string out_summary;
  std::string dump_instance;
};

int cmd_run(const RunOptions& opt) {
  ProblemHandle problem;
  create_problem(opt.problem, opt.params, problem);

  std::size_t n = 0;
  std::size_t k = 0;
  check(epseff_problem_dims(problem.p, &n, &k), "problem dims");
  int kind = 0;
  check(epseff_problem_kind(problem.p, &kind), "problem kind");

  std::vector<double> epsilon;
  if (opt.epsilon.empty()) {
    epsilon.resize(k);
    check(epseff_problem_default_epsilon(problem.p, epsilon.data()), "default epsilon");
  } else {
    epsilon = parse_list(opt.epsilon, "--epsilon");
  }
  std::vector<double> delta = parse_list(opt.delta, "--delta");

  epseff_run_config config{};
  config.epsilon = epsilon.data();
  config.epsilon_len = epsilon.size();
  config.delta = delta.data();
  config.delta_len = delta.size();
  config.delta_star = opt.delta_star;
  config.mode = archive_mode_from_string(opt.mode);
  config.generator = opt.generator.empty()
                         ? (kind == EPSEFF_VAR_BINARY ? EPSEFF_GEN_BINARY_FEASIBLE
                                                      : EPSEFF_GEN_UNIFORM_BOX)
                         : generator_from_string(opt.generator);
  config.batch_size = opt.batch;
  config.seed = opt.seed;
  config.budget = opt.budget;

  if (!opt.dump_instance.empty()) {
    check(epseff_problem_dump_instance_csv(problem.p, opt.dump_instance.c_str()),
          "dump instance");
  }

  ArchiveHandle archive;
  epseff_run_summary summary{};
  std::vector<double> image_min(k);
  std::vector<double> image_max(k);
  check(epseff_run(problem.p, &config, &archive.a, &summary, image_min.data(),
                   image_max.data()),
        "run");

  if (!opt.out_archive.empty()) {
    check(epseff_archive_save_csv(archive.a, opt.out_archive.c_str()), "write archive");
  }

  std::size_t nondominated = 0;
  check(epseff_archive_nondominated_count(archive.a, &nondominated),
        "nondominated count");

  // effective tolerances, echoed the way the archiver saw them
  std::vector<double> delta_full = delta;
  if (config.mode == EPSEFF_MODE_UNBOUNDED) {
    delta_full.assign(k, 0.0);
  } else if (delta_full.size() == 1 && k > 1) {
    delta_full.assign(k, delta_full.front());
  }
  double delta_star = config.delta_star;
  if (config.mode == EPSEFF_MODE_UNBOUNDED) {
    delta_star = 0.0;
  } else if (delta_star < 0.0) {
    delta_star = *std::min_element(delta_full.begin(), delta_full.end());
  }

  json j;
  j["problem"] = opt.problem;
  j["n"] = n;
  j["k"] = k;
  j["epsilon"] = epsilon;
  j["delta"] = delta_full;
  j["delta_star"] = delta_star;
  j["mode"] = archive_mode_name(config.mode);
  j["generator"] = generator_name(config.generator);
  j["batch_size"] = config.batch_size;
  j["seed"] = config.seed;
  j["budget"] = config.budget;
  j["total_generated"] = summary.total_generated;
  j["total_feasible"] = summary.total_feasible;
  j["total_accepted"] = summary.total_accepted;
  j["total_removed"] = summary.total_removed;
  j["skipped_nonfinite"] = summary.skipped_nonfinite;
  j["final_archive_size"] = summary.final_archive_size;
  j["nondominated_size"] = nondominated;
  j["wall_time_seconds"] = summary.wall_time_seconds;
  j["update_time_seconds"] = summary.update_time_seconds;
  j["image_min"] = image_min;
  j["image_max"] = image_max;

  j["bound"] = nullptr;
  j["bound_kind"] = nullptr;
  j["bound_holds"] = nullptr;
  if (config.mode == EPSEFF_MODE_IMAGE && delta_star > 0.0) {
    double bound = 0.0;
    check(epseff_bound_image(epsilon.data(), k, delta_full.data(), delta_full.size(),
                             delta_star, image_min.data(), image_max.data(), &bound),
          "bound");
    j["bound"] = bound;
    j["bound_kind"] = "image";
    j["bound_holds"] = static_cast<double>(summary.final_archive_size) <= bound;
  } else if (config.mode == EPSEFF_MODE_PARAMETER && delta_star > 0.0) {
    std::vector<double> lower(n);
    std::vector<double> upper(n);
    check(epseff_problem_domain(problem.p, lower.data(), upper.data()), "domain");
    double bound = 0.0;
    check(epseff_bound_param(delta_star, lower.data(), upper.data(), n, &bound),
          "bound");
    j["bound"] = bound;
    j["bound_kind"] = "parameter";
    j["bound_holds"] = static_cast<double>(summary.final_archive_size) <= bound;
  }

  const std::string text = j.dump(2) + "\n";
  if (opt.out_summary.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::FILE* f = std::fopen(opt.out_summary.c_str(), "w");
    if (!f) throw CliError("cannot open '" + opt.out_summary + "'");
    std::fputs(text.c_str(), f);
    std::fclose(f);
  }
  return 0;
}

/* ---------------- reference ---------------- */

struct ReferenceOptions {
  std::string problem;
  std::vector<std::string> params;
  std::string epsilon;
  std::string step;
  std::size_t cell_cap = 0;
  bool weak = false;
  std::string out;
};

int cmd_reference(const ReferenceOptions& opt) {
  ProblemHandle problem;
  create_problem(opt.problem, opt.params, problem);
  std::size_t n = 0;
  std::size_t k = 0;
  check(epseff_problem_dims(problem.p, &n, &k), "problem dims");

  std::vector<double> epsilon;
  if (opt.epsilon.empty()) {
    epsilon.resize(k);
    check(epseff_problem_default_epsilon(problem.p, epsilon.data()), "default epsilon");
  } else {
    epsilon = parse_list(opt.epsilon, "--epsilon");
  }
  const std::vector<double> steps = parse_list(opt.step, "--step");

  PointsetHandle ref;
  check(epseff_reference_set(problem.p, epsilon.data(), epsilon.size(), steps.data(),
                             steps.size(), opt.cell_cap, opt.weak ? 1 : 0, &ref.ps),
        "reference set");
  check(epseff_pointset_save_csv(ref.ps, opt.out.c_str()), "write reference");

  std::size_t size = 0;
  check(epseff_pointset_size(ref.ps, &size), "pointset size");
  std::printf("reference_size = %zu\n", size);
  return 0;
}

/* ---------------- metrics ---------------- */

struct MetricsOptions {
  std::string archive;
  std::string reference;
  std::string reference_wide;
  double delta = -1.0;
};

int cmd_metrics(const MetricsOptions& opt) {
  PointsetHandle archive;
  PointsetHandle reference;
  check(epseff_pointset_load_csv(opt.archive.c_str(), &archive.ps), "load archive");
  check(epseff_pointset_load_csv(opt.reference.c_str(), &reference.ps), "load reference");

  std::size_t an = 0, ak = 0, rn = 0, rk = 0;
  check(epseff_pointset_dims(archive.ps, &an, &ak), "archive dims");
  check(epseff_pointset_dims(reference.ps, &rn, &rk), "reference dims");
  if (ak != rk) throw CliError("archive and reference have different objective counts");

  const auto a_img = flatten_pointset_images(archive.ps);
  const auto r_img = flatten_pointset_images(reference.ps);
  const std::size_t a_rows = a_img.size() / ak;
  const std::size_t r_rows = r_img.size() / rk;

  double ref_to_arch = 0.0;
  double arch_to_ref = 0.0;
  check(epseff_semi_dist(r_img.data(), r_rows, a_img.data(), a_rows, ak, &ref_to_arch),
        "semi_dist");
  check(epseff_semi_dist(a_img.data(), a_rows, r_img.data(), r_rows, ak, &arch_to_ref),
        "semi_dist");
  std::printf("dist_reference_to_archive = %.17g\n", ref_to_arch);
  std::printf("dist_archive_to_reference = %.17g\n", arch_to_ref);
  std::printf("hausdorff = %.17g\n", std::max(ref_to_arch, arch_to_ref));

  if (!opt.reference_wide.empty()) {
    if (opt.delta < 0.0) {
      throw CliError("--delta is required alongside --reference-wide to report D");
    }
    PointsetHandle wide;
    check(epseff_pointset_load_csv(opt.reference_wide.c_str(), &wide.ps), "load wide");
    std::size_t wn = 0, wk = 0;
    check(epseff_pointset_dims(wide.ps, &wn, &wk), "wide dims");
    if (wk != rk) throw CliError("wide reference has a different objective count");
    const auto w_img = flatten_pointset_images(wide.ps);
    double wide_to_ref = 0.0;
    check(epseff_semi_dist(w_img.data(), w_img.size() / wk, r_img.data(), r_rows, rk,
                           &wide_to_ref),
          "semi_dist");
    std::printf("dist_wide_to_reference = %.17g\n", wide_to_ref);
    std::printf("D = %.17g\n", std::max(opt.delta, wide_to_ref));
  }
  return 0;
}

/* ---------------- bound ---------------- */

struct BoundOptions {
  std::string space = "image";
  std::string epsilon;
  std::string delta = "0";
  double delta_star = -1.0;
  std::string image_min;
  std::string image_max;
  std::string lower;
  std::string upper;
};

int cmd_bound(const BoundOptions& opt) {
  double bound = 0.0;
  if (opt.space == "image") {
    const auto epsilon = parse_list(opt.epsilon, "--epsilon");
    auto delta = parse_list(opt.delta, "--delta");
    const auto m = parse_list(opt.image_min, "--image-min");
    const auto M = parse_list(opt.image_max, "--image-max");
    const double delta_star =
        opt.delta_star < 0.0 ? *std::min_element(delta.begin(), delta.end())
                             : opt.delta_star;
    check(epseff_bound_image(epsilon.data(), epsilon.size(), delta.data(), delta.size(),
                             delta_star, m.data(), M.data(), &bound),
          "bound");
  } else if (opt.space == "param" || opt.space == "parameter") {
    const auto lower = parse_list(opt.lower, "--lower");
    const auto upper = parse_list(opt.upper, "--upper");
    if (lower.size() != upper.size()) throw CliError("--lower/--upper length mismatch");
    check(epseff_bound_param(opt.delta_star, lower.data(), upper.data(), lower.size(),
                             &bound),
          "bound");
  } else {
    throw CliError("--space must be image or param");
  }
  std::printf("%.17g\n", bound);
  return 0;
}

/* ---------------- roi ---------------- */

struct RoiOptions {
  std::string archive;
  std::string y0;
  std::string tol;
  std::string out;
};

int cmd_roi(const RoiOptions& opt) {
  PointsetHandle archive;
  check(epseff_pointset_load_csv(opt.archive.c_str(), &archive.ps), "load archive");
  std::size_t n = 0, k = 0, rows = 0;
  check(epseff_pointset_dims(archive.ps, &n, &k), "archive dims");
  check(epseff_pointset_size(archive.ps, &rows), "archive size");

  const auto y0 = parse_list(opt.y0, "--y0");
  const auto tol = parse_list(opt.tol, "--tol");
  if (y0.size() != k || tol.size() != k) {
    throw CliError("--y0 and --tol must have " + std::to_string(k) + " entries");
  }

  const auto images = flatten_pointset_images(archive.ps);
  std::vector<std::size_t> indices(rows);
  std::size_t count = rows;
  check(epseff_roi_select(images.data(), rows, k, y0.data(), tol.data(), indices.data(),
                          &count),
        "roi");

  std::FILE* f = stdout;
  if (!opt.out.empty()) {
    f = std::fopen(opt.out.c_str(), "w");
    if (!f) throw CliError("cannot open '" + opt.out + "'");
  }
  for (std::size_t i = 0; i < n; ++i) std::fprintf(f, "x%zu,", i + 1);
  for (std::size_t i = 0; i < k; ++i) {
    std::fprintf(f, "f%zu%s", i + 1, i + 1 == k ? "\n" : ",");
  }
  std::vector<double> x(n);
  std::vector<double> y(k);
  for (std::size_t idx = 0; idx < count; ++idx) {
    check(epseff_pointset_row(archive.ps, indices[idx], n ? x.data() : nullptr, y.data()),
          "pointset row");
    for (std::size_t i = 0; i < n; ++i) std::fprintf(f, "%.17g,", x[i]);
    for (std::size_t i = 0; i < k; ++i) {
      std::fprintf(f, "%.17g%s", y[i], i + 1 == k ? "\n" : ",");
    }
  }
  if (f != stdout) std::fclose(f);
  std::fprintf(stderr, "roi_size = %zu\n", count);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-size representations of epsilon-efficient solution sets"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Run a seeded stochastic search and archive it");
  run->set_config("--config");
  run->add_option("--problem", run_opt.problem, "Problem name")->required();
  run->add_option("--param", run_opt.params, "Problem parameter key=value (repeatable)");
  run->add_option("--epsilon", run_opt.epsilon,
                  "Comma list of k tolerances (default: problem-specific)");
  run->add_option("--delta", run_opt.delta, "Discretization, scalar or comma list");
  run->add_option("--delta-star", run_opt.delta_star,
                  "Exclusion radius (default: min delta)");
  run->add_option("--mode", run_opt.mode, "image, param, or unbounded");
  run->add_option("--generator", run_opt.generator,
                  "uniform, binary, or bitflip (default by problem kind)");
  run->add_option("--budget", run_opt.budget, "Feasible evaluated points to offer")
      ->required();
  run->add_option("--batch", run_opt.batch, "Batch size per archiver call");
  run->add_option("--seed", run_opt.seed, "RNG seed");
  run->add_option("--out-archive", run_opt.out_archive, "Archive CSV path");
  run->add_option("--out-summary", run_opt.out_summary,
                  "Summary JSON path (default: stdout)");
  run->add_option("--dump-instance", run_opt.dump_instance,
                  "Write the knapsack instance CSV here");

  ReferenceOptions ref_opt;
  auto* ref = app.add_subcommand("reference", "Brute-force grid reference set");
  ref->set_config("--config");
  ref->add_option("--problem", ref_opt.problem, "Problem name")->required();
  ref->add_option("--param", ref_opt.params, "Problem parameter key=value (repeatable)");
  ref->add_option("--epsilon", ref_opt.epsilon,
                  "Comma list of k tolerances (default: problem-specific)");
  ref->add_option("--step", ref_opt.step, "Grid step, scalar or comma list")->required();
  ref->add_option("--cell-cap", ref_opt.cell_cap, "Grid size cap (default 250000)");
  ref->add_flag("--weak", ref_opt.weak, "Weakly efficient notion");
  ref->add_option("--out", ref_opt.out, "Reference CSV path")->required();

  MetricsOptions met_opt;
  auto* met = app.add_subcommand("metrics", "Set distances between archive and reference");
  met->set_config("--config");
  met->add_option("--archive", met_opt.archive, "Archive CSV")->required();
  met->add_option("--reference", met_opt.reference, "Reference CSV")->required();
  met->add_option("--reference-wide", met_opt.reference_wide,
                  "Reference CSV at epsilon+2*delta, enables the D report");
  met->add_option("--delta", met_opt.delta, "Delta used for the D report");

  BoundOptions bnd_opt;
  auto* bnd = app.add_subcommand("bound", "Archive cardinality bound");
  bnd->set_config("--config");
  bnd->add_option("--space", bnd_opt.space, "image or param");
  bnd->add_option("--epsilon", bnd_opt.epsilon, "Comma list of k tolerances");
  bnd->add_option("--delta", bnd_opt.delta, "Discretization, scalar or comma list");
  bnd->add_option("--delta-star", bnd_opt.delta_star, "Exclusion radius");
  bnd->add_option("--image-min", bnd_opt.image_min, "Image box lower corner");
  bnd->add_option("--image-max", bnd_opt.image_max, "Image box upper corner");
  bnd->add_option("--lower", bnd_opt.lower, "Parameter box lower corner");
  bnd->add_option("--upper", bnd_opt.upper, "Parameter box upper corner");

  RoiOptions roi_opt;
  auto* roi = app.add_subcommand("roi", "Region-of-interest query on an archive CSV");
  roi->set_config("--config");
  roi->add_option("--archive", roi_opt.archive, "Archive CSV")->required();
  roi->add_option("--y0", roi_opt.y0, "Center objective vector")->required();
  roi->add_option("--tol", roi_opt.tol, "Per-objective tolerances")->required();
  roi->add_option("--out", roi_opt.out, "Output CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opt);
    if (ref->parsed()) return cmd_reference(ref_opt);
    if (met->parsed()) return cmd_metrics(met_opt);
    if (bnd->parsed()) return cmd_bound(bnd_opt);
    if (roi->parsed()) return cmd_roi(roi_opt);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "epseff: error: %s\n", e.what());
    return 1;
  }
  return 0;
}
