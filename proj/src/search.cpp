#include "search.hpp"

#include <chrono>
#include <iostream>
#include <limits>
#include <memory>
#include <stdexcept>

#include "generators.hpp"

namespace epseff {

const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::UniformBox: return "uniform-box";
    case GeneratorKind::BinaryFeasible: return "binary-feasible";
    case GeneratorKind::BitflipMutation: return "bitflip-mutation";
  }
  return "?";
}

GeneratorKind generator_kind_from_string(const std::string& s) {
  if (s == "uniform-box" || s == "uniform") return GeneratorKind::UniformBox;
  if (s == "binary-feasible" || s == "binary") return GeneratorKind::BinaryFeasible;
  if (s == "bitflip-mutation" || s == "bitflip") return GeneratorKind::BitflipMutation;
  throw std::invalid_argument("unknown generator kind: " + s);
}

namespace {

class Clock {
 public:
  using Instant = std::chrono::steady_clock::time_point;
  static Instant now() { return std::chrono::steady_clock::now(); }
  static double seconds_since(Instant t0) {
    return std::chrono::duration<double>(now() - t0).count();
  }
};

constexpr std::uint64_t kMaxNonFiniteSkips = 1000000;

}  // namespace

RunResult run(const Problem& problem, const GeneratorSpec& generator,
              const ArchiverConfig& archiver, std::uint64_t budget) {
  if (budget < 1) throw std::invalid_argument("run: budget must be >= 1");
  if (generator.batch_size < 1) {
    throw std::invalid_argument("run: batch_size must be >= 1");
  }
  if (archiver.settings.k() != problem.k) {
    throw std::invalid_argument("run: tolerance settings dimension does not match problem");
  }
  const bool binary_kind = generator.kind != GeneratorKind::UniformBox;
  if (binary_kind != (problem.kind == VariableKind::Binary)) {
    throw std::invalid_argument(std::string("run: generator '") +
                                to_string(generator.kind) +
                                "' is incompatible with problem '" + problem.name + "'");
  }

  const auto t_start = Clock::now();
  RunResult result;
  result.archive = make_archive(archiver);
  RunSummary& s = result.summary;
  s.problem = problem.name;
  s.seed = generator.seed;
  s.budget = budget;
  s.batch_size = generator.batch_size;
  s.generator = generator.kind;
  s.settings = result.archive.settings;
  s.mode = result.archive.mode;
  s.image_min.assign(problem.k, std::numeric_limits<double>::infinity());
  s.image_max.assign(problem.k, -std::numeric_limits<double>::infinity());

  std::unique_ptr<UniformBoxSampler> uniform;
  std::unique_ptr<BinaryFeasibleSampler> binary;
  std::unique_ptr<Rng> mutation_rng;
  std::vector<double> weights;
  double capacity = 0.0;
  if (generator.kind == GeneratorKind::UniformBox) {
    uniform = std::make_unique<UniformBoxSampler>(problem.domain, problem.constraints,
                                                  generator.seed);
  } else {
    weights = problem.weights.empty() ? std::vector<double>(problem.n, 1.0)
                                      : problem.weights;
    capacity = problem.weights.empty() ? static_cast<double>(problem.n)
                                       : problem.capacity;
    binary = std::make_unique<BinaryFeasibleSampler>(weights, capacity, generator.seed);
    if (generator.kind == GeneratorKind::BitflipMutation) {
      mutation_rng = std::make_unique<Rng>(generator.seed ^ 0x9e3779b97f4a7c15ull);
    }
  }

  std::vector<Candidate> batch;
  batch.reserve(generator.batch_size);
  std::uint64_t offered = 0;
  std::uint64_t iteration = 0;
  double update_seconds = 0.0;

  while (offered < budget) {
    const std::uint64_t want =
        std::min<std::uint64_t>(generator.batch_size, budget - offered);
    batch.clear();
    while (batch.size() < want) {
      DecisionVector x;
      if (uniform) {
        x = uniform->next();
      } else if (generator.kind == GeneratorKind::BitflipMutation &&
                 !result.archive.empty()) {
        const auto& parent =
            result.archive.entries[mutation_rng->below(result.archive.size())].x;
        x = bitflip_mutate(parent, weights, capacity, *mutation_rng);
        s.total_generated += 1;
      } else {
        x = binary->next();
      }
      ObjectiveVector y = problem.evaluate(x);
      if (!all_finite(y)) {
        ++s.skipped_nonfinite;
        if (s.skipped_nonfinite <= 5) {
          std::clog << "epseff: warning: non-finite objective value at a "
                    << problem.name << " candidate, skipping\n";
        }
        if (s.skipped_nonfinite >= kMaxNonFiniteSkips) {
          throw std::runtime_error("run: too many non-finite evaluations");
        }
        continue;
      }
      for (std::size_t i = 0; i < problem.k; ++i) {
        s.image_min[i] = std::min(s.image_min[i], y[i]);
        s.image_max[i] = std::max(s.image_max[i], y[i]);
      }
      batch.push_back(Candidate{std::move(x), std::move(y)});
    }

    const auto t_update = Clock::now();
    const UpdateStats stats = archive_update(result.archive, batch, iteration);
    update_seconds += Clock::seconds_since(t_update);
    offered += stats.offered;
    s.total_accepted += stats.accepted;
    s.total_removed += stats.removed;
    ++iteration;
  }

  s.total_feasible = offered;
  s.total_generated += uniform ? uniform->total_draws()
                               : (binary ? binary->total_draws() : 0);
  s.final_archive_size = result.archive.size();
  s.update_time_seconds = update_seconds;
  s.wall_time_seconds = Clock::seconds_since(t_start);
  return result;
}

}  // namespace epseff
