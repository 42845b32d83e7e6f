#include "csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace epseff {

namespace {

void write_header(std::FILE* f, std::size_t n, std::size_t k) {
  for (std::size_t i = 0; i < n; ++i) std::fprintf(f, "x%zu,", i + 1);
  for (std::size_t i = 0; i < k; ++i) {
    std::fprintf(f, "f%zu%s", i + 1, i + 1 == k ? "\n" : ",");
  }
}

void write_rows(std::FILE* f, const std::vector<DecisionVector>& xs,
                const std::vector<ObjectiveVector>& ys) {
  for (std::size_t r = 0; r < xs.size(); ++r) {
    const auto& x = xs[r];
    const auto& y = ys[r];
    for (double v : x) std::fprintf(f, "%.17g,", v);
    for (std::size_t i = 0; i < y.size(); ++i) {
      std::fprintf(f, "%.17g%s", y[i], i + 1 == y.size() ? "\n" : ",");
    }
  }
}

class FileHandle {
 public:
  FileHandle(const std::string& path, const char* mode) : f_(std::fopen(path.c_str(), mode)) {
    if (!f_) throw std::runtime_error("cannot open '" + path + "'");
  }
  ~FileHandle() {
    if (f_) std::fclose(f_);
  }
  FileHandle(const FileHandle&) = delete;
  FileHandle& operator=(const FileHandle&) = delete;
  std::FILE* get() { return f_; }

 private:
  std::FILE* f_;
};

[[noreturn]] void parse_fail(const std::string& path, std::size_t line,
                             const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& s, const std::string& path, std::size_t line) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (end[-1] == ' ' || end[-1] == '\t' || end[-1] == '\r')) --end;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    parse_fail(path, line, "not a number: '" + s + "'");
  }
  return value;
}

}  // namespace

void save_points_csv(const std::string& path, const std::vector<DecisionVector>& xs,
                     const std::vector<ObjectiveVector>& ys, std::size_t n,
                     std::size_t k) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("save_points_csv: row count mismatch");
  }
  if (k == 0) throw std::invalid_argument("save_points_csv: k must be >= 1");
  FileHandle f(path, "w");
  write_header(f.get(), n, k);
  write_rows(f.get(), xs, ys);
}

void save_points_csv(const std::string& path, const std::vector<DecisionVector>& xs,
                     const std::vector<ObjectiveVector>& ys) {
  const std::size_t n = xs.empty() ? 0 : xs.front().size();
  const std::size_t k = ys.empty() ? 1 : ys.front().size();
  save_points_csv(path, xs, ys, n, k);
}

void save_archive_csv(const std::string& path, const Archive& archive) {
  std::vector<DecisionVector> xs;
  xs.reserve(archive.size());
  for (const auto& e : archive.entries) xs.push_back(e.x);
  const std::size_t n = xs.empty() ? 0 : xs.front().size();
  save_points_csv(path, xs, archive.images(), n, archive.settings.k());
}

void save_reference_csv(const std::string& path, const ReferenceSet& ref) {
  save_points_csv(path, ref.xs, ref.ys);
}

PointSet load_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) parse_fail(path, 1, "missing header");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  PointSet ps;
  for (const auto& name : split_csv_line(line)) {
    if (name.size() >= 2 && name[0] == 'x' && ps.k == 0) {
      ++ps.n;
    } else if (name.size() >= 2 && name[0] == 'f') {
      ++ps.k;
    } else {
      parse_fail(path, lineno, "unexpected header column '" + name + "'");
    }
  }
  if (ps.k == 0) parse_fail(path, lineno, "header has no f columns");

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != ps.n + ps.k) {
      parse_fail(path, lineno,
                 "expected " + std::to_string(ps.n + ps.k) + " fields, got " +
                     std::to_string(fields.size()));
    }
    DecisionVector x(ps.n);
    ObjectiveVector y(ps.k);
    for (std::size_t i = 0; i < ps.n; ++i) x[i] = parse_double(fields[i], path, lineno);
    for (std::size_t i = 0; i < ps.k; ++i) {
      y[i] = parse_double(fields[ps.n + i], path, lineno);
    }
    ps.xs.push_back(std::move(x));
    ps.ys.push_back(std::move(y));
  }
  return ps;
}

void save_knapsack_instance_csv(const std::string& path,
                                const KnapsackInstance& instance) {
  FileHandle f(path, "w");
  std::fprintf(f.get(), "j,c1,c2,w\n");
  for (std::size_t j = 0; j < instance.n; ++j) {
    std::fprintf(f.get(), "%zu,%.17g,%.17g,%.17g\n", j + 1, instance.c1[j],
                 instance.c2[j], instance.weights[j]);
  }
}

}  // namespace epseff
