#ifndef KCUT_BENCH_HPP
#define KCUT_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kcut/graph.hpp"
#include "kcut/pipeline.hpp"

namespace kcut {

struct BenchCase {
  std::string name;
  Graph graph;
  int k = 2;
  /// Whether the suite compares against an exact oracle.
  bool with_oracle = true;
};

/// Built-in suites: "small" (n <= 12, brute-force oracle), "planted"
/// (n <= 40, exact branch-and-bound oracle) and "stress" (timing only).
std::vector<BenchCase> bench_suite(const std::string& name, std::uint64_t seed);

struct BenchRow {
  int index = 0;
  std::string name;
  int n = 0;
  Weight m = 0;
  int k = 0;
  Weight pipeline_value = 0;
  std::optional<Weight> oracle_value;
  std::optional<bool> agree;
  std::string method;
  std::string branch;
  bool kt_checks_ok = true;
  double pipeline_ms = 0;
  double oracle_ms = 0;
};

BenchRow run_case(const BenchCase& c, int index, const PipelineConfig& config);

/// Solves each case with the pipeline and, where enabled, the exact oracle.
/// Agreement is judged on cut values recomputed from the raw graph. Rows run
/// on `threads` workers (0: hardware concurrency) and come back in index
/// order.
std::vector<BenchRow> run_bench(const std::vector<BenchCase>& cases,
                                const PipelineConfig& config, int threads = 0);

std::string bench_csv(const std::vector<BenchRow>& rows);
nlohmann::json bench_json(const std::vector<BenchRow>& rows);

}  // namespace kcut

#endif  // KCUT_BENCH_HPP
