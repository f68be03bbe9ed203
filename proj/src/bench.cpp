#include "kcut/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "kcut/error.hpp"
#include "kcut/generators.hpp"
#include "kcut/oracle.hpp"

namespace kcut {
namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt_double(double x) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << x;
  return out.str();
}

}  // namespace

std::vector<BenchCase> bench_suite(const std::string& name,
                                   std::uint64_t seed) {
  std::vector<BenchCase> cases;
  if (name == "small") {
    const int sizes[] = {6, 8, 10, 12};
    const double densities[] = {0.3, 0.5, 0.8};
    int idx = 0;
    for (int n : sizes) {
      for (double p : densities) {
        const int k = 2 + idx % 3;
        const std::uint64_t s = seed * 1000 + idx;
        cases.push_back({"gnp(" + std::to_string(n) + "," +
                             fmt_double(p) + ")#" + std::to_string(s),
                         gnp_graph(n, p, s), k, true});
        ++idx;
      }
    }
    cases.push_back({"cycle(6)", cycle_graph(6), 3, true});
    cases.push_back({"cycle(8)", cycle_graph(8), 2, true});
    cases.push_back({"cliques_bridge(3,2,1)", cliques_bridge_graph(3, 2, 1), 2,
                     true});
    cases.push_back({"cliques_bridge(5,2,1)", cliques_bridge_graph(5, 2, 1), 3,
                     true});
    cases.push_back({"cliques_bridge(4,3,1)", cliques_bridge_graph(4, 3, 1), 3,
                     true});
    return cases;
  }
  if (name == "planted") {
    int idx = 0;
    for (int k : {2, 3}) {
      for (int size : {8, 10, 12}) {
        const std::uint64_t s = seed * 1000 + idx++;
        cases.push_back({"planted(" + std::to_string(k) + "," +
                             std::to_string(size) + ")#" + std::to_string(s),
                         planted_graph(k, size, 0.9, 0.02, 1, s).graph, k,
                         true});
      }
    }
    return cases;
  }
  if (name == "stress") {
    cases.push_back({"gnp(120,0.15)", gnp_graph(120, 0.15, seed), 3, false});
    cases.push_back({"planted(4,25)",
                     planted_graph(4, 25, 0.7, 0.01, 2, seed).graph, 4,
                     false});
    cases.push_back({"cliques_bridge(20,4,2)",
                     cliques_bridge_graph(20, 4, 2), 4, false});
    // Dense enough to take the sparsify branch.
    cases.push_back({"gnp(30,0.95)", gnp_graph(30, 0.95, seed), 3, false});
    return cases;
  }
  fail(ErrorKind::kInvalidArgument, "unknown suite: " + name);
}

BenchRow run_case(const BenchCase& c, int index, const PipelineConfig& config) {
  BenchRow row;
  row.index = index;
  row.name = c.name;
  row.n = c.graph.num_vertices();
  row.m = c.graph.total_weight();
  row.k = c.k;

  auto start = std::chrono::steady_clock::now();
  SolveReport report = min_kcut(c.graph, c.k, config);
  row.pipeline_ms = elapsed_ms(start);
  row.pipeline_value = cut_value(c.graph, report.cut);
  row.method = report.method;
  row.branch = report.branch ? to_string(*report.branch) : "none";
  if (report.partition) row.kt_checks_ok = report.partition->checks.all();

  if (c.with_oracle) {
    start = std::chrono::steady_clock::now();
    KCut oracle = exact_min_kcut(c.graph, c.k, config.oracle_n_limit);
    row.oracle_ms = elapsed_ms(start);
    row.oracle_value = cut_value(c.graph, oracle);
    row.agree = row.pipeline_value == *row.oracle_value &&
                row.pipeline_value == report.value &&
                *row.oracle_value == oracle.value;
  }
  return row;
}

std::vector<BenchRow> run_bench(const std::vector<BenchCase>& cases,
                                const PipelineConfig& config, int threads) {
  std::vector<BenchRow> rows(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = std::min<int>(threads, static_cast<int>(cases.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        rows[i] = run_case(cases[i], static_cast<int>(i), config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "row,instance,n,m,k,pipeline_value,oracle_value,agree,method,branch,"
         "kt_checks,pipeline_ms,oracle_ms\n";
  for (const BenchRow& r : rows) {
    out << r.index << ",\"" << r.name << "\"," << r.n << ',' << r.m << ',' << r.k
        << ',' << r.pipeline_value << ','
        << (r.oracle_value ? std::to_string(*r.oracle_value) : "") << ','
        << (r.agree ? (*r.agree ? "true" : "false") : "") << ',' << r.method
        << ',' << r.branch << ',' << (r.kt_checks_ok ? "ok" : "violated")
        << ',' << fmt_double(r.pipeline_ms) << ',' << fmt_double(r.oracle_ms)
        << '\n';
  }
  return out.str();
}

nlohmann::json bench_json(const std::vector<BenchRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const BenchRow& r : rows) {
    out.push_back({
        {"row", r.index},
        {"instance", r.name},
        {"n", r.n},
        {"m", r.m},
        {"k", r.k},
        {"pipeline_value", r.pipeline_value},
        {"oracle_value",
         r.oracle_value ? nlohmann::json(*r.oracle_value) : nullptr},
        {"agree", r.agree ? nlohmann::json(*r.agree) : nullptr},
        {"method", r.method},
        {"branch", r.branch},
        {"kt_checks_ok", r.kt_checks_ok},
        {"pipeline_ms", r.pipeline_ms},
        {"oracle_ms", r.oracle_ms},
    });
  }
  return out;
}

}  // namespace kcut
