#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdlab/graph.hpp"

namespace pdlab {

enum class Verdict { pass, fail };

struct TheoremCase {
  std::string suite;
  /// Source expression (or descriptor) that rebuilds the tested graph.
  std::string family;
  std::string params;
  long long formula = 0;
  long long computed = 0;
  Verdict verdict = Verdict::pass;
  std::chrono::nanoseconds elapsed{0};
};

struct SuiteInfo {
  std::string id;
  bool gating = false;
  /// Default upper bound for the suite's order parameter.
  std::size_t default_max_n = 0;
  std::string summary;
};

struct HarnessOptions {
  /// Overrides each suite's default order bound when set.
  std::optional<std::size_t> max_n;
  unsigned threads = 1;
  std::uint64_t seed = 20240611;
};

struct SuiteRun {
  SuiteInfo info;
  /// Ordered by parameter tuple, independent of completion order.
  std::vector<TheoremCase> cases;
  std::size_t skipped = 0;
  std::vector<std::string> notices;

  [[nodiscard]] std::size_t failures() const;
  [[nodiscard]] bool passed() const { return failures() == 0; }
};

/// Every registered suite, gating suites first.
const std::vector<SuiteInfo>& suite_registry();
std::optional<SuiteInfo> find_suite(const std::string& id);

/// Throws Error(unknown_name) for an unregistered id.
SuiteRun run_suite(const std::string& id, const HarnessOptions& opts = {});

struct ScanFinding {
  /// graph6 of the canonical form when n <= 8, of the graph as given otherwise.
  std::string graph;
  long long lhs = 0;
  long long rhs = 0;
  std::string relation;
  bool agree = true;
};

struct ScanResult {
  std::string scan;
  std::vector<ScanFinding> findings;
  std::size_t skipped = 0;
  std::vector<std::string> notices;
  /// Findings whose failure is a hard error (bound violations, missing
  /// required witnesses) rather than a reportable disagreement.
  std::size_t violations = 0;
};

/// Per graph: gamma_p(M(G)) = gamma'(G) (conjecture) and
/// gamma_p(M(G)) <= gamma'(G) (bound). Only bound failures count as violations.
ScanResult scan_conjecture(const std::vector<Graph>& graphs, const HarnessOptions& opts = {});

/// Per graph: gamma_p(G) <= gamma_p(S(G)) <= 2 gamma_p(G), plus equality for
/// graphs where some minimum PD-set meets the neighbor hypothesis.
ScanResult scan_shadow_sandwich(const std::vector<Graph>& graphs, const HarnessOptions& opts = {});

/// Order <= 5 census has gamma_p = 1; the H-graph is among the order-6
/// graphs with gamma_p = 2; twin-free connected graphs of order <= 7 (or
/// max_n) with gamma_p = 2 are listed.
ScanResult scan_small_order(const HarnessOptions& opts = {});

/// Default graph stream for a scan: the connected census up to max_n
/// (default 5); "sandwich" adds 300 seeded random connected graphs of order
/// 2..9 to the census up to 6.
std::vector<Graph> default_scan_corpus(const std::string& scan, const HarnessOptions& opts);

enum class ReportFormat { text, csv };

struct ReportOptions {
  ReportFormat format = ReportFormat::text;
  /// Fill the millis column; off keeps output bit-stable.
  bool timing = false;
  /// Text only: print summaries without per-case lines.
  bool quiet = false;
};

std::string report(const std::vector<SuiteRun>& runs, const ReportOptions& opts = {});
std::string report_scan(const ScanResult& scan, const ReportOptions& opts = {});

}  // namespace pdlab
