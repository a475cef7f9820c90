#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "pdlab/pdlab.h"

namespace {

constexpr int kExitGating = 1;
constexpr int kExitUsage = 2;

struct Globals {
  unsigned threads = 1;
  std::uint64_t seed = 20240611;
  bool quiet = false;
  bool timing = false;
};

struct Failure {
  pdl_status status;
};

void check(pdl_status s) {
  if (s != PDL_OK) throw Failure{s};
}

struct GraphDeleter {
  void operator()(pdl_graph* g) const { pdl_graph_free(g); }
};
struct ResultDeleter {
  void operator()(pdl_result* r) const { pdl_result_free(r); }
};
struct TraceDeleter {
  void operator()(pdl_trace* t) const { pdl_trace_free(t); }
};
struct ReportDeleter {
  void operator()(pdl_report* r) const { pdl_report_free(r); }
};
using GraphPtr = std::unique_ptr<pdl_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<pdl_result, ResultDeleter>;
using TracePtr = std::unique_ptr<pdl_trace, TraceDeleter>;
using ReportPtr = std::unique_ptr<pdl_report, ReportDeleter>;

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  pdl_string_free(s);
  return out;
}

GraphPtr load(const std::string& source) {
  pdl_graph* g = nullptr;
  check(pdl_graph_parse(source.c_str(), &g));
  return GraphPtr(g);
}

std::string print_trace(const pdl_graph* g, const char* mode, const std::string& set, const std::string& format) {
  pdl_trace* t = nullptr;
  check(pdl_trace_run(g, mode, set.c_str(), &t));
  TracePtr trace(t);
  char* text = nullptr;
  check(pdl_trace_render(trace.get(), format.c_str(), &text));
  return take(text);
}

pdl_harness_options harness(const Globals& g, std::size_t max_n) {
  return pdl_harness_options{max_n, g.threads, g.seed};
}

int emit_report(pdl_report* raw, const std::string& format, const Globals& g) {
  ReportPtr report(raw);
  char* text = nullptr;
  check(pdl_report_render(report.get(), format.c_str(), g.timing, g.quiet, &text));
  std::cout << take(text);
  return pdl_report_gating_failed(report.get()) ? kExitGating : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power domination and zero forcing laboratory", "pdlab-cli"};
  app.set_version_flag("--version", std::string(pdl_version()));
  app.require_subcommand(1);

  Globals globals;
  app.add_option("--threads", globals.threads, "Worker threads for solvers and suites")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--seed", globals.seed, "Seed for random corpora");
  app.add_flag("--quiet", globals.quiet, "Print summaries only");
  app.add_flag("--timing", globals.timing, "Report timings (output is no longer bit-stable)");

  std::string invariant, source, set, format, kind, out_format = "g6", trace_format = "text", scan_name, g6_file;
  std::vector<std::string> suites;
  std::size_t max_n = 0;
  bool witness = false, want_trace = false, prune = false, list = false;

  auto* compute = app.add_subcommand("compute", "Compute an invariant with an exact solver");
  compute->add_option("invariant", invariant, "gamma-p, zf, gamma, edge-gamma, path-cover or spider")->required();
  compute->add_option("source", source, "Graph source expression")->required();
  compute->add_flag("--witness", witness, "Print the witness on a second line");
  compute->add_flag("--trace", want_trace, "Print the propagation trace of the witness (gamma-p, zf)");
  compute->add_flag("--prune", prune, "Skip vertices with dominated closed neighborhoods (gamma, gamma-p)");

  auto* closure = app.add_subcommand("closure", "Zero forcing closure of a vertex set");
  auto* monitor = app.add_subcommand("monitor", "Power domination monitoring from a vertex set");
  for (auto* sub : {closure, monitor}) {
    sub->add_option("source", source, "Graph source expression")->required();
    sub->add_option("--set", set, "Comma-separated vertex ids")->required();
    sub->add_option("--format", trace_format, "text or dot")->check(CLI::IsMember({"text", "dot"}));
  }

  auto* transform = app.add_subcommand("transform", "Apply a transform and emit the result");
  transform->add_option("kind", kind, "mu, shadow, central or middle")
      ->required()
      ->check(CLI::IsMember({"mu", "shadow", "central", "middle"}));
  transform->add_option("source", source, "Graph source expression")->required();
  transform->add_option("--out", out_format, "g6, dot or edges")->check(CLI::IsMember({"g6", "dot", "edges"}));

  auto* info = app.add_subcommand("info", "Structural summary of a graph");
  info->add_option("source", source, "Graph source expression")->required();

  auto* verify = app.add_subcommand("verify", "Run theorem verification suites");
  verify->add_option("--suite", suites, "Suite id, 'gating' or 'all' (repeatable, comma lists allowed)")
      ->delimiter(',');
  verify->add_flag("--list", list, "List the registered suites");
  verify->add_option("--max-n", max_n, "Override each suite's order bound")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  auto* scan = app.add_subcommand("scan", "Scan a graph stream against a relation");
  scan->add_option("scan", scan_name, "conjecture, sandwich or small-order")
      ->required()
      ->check(CLI::IsMember({"conjecture", "sandwich", "small-order"}));
  scan->add_option("--g6", g6_file, "File with one graph6 line per graph")->check(CLI::ExistingFile);
  scan->add_option("--max-n", max_n, "Largest census order of the default corpus")->check(CLI::PositiveNumber);
  scan->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (format.empty()) format = "text";

  try {
    if (compute->parsed()) {
      GraphPtr g = load(source);
      pdl_options opts{globals.threads, prune ? 1 : 0};
      pdl_result* raw = nullptr;
      check(pdl_compute(g.get(), invariant.c_str(), &opts, &raw));
      ResultPtr result(raw);
      std::cout << pdl_result_value(result.get()) << "\n";
      char* w = nullptr;
      check(pdl_result_witness(result.get(), &w));
      const std::string wit = take(w);
      if (witness) std::cout << wit << "\n";
      if (want_trace) {
        if (invariant == "gamma-p")
          std::cout << print_trace(g.get(), "monitor", wit, "text");
        else if (invariant == "zf")
          std::cout << print_trace(g.get(), "closure", wit, "text");
        else
          std::cerr << "note: --trace applies to gamma-p and zf only\n";
      }
      if (globals.timing)
        std::cerr << "tested=" << pdl_result_tested(result.get()) << " millis=" << pdl_result_millis(result.get())
                  << "\n";
      return 0;
    }
    if (closure->parsed() || monitor->parsed()) {
      GraphPtr g = load(source);
      std::cout << print_trace(g.get(), closure->parsed() ? "closure" : "monitor", set, trace_format);
      return 0;
    }
    if (transform->parsed()) {
      GraphPtr g = load(source);
      pdl_graph* raw = nullptr;
      check(pdl_graph_transform(g.get(), kind.c_str(), &raw));
      GraphPtr t(raw);
      char* text = nullptr;
      check(pdl_graph_emit(t.get(), out_format.c_str(), &text));
      std::cout << take(text);
      return 0;
    }
    if (info->parsed()) {
      GraphPtr g = load(source);
      char* text = nullptr;
      check(pdl_graph_info(g.get(), &text));
      std::cout << take(text);
      return 0;
    }
    if (verify->parsed()) {
      if (list) {
        char* text = nullptr;
        check(pdl_suite_list(&text));
        std::cout << take(text);
        return 0;
      }
      if (suites.empty()) {
        std::cerr << "error: verify needs --suite (or --list)\n";
        return kExitUsage;
      }
      std::string joined;
      for (const auto& s : suites) joined += (joined.empty() ? "" : ",") + s;
      const auto opts = harness(globals, max_n);
      pdl_report* raw = nullptr;
      check(pdl_verify(joined.c_str(), &opts, &raw));
      return emit_report(raw, format, globals);
    }
    if (scan->parsed()) {
      const auto opts = harness(globals, max_n);
      pdl_report* raw = nullptr;
      check(pdl_scan(scan_name.c_str(), g6_file.empty() ? nullptr : g6_file.c_str(), &opts, &raw));
      return emit_report(raw, format, globals);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << pdl_status_name(f.status) << ": " << pdl_last_error() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
