#include "pdlab/pdlab.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <variant>

#include "pdlab/census.hpp"
#include "pdlab/characterizations.hpp"
#include "pdlab/constructors.hpp"
#include "pdlab/error.hpp"
#include "pdlab/forcing.hpp"
#include "pdlab/harness.hpp"
#include "pdlab/io.hpp"
#include "pdlab/solvers.hpp"

struct pdl_graph {
  pdlab::Graph g;
};

struct pdl_result {
  pdlab::InvariantResult r;
};

struct pdl_trace {
  pdlab::Graph g;
  pdlab::PropagationTrace trace;
};

struct pdl_report {
  std::variant<std::vector<pdlab::SuiteRun>, pdlab::ScanResult> data;
};

namespace {

thread_local std::string last_error;

pdl_status to_status(pdlab::ErrorCode code) {
  switch (code) {
    case pdlab::ErrorCode::invalid_argument: return PDL_ERR_INVALID_ARGUMENT;
    case pdlab::ErrorCode::parse: return PDL_ERR_PARSE;
    case pdlab::ErrorCode::cap_exceeded: return PDL_ERR_CAP_EXCEEDED;
    case pdlab::ErrorCode::precondition: return PDL_ERR_PRECONDITION;
    case pdlab::ErrorCode::io: return PDL_ERR_IO;
    case pdlab::ErrorCode::unknown_name: return PDL_ERR_UNKNOWN_NAME;
  }
  return PDL_ERR_INTERNAL;
}

template <class F>
pdl_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return PDL_OK;
  } catch (const pdlab::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return PDL_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw pdlab::Error(pdlab::ErrorCode::invalid_argument, what);
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pdlab::Invariant invariant_from(const std::string& name) {
  using pdlab::Invariant;
  for (Invariant inv : {Invariant::power_domination, Invariant::zero_forcing, Invariant::domination,
                        Invariant::edge_domination, Invariant::path_cover, Invariant::spider})
    if (pdlab::invariant_name(inv) == name) return inv;
  throw pdlab::Error(pdlab::ErrorCode::unknown_name, "unknown invariant '" + name + "'");
}

pdlab::TransformKind transform_from(const std::string& name) {
  using pdlab::TransformKind;
  if (name == "mu" || name == "mycielskian") return TransformKind::mycielskian;
  if (name == "shadow") return TransformKind::shadow;
  if (name == "central") return TransformKind::central;
  if (name == "middle") return TransformKind::middle;
  throw pdlab::Error(pdlab::ErrorCode::unknown_name, "unknown transform '" + name + "'");
}

pdlab::HarnessOptions harness_options(const pdl_harness_options* opts) {
  pdlab::HarnessOptions out;
  if (opts == nullptr) return out;
  if (opts->max_n != 0) out.max_n = opts->max_n;
  out.threads = opts->threads == 0 ? 1 : opts->threads;
  out.seed = opts->seed;
  return out;
}

std::vector<pdlab::Graph> read_g6_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pdlab::Error(pdlab::ErrorCode::io, "cannot open '" + path + "'");
  std::vector<pdlab::Graph> out;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(pdlab::parse_graph6(line));
    } catch (const pdlab::ParseError& e) {
      throw pdlab::Error(pdlab::ErrorCode::parse, path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

extern "C" {

const char* pdl_version(void) { return "1.0.0"; }

const char* pdl_status_name(pdl_status status) {
  switch (status) {
    case PDL_OK: return "ok";
    case PDL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PDL_ERR_PARSE: return "parse error";
    case PDL_ERR_CAP_EXCEEDED: return "cap exceeded";
    case PDL_ERR_PRECONDITION: return "precondition violated";
    case PDL_ERR_IO: return "i/o error";
    case PDL_ERR_UNKNOWN_NAME: return "unknown name";
    case PDL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pdl_last_error(void) { return last_error.c_str(); }

void pdl_string_free(char* s) { delete[] s; }

pdl_status pdl_graph_parse(const char* source, pdl_graph** out) {
  return guarded([&] {
    require(source != nullptr && out != nullptr, "null argument");
    *out = new pdl_graph{pdlab::parse_source(source)};
  });
}

pdl_status pdl_graph_from_edges(size_t n, const uint32_t* endpoints, size_t edge_count, pdl_graph** out) {
  return guarded([&] {
    require(out != nullptr && (edge_count == 0 || endpoints != nullptr), "null argument");
    std::vector<pdlab::Edge> edges;
    for (size_t i = 0; i < edge_count; ++i) edges.push_back({endpoints[2 * i], endpoints[2 * i + 1]});
    *out = new pdl_graph{pdlab::build_graph(n, edges)};
  });
}

pdl_status pdl_graph_transform(const pdl_graph* g, const char* kind, pdl_graph** out) {
  return guarded([&] {
    require(g != nullptr && kind != nullptr && out != nullptr, "null argument");
    *out = new pdl_graph{pdlab::apply_transform(transform_from(kind), g->g)};
  });
}

pdl_status pdl_graph_product(const pdl_graph* a, const pdl_graph* b, pdl_graph** out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = new pdl_graph{pdlab::cartesian_product(a->g, b->g)};
  });
}

size_t pdl_graph_order(const pdl_graph* g) { return g ? g->g.order() : 0; }
size_t pdl_graph_size(const pdl_graph* g) { return g ? g->g.size() : 0; }

pdl_status pdl_graph_emit(const pdl_graph* g, const char* format, char** out) {
  return guarded([&] {
    require(g != nullptr && format != nullptr && out != nullptr, "null argument");
    const std::string f = format;
    if (f == "g6")
      *out = dup(pdlab::emit_graph6(g->g) + "\n");
    else if (f == "edges")
      *out = dup(pdlab::emit_edge_list(g->g));
    else if (f == "dot")
      *out = dup(pdlab::emit_dot(g->g));
    else
      throw pdlab::Error(pdlab::ErrorCode::unknown_name, "unknown graph format '" + f + "'");
  });
}

pdl_status pdl_graph_info(const pdl_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const pdlab::Graph& graph = g->g;
    std::ostringstream s;
    s << "order: " << graph.order() << "\n";
    s << "size: " << graph.size() << "\n";
    if (graph.order() <= 62) s << "graph6: " << pdlab::emit_graph6(graph) << "\n";
    if (graph.order() > 0) {
      const auto m = pdlab::metrics(graph);
      s << "min-degree: " << m.min_degree << "\n";
      s << "max-degree: " << m.max_degree << "\n";
      s << "connected: " << yes_no(m.connected) << "\n";
      s << "diameter: " << (m.diameter ? std::to_string(*m.diameter) : "inf") << "\n";
      s << "tree: " << yes_no(pdlab::is_tree(graph)) << "\n";
      if (pdlab::is_tree(graph)) s << "spider: " << yes_no(pdlab::is_spider(graph)) << "\n";
      const auto uv = pdlab::has_universal_vertex(graph);
      s << "universal-vertex: " << (uv ? std::to_string(*uv) : "none") << "\n";
      const auto ue = pdlab::has_universal_edge(graph);
      s << "universal-edge: " << (ue ? std::to_string(ue->u) + "-" + std::to_string(ue->v) : "none") << "\n";
      const auto anti = pdlab::anti_cycle_vertices(graph);
      s << "anti-cycle-vertices: " << (anti.empty() ? "none" : pdlab::format_vertex_set(anti)) << "\n";
      if (m.connected) {
        const auto b = pdlab::max_degree_gamma_p_bound(graph);
        s << "gamma-p-bound: [" << b.lo << "," << b.hi << "]" << (b.exact() ? " exact" : "") << "\n";
      }
    }
    *out = dup(s.str());
  });
}

void pdl_graph_free(pdl_graph* g) { delete g; }

pdl_status pdl_compute(const pdl_graph* g, const char* invariant, const pdl_options* opts, pdl_result** out) {
  return guarded([&] {
    require(g != nullptr && invariant != nullptr && out != nullptr, "null argument");
    pdlab::SolverOptions o;
    if (opts != nullptr) {
      o.threads = opts->threads == 0 ? 1 : opts->threads;
      o.prune_dominated = opts->prune_dominated != 0;
    }
    *out = new pdl_result{pdlab::compute_invariant(invariant_from(invariant), g->g, o)};
  });
}

size_t pdl_result_value(const pdl_result* r) { return r ? r->r.value : 0; }
uint64_t pdl_result_tested(const pdl_result* r) { return r ? r->r.tested : 0; }
double pdl_result_millis(const pdl_result* r) {
  return r ? static_cast<double>(r->r.elapsed.count()) / 1e6 : 0.0;
}

pdl_status pdl_result_witness(const pdl_result* r, char** out) {
  return guarded([&] {
    require(r != nullptr && out != nullptr, "null argument");
    *out = dup(pdlab::format_witness(r->r));
  });
}

void pdl_result_free(pdl_result* r) { delete r; }

pdl_status pdl_trace_run(const pdl_graph* g, const char* mode, const char* set, pdl_trace** out) {
  return guarded([&] {
    require(g != nullptr && mode != nullptr && set != nullptr && out != nullptr, "null argument");
    const pdlab::VertexSet s = pdlab::parse_vertex_list(set);
    for (pdlab::Vertex v : s)
      if (v >= g->g.order())
        throw pdlab::Error(pdlab::ErrorCode::invalid_argument, "vertex " + std::to_string(v) + " out of range");
    const std::string m = mode;
    if (m == "closure")
      *out = new pdl_trace{g->g, pdlab::zero_forcing_closure(g->g, s)};
    else if (m == "monitor")
      *out = new pdl_trace{g->g, pdlab::monitored_trace(g->g, s)};
    else
      throw pdlab::Error(pdlab::ErrorCode::unknown_name, "unknown trace mode '" + m + "'");
  });
}

int pdl_trace_complete(const pdl_trace* t) { return t && t->trace.complete() ? 1 : 0; }

pdl_status pdl_trace_final(const pdl_trace* t, char** out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "null argument");
    *out = dup(pdlab::format_vertex_set(t->trace.final));
  });
}

pdl_status pdl_trace_render(const pdl_trace* t, const char* format, char** out) {
  return guarded([&] {
    require(t != nullptr && format != nullptr && out != nullptr, "null argument");
    const std::string f = format;
    if (f == "text")
      *out = dup(pdlab::render_trace(t->g, t->trace));
    else if (f == "dot")
      *out = dup(pdlab::emit_dot(t->g, &t->trace));
    else
      throw pdlab::Error(pdlab::ErrorCode::unknown_name, "unknown trace format '" + f + "'");
  });
}

void pdl_trace_free(pdl_trace* t) { delete t; }

pdl_status pdl_suite_list(char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    std::ostringstream s;
    for (const auto& info : pdlab::suite_registry())
      s << info.id << "\t" << (info.gating ? "gating" : "report-only") << "\tmax-n=" << info.default_max_n << "\t"
        << info.summary << "\n";
    *out = dup(s.str());
  });
}

pdl_status pdl_verify(const char* suites, const pdl_harness_options* opts, pdl_report** out) {
  return guarded([&] {
    require(suites != nullptr && out != nullptr, "null argument");
    std::vector<std::string> ids;
    const std::string spec = suites;
    if (spec == "all" || spec == "gating") {
      for (const auto& info : pdlab::suite_registry())
        if (spec == "all" || info.gating) ids.push_back(info.id);
    } else {
      std::istringstream in(spec);
      for (std::string id; std::getline(in, id, ',');) {
        if (id.empty()) continue;
        if (!pdlab::find_suite(id))
          throw pdlab::Error(pdlab::ErrorCode::unknown_name, "unknown suite '" + id + "'");
        ids.push_back(id);
      }
      require(!ids.empty(), "no suite named");
    }
    const auto o = harness_options(opts);
    std::vector<pdlab::SuiteRun> runs;
    for (const auto& id : ids) runs.push_back(pdlab::run_suite(id, o));
    *out = new pdl_report{std::move(runs)};
  });
}

pdl_status pdl_scan(const char* scan, const char* g6_path, const pdl_harness_options* opts, pdl_report** out) {
  return guarded([&] {
    require(scan != nullptr && out != nullptr, "null argument");
    const std::string name = scan;
    const auto o = harness_options(opts);
    if (name == "small-order") {
      *out = new pdl_report{pdlab::scan_small_order(o)};
      return;
    }
    if (name != "conjecture" && name != "sandwich")
      throw pdlab::Error(pdlab::ErrorCode::unknown_name, "unknown scan '" + name + "'");
    const auto graphs = g6_path ? read_g6_lines(g6_path) : pdlab::default_scan_corpus(name, o);
    *out = new pdl_report{name == "conjecture" ? pdlab::scan_conjecture(graphs, o)
                                               : pdlab::scan_shadow_sandwich(graphs, o)};
  });
}

pdl_status pdl_report_render(const pdl_report* r, const char* format, int timing, int quiet, char** out) {
  return guarded([&] {
    require(r != nullptr && format != nullptr && out != nullptr, "null argument");
    const std::string f = format;
    pdlab::ReportOptions o;
    if (f == "csv")
      o.format = pdlab::ReportFormat::csv;
    else if (f != "text")
      throw pdlab::Error(pdlab::ErrorCode::unknown_name, "unknown report format '" + f + "'");
    o.timing = timing != 0;
    o.quiet = quiet != 0;
    if (const auto* runs = std::get_if<std::vector<pdlab::SuiteRun>>(&r->data))
      *out = dup(pdlab::report(*runs, o));
    else
      *out = dup(pdlab::report_scan(std::get<pdlab::ScanResult>(r->data), o));
  });
}

int pdl_report_gating_failed(const pdl_report* r) {
  if (r == nullptr) return 0;
  if (const auto* runs = std::get_if<std::vector<pdlab::SuiteRun>>(&r->data)) {
    for (const auto& run : *runs)
      if (run.info.gating && !run.passed()) return 1;
    return 0;
  }
  return std::get<pdlab::ScanResult>(r->data).violations > 0 ? 1 : 0;
}

size_t pdl_report_case_count(const pdl_report* r) {
  if (r == nullptr) return 0;
  if (const auto* runs = std::get_if<std::vector<pdlab::SuiteRun>>(&r->data)) {
    size_t total = 0;
    for (const auto& run : *runs) total += run.cases.size();
    return total;
  }
  return std::get<pdlab::ScanResult>(r->data).findings.size();
}

size_t pdl_report_failure_count(const pdl_report* r) {
  if (r == nullptr) return 0;
  if (const auto* runs = std::get_if<std::vector<pdlab::SuiteRun>>(&r->data)) {
    size_t total = 0;
    for (const auto& run : *runs) total += run.failures();
    return total;
  }
  const auto& findings = std::get<pdlab::ScanResult>(r->data).findings;
  return static_cast<size_t>(
      std::count_if(findings.begin(), findings.end(), [](const pdlab::ScanFinding& f) { return !f.agree; }));
}

void pdl_report_free(pdl_report* r) { delete r; }

}  // extern "C"
