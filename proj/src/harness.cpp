#include "pdlab/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "pdlab/census.hpp"
#include "pdlab/characterizations.hpp"
#include "pdlab/constructors.hpp"
#include "pdlab/error.hpp"
#include "pdlab/io.hpp"
#include "pdlab/solvers.hpp"

namespace pdlab {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  long long formula = 0;
  long long computed = 0;
  /// Appended to the case parameters.
  std::string note;
};

struct CaseSpec {
  std::string family;
  std::string params;
  std::function<Outcome()> eval;
};

struct Context {
  std::size_t max_n = 0;
  std::mt19937_64 rng;
};

using Generator = std::vector<CaseSpec> (*)(Context&);

struct SuiteDef {
  SuiteInfo info;
  Generator generate;
};

// Runs body(i) for i in [0, count) on up to `threads` workers. The first
// exception is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        body(i);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

long long gp(const Graph& g) { return static_cast<long long>(gamma_p(g).value); }

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

std::string g6_source(const Graph& g) { return "g6:" + emit_graph6(g); }

std::string describe(const Graph& g) {
  if (g.order() <= kMaxCanonicalOrder) return emit_graph6(canonical_form(g));
  return emit_graph6(g);
}

std::string n_param(std::size_t n) { return "n=" + std::to_string(n); }

std::string join(const std::vector<std::size_t>& xs, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(xs[i]);
  return out;
}

CaseSpec invariant_case(std::string source, std::string params, long long formula,
                        Invariant inv = Invariant::power_domination) {
  return {source, std::move(params), [source, formula, inv] {
            const Graph g = parse_source(source);
            return Outcome{formula, static_cast<long long>(compute_invariant(inv, g).value), {}};
          }};
}

CaseSpec check_case(std::string family, std::string params, std::function<std::pair<bool, std::string>()> pred) {
  return {std::move(family), std::move(params), [pred = std::move(pred)] {
            auto [ok, note] = pred();
            return Outcome{1, ok ? 1 : 0, std::move(note)};
          }};
}

std::vector<Graph> census(std::size_t lo, std::size_t hi) {
  hi = std::min(hi, kMaxCensusOrder);
  if (lo > hi) return {};
  return connected_census(lo, hi);
}

std::vector<Graph> random_connected(Context& ctx, std::size_t count, std::size_t lo, std::size_t hi,
                                    double p_lo, double p_hi) {
  std::vector<Graph> out;
  if (lo > hi) return out;
  std::uniform_int_distribution<std::size_t> order(lo, hi);
  std::uniform_real_distribution<double> density(p_lo, p_hi);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = order(ctx.rng);
    const double p = density(ctx.rng);
    out.push_back(random_connected_graph(ctx.rng, n, p));
  }
  return out;
}

// Sorted part lists with at least two parts and total at most `max_total`.
void part_lists(std::size_t max_total, std::vector<std::size_t>& cur, std::size_t total,
                std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() >= 2) out.push_back(cur);
  const std::size_t from = cur.empty() ? 1 : cur.back();
  for (std::size_t r = from; total + r <= max_total; ++r) {
    cur.push_back(r);
    part_lists(max_total, cur, total + r, out);
    cur.pop_back();
  }
}

// Sorted cycle lengths (each >= 3) summing to n.
void cycle_partitions(std::size_t n, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t used = std::accumulate(cur.begin(), cur.end(), std::size_t{0});
  if (used == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t r = cur.empty() ? 3 : cur.back(); used + r <= n; ++r) {
    cur.push_back(r);
    cycle_partitions(n, cur, out);
    cur.pop_back();
  }
}

// ---- gating suites ----

std::vector<CaseSpec> table1(Context& ctx) {
  std::vector<CaseSpec> out;
  const auto gamma_p_inv = Invariant::power_domination;
  const auto gamma_inv = Invariant::domination;
  const auto zf_inv = Invariant::zero_forcing;
  for (std::size_t n = 3; n <= ctx.max_n; ++n) {
    const auto ln = static_cast<long long>(n);
    const std::string ns = std::to_string(n);
    const std::string k2 = "bipartite:2," + std::to_string(n - 2);
    auto add = [&](Invariant inv, const std::string& src, const std::string& extra, long long f) {
      out.push_back(invariant_case(src, "inv=" + invariant_name(inv) + " " + n_param(n) + extra, f, inv));
    };
    for (const char* fam : {"path:", "cycle:", "complete:", "star:"}) add(gamma_p_inv, fam + ns, "", 1);
    if (n >= 4) {
      add(gamma_p_inv, k2, "", 1);
      add(gamma_p_inv, "wheel:" + ns, "", 1);
    }
    for (std::size_t h = 3; h + 3 <= n; ++h)
      add(gamma_p_inv, "bipartite:" + std::to_string(h) + "," + std::to_string(n - h),
          " h=" + std::to_string(h), 2);

    add(gamma_inv, "path:" + ns, "", (ln + 2) / 3);
    add(gamma_inv, "cycle:" + ns, "", (ln + 2) / 3);
    add(gamma_inv, "complete:" + ns, "", 1);
    add(gamma_inv, "star:" + ns, "", 1);
    if (n >= 4) {
      add(gamma_inv, k2, "", 2);
      add(gamma_inv, "wheel:" + ns, "", 1);
    }
    for (std::size_t h = 3; h + 3 <= n; ++h)
      add(gamma_inv, "bipartite:" + std::to_string(h) + "," + std::to_string(n - h),
          " h=" + std::to_string(h), 2);

    add(zf_inv, "path:" + ns, "", 1);
    add(zf_inv, "cycle:" + ns, "", 2);
    add(zf_inv, "complete:" + ns, "", ln - 1);
    add(zf_inv, "star:" + ns, "", ln - 2);
    if (n >= 4) {
      add(zf_inv, k2, "", ln - 2);
      add(zf_inv, "wheel:" + ns, "", 3);
    }
    for (std::size_t h = 3; h + 3 <= n; ++h)
      add(zf_inv, "bipartite:" + std::to_string(h) + "," + std::to_string(n - h),
          " h=" + std::to_string(h), ln - 2);
  }
  return out;
}

std::string class_name(DeletedEdgeClass c) {
  switch (c) {
    case DeletedEdgeClass::none: return "none";
    case DeletedEdgeClass::touches_smallest: return "touches";
    case DeletedEdgeClass::misses_smallest: return "misses";
  }
  return "?";
}

std::vector<CaseSpec> multipartite(Context& ctx) {
  std::vector<std::vector<std::size_t>> lists;
  std::vector<std::size_t> cur;
  part_lists(ctx.max_n, cur, 0, lists);
  std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
    const auto sa = std::accumulate(a.begin(), a.end(), std::size_t{0});
    const auto sb = std::accumulate(b.begin(), b.end(), std::size_t{0});
    return sa != sb ? sa < sb : a < b;
  });
  std::vector<CaseSpec> out;
  for (const auto& parts : lists) {
    const std::string source = "kpartite:" + join(parts);
    const std::string base = "parts=" + join(parts, '/');
    out.push_back({source, base + " class=none", [source, parts] {
                     return Outcome{static_cast<long long>(multipartite_gamma_p(parts, DeletedEdgeClass::none)),
                                    gp(parse_source(source)), {}};
                   }});
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
    for (auto cls : {DeletedEdgeClass::touches_smallest, DeletedEdgeClass::misses_smallest}) {
      // One edge per unordered pair of endpoint part sizes; the rest are
      // isomorphic deletions.
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (const Edge& e : multipartite_edges_in_class(parts, cls)) {
        const auto key = std::minmax(parts[part_of[e.u]], parts[part_of[e.v]]);
        if (!seen.insert(key).second) continue;
        std::ostringstream params;
        params << base << " class=" << class_name(cls) << " delete=" << e.u << "-" << e.v;
        out.push_back({source, params.str(), [source, parts, cls, e] {
                         const auto formula = static_cast<long long>(multipartite_gamma_p(parts, cls));
                         return Outcome{formula, gp(delete_edge(parse_source(source), e)), {}};
                       }});
      }
    }
  }
  return out;
}

std::vector<CaseSpec> transformed_paths(const std::string& t, std::size_t lo, std::size_t hi,
                                        const std::function<long long(std::size_t)>& f) {
  std::vector<CaseSpec> out;
  for (std::size_t n = lo; n <= hi; ++n)
    out.push_back(invariant_case(t + "(path:" + std::to_string(n) + ")", n_param(n), f(n)));
  return out;
}

std::vector<CaseSpec> transformed_cycles(const std::string& t, std::size_t lo, std::size_t hi,
                                         const std::function<long long(std::size_t)>& f) {
  std::vector<CaseSpec> out;
  for (std::size_t n = lo; n <= hi; ++n)
    out.push_back(invariant_case(t + "(cycle:" + std::to_string(n) + ")", n_param(n), f(n)));
  return out;
}

// K_{h,n-h} with h_lo <= h <= n-h, 2h <= n <= max_n.
std::vector<CaseSpec> transformed_bipartite(const std::string& t, std::size_t h_lo, std::size_t max_n,
                                            long long value) {
  std::vector<CaseSpec> out;
  for (std::size_t n = 2 * h_lo; n <= max_n; ++n)
    for (std::size_t h = h_lo; 2 * h <= n; ++h)
      out.push_back(invariant_case(t + "(bipartite:" + std::to_string(h) + "," + std::to_string(n - h) + ")",
                                   n_param(n) + " h=" + std::to_string(h), value));
  return out;
}

std::vector<CaseSpec> transformed_universal(const std::string& t, std::size_t max_n) {
  std::vector<CaseSpec> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    const std::string ns = std::to_string(n);
    out.push_back(invariant_case(t + "(complete:" + ns + ")", n_param(n), 1));
    out.push_back(invariant_case(t + "(star:" + ns + ")", n_param(n), 1));
    if (n >= 4) out.push_back(invariant_case(t + "(wheel:" + ns + ")", n_param(n), 1));
  }
  return out;
}

long long one(std::size_t) { return 1; }
long long one_then_two(std::size_t n) { return n == 3 ? 1 : 2; }

std::vector<CaseSpec> mu_paths(Context& c) { return transformed_paths("mu", 2, c.max_n, one); }
std::vector<CaseSpec> mu_cycles(Context& c) { return transformed_cycles("mu", 3, c.max_n, one_then_two); }
std::vector<CaseSpec> mu_bipartite(Context& c) { return transformed_bipartite("mu", 2, c.max_n, 2); }
std::vector<CaseSpec> mu_universal(Context& c) { return transformed_universal("mu", c.max_n); }
std::vector<CaseSpec> shadow_paths(Context& c) { return transformed_paths("shadow", 2, c.max_n, one); }
std::vector<CaseSpec> shadow_cycles(Context& c) { return transformed_cycles("shadow", 3, c.max_n, one_then_two); }
std::vector<CaseSpec> shadow_bipartite(Context& c) { return transformed_bipartite("shadow", 2, c.max_n, 2); }
std::vector<CaseSpec> shadow_universal(Context& c) { return transformed_universal("shadow", c.max_n); }

std::vector<CaseSpec> sandwich(Context& ctx) {
  std::vector<Graph> graphs = census(1, std::min<std::size_t>(6, ctx.max_n));
  const auto random = random_connected(ctx, 300, 2, ctx.max_n, 0.15, 0.6);
  graphs.insert(graphs.end(), random.begin(), random.end());
  std::vector<CaseSpec> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const bool from_census = i + random.size() < graphs.size();
    out.push_back(check_case(g6_source(g), std::string(from_census ? "census " : "random ") + n_param(g.order()),
                             [g] {
                               const long long a = gp(g), b = gp(shadow(g));
                               std::ostringstream note;
                               note << "gp=" << a << " gp_shadow=" << b;
                               return std::pair{a <= b && b <= 2 * a, note.str()};
                             }));
  }
  return out;
}

std::vector<CaseSpec> central_paths(Context& c) { return transformed_paths("central", 2, c.max_n, one); }
std::vector<CaseSpec> central_cycles(Context& c) { return transformed_cycles("central", 3, c.max_n, one); }

std::vector<CaseSpec> central_stars(Context& ctx) {
  std::vector<CaseSpec> out;
  for (std::size_t n = 2; n <= ctx.max_n; ++n)
    out.push_back(invariant_case("central(star:" + std::to_string(n) + ")", n_param(n), 1));
  for (std::size_t n = 4; n <= ctx.max_n; ++n)
    out.push_back(invariant_case("central(bipartite:2," + std::to_string(n - 2) + ")", n_param(n) + " h=2", 1));
  return out;
}

std::vector<CaseSpec> central_bipartite(Context& c) { return transformed_bipartite("central", 3, c.max_n, 1); }

std::vector<CaseSpec> central_wheels(Context& ctx) {
  std::vector<CaseSpec> out;
  for (std::size_t n = 5; n <= ctx.max_n; ++n)
    out.push_back(invariant_case("central(wheel:" + std::to_string(n) + ")", n_param(n), 2));
  return out;
}

std::vector<CaseSpec> central_complete(Context& ctx) {
  std::vector<CaseSpec> out;
  for (std::size_t n = 4; n <= ctx.max_n; ++n)
    out.push_back(invariant_case("central(complete:" + std::to_string(n) + ")", n_param(n),
                                 static_cast<long long>(n) - 2));
  return out;
}

std::vector<CaseSpec> central_anticycle(Context& ctx) {
  std::vector<CaseSpec> out;
  for (const Graph& g : census(1, ctx.max_n)) {
    const VertexSet anti = anti_cycle_vertices(g);
    if (anti.empty()) continue;
    out.push_back(invariant_case("central(" + g6_source(g) + ")",
                                 n_param(g.order()) + " anticycle=" + std::to_string(anti.first()), 1));
  }
  return out;
}

std::vector<CaseSpec> middle_paths(Context& c) {
  return transformed_paths("middle", 2, c.max_n,
                           [](std::size_t n) { return ceil_div(static_cast<long long>(n) - 1, 3); });
}
std::vector<CaseSpec> middle_cycles(Context& c) {
  return transformed_cycles("middle", 3, c.max_n,
                            [](std::size_t n) { return ceil_div(static_cast<long long>(n), 3); });
}

std::vector<CaseSpec> middle_stars(Context& ctx) {
  std::vector<CaseSpec> out;
  for (std::size_t n = 2; n <= ctx.max_n; ++n)
    out.push_back(invariant_case("middle(star:" + std::to_string(n) + ")", n_param(n), 1));
  return out;
}

std::vector<CaseSpec> middle_wheels(Context& ctx) {
  std::vector<CaseSpec> out;
  for (std::size_t n = 5; n <= ctx.max_n; ++n)
    out.push_back(invariant_case("middle(wheel:" + std::to_string(n) + ")", n_param(n),
                                 1 + ceil_div(static_cast<long long>(n) - 3, 3)));
  return out;
}

std::vector<CaseSpec> middle_bipartite(Context& ctx) {
  std::vector<CaseSpec> out;
  for (std::size_t h = 2; h <= 4; ++h)
    for (std::size_t k = 2; k <= 5 && h + k <= ctx.max_n; ++k)
      out.push_back(invariant_case("middle(bipartite:" + std::to_string(h) + "," + std::to_string(k) + ")",
                                   n_param(h + k) + " h=" + std::to_string(h),
                                   static_cast<long long>(std::min(h, k))));
  return out;
}

std::vector<CaseSpec> middle_bound(Context& ctx) {
  std::vector<CaseSpec> out;
  // Edgeless K_1 has gamma' = 0 and lies outside the statement.
  for (const Graph& g : census(2, ctx.max_n))
    out.push_back(check_case(g6_source(g), n_param(g.order()), [g] {
      const long long lhs = gp(middle(g));
      const auto rhs = static_cast<long long>(edge_domination_number(g).value);
      return std::pair{lhs <= rhs, "gp_middle=" + std::to_string(lhs) + " edge_gamma=" + std::to_string(rhs)};
    }));
  return out;
}

std::vector<CaseSpec> universal_edge(Context& ctx) {
  std::vector<CaseSpec> out;
  for (const Graph& g : census(2, ctx.max_n)) {
    const std::string source = g6_source(g);
    out.push_back({source, n_param(g.order()), [g] {
                     const auto e = has_universal_edge(g);
                     const bool one = gp(middle(g)) == 1;
                     std::string note;
                     if (e) note = "edge=" + std::to_string(e->u) + "-" + std::to_string(e->v);
                     return Outcome{e ? 1 : 0, one ? 1 : 0, note};
                   }});
  }
  return out;
}

std::vector<CaseSpec> trees(Context& ctx) {
  std::vector<CaseSpec> out;
  std::uniform_int_distribution<std::size_t> order(2, std::max<std::size_t>(2, ctx.max_n));
  for (int i = 0; i < 100; ++i) {
    const Graph t = random_tree(ctx.rng, order(ctx.rng));
    out.push_back({g6_source(t), "tree=" + std::to_string(i) + " " + n_param(t.order()), [t] {
                     return Outcome{static_cast<long long>(spider_number(t).value), gp(t), {}};
                   }});
  }
  return out;
}

std::vector<CaseSpec> small_order(Context& ctx) {
  std::vector<CaseSpec> out;
  for (const Graph& g : census(1, std::min<std::size_t>(5, ctx.max_n)))
    out.push_back(invariant_case(g6_source(g), n_param(g.order()), 1));
  out.push_back(invariant_case("hgraph", n_param(6), 2));
  out.push_back(check_case("hgraph", "census n=6 gp=2", [] {
    const Graph h = make_family(FamilySpec::h_graph());
    std::size_t count = 0;
    bool found = false;
    for (const Graph& g : enumerate_connected_graphs(6))
      if (gp(g) == 2) {
        ++count;
        found = found || isomorphic(g, h);
      }
    return std::pair{found, "classes=" + std::to_string(count)};
  }));
  return out;
}

std::vector<CaseSpec> max_degree(Context& ctx) {
  std::vector<Graph> graphs = census(1, ctx.max_n);
  const auto random = random_connected(ctx, 500, 2, ctx.max_n, 0.1, 0.7);
  graphs.insert(graphs.end(), random.begin(), random.end());
  std::vector<CaseSpec> out;
  for (const Graph& g : graphs)
    out.push_back(check_case(g6_source(g), n_param(g.order()), [g] {
      const GammaPBound b = max_degree_gamma_p_bound(g);
      const auto value = gamma_p(g).value;
      std::ostringstream note;
      note << "delta=" << metrics(g).max_degree << " gp=" << value << " bound=[" << b.lo << ";" << b.hi << "]";
      return std::pair{b.encloses(value), note.str()};
    }));
  return out;
}

std::vector<CaseSpec> invariant_chain(Context& ctx) {
  std::vector<CaseSpec> out;
  for (const Graph& g : census(1, ctx.max_n)) {
    const std::string src = g6_source(g);
    auto rel = [&](const char* name, Invariant a, Invariant b) {
      out.push_back(check_case(src, n_param(g.order()) + " rel=" + name, [g, a, b] {
        const auto x = compute_invariant(a, g).value, y = compute_invariant(b, g).value;
        return std::pair{x <= y, std::to_string(x) + "<=" + std::to_string(y)};
      }));
    };
    rel("gp<=zf", Invariant::power_domination, Invariant::zero_forcing);
    rel("gp<=gamma", Invariant::power_domination, Invariant::domination);
    rel("pc<=zf", Invariant::path_cover, Invariant::zero_forcing);
  }
  return out;
}

bool is_path_graph(const Graph& g) {
  return is_tree(g) && (g.order() <= 1 || metrics(g).max_degree <= 2);
}

std::vector<CaseSpec> zf_one(Context& ctx) {
  std::vector<CaseSpec> out;
  for (const Graph& g : census(1, ctx.max_n))
    out.push_back({g6_source(g), n_param(g.order()), [g] {
                     return Outcome{is_path_graph(g) ? 1 : 0, zero_forcing_number(g).value == 1 ? 1 : 0, {}};
                   }});
  return out;
}

// ---- report-only suites ----

Graph cycle_union_complement(const std::vector<std::size_t>& lengths) {
  Graph u = build_graph(0, {});
  for (std::size_t len : lengths) u = disjoint_union(u, make_family(FamilySpec::cycle(len)));
  return complement(u);
}

std::vector<CaseSpec> regular_n3(Context& ctx) {
  std::vector<CaseSpec> out;
  for (std::size_t n = 5; n <= ctx.max_n; ++n) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    cycle_partitions(n, cur, parts);
    for (const auto& lengths : parts) {
      const Graph g = cycle_union_complement(lengths);
      if (!is_connected(g)) continue;
      out.push_back({g6_source(g), n_param(n) + " cycles=" + join(lengths, '+'), [g] {
                       return Outcome{static_cast<long long>(n3_regular_gamma_p(g)), gp(g), {}};
                     }});
    }
  }
  return out;
}

std::vector<CaseSpec> regular_n4(Context& ctx) {
  std::vector<std::pair<Graph, std::string>> corpus;
  for (std::size_t k = 2; 4 * k <= ctx.max_n; ++k) {
    Graph u = build_graph(0, {});
    for (std::size_t i = 0; i < k; ++i) u = disjoint_union(u, make_family(FamilySpec::complete(4)));
    corpus.emplace_back(complement(u), "complement=" + std::to_string(k) + "K4");
  }
  for (std::size_t n = 6; n <= ctx.max_n; n += 2) {
    std::set<std::string> seen;
    for (int attempt = 0; attempt < 40 && seen.size() < 6; ++attempt) {
      const Graph g = complement(random_cubic_graph(ctx.rng, n));
      if (!is_connected(g)) continue;
      if (!seen.insert(emit_graph6(g)).second) continue;
      corpus.emplace_back(g, "complement=cubic" + std::to_string(seen.size()));
    }
  }
  std::vector<CaseSpec> out;
  for (const auto& [g, label] : corpus) {
    const std::string base = n_param(g.order()) + " " + label;
    out.push_back({g6_source(g), base + " reading=literal", [g = g] {
                     const auto triples = find_special_triples(g);
                     return Outcome{triples.empty() ? 2 : 1, gp(g), "triples=" + std::to_string(triples.size())};
                   }});
    out.push_back({g6_source(g), base + " reading=strict", [g = g] {
                     const auto triples = find_special_triples(g);
                     const bool any = std::any_of(triples.begin(), triples.end(), [](const SpecialTriple& t) {
                       return t.shape == TripleShape::pathlike || t.strict_triangle;
                     });
                     return Outcome{any ? 1 : 2, gp(g), {}};
                   }});
  }
  return out;
}

std::vector<CaseSpec> twin_lemma(Context& ctx) {
  std::vector<CaseSpec> out;
  for (const Graph& g : census(4, ctx.max_n))
    for (Vertex u = 0; u < g.order(); ++u) {
      if (g.degree(u) + 3 != g.order()) continue;
      VertexSet s;
      s.insert(u);
      out.push_back({g6_source(g), n_param(g.order()) + " u=" + std::to_string(u), [g, u, s] {
                       return Outcome{singleton_pd_twin_test(g, u) ? 1 : 0,
                                      is_power_dominating_set(g, s) ? 1 : 0, {}};
                     }});
    }
  return out;
}

std::vector<CaseSpec> conjecture(Context& ctx) {
  std::vector<CaseSpec> out;
  for (const Graph& g : census(2, ctx.max_n))
    out.push_back({g6_source(g), n_param(g.order()), [g] {
                     return Outcome{static_cast<long long>(edge_domination_number(g).value), gp(middle(g)), {}};
                   }});
  return out;
}

std::vector<CaseSpec> mu_membership(Context& ctx) {
  std::vector<CaseSpec> out;
  for (const Graph& g : census(1, ctx.max_n))
    out.push_back(check_case(g6_source(g), n_param(g.order()), [g] {
      const long long base = gp(g), m = gp(mycielskian(g));
      const char* match = m == 1 ? "1" : m == base ? "gp" : m == base + 1 ? "gp+1" : "none";
      return std::pair{m == 1 || m == base || m == base + 1, std::string("match=") + match};
    }));
  return out;
}

std::vector<CaseSpec> edge_attribution(Context& ctx) {
  std::vector<std::pair<std::string, long long>> graphs;
  for (std::size_t n = 5; n <= std::min<std::size_t>(8, ctx.max_n); ++n)
    graphs.emplace_back("wheel:" + std::to_string(n), 1 + ceil_div(static_cast<long long>(n) - 3, 3));
  for (std::size_t h = 2; h <= 4; ++h)
    for (std::size_t k = h; k <= 5 && h + k <= ctx.max_n; ++k)
      graphs.emplace_back("bipartite:" + std::to_string(h) + "," + std::to_string(k),
                          static_cast<long long>(std::min(h, k)));
  std::vector<CaseSpec> out;
  for (const auto& [src, formula] : graphs) {
    out.push_back(invariant_case(src, "reading=G", formula, Invariant::edge_domination));
    out.push_back(invariant_case("middle(" + src + ")", "reading=M(G)", formula, Invariant::edge_domination));
  }
  return out;
}

std::vector<CaseSpec> product_complete(Context& ctx) {
  std::vector<CaseSpec> out;
  for (std::size_t h = 2; h <= ctx.max_n; ++h)
    for (std::size_t k = h; k <= ctx.max_n; ++k)
      out.push_back(invariant_case("prod(complete:" + std::to_string(h) + ",complete:" + std::to_string(k) + ")",
                                   "h=" + std::to_string(h) + " k=" + std::to_string(k),
                                   static_cast<long long>(h) - 1));
  return out;
}

std::vector<CaseSpec> delta_n5(Context& ctx) {
  std::vector<std::pair<std::string, std::vector<Graph>>> pools;
  for (std::size_t n = 6; n <= std::min(ctx.max_n, kMaxCensusOrder); ++n)
    pools.emplace_back("census:" + std::to_string(n), enumerate_connected_graphs(n));
  for (std::size_t n = kMaxCensusOrder + 1; n <= ctx.max_n; ++n) {
    std::vector<Graph> pool;
    std::uniform_real_distribution<double> density(0.02, 0.35);
    for (int i = 0; i < 600; ++i) pool.push_back(random_connected_graph(ctx.rng, n, density(ctx.rng)));
    // Extremal gamma_p = n/3 graphs are tree-like; sparse samples rarely hit them.
    for (int i = 0; i < 4000; ++i) pool.push_back(random_tree(ctx.rng, n));
    pools.emplace_back("random:" + std::to_string(n), std::move(pool));
  }
  std::vector<CaseSpec> out;
  for (auto& [label, pool] : pools)
    out.push_back(check_case(label, "target=3", [pool = pool] {
      std::size_t candidates = 0, witnesses = 0;
      std::string first;
      for (const Graph& g : pool) {
        if (metrics(g).max_degree + 5 != g.order()) continue;
        ++candidates;
        if (gp(g) == 3) {
          if (witnesses++ == 0) first = " first=" + emit_graph6(g);
        }
      }
      return std::pair{witnesses > 0,
                       "candidates=" + std::to_string(candidates) + " witnesses=" + std::to_string(witnesses) + first};
    }));
  return out;
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {{"table1", true, 10, "basic families: gamma_p, gamma and Z"}, table1},
      {{"multipartite", true, 12, "complete multipartite graphs, with one edge deleted"}, multipartite},
      {{"mycielskian-paths", true, 8, "gamma_p(mu(P_n)) = 1"}, mu_paths},
      {{"mycielskian-cycles", true, 8, "gamma_p(mu(C_n)) = 1 for n = 3, else 2"}, mu_cycles},
      {{"mycielskian-bipartite", true, 9, "gamma_p(mu(K_{h,n-h})) = 2 for h >= 2"}, mu_bipartite},
      {{"mycielskian-universal", true, 8, "universal vertex gives gamma_p(mu(G)) = 1"}, mu_universal},
      {{"shadow-paths", true, 9, "gamma_p(S(P_n)) = 1"}, shadow_paths},
      {{"shadow-cycles", true, 8, "gamma_p(S(C_n)) = 1 for n = 3, else 2"}, shadow_cycles},
      {{"shadow-bipartite", true, 9, "gamma_p(S(K_{h,n-h})) = 2 for h >= 2"}, shadow_bipartite},
      {{"shadow-universal", true, 8, "universal vertex gives gamma_p(S(G)) = 1"}, shadow_universal},
      {{"sandwich", true, 9, "gamma_p(G) <= gamma_p(S(G)) <= 2 gamma_p(G)"}, sandwich},
      {{"central-paths", true, 10, "gamma_p(C(P_n)) = 1"}, central_paths},
      {{"central-cycles", true, 10, "gamma_p(C(C_n)) = 1"}, central_cycles},
      {{"central-stars", true, 9, "gamma_p(C(K_{1,n-1})) = gamma_p(C(K_{2,n-2})) = 1"}, central_stars},
      {{"central-bipartite", true, 8, "gamma_p(C(K_{h,n-h})) = 1 for h >= 3"}, central_bipartite},
      {{"central-wheels", true, 8, "gamma_p(C(W_n)) = 2"}, central_wheels},
      {{"central-complete", true, 7, "gamma_p(C(K_n)) = n - 2"}, central_complete},
      {{"central-anticycle", true, 6, "anti-cycle vertex gives gamma_p(C(G)) = 1"}, central_anticycle},
      {{"middle-paths", true, 10, "gamma_p(M(P_n)) = ceil((n-1)/3)"}, middle_paths},
      {{"middle-cycles", true, 10, "gamma_p(M(C_n)) = ceil(n/3)"}, middle_cycles},
      {{"middle-stars", true, 9, "gamma_p(M(K_{1,n-1})) = 1"}, middle_stars},
      {{"middle-wheels", true, 8, "gamma_p(M(W_n)) = 1 + ceil((n-3)/3)"}, middle_wheels},
      {{"middle-bipartite", true, 9, "gamma_p(M(K_{h,k})) = min(h, k)"}, middle_bipartite},
      {{"middle-bound", true, 5, "gamma_p(M(G)) <= gamma'(G)"}, middle_bound},
      {{"universal-edge", true, 6, "gamma_p(M(G)) = 1 iff G has a universal edge"}, universal_edge},
      {{"trees", true, 12, "gamma_p(T) = sp(T) on random trees"}, trees},
      {{"small-order", true, 5, "order <= 5 gives gamma_p = 1; H-graph has gamma_p = 2"}, small_order},
      {{"max-degree", true, 12, "max-degree bound encloses gamma_p"}, max_degree},
      {{"invariant-chain", true, 6, "gamma_p <= Z, gamma_p <= gamma, P <= Z"}, invariant_chain},
      {{"zf-one", true, 6, "Z(G) = 1 iff G is a path"}, zf_one},
      {{"regular-n3", false, 10, "(n-3)-regular characterization"}, regular_n3},
      {{"regular-n4", false, 12, "(n-4)-regular special triples"}, regular_n4},
      {{"twin-lemma", false, 7, "{u} with deg u = n-3 is a PD-set iff its non-neighbors are not twins"},
       twin_lemma},
      {{"conjecture", false, 6, "gamma_p(M(G)) = gamma'(G)"}, conjecture},
      {{"mycielskian-membership", false, 6, "gamma_p(mu(G)) in {1, gamma_p(G), gamma_p(G)+1}"}, mu_membership},
      {{"edge-domination-attribution", false, 9, "closed forms read as gamma'(G) or gamma'(M(G))"},
       edge_attribution},
      {{"product-complete", false, 5, "gamma_p(K_h x K_k) = min(h, k) - 1"}, product_complete},
      {{"delta-n5", false, 9, "search for Delta = n-5 with gamma_p = 3"}, delta_n5},
  };
  return defs;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string millis(std::chrono::nanoseconds ns) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << static_cast<double>(ns.count()) / 1e6;
  return out.str();
}

}  // namespace

std::size_t SuiteRun::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const TheoremCase& c) { return c.verdict == Verdict::fail; }));
}

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

std::optional<SuiteInfo> find_suite(const std::string& id) {
  for (const auto& info : suite_registry())
    if (info.id == id) return info;
  return std::nullopt;
}

SuiteRun run_suite(const std::string& id, const HarnessOptions& opts) {
  const auto& defs = registry();
  const auto def = std::find_if(defs.begin(), defs.end(), [&](const SuiteDef& d) { return d.info.id == id; });
  if (def == defs.end()) throw Error(ErrorCode::unknown_name, "unknown suite '" + id + "'");

  Context ctx{opts.max_n.value_or(def->info.default_max_n), std::mt19937_64(opts.seed ^ fnv1a(id))};
  SuiteRun run{def->info, {}, 0, {}};
  const std::vector<CaseSpec> specs = def->generate(ctx);

  std::vector<std::optional<TheoremCase>> slots(specs.size());
  std::vector<std::string> skip_reasons(specs.size());
  parallel_for(specs.size(), opts.threads, [&](std::size_t i) {
    const CaseSpec& spec = specs[i];
    const auto start = Clock::now();
    try {
      Outcome o = spec.eval();
      TheoremCase c{id, spec.family, spec.params, o.formula, o.computed,
                    o.formula == o.computed ? Verdict::pass : Verdict::fail,
                    std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)};
      if (!o.note.empty()) c.params += " " + o.note;
      slots[i] = std::move(c);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::cap_exceeded && e.code() != ErrorCode::precondition) throw;
      skip_reasons[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (slots[i]) {
      run.cases.push_back(std::move(*slots[i]));
    } else {
      ++run.skipped;
      run.notices.push_back("skipped " + specs[i].family + " [" + specs[i].params + "]: " + skip_reasons[i]);
    }
  }
  if (opts.max_n && *opts.max_n > kMaxCensusOrder &&
      (id == "central-anticycle" || id == "middle-bound" || id == "universal-edge" || id == "small-order" ||
       id == "invariant-chain" || id == "zf-one" || id == "twin-lemma" || id == "conjecture" ||
       id == "mycielskian-membership"))
    run.notices.push_back("census order capped at " + std::to_string(kMaxCensusOrder));
  return run;
}

std::vector<Graph> default_scan_corpus(const std::string& scan, const HarnessOptions& opts) {
  if (scan != "sandwich") return census(1, opts.max_n.value_or(5));
  std::vector<Graph> graphs = census(1, opts.max_n.value_or(6));
  Context ctx{0, std::mt19937_64(opts.seed ^ fnv1a("scan-" + scan))};
  const auto random = random_connected(ctx, 300, 2, 9, 0.15, 0.6);
  graphs.insert(graphs.end(), random.begin(), random.end());
  return graphs;
}

ScanResult scan_conjecture(const std::vector<Graph>& graphs, const HarnessOptions& opts) {
  ScanResult result{"conjecture", {}, 0, {}, 0};
  struct Slot {
    std::optional<std::array<ScanFinding, 2>> findings;
    std::string skip;
  };
  std::vector<Slot> slots(graphs.size());
  parallel_for(graphs.size(), opts.threads, [&](std::size_t i) {
    const Graph& g = graphs[i];
    if (g.size() == 0) {
      slots[i].skip = "edgeless graph (gamma' = 0)";
      return;
    }
    try {
      const long long rhs = static_cast<long long>(edge_domination_number(g).value);
      const long long lhs = gp(middle(g));
      const std::string code = describe(g);
      slots[i].findings = std::array<ScanFinding, 2>{
          ScanFinding{code, lhs, rhs, "gamma_p(M(G)) = gamma'(G)", lhs == rhs},
          ScanFinding{code, lhs, rhs, "gamma_p(M(G)) <= gamma'(G)", lhs <= rhs}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::cap_exceeded) throw;
      slots[i].skip = e.what();
    }
  });
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!slots[i].findings) {
      ++result.skipped;
      result.notices.push_back("skipped graph " + std::to_string(i) + ": " + slots[i].skip);
      continue;
    }
    for (const auto& f : *slots[i].findings) result.findings.push_back(f);
    if (!(*slots[i].findings)[1].agree) ++result.violations;
  }
  return result;
}

namespace {

bool meets_shadow_hypothesis(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    const VertexSet nv = g.neighbors(v);
    if (nv.intersects(s)) continue;
    bool ok = false;
    for (Vertex j : nv)
      if (g.closed_neighbors(j).is_subset_of(g.closed_neighbors(v))) ok = true;
    if (!ok) return false;
  }
  return true;
}

// Some minimum PD-set of size k meets the hypothesis.
bool some_min_set_meets_hypothesis(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  std::vector<Vertex> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<Vertex>(i);
  while (true) {
    const VertexSet s = VertexSet::from(idx);
    if (is_power_dominating_set(g, s) && meets_shadow_hypothesis(g, s)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ScanResult scan_shadow_sandwich(const std::vector<Graph>& graphs, const HarnessOptions& opts) {
  ScanResult result{"sandwich", {}, 0, {}, 0};
  struct Slot {
    std::vector<ScanFinding> findings;
    std::string skip;
  };
  std::vector<Slot> slots(graphs.size());
  parallel_for(graphs.size(), opts.threads, [&](std::size_t i) {
    const Graph& g = graphs[i];
    try {
      const auto base = gamma_p(g).value;
      const long long lhs = static_cast<long long>(base), rhs = gp(shadow(g));
      const std::string code = describe(g);
      slots[i].findings.push_back(
          {code, lhs, rhs, "gamma_p(G) <= gamma_p(S(G)) <= 2 gamma_p(G)", lhs <= rhs && rhs <= 2 * lhs});
      if (some_min_set_meets_hypothesis(g, base))
        slots[i].findings.push_back({code, lhs, rhs, "hypothesis => gamma_p(S(G)) = gamma_p(G)", lhs == rhs});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::cap_exceeded && e.code() != ErrorCode::precondition) throw;
      slots[i].skip = e.what();
    }
  });
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (slots[i].findings.empty()) {
      ++result.skipped;
      result.notices.push_back("skipped graph " + std::to_string(i) + ": " + slots[i].skip);
      continue;
    }
    if (!slots[i].findings.front().agree) ++result.violations;
    for (auto& f : slots[i].findings) result.findings.push_back(std::move(f));
  }
  return result;
}

ScanResult scan_small_order(const HarnessOptions& opts) {
  ScanResult result{"small-order", {}, 0, {}, 0};
  const std::size_t twin_free_max = std::min(opts.max_n.value_or(7), kMaxCensusOrder);
  const std::vector<Graph> graphs = census(1, std::max<std::size_t>(6, twin_free_max));
  std::vector<long long> values(graphs.size());
  parallel_for(graphs.size(), opts.threads, [&](std::size_t i) { values[i] = gp(graphs[i]); });

  const Graph h = make_family(FamilySpec::h_graph());
  bool h_found = false;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    if (g.order() <= 5) {
      result.findings.push_back({emit_graph6(g), values[i], 1, "gamma_p = 1 (order <= 5)", values[i] == 1});
      if (values[i] != 1) ++result.violations;
    } else if (g.order() == 6 && values[i] == 2) {
      result.findings.push_back({emit_graph6(g), 2, 2, "order 6 with gamma_p = 2", true});
      h_found = h_found || isomorphic(g, h);
    }
  }
  result.findings.push_back({describe(h), h_found ? 1 : 0, 1, "H-graph among order-6 gamma_p = 2", h_found});
  if (!h_found) ++result.violations;

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    if (g.order() > twin_free_max || values[i] != 2) continue;
    bool twin_free = true;
    for (Vertex u = 0; u < g.order() && twin_free; ++u)
      for (Vertex v = u + 1; v < g.order() && twin_free; ++v) twin_free = !are_twins(g, u, v);
    if (twin_free) result.findings.push_back({emit_graph6(g), 2, 2, "twin-free with gamma_p = 2", true});
  }
  return result;
}

std::string report(const std::vector<SuiteRun>& runs, const ReportOptions& opts) {
  std::ostringstream out;
  if (opts.format == ReportFormat::csv) {
    out << "suite,family,params,formula,computed,verdict,millis\n";
    for (const auto& run : runs)
      for (const auto& c : run.cases)
        out << csv_field(c.suite) << ',' << csv_field(c.family) << ',' << csv_field(c.params) << ','
            << c.formula << ',' << c.computed << ',' << (c.verdict == Verdict::pass ? "pass" : "fail") << ','
            << (opts.timing ? millis(c.elapsed) : "0") << '\n';
    return out.str();
  }
  std::vector<std::string> failed;
  for (const auto& run : runs) {
    out << "== " << run.info.id << " (" << (run.info.gating ? "gating" : "report-only") << "): "
        << run.cases.size() << " cases, " << run.cases.size() - run.failures() << " pass, " << run.failures()
        << " fail, " << run.skipped << " skipped\n";
    if (!opts.quiet) {
      for (const auto& c : run.cases) {
        out << (c.verdict == Verdict::pass ? "  pass  " : "  FAIL  ") << c.family << "  " << c.params
            << "  formula=" << c.formula << " computed=" << c.computed;
        if (opts.timing) out << "  " << millis(c.elapsed) << " ms";
        out << '\n';
      }
      for (const auto& note : run.notices) out << "  note: " << note << '\n';
    }
    if (run.info.gating && !run.passed()) failed.push_back(run.info.id);
  }
  if (failed.empty()) {
    out << "gating suites: all pass\n";
  } else {
    out << "gating suites failed:";
    for (const auto& id : failed) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

std::string report_scan(const ScanResult& scan, const ReportOptions& opts) {
  std::ostringstream out;
  if (opts.format == ReportFormat::csv) {
    out << "scan,graph,relation,lhs,rhs,agree\n";
    for (const auto& f : scan.findings)
      out << scan.scan << ',' << csv_field(f.graph) << ',' << csv_field(f.relation) << ',' << f.lhs << ','
          << f.rhs << ',' << (f.agree ? "yes" : "no") << '\n';
    return out.str();
  }
  const auto disagreements =
      std::count_if(scan.findings.begin(), scan.findings.end(), [](const ScanFinding& f) { return !f.agree; });
  out << "== scan " << scan.scan << ": " << scan.findings.size() << " findings, " << disagreements
      << " disagreements, " << scan.violations << " violations, " << scan.skipped << " skipped\n";
  if (!opts.quiet) {
    for (const auto& f : scan.findings)
      out << (f.agree ? "  agree     " : "  DISAGREE  ") << f.graph << "  " << f.relation << "  lhs=" << f.lhs
          << " rhs=" << f.rhs << '\n';
    for (const auto& note : scan.notices) out << "  note: " << note << '\n';
  }
  return out.str();
}

}  // namespace pdlab
