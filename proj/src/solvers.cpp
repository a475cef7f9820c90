#include "pdlab/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "pdlab/error.hpp"
#include "pdlab/forcing.hpp"

namespace pdlab {

namespace {

using Clock = std::chrono::steady_clock;
using Combo = std::vector<unsigned>;
using ComboPredicate = std::function<bool(const Combo&)>;

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lexicographic unranking of k-combinations of {0..items-1}.
Combo unrank(std::size_t items, std::size_t k, std::uint64_t rank) {
  Combo c;
  c.reserve(k);
  unsigned next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (;; ++next) {
      const std::uint64_t below = binomial(items - next - 1, k - i - 1);
      if (rank < below) break;
      rank -= below;
    }
    c.push_back(next++);
  }
  return c;
}

bool advance(Combo& c, std::size_t items) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < items - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct Hit {
  Combo combo;
  std::uint64_t tested = 0;
};

struct ShardResult {
  std::optional<std::uint64_t> rank;
  Combo combo;
};

ShardResult scan_shard(std::size_t items, std::size_t k, std::uint64_t begin, std::uint64_t end,
                       const ComboPredicate& pred, const std::atomic<std::size_t>* winner,
                       std::size_t shard) {
  ShardResult out;
  if (begin >= end) return out;
  Combo c = unrank(items, k, begin);
  for (std::uint64_t r = begin; r < end; ++r) {
    if (winner != nullptr && (r & 1023u) == 0 && winner->load(std::memory_order_relaxed) < shard)
      return out;
    if (pred(c)) {
      out.rank = r;
      out.combo = c;
      return out;
    }
    advance(c, items);
  }
  return out;
}

// Smallest k in [k_min, items] admitting a satisfying combination, and the
// lexicographically least such combination. Shards at one cardinality only
// stop early once a lower shard has succeeded, so the result is the same for
// any worker count.
std::optional<Hit> search_min_combination(std::size_t items, std::size_t k_min,
                                          const ComboPredicate& pred, unsigned threads) {
  std::uint64_t tested_before = 0;
  for (std::size_t k = k_min; k <= items; ++k) {
    const std::uint64_t total = binomial(items, k);
    const std::size_t workers =
        threads <= 1 || total < 2048 ? 1 : static_cast<std::size_t>(threads);
    std::vector<ShardResult> results(workers);
    if (workers == 1) {
      results[0] = scan_shard(items, k, 0, total, pred, nullptr, 0);
    } else {
      std::atomic<std::size_t> winner{workers};
      std::vector<std::thread> pool;
      for (std::size_t s = 0; s < workers; ++s) {
        pool.emplace_back([&, s] {
          const std::uint64_t begin = total / workers * s + std::min<std::uint64_t>(s, total % workers);
          const std::uint64_t end = begin + total / workers + (s < total % workers ? 1 : 0);
          results[s] = scan_shard(items, k, begin, end, pred, &winner, s);
          if (results[s].rank) {
            std::size_t cur = winner.load();
            while (s < cur && !winner.compare_exchange_weak(cur, s)) {
            }
          }
        });
      }
      for (auto& t : pool) t.join();
    }
    for (const auto& r : results) {
      if (r.rank) return Hit{r.combo, tested_before + *r.rank + 1};
    }
    tested_before += total;
  }
  return std::nullopt;
}

void require_cap(const char* what, std::size_t value, std::size_t cap) {
  if (value > cap)
    throw Error(ErrorCode::cap_exceeded, std::string(what) + " " + std::to_string(value) +
                                             " exceeds solver cap " + std::to_string(cap));
}

// Vertices kept when pruning: no other vertex has a strictly larger closed
// neighborhood, and none with an equal one has a smaller id.
std::vector<Vertex> undominated_vertices(std::span<const std::uint64_t> closed) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < closed.size(); ++v) {
    bool dominated = false;
    for (Vertex u = 0; u < closed.size() && !dominated; ++u) {
      if (u == v || (closed[v] & ~closed[u]) != 0) continue;
      dominated = closed[v] != closed[u] || u < v;
    }
    if (!dominated) keep.push_back(v);
  }
  return keep;
}

std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

struct ComponentSolve {
  std::size_t value = 0;
  std::vector<Vertex> witness;  // component-local ids
  std::uint64_t tested = 0;
};

enum class VertexGoal { power_domination, domination, zero_forcing };

ComponentSolve solve_vertex_component(const Graph& comp, VertexGoal goal, const SolverOptions& opts) {
  const auto rows = adjacency_masks(comp);
  const std::size_t n = comp.order();
  std::vector<std::uint64_t> closed(n);
  for (Vertex v = 0; v < n; ++v) closed[v] = rows[v] | (std::uint64_t{1} << v);
  const std::uint64_t full = full_mask(n);

  std::vector<Vertex> items;
  if (opts.prune_dominated && goal != VertexGoal::zero_forcing) {
    items = undominated_vertices(closed);
  } else {
    for (Vertex v = 0; v < n; ++v) items.push_back(v);
  }

  ComboPredicate pred;
  switch (goal) {
    case VertexGoal::power_domination:
      pred = [&](const Combo& c) {
        std::uint64_t black = 0;
        for (unsigned i : c) black |= closed[items[i]];
        return closure_mask(rows, black) == full;
      };
      break;
    case VertexGoal::domination:
      pred = [&](const Combo& c) {
        std::uint64_t black = 0;
        for (unsigned i : c) black |= closed[items[i]];
        return black == full;
      };
      break;
    case VertexGoal::zero_forcing:
      pred = [&](const Combo& c) {
        std::uint64_t black = 0;
        for (unsigned i : c) black |= std::uint64_t{1} << items[i];
        return closure_mask(rows, black) == full;
      };
      break;
  }
  auto hit = search_min_combination(items.size(), 1, pred, opts.threads);
  if (!hit) throw Error(ErrorCode::precondition, "no solution found");  // unreachable for n >= 1
  ComponentSolve out;
  out.value = hit->combo.size();
  out.tested = hit->tested;
  for (unsigned i : hit->combo) out.witness.push_back(items[i]);
  return out;
}

InvariantResult solve_vertex_invariant(const Graph& g, VertexGoal goal, const SolverOptions& opts) {
  const auto start = Clock::now();
  InvariantResult result;
  VertexWitness witness;
  for (const VertexSet& comp_set : components(g)) {
    const auto members = comp_set.to_vector();
    const Graph comp = induced_subgraph(g, comp_set);
    const auto solved = solve_vertex_component(comp, goal, opts);
    result.value += solved.value;
    result.tested += solved.tested;
    for (Vertex v : solved.witness) witness.push_back(members[v]);
  }
  std::sort(witness.begin(), witness.end());
  result.witness = std::move(witness);
  result.elapsed = Clock::now() - start;
  return result;
}

// Partition of V into parts accepted by `valid`, minimizing the part count by
// dynamic programming over vertex subsets. Each state removes a part holding
// its least vertex, so every partition is generated exactly once.
InvariantResult solve_partition(const Graph& g, const std::function<bool(std::uint32_t)>& valid) {
  const auto start = Clock::now();
  const std::size_t n = g.order();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<char> ok(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s <= full; ++s) ok[s] = valid(s) ? 1 : 0;

  constexpr std::uint8_t kUnset = 0xff;
  std::vector<std::uint8_t> best(std::size_t{1} << n, kUnset);
  std::vector<std::uint32_t> choice(std::size_t{1} << n, 0);
  best[0] = 0;
  std::uint64_t tested = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t part = sub | low;
      if (ok[part]) {
        ++tested;
        const std::uint8_t remainder = best[mask ^ part];
        if (remainder != kUnset && (best[mask] == kUnset || remainder + 1 < best[mask])) {
          best[mask] = static_cast<std::uint8_t>(remainder + 1);
          choice[mask] = part;
        }
      }
      if (sub == 0) break;
    }
  }
  InvariantResult result;
  PartitionWitness parts;
  for (std::uint32_t mask = full; mask != 0; mask ^= choice[mask]) {
    std::vector<Vertex> part;
    for (std::uint32_t s = choice[mask]; s != 0; s &= s - 1)
      part.push_back(static_cast<Vertex>(std::countr_zero(s)));
    parts.push_back(std::move(part));
  }
  result.value = parts.size();
  result.witness = std::move(parts);
  result.tested = tested;
  result.elapsed = Clock::now() - start;
  return result;
}

struct InducedShape {
  bool connected = false;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::size_t high_degree = 0;  // vertices of induced degree >= 3
};

InducedShape induced_shape(std::span<const std::uint64_t> rows, std::uint64_t mask) {
  InducedShape s;
  s.vertices = static_cast<std::size_t>(std::popcount(mask));
  if (mask == 0) return s;
  std::size_t degree_sum = 0;
  for (std::uint64_t it = mask; it != 0; it &= it - 1) {
    const auto d = static_cast<std::size_t>(
        std::popcount(rows[static_cast<std::size_t>(std::countr_zero(it))] & mask));
    degree_sum += d;
    s.max_degree = std::max(s.max_degree, d);
    if (d >= 3) ++s.high_degree;
  }
  s.edges = degree_sum / 2;
  std::uint64_t reached = mask & (~mask + 1);
  for (std::uint64_t frontier = reached; frontier != 0;) {
    std::uint64_t next = 0;
    for (std::uint64_t it = frontier; it != 0; it &= it - 1)
      next |= rows[static_cast<std::size_t>(std::countr_zero(it))];
    next &= mask & ~reached;
    reached |= next;
    frontier = next;
  }
  s.connected = reached == mask;
  return s;
}

}  // namespace

std::string invariant_name(Invariant inv) {
  switch (inv) {
    case Invariant::power_domination: return "gamma-p";
    case Invariant::zero_forcing: return "zf";
    case Invariant::domination: return "gamma";
    case Invariant::edge_domination: return "edge-gamma";
    case Invariant::path_cover: return "path-cover";
    case Invariant::spider: return "spider";
  }
  return "?";
}

InvariantResult gamma_p(const Graph& g, const SolverOptions& opts) {
  if (g.order() == 0) throw Error(ErrorCode::precondition, "gamma_p requires n >= 1");
  require_cap("gamma_p order", g.order(), kMaxPowerDominationOrder);
  return solve_vertex_invariant(g, VertexGoal::power_domination, opts);
}

InvariantResult zero_forcing_number(const Graph& g, const SolverOptions& opts) {
  require_cap("zero forcing order", g.order(), kMaxZeroForcingOrder);
  return solve_vertex_invariant(g, VertexGoal::zero_forcing, opts);
}

InvariantResult domination_number(const Graph& g, const SolverOptions& opts) {
  require_cap("domination order", g.order(), kMaxDominationOrder);
  return solve_vertex_invariant(g, VertexGoal::domination, opts);
}

InvariantResult edge_domination_number(const Graph& g, const SolverOptions& opts) {
  require_cap("edge domination size", g.size(), kMaxEdgeDominationSize);
  const auto start = Clock::now();
  const auto edges = g.edges();
  InvariantResult result;
  EdgeWitness witness;
  for (const VertexSet& comp : components(g)) {
    std::vector<Edge> local;
    for (const Edge& e : edges)
      if (comp.contains(e.u)) local.push_back(e);
    if (local.empty()) continue;
    std::vector<std::uint64_t> closed(local.size());
    for (std::size_t i = 0; i < local.size(); ++i)
      for (std::size_t j = 0; j < local.size(); ++j)
        if (i == j || local[i].shares_endpoint(local[j])) closed[i] |= std::uint64_t{1} << j;
    const std::uint64_t full = full_mask(local.size());
    auto hit = search_min_combination(
        local.size(), 1,
        [&](const Combo& c) {
          std::uint64_t covered = 0;
          for (unsigned i : c) covered |= closed[i];
          return covered == full;
        },
        opts.threads);
    result.value += hit->combo.size();
    result.tested += hit->tested;
    for (unsigned i : hit->combo) witness.push_back(local[i]);
  }
  std::sort(witness.begin(), witness.end());
  result.witness = std::move(witness);
  result.elapsed = Clock::now() - start;
  return result;
}

InvariantResult path_cover_number(const Graph& g, const SolverOptions&) {
  require_cap("path cover order", g.order(), kMaxPartitionOrder);
  const auto rows = adjacency_masks(g);
  return solve_partition(g, [&](std::uint32_t s) {
    const auto shape = induced_shape(rows, s);
    return shape.connected && shape.edges + 1 == shape.vertices && shape.max_degree <= 2;
  });
}

InvariantResult spider_number(const Graph& t, const SolverOptions&) {
  if (!is_tree(t)) throw Error(ErrorCode::precondition, "spider number requires a tree");
  require_cap("spider order", t.order(), kMaxPartitionOrder);
  const auto rows = adjacency_masks(t);
  return solve_partition(t, [&](std::uint32_t s) {
    const auto shape = induced_shape(rows, s);
    return shape.connected && shape.edges + 1 == shape.vertices && shape.high_degree <= 1;
  });
}

InvariantResult compute_invariant(Invariant inv, const Graph& g, const SolverOptions& opts) {
  switch (inv) {
    case Invariant::power_domination: return gamma_p(g, opts);
    case Invariant::zero_forcing: return zero_forcing_number(g, opts);
    case Invariant::domination: return domination_number(g, opts);
    case Invariant::edge_domination: return edge_domination_number(g, opts);
    case Invariant::path_cover: return path_cover_number(g, opts);
    case Invariant::spider: return spider_number(g, opts);
  }
  throw Error(ErrorCode::invalid_argument, "unknown invariant");
}

bool is_spider(const Graph& t) {
  if (!is_tree(t)) return false;
  std::size_t high = 0;
  for (auto d : t.degrees())
    if (d >= 3) ++high;
  return high <= 1;
}

bool is_dominating_set(const Graph& g, const VertexSet& d) {
  return closed_neighborhood(g, d) == g.vertices();
}

bool is_edge_dominating_set(const Graph& g, const std::vector<Edge>& f) {
  for (const Edge& e : g.edges()) {
    const bool covered = std::any_of(f.begin(), f.end(), [&](const Edge& x) {
      return x == e || x.shares_endpoint(e);
    });
    if (!covered) return false;
  }
  return true;
}

std::string format_witness(const InvariantResult& r) {
  std::ostringstream out;
  if (const auto* vs = std::get_if<VertexWitness>(&r.witness)) {
    for (std::size_t i = 0; i < vs->size(); ++i) out << (i ? "," : "") << (*vs)[i];
  } else if (const auto* es = std::get_if<EdgeWitness>(&r.witness)) {
    for (std::size_t i = 0; i < es->size(); ++i)
      out << (i ? "," : "") << (*es)[i].u << "-" << (*es)[i].v;
  } else {
    const auto& parts = std::get<PartitionWitness>(r.witness);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out << "|";
      for (std::size_t j = 0; j < parts[i].size(); ++j) out << (j ? "," : "") << parts[i][j];
    }
  }
  return out.str();
}

}  // namespace pdlab
