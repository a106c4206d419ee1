#include "lexcycle/cycle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lexcycle/constructions.hpp"

namespace lexcycle {

namespace {

using Key = std::vector<Vertex>;

Key key_of(const Ordering& o) { return Key(o.begin(), o.end()); }

}  // namespace

std::size_t default_max_sweeps(std::size_t n) { return std::max<std::size_t>(4 * n + 8, 64); }

CycleReport detect_cycle(SearchKind kind, const Graph& g, const Ordering& seed, std::size_t max_sweeps) {
  require_ordering_of(g, seed);
  std::vector<Ordering> trace{seed};
  std::map<Key, std::size_t> index{{key_of(seed), 0}};
  for (std::size_t j = 1; j <= max_sweeps; ++j) {
    trace.push_back(plus_sweep(kind, g, trace.back()));
    auto [it, inserted] = index.emplace(key_of(trace.back()), j);
    if (inserted) continue;
    const std::size_t i = it->second;
    CycleReport r;
    r.tail = i;
    r.cycle_length = j - i;
    r.cycle.assign(trace.begin() + static_cast<std::ptrdiff_t>(i), trace.begin() + static_cast<std::ptrdiff_t>(j));
    r.total_sweeps = j;
    return r;
  }
  throw BudgetExhausted("no repeated ordering within " + std::to_string(max_sweeps) + " sweeps", std::move(trace));
}

CycleReport detect_cycle(SearchKind kind, const Graph& g, const Ordering& seed) {
  return detect_cycle(kind, g, seed, default_max_sweeps(g.order()));
}

LexCycleResult lex_cycle(const Graph& g, std::size_t cap) {
  LexCycleResult best;
  best.witness = Ordering::identity(g.order());
  // Orderings already known to lie on a cycle, with its length.
  std::map<Key, std::size_t> on_cycle;
  auto summary = enumerate_lexbfs_orderings(g, cap, [&](const Ordering& seed) {
    ++best.seeds_examined;
    std::size_t length;
    if (auto it = on_cycle.find(key_of(seed)); it != on_cycle.end()) {
      length = it->second;
    } else {
      const auto report = detect_cycle(SearchKind::LexBFS, g, seed);
      length = report.cycle_length;
      for (const auto& o : report.cycle) on_cycle.emplace(key_of(o), length);
    }
    if (length > best.value) {
      best.value = length;
      best.witness = seed;
    }
    return true;
  });
  best.exact = !summary.truncated;
  return best;
}

OrientationResult transitive_orientation(const Graph& g, std::size_t budget, const std::optional<Ordering>& seed) {
  if (seed) require_ordering_of(g, *seed);
  OrientationResult r;
  const Ordering start = seed ? *seed : Ordering::identity(g.order());
  for (std::size_t i = 1; i <= budget; ++i) {
    r.trace.push_back(plus_sweep(SearchKind::LexBFS, g, i == 1 ? start : r.trace.back()));
    if (i >= 3 && r.trace[i - 1] == r.trace[i - 3]) {
      r.ordering = r.trace.back();
      r.sweeps_used = i;
      return r;
    }
  }
  throw BudgetExhausted("orientation did not settle within " + std::to_string(budget) + " sweeps",
                        std::move(r.trace));
}

StarjoinCycleResult starjoin_cycle_check(std::span<const StarjoinComponent> components) {
  std::vector<Graph> graphs;
  StarjoinCycleResult out;
  for (const auto& c : components) {
    graphs.push_back(c.graph);
    const auto report = detect_cycle(SearchKind::LexBFS, c.graph, c.seed);
    out.component_cycle_lengths.push_back(report.cycle_length);
    out.required_divisor = std::lcm(out.required_divisor, report.cycle_length);
  }
  const StarjoinGraph h = starjoin(graphs);
  std::vector<Vertex> seed{h.root};
  seed.insert(seed.end(), h.joins.begin(), h.joins.end());
  for (std::size_t i = 0; i < components.size(); ++i)
    for (Vertex v : components[i].seed) seed.push_back(h.components[i][static_cast<std::size_t>(v)]);
  out.graph = h.graph;
  out.seed = Ordering(std::move(seed));
  out.report = detect_cycle(SearchKind::LexBFS, out.graph, out.seed);
  out.divisible = out.report.cycle_length % out.required_divisor == 0;
  return out;
}

}  // namespace lexcycle
