#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lexcycle/graph.hpp"
#include "lexcycle/ordering.hpp"
#include "lexcycle/sweep.hpp"

namespace lexcycle {

/// Where iterated + sweeps from a seed end up.
///
/// The seed counts as sweep 0. `cycle` lists the orderings of the periodic
/// part in sweep order, starting with the first ordering that recurs, so
/// plus_sweep(cycle[i]) == cycle[(i + 1) % cycle_length].
struct CycleReport {
  std::size_t tail = 0;
  std::size_t cycle_length = 0;
  std::vector<Ordering> cycle;
  std::size_t total_sweeps = 0;
};

/// Thrown when a sweep budget runs out. Carries every ordering computed so
/// far (seed first).
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::vector<Ordering> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<Ordering>& trace() const { return trace_; }

 private:
  std::vector<Ordering> trace_;
};

/// max(4n + 8, 64).
std::size_t default_max_sweeps(std::size_t n);

CycleReport detect_cycle(SearchKind kind, const Graph& g, const Ordering& seed, std::size_t max_sweeps);
CycleReport detect_cycle(SearchKind kind, const Graph& g, const Ordering& seed);

struct LexCycleResult {
  std::size_t value = 0;
  /// First seed in enumeration order reaching `value`.
  Ordering witness;
  /// False when the LexBFS enumeration was capped: `value` is a lower bound.
  bool exact = true;
  std::size_t seeds_examined = 0;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Longest LexBFS+ cycle over all seeds. Every cycle contains a LexBFS
/// ordering, so seeding with each LexBFS ordering of `g` is exhaustive.
LexCycleResult lex_cycle(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

struct OrientationResult {
  /// The last ordering computed; plus_sweep of it equals the one before.
  Ordering ordering;
  /// Index i of the returned ordering, counting the first sweep as 1.
  std::size_t sweeps_used = 0;
  /// All computed orderings, trace[k] being sweep k + 1.
  std::vector<Ordering> trace;
};

/// Repeated LexBFS+ sweeps until an ordering equals the one two sweeps
/// earlier. The first sweep uses `seed` as tiebreak (input order when
/// absent). Throws BudgetExhausted after `budget` sweeps without stopping.
OrientationResult transitive_orientation(const Graph& g, std::size_t budget,
                                         const std::optional<Ordering>& seed = std::nullopt);

struct StarjoinComponent {
  Graph graph;
  Ordering seed;
};

struct StarjoinCycleResult {
  Graph graph;
  /// r, g1..gk, then each component seed in turn.
  Ordering seed;
  std::vector<std::size_t> component_cycle_lengths;
  /// lcm of the component cycle lengths.
  std::size_t required_divisor = 1;
  CycleReport report;
  bool divisible = false;
};

StarjoinCycleResult starjoin_cycle_check(std::span<const StarjoinComponent> components);

}  // namespace lexcycle
