#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "lexcycle/graph.hpp"
#include "lexcycle/ordering.hpp"

namespace lexcycle {

enum class SearchKind { LexBFS, LexDFS, BFS };

enum class Engine {
  /// Explicit label words, compared letter by letter. Slow; the oracle.
  Reference,
  /// Ordered tie-classes refined by each numbered vertex. O(n + m) per
  /// LexBFS or BFS sweep.
  PartitionRefinement,
};

std::string_view to_string(SearchKind kind);
/// Accepts "lexbfs", "lexdfs", "bfs", optionally suffixed with '+'.
std::optional<SearchKind> parse_search_kind(std::string_view text);

/// One search of kind `kind` on `g` where every tie between vertices with
/// the best label is broken in favour of the vertex rightmost in
/// `tiebreak`. Deterministic.
///
/// LexBFS labels append n - i when the i-th vertex is numbered and prefer
/// the lexicographically largest word. LexDFS labels prepend i. BFS prefers
/// the vertex whose earliest numbered neighbour is earliest, i.e. queue
/// order. With no labelled candidate left, every search starts the next
/// component at the rightmost unnumbered vertex of `tiebreak`.
Ordering plus_sweep(SearchKind kind, const Graph& g, const Ordering& tiebreak,
                    Engine engine = Engine::PartitionRefinement);

/// Search with ties broken by `tiebreak`, defaulting to the input order of
/// `g`. Equal to plus_sweep(kind, g, tiebreak).
Ordering first_sweep(SearchKind kind, const Graph& g, const std::optional<Ordering>& tiebreak = std::nullopt,
                     Engine engine = Engine::PartitionRefinement);

struct SweepTrace {
  SearchKind search;
  Ordering seed;
  /// orderings[0] = plus_sweep(seed), orderings[i + 1] = plus_sweep(orderings[i]).
  std::vector<Ordering> orderings;
};

SweepTrace sweep_sequence(SearchKind kind, const Graph& g, const Ordering& seed, std::size_t count,
                          Engine engine = Engine::PartitionRefinement);

struct EnumerationSummary {
  std::size_t emitted = 0;
  /// Set when the graph has more LexBFS orderings than the cap, or when the
  /// visitor stopped early. The emitted prefix is still valid.
  bool truncated = false;
};

/// Visits every LexBFS ordering of `g` exactly once, in backtracking order
/// (candidates tried by increasing vertex index). The visitor returns false
/// to stop. At most `cap` orderings are emitted.
EnumerationSummary enumerate_lexbfs_orderings(const Graph& g, std::size_t cap,
                                              const std::function<bool(const Ordering&)>& visit);

/// Convenience wrapper collecting the stream.
std::vector<Ordering> all_lexbfs_orderings(const Graph& g, std::size_t cap, bool* truncated = nullptr);

}  // namespace lexcycle
