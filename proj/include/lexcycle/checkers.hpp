#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lexcycle/graph.hpp"
#include "lexcycle/ordering.hpp"

namespace lexcycle {

enum class ViolationKind {
  ProperInterval,
  Interval,
  Cocomparability,
  LexBfs4pc,
  Transitivity,
  Flip,
};

std::string_view to_string(ViolationKind kind);

/// A failed ordering condition. Witness vertices are listed in the order of
/// the checked ordering: a triple (a, b, c) with a before b before c, or a
/// pair for the flip check.
struct OrderViolation {
  ViolationKind kind;
  std::vector<Vertex> witness;
};

using CheckResult = std::optional<OrderViolation>;

// Each checker returns std::nullopt when the ordering satisfies the
// condition, otherwise the violation with the lexicographically smallest
// tuple of positions. All throw GraphError if the ordering size does not
// match the graph.

/// For a < b < c: ac in E implies ab and bc in E.
CheckResult check_pi_order(const Graph& g, const Ordering& o);
/// For a < b < c: ac in E implies ab in E.
CheckResult check_i_order(const Graph& g, const Ordering& o);
/// For a < b < c: ac in E implies ab or bc in E.
CheckResult check_cocomp_order(const Graph& g, const Ordering& o);
/// Every triple a < b < c with ac in E and ab not in E has some d < a with
/// db in E and dc not in E. Exactly the LexBFS orderings pass.
CheckResult check_lexbfs_4pc(const Graph& g, const Ordering& o);

/// Orients every non-edge uv as u -> v when u precedes v and checks that
/// the orientation of the complement is transitive. Witness (u, v, w) with
/// u -> v -> w and uw an edge of g.
CheckResult validate_transitive_orientation(const Graph& g, const Ordering& o);

/// Every non-adjacent pair must appear in opposite orders in `before` and
/// `after`. Witness is the offending pair in `before` order.
CheckResult flipping_check(const Graph& g, const Ordering& before, const Ordering& after);

/// Brute-force triple and quadruple scans. The checkers above take faster
/// routes and must agree with these.
namespace reference {
CheckResult check_pi_order(const Graph& g, const Ordering& o);
CheckResult check_i_order(const Graph& g, const Ordering& o);
CheckResult check_cocomp_order(const Graph& g, const Ordering& o);
CheckResult check_lexbfs_4pc(const Graph& g, const Ordering& o);
}  // namespace reference

/// Leftmost vertex d (in o) adjacent to a but not to b, d != b.
std::optional<Vertex> lmpn(const Graph& g, const Ordering& o, Vertex a, Vertex b);

struct CliqueSplit {
  /// Largest i such that the first i vertices form a clique.
  std::size_t prefix = 0;
  /// Whether the remaining vertices form a clique as well.
  bool suffix_is_clique = false;
};

/// std::nullopt only for the empty graph.
std::optional<CliqueSplit> clique_split(const Graph& g, const Ordering& o);

// Asteroidal sets -----------------------------------------------------------

/// For every a in A, A \ {a} lies in one connected component of G - N[a].
/// Sets of size <= 1 are asteroidal.
bool is_asteroidal_set(const Graph& g, std::span<const Vertex> set);

struct AsteroidalResult {
  std::size_t value = 0;
  std::vector<Vertex> witness;
  /// False when the search stopped at the size cap: `value` is a lower bound.
  bool exact = true;
};

/// Maximum size of an asteroidal set, by growing asteroidal sets one vertex
/// at a time (every subset of an asteroidal set is asteroidal). Sets are
/// never grown past `size_cap`.
AsteroidalResult asteroidal_number(const Graph& g, std::size_t size_cap = 64);

// Induced patterns -----------------------------------------------------------

/// Injective map from pattern vertices to g vertices realizing `pattern` as
/// an induced subgraph of g, or std::nullopt.
std::optional<std::vector<Vertex>> find_induced_subgraph(const Graph& g, const Graph& pattern);
std::optional<std::vector<Vertex>> find_induced_domino(const Graph& g);
std::optional<std::vector<Vertex>> find_induced_ladder(const Graph& g, int k);
std::optional<std::vector<Vertex>> find_induced_c4(const Graph& g);

}  // namespace lexcycle
