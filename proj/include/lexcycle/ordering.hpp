#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lexcycle/graph.hpp"

namespace lexcycle {

/// Bijection between the vertices 0..n-1 and the positions 0..n-1.
///
/// Positions are 0-based here; position 0 is the leftmost vertex. The
/// ordering does not keep a reference to a graph, only its vertex count.
class Ordering {
 public:
  Ordering() = default;
  /// Throws GraphError unless `sequence` is a permutation of 0..n-1.
  explicit Ordering(std::vector<Vertex> sequence);

  static Ordering identity(std::size_t n);

  std::size_t size() const { return sequence_.size(); }
  std::span<const Vertex> sequence() const { return sequence_; }
  Vertex at(std::size_t position) const { return sequence_.at(position); }
  Vertex front() const { return sequence_.front(); }
  Vertex back() const { return sequence_.back(); }
  std::size_t position(Vertex v) const { return position_.at(static_cast<std::size_t>(v)); }
  bool before(Vertex u, Vertex v) const { return position(u) < position(v); }

  /// The reversed ordering.
  Ordering dual() const;

  /// Ordering of `subset` induced by this ordering, re-indexed onto the
  /// induced subgraph: the k-th smallest member of `subset` becomes vertex k.
  Ordering restrict_to(std::span<const Vertex> subset) const;

  auto begin() const { return sequence_.begin(); }
  auto end() const { return sequence_.end(); }

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::size_t> position_;
};

/// Smallest position at which the two orderings differ, if any.
/// Throws GraphError when the sizes differ.
std::optional<std::size_t> first_difference(const Ordering& a, const Ordering& b);

/// Throws GraphError unless `o` orders exactly the vertices of `g`.
void require_ordering_of(const Graph& g, const Ordering& o);

/// Blocks of `partition` listed by the position of their first member in `o`.
std::vector<std::size_t> blocks_by_first_member(const ModularPartition& partition, const Ordering& o);
/// Blocks of `partition` listed by the position of their last member in `o`.
/// This is the block order the + rule sees: a block competes through its
/// rightmost member.
std::vector<std::size_t> blocks_by_last_member(const ModularPartition& partition, const Ordering& o);

}  // namespace lexcycle
