#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexcycle {

/// Dense vertex index. Index i is the i-th vertex of the graph's input order.
using Vertex = int;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph with named vertices and a stable input order.
///
/// Immutable once built; use GraphBuilder to construct one. Neighbour lists
/// are stored in CSR form and sorted by vertex index.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return names_.size(); }
  std::size_t size() const { return adjacency_.size() / 2; }

  const std::string& name(Vertex v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Vertex> find(std::string_view name) const;
  /// Like find(), but throws GraphError for an unknown name.
  Vertex index_of(std::string_view name) const;

  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    const auto i = static_cast<std::size_t>(v);
    return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::vector<Vertex> closed_neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Every edge once, as (min, max) pairs sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < order(); }
  void check(Vertex v) const {
    if (!contains(v)) throw GraphError("vertex index " + std::to_string(v) + " out of range");
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  friend class GraphBuilder;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Accumulates vertices and edges, then freezes them into a Graph.
/// Duplicate edges are merged; self-loops and duplicate vertex declarations
/// are rejected.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::size_t expected_vertices) { names_.reserve(expected_vertices); }

  /// Declares a new vertex. Throws GraphError if the name exists.
  Vertex add_vertex(std::string name);
  /// Returns the existing vertex with this name, or declares it.
  Vertex ensure_vertex(std::string_view name);
  /// Declares `count` vertices named prefix0, prefix1, ...
  void add_vertices(std::string_view prefix, std::size_t count);

  void add_edge(Vertex u, Vertex v);
  void add_edge(std::string_view u, std::string_view v);

  std::optional<Vertex> find(std::string_view name) const;
  std::size_t vertex_count() const { return names_.size(); }

  Graph build() &&;
  Graph build() const&;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Distance value for vertices in different components.
inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);
std::size_t distance(const Graph& g, Vertex u, Vertex v);
/// Maximum pairwise distance. Throws GraphError on a disconnected graph.
std::size_t diameter(const Graph& g);
bool is_connected(const Graph& g);

Graph complement(const Graph& g);

/// Subgraph induced by `subset`. Vertex k of the result is the k-th smallest
/// index of `subset`, so the parent's input order is inherited.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

bool is_module(const Graph& g, std::span<const Vertex> members);
bool is_clique(const Graph& g, std::span<const Vertex> members);

/// Partition of V(G) into modules. Blocks are validated on construction and
/// normalized: members sorted, blocks sorted by their smallest member.
class ModularPartition {
 public:
  ModularPartition(const Graph& g, std::vector<std::vector<Vertex>> blocks);

  /// {members} plus one singleton block per remaining vertex.
  static ModularPartition around(const Graph& g, std::vector<Vertex> members);

  std::size_t size() const { return blocks_.size(); }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  const std::vector<Vertex>& block(std::size_t i) const { return blocks_.at(i); }
  std::size_t block_of(Vertex v) const { return owner_.at(static_cast<std::size_t>(v)); }

 private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> owner_;
};

/// One vertex per block, in block order. A singleton block keeps its
/// member's name; larger blocks are named by joining member names with '+'.
Graph quotient_graph(const Graph& g, const ModularPartition& partition);

}  // namespace lexcycle
