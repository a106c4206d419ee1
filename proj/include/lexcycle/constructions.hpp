#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexcycle/graph.hpp"
#include "lexcycle/ordering.hpp"

namespace lexcycle {

/// A graph with named orderings ("sigma1", "mu1", "tau", ...).
struct Fixture {
  Graph graph;
  std::map<std::string, Ordering> orderings;

  const Ordering& ordering(const std::string& label) const;
};

/// Nine-vertex graph whose LexBFS+ sweeps from sigma1 cycle with period 3.
/// Orderings sigma1, sigma2, sigma3.
Fixture fixture_g3();
/// Twelve-vertex graph whose LexBFS+ sweeps from mu1 cycle with period 4.
/// Orderings mu1..mu4.
Fixture fixture_g4();
/// Seven-vertex cocomparability graph whose LexDFS+ sweeps cycle with
/// period 4 through non-cocomparability orderings. Orderings sigma1..sigma4
/// and the cocomparability witness tau.
Fixture fixture_lexdfs_example();

struct StarjoinGraph {
  Graph graph;
  Vertex root = -1;
  /// joins[i] is the universal vertex added to component i.
  std::vector<Vertex> joins;
  /// components[i][v] is the vertex of the result standing for vertex v of
  /// component i.
  std::vector<std::vector<Vertex>> components;
};

/// Adds a universal vertex g_i to every component and a root r adjacent to
/// all g_i. Vertex order: r, g1..gk, then the components in turn. Component
/// vertices keep their names unless names collide, in which case every
/// component vertex is renamed "<i>.<name>" (i counted from 1).
StarjoinGraph starjoin(std::span<const Graph> components);

Graph gen_domino();
/// k chained 4-cycles on x, y, x1..xk, y1..yk. Throws GraphError for k < 1.
Graph gen_ladder(int k);
/// Comparability graph on chains a1..an and x, y, b1..bn, with ordering
/// "tau" (a cocomparability ordering of its complement). Throws GraphError
/// for n < 2.
Fixture gen_two_chain(int n);

Graph gen_complete(std::size_t n, const std::string& prefix = "v");
Graph gen_path(std::size_t n, const std::string& prefix = "v");
Graph gen_cycle(std::size_t n, const std::string& prefix = "v");
Graph gen_edgeless(std::size_t n, const std::string& prefix = "v");
/// Star K_{1,leaves}: center "c", leaves l0...
Graph gen_star(std::size_t leaves);
/// Claw with every edge subdivided once.
Graph gen_subdivided_claw();

/// A generated graph with the ordering its construction certifies, if any.
struct GeneratedGraph {
  Graph graph;
  std::optional<Ordering> witness;
};

/// Intersection graph of n random unit intervals; witness = left-endpoint
/// order, a proper-interval order.
GeneratedGraph gen_unit_interval(std::size_t n, std::uint64_t seed);
/// Intersection graph of n random intervals; witness = left-endpoint order.
GeneratedGraph gen_interval(std::size_t n, std::uint64_t seed);
/// Vertices v0..v(n-1), edge ij iff the random permutation inverts i < j.
/// Witness = identity, a cocomparability ordering.
GeneratedGraph gen_permutation_graph(std::size_t n, std::uint64_t seed);
/// Cliques a0..a(p-1) and b0..b(q-1), cross edges with probability
/// `density`. Witness = all a's then all b's.
GeneratedGraph gen_cobipartite(std::size_t p, std::size_t q, double density, std::uint64_t seed);
/// Uniform random labelled tree from a Pruefer sequence.
GeneratedGraph gen_tree(std::size_t n, std::uint64_t seed);
/// Erdos-Renyi G(n, p).
GeneratedGraph gen_gnp(std::size_t n, double p, std::uint64_t seed);
/// Uniform graph with exactly m edges, drawn by rejection; for large sparse
/// inputs.
GeneratedGraph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

/// Random graph assembled from a random quotient on `blocks` blocks, each
/// block filled with a random graph; every block is a module by construction.
struct PlantedModules {
  Graph graph;
  std::vector<std::vector<Vertex>> blocks;
};
PlantedModules gen_planted_modules(std::size_t blocks, std::size_t max_block_size, double p, std::uint64_t seed);

/// Uniformly random permutation of 0..n-1 as an ordering.
Ordering random_ordering(std::size_t n, std::uint64_t seed);

}  // namespace lexcycle
