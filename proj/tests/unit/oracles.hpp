#pragma once

// Deliberately naive reimplementations used as test oracles. They only rely
// on Graph::adjacent/order/name and never call library algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "lexcycle/graph.hpp"
#include "lexcycle/graph_io.hpp"
#include "lexcycle/ordering.hpp"
#include "lexcycle/sweep.hpp"

namespace oracle {

using lexcycle::Graph;
using lexcycle::Ordering;
using lexcycle::SearchKind;
using lexcycle::Vertex;
using Seq = std::vector<Vertex>;

inline Seq seq_of(const Ordering& o) { return Seq(o.begin(), o.end()); }

inline Seq names_to_seq(const Graph& g, const std::string& text) {
  std::istringstream in(text);
  Seq out;
  for (std::string t; in >> t;) out.push_back(g.index_of(t));
  return out;
}

inline Ordering order(const Graph& g, const std::string& text) { return Ordering(names_to_seq(g, text)); }

inline std::string names(const Graph& g, const Ordering& o) {
  std::string s;
  for (Vertex v : o) s += (s.empty() ? "" : " ") + g.name(v);
  return s;
}

/// Label-word search. LexBFS appends n - i, LexDFS prepends i, both pick the
/// largest word. BFS keys every vertex by the number of its earliest numbered
/// neighbour and picks the smallest. Ties go to the rightmost vertex of
/// `tiebreak`.
inline Seq plus_sweep(SearchKind kind, const Graph& g, const Seq& tiebreak) {
  const int n = static_cast<int>(g.order());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[tiebreak[i]] = i;
  std::vector<std::vector<int>> label(n);
  std::vector<int> first_parent(n, n + 1);
  std::vector<bool> done(n, false);
  Seq out;
  for (int i = 1; i <= n; ++i) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      bool better;
      if (kind == SearchKind::BFS) {
        better = first_parent[v] < first_parent[best] ||
                 (first_parent[v] == first_parent[best] && pos[v] > pos[best]);
      } else {
        better = label[v] > label[best] || (label[v] == label[best] && pos[v] > pos[best]);
      }
      if (better) best = v;
    }
    done[best] = true;
    out.push_back(best);
    for (int w = 0; w < n; ++w) {
      if (done[w] || !g.adjacent(best, w)) continue;
      if (kind == SearchKind::LexBFS) label[w].push_back(n - i);
      if (kind == SearchKind::LexDFS) label[w].insert(label[w].begin(), i);
      if (kind == SearchKind::BFS) first_parent[w] = std::min(first_parent[w], i);
    }
  }
  return out;
}

struct Cycle {
  std::size_t tail = 0;
  std::size_t length = 0;
};

/// Iterates plus_sweep and finds the first repeat by linear search.
inline Cycle find_cycle(SearchKind kind, const Graph& g, const Seq& seed, std::size_t budget = 1000) {
  std::vector<Seq> seen{seed};
  for (std::size_t j = 1; j <= budget; ++j) {
    Seq next = plus_sweep(kind, g, seen.back());
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (seen[i] == next) return {i, j - i};
    seen.push_back(std::move(next));
  }
  return {};
}

/// Four-point condition by quadruple loops over positions.
inline bool is_lexbfs_ordering(const Graph& g, const Seq& s) {
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!g.adjacent(s[a], s[c]) || g.adjacent(s[a], s[b])) continue;
        bool found = false;
        for (std::size_t d = 0; d < a && !found; ++d) found = g.adjacent(s[d], s[b]) && !g.adjacent(s[d], s[c]);
        if (!found) return false;
      }
  return true;
}

inline bool is_cocomp_ordering(const Graph& g, const Seq& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      for (std::size_t c = b + 1; c < s.size(); ++c)
        if (g.adjacent(s[a], s[c]) && !g.adjacent(s[a], s[b]) && !g.adjacent(s[b], s[c])) return false;
  return true;
}

/// Calls `visit` on every permutation of 0..n-1.
inline void for_each_permutation(std::size_t n, const std::function<void(const Seq&)>& visit) {
  Seq s(n);
  std::iota(s.begin(), s.end(), 0);
  do visit(s);
  while (std::next_permutation(s.begin(), s.end()));
}

/// Component labels of G - removed, by flood fill.
inline std::vector<int> components_without(const Graph& g, const std::vector<bool>& removed) {
  const int n = static_cast<int>(g.order());
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (!removed[w] && comp[w] < 0 && g.adjacent(u, w)) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

inline bool is_asteroidal(const Graph& g, const Seq& set) {
  for (Vertex a : set) {
    std::vector<bool> removed(g.order(), false);
    removed[a] = true;
    for (Vertex w = 0; w < static_cast<Vertex>(g.order()); ++w)
      if (g.adjacent(a, w)) removed[w] = true;
    const auto comp = components_without(g, removed);
    int label = -2;
    for (Vertex b : set) {
      if (b == a) continue;
      if (comp[b] < 0) return false;
      if (label == -2) label = comp[b];
      if (comp[b] != label) return false;
    }
  }
  return true;
}

/// Whether some k-subset is asteroidal, by plain combination enumeration.
inline bool has_asteroidal_set(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (k > n) return false;
  Seq pick(k);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == k) return is_asteroidal(g, pick);
    for (std::size_t v = from; v + (k - depth) <= n; ++v) {
      pick[depth] = static_cast<Vertex>(v);
      if (rec(depth + 1, v + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

/// Largest k with an asteroidal k-set, trying k = 1, 2, ... until none.
inline std::size_t asteroidal_number(const Graph& g) {
  std::size_t k = 0;
  while (has_asteroidal_set(g, k + 1)) ++k;
  return k;
}

/// All-pairs distances by repeated BFS over the adjacency predicate.
inline std::vector<std::vector<int>> all_distances(const Graph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w = 0; w < n; ++w)
        if (d[s][w] < 0 && g.adjacent(u, w)) {
          d[s][w] = d[s][u] + 1;
          q.push(w);
        }
    }
  }
  return d;
}

/// Whether some bijection maps a onto b, trying all permutations.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  bool found = false;
  for_each_permutation(a.order(), [&](const Seq& p) {
    if (found) return;
    for (Vertex u = 0; u < static_cast<Vertex>(a.order()); ++u)
      for (Vertex v = u + 1; v < static_cast<Vertex>(a.order()); ++v)
        if (a.adjacent(u, v) != b.adjacent(p[u], p[v])) return;
    found = true;
  });
  return found;
}

/// Random simple graph with vertices v0.. and edge probability p, from a
/// plain LCG so the oracle does not share the library generator.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::uint64_t x = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  auto next = [&] {
    x = x * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(x >> 11) * 0x1.0p-53;
  };
  lexcycle::GraphBuilder b;
  b.add_vertices("v", n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (next() < p) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

inline Seq random_permutation(std::size_t n, std::uint64_t seed) {
  Seq s(n);
  std::iota(s.begin(), s.end(), 0);
  std::uint64_t x = seed ^ 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = n; i > 1; --i) {
    x = x * 6364136223846793005ULL + 1442695040888963407ULL;
    std::swap(s[i - 1], s[(x >> 33) % i]);
  }
  return s;
}

}  // namespace oracle
