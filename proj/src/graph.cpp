#include "lexcycle/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace lexcycle {

std::optional<Vertex> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw GraphError("unknown vertex '" + std::string(name) + "'");
}

std::vector<Vertex> Graph::closed_neighbors(Vertex v) const {
  auto open = neighbors(v);
  std::vector<Vertex> out(open.begin(), open.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check(v);
  auto nu = neighbors(u);
  if (nu.size() > degree(v)) {
    auto nv = neighbors(v);
    return std::binary_search(nv.begin(), nv.end(), u);
  }
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(size());
  for (Vertex u = 0; u < static_cast<Vertex>(order()); ++u)
    for (Vertex w : neighbors(u))
      if (u < w) out.emplace_back(u, w);
  return out;
}

Vertex GraphBuilder::add_vertex(std::string name) {
  if (name.empty()) throw GraphError("empty vertex name");
  auto v = static_cast<Vertex>(names_.size());
  auto [it, inserted] = index_.emplace(name, v);
  if (!inserted) throw GraphError("duplicate vertex '" + name + "'");
  names_.push_back(std::move(name));
  return v;
}

Vertex GraphBuilder::ensure_vertex(std::string_view name) {
  if (auto v = find(name)) return *v;
  return add_vertex(std::string(name));
}

void GraphBuilder::add_vertices(std::string_view prefix, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) add_vertex(std::string(prefix) + std::to_string(i));
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  const auto n = static_cast<Vertex>(names_.size());
  if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("self-loop on '" + names_[static_cast<std::size_t>(u)] + "'");
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

void GraphBuilder::add_edge(std::string_view u, std::string_view v) {
  auto fu = find(u);
  auto fv = find(v);
  if (!fu) throw GraphError("unknown vertex '" + std::string(u) + "'");
  if (!fv) throw GraphError("unknown vertex '" + std::string(v) + "'");
  add_edge(*fu, *fv);
}

std::optional<Vertex> GraphBuilder::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Graph GraphBuilder::build() const& {
  GraphBuilder copy = *this;
  return std::move(copy).build();
}

Graph GraphBuilder::build() && {
  Graph g;
  const std::size_t n = names_.size();
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : edges_) {
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (min, max), so both passes fill each list in
  // increasing order: smaller neighbours arrive as the max endpoint first.
  for (auto [u, v] : edges_) g.adjacency_[fill[static_cast<std::size_t>(v)]++] = u;
  for (auto [u, v] : edges_) g.adjacency_[fill[static_cast<std::size_t>(u)]++] = v;

  g.names_ = std::move(names_);
  g.index_ = std::move(index_);
  names_.clear();
  index_.clear();
  edges_.clear();
  return g;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  g.check(source);
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      auto& d = dist[static_cast<std::size_t>(w)];
      if (d == kUnreachable) {
        d = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t distance(const Graph& g, Vertex u, Vertex v) {
  g.check(v);
  return bfs_distances(g, u)[static_cast<std::size_t>(v)];
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreachable; });
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == kUnreachable) throw GraphError("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (const auto& name : g.names()) b.add_vertex(name);
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    auto it = std::upper_bound(nu.begin(), nu.end(), u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (it != nu.end() && *it == v) {
        ++it;
        continue;
      }
      b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

namespace {

std::vector<Vertex> sorted_unique(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> s(subset.begin(), subset.end());
  for (Vertex v : s) g.check(v);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw GraphError("repeated vertex in vertex set");
  return s;
}

}  // namespace

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  auto members = sorted_unique(g, subset);
  std::vector<Vertex> local(g.order(), -1);
  GraphBuilder b(members.size());
  for (Vertex v : members) local[static_cast<std::size_t>(v)] = b.add_vertex(g.name(v));
  for (Vertex v : members)
    for (Vertex w : g.neighbors(v))
      if (v < w && local[static_cast<std::size_t>(w)] >= 0)
        b.add_edge(local[static_cast<std::size_t>(v)], local[static_cast<std::size_t>(w)]);
  return std::move(b).build();
}

bool is_module(const Graph& g, std::span<const Vertex> members) {
  auto m = sorted_unique(g, members);
  if (m.empty()) throw GraphError("module test on an empty set");
  std::vector<char> inside(g.order(), 0);
  for (Vertex v : m) inside[static_cast<std::size_t>(v)] = 1;
  // Count, for every outside vertex, how many members it sees.
  std::vector<std::size_t> hits(g.order(), 0);
  for (Vertex v : m)
    for (Vertex w : g.neighbors(v))
      if (!inside[static_cast<std::size_t>(w)]) ++hits[static_cast<std::size_t>(w)];
  for (std::size_t w = 0; w < g.order(); ++w)
    if (!inside[w] && hits[w] != 0 && hits[w] != m.size()) return false;
  return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.adjacent(members[i], members[j])) return false;
  return true;
}

ModularPartition::ModularPartition(const Graph& g, std::vector<std::vector<Vertex>> blocks) {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  owner_.assign(g.order(), kNone);
  for (auto& block : blocks) {
    if (block.empty()) throw GraphError("empty block in modular partition");
    block = sorted_unique(g, block);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Vertex v : blocks[i]) {
      auto& o = owner_[static_cast<std::size_t>(v)];
      if (o != kNone) throw GraphError("vertex '" + g.name(v) + "' appears in two blocks");
      o = i;
    }
  }
  for (std::size_t v = 0; v < owner_.size(); ++v)
    if (owner_[v] == kNone) throw GraphError("vertex '" + g.name(static_cast<Vertex>(v)) + "' is in no block");
  for (const auto& block : blocks)
    if (!is_module(g, block)) throw GraphError("block containing '" + g.name(block.front()) + "' is not a module");
  blocks_ = std::move(blocks);
}

ModularPartition ModularPartition::around(const Graph& g, std::vector<Vertex> members) {
  std::vector<char> taken(g.order(), 0);
  for (Vertex v : members) {
    g.check(v);
    taken[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<std::vector<Vertex>> blocks{std::move(members)};
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!taken[v]) blocks.push_back({static_cast<Vertex>(v)});
  return ModularPartition(g, std::move(blocks));
}

Graph quotient_graph(const Graph& g, const ModularPartition& partition) {
  GraphBuilder b(partition.size());
  for (const auto& block : partition.blocks()) {
    std::string name = g.name(block.front());
    for (std::size_t i = 1; i < block.size(); ++i) name += "+" + g.name(block[i]);
    b.add_vertex(std::move(name));
  }
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (Vertex w : g.neighbors(partition.block(i).front())) {
      std::size_t j = partition.block_of(w);
      if (j == i) continue;
      b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return std::move(b).build();
}

}  // namespace lexcycle
