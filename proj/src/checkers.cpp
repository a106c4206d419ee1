#include "lexcycle/checkers.hpp"

#include <algorithm>
#include <deque>

#include "adjacency_matrix.hpp"
#include "lexcycle/constructions.hpp"

namespace lexcycle {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::ProperInterval: return "pi";
    case ViolationKind::Interval: return "interval";
    case ViolationKind::Cocomparability: return "cocomp";
    case ViolationKind::LexBfs4pc: return "lexbfs4pc";
    case ViolationKind::Transitivity: return "transitive";
    case ViolationKind::Flip: return "flip";
  }
  return "?";
}

namespace {

OrderViolation triple(ViolationKind kind, const Ordering& o, std::size_t i, std::size_t j, std::size_t k) {
  return {kind, {o.at(i), o.at(j), o.at(k)}};
}

enum class TripleRule { ProperInterval, Interval, Cocomparability };

CheckResult scan_triples(const Graph& g, const Ordering& o, TripleRule rule) {
  require_ordering_of(g, o);
  const auto adj = PositionAdjacency(g, o);
  const std::size_t n = o.size();
  const auto kind = rule == TripleRule::ProperInterval ? ViolationKind::ProperInterval
                    : rule == TripleRule::Interval     ? ViolationKind::Interval
                                                       : ViolationKind::Cocomparability;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!adj(i, k)) continue;
        const bool ij = adj(i, j);
        const bool jk = adj(j, k);
        const bool ok = rule == TripleRule::ProperInterval ? (ij && jk) : rule == TripleRule::Interval ? ij : (ij || jk);
        if (!ok) return triple(kind, o, i, j, k);
      }
  return std::nullopt;
}

// Right (or left) neighbours of every vertex occupy the positions directly
// next to it. This is the umbrella property behind the I and PI orders.
bool neighbours_contiguous(const Graph& g, const Ordering& o, bool rightwards) {
  for (std::size_t p = 0; p < o.size(); ++p) {
    std::size_t count = 0;
    std::size_t reach = p;
    for (Vertex w : g.neighbors(o.at(p))) {
      const std::size_t q = o.position(w);
      if (rightwards ? q > p : q < p) {
        ++count;
        reach = rightwards ? std::max(reach, q) : std::min(reach, q);
      }
    }
    if (count != (rightwards ? reach - p : p - reach)) return false;
  }
  return true;
}

}  // namespace

namespace reference {

CheckResult check_pi_order(const Graph& g, const Ordering& o) { return scan_triples(g, o, TripleRule::ProperInterval); }
CheckResult check_i_order(const Graph& g, const Ordering& o) { return scan_triples(g, o, TripleRule::Interval); }
CheckResult check_cocomp_order(const Graph& g, const Ordering& o) {
  return scan_triples(g, o, TripleRule::Cocomparability);
}

CheckResult check_lexbfs_4pc(const Graph& g, const Ordering& o) {
  require_ordering_of(g, o);
  const auto adj = PositionAdjacency(g, o);
  const std::size_t n = o.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (adj(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!adj(a, c)) continue;
        bool found = false;
        for (std::size_t d = 0; d < a && !found; ++d) found = adj(d, b) && !adj(d, c);
        if (!found) return triple(ViolationKind::LexBfs4pc, o, a, b, c);
      }
    }
  return std::nullopt;
}

}  // namespace reference

CheckResult check_pi_order(const Graph& g, const Ordering& o) {
  require_ordering_of(g, o);
  if (neighbours_contiguous(g, o, true) && neighbours_contiguous(g, o, false)) return std::nullopt;
  return reference::check_pi_order(g, o);
}

CheckResult check_i_order(const Graph& g, const Ordering& o) {
  require_ordering_of(g, o);
  if (neighbours_contiguous(g, o, true)) return std::nullopt;
  return reference::check_i_order(g, o);
}

CheckResult check_cocomp_order(const Graph& g, const Ordering& o) {
  require_ordering_of(g, o);
  const auto adj = PositionAdjacency(g, o);
  // Every edge (i, k) needs all positions strictly between covered by
  // N(i) or N(k); checked word by word.
  bool ok = true;
  for (std::size_t i = 0; i < o.size() && ok; ++i)
    for (Vertex w : g.neighbors(o.at(i))) {
      const std::size_t k = o.position(w);
      if (k > i + 1 && !adj.union_covers(i, k, i + 1, k)) {
        ok = false;
        break;
      }
    }
  if (ok) return std::nullopt;
  return reference::check_cocomp_order(g, o);
}

CheckResult check_lexbfs_4pc(const Graph& g, const Ordering& o) {
  require_ordering_of(g, o);
  const auto adj = PositionAdjacency(g, o);
  const std::size_t n = o.size();
  // For each pair b < c, every bad a (ac in E, ab not in E) must lie to the
  // right of the leftmost private neighbour of b with respect to c.
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = b + 1; c < n; ++c) {
      std::size_t first_private = b;
      for (std::size_t d = 0; d < b; ++d)
        if (adj(d, b) && !adj(d, c)) {
          first_private = d;
          break;
        }
      for (std::size_t a = 0; a < b; ++a) {
        if (a > first_private) break;
        if (adj(a, c) && !adj(a, b)) return reference::check_lexbfs_4pc(g, o);
      }
    }
  return std::nullopt;
}

CheckResult validate_transitive_orientation(const Graph& g, const Ordering& o) {
  require_ordering_of(g, o);
  const Graph co = complement(g);
  const std::size_t n = o.size();
  // Complement arcs point rightwards.
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (Vertex w : co.neighbors(o.at(p)))
      if (o.position(w) > p) out[p].push_back(o.position(w));
    std::sort(out[p].begin(), out[p].end());
  }
  const auto co_adj = PositionAdjacency(co, o);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : out[u])
      for (std::size_t w : out[v])
        if (!co_adj(u, w)) return triple(ViolationKind::Transitivity, o, u, v, w);
  return std::nullopt;
}

CheckResult flipping_check(const Graph& g, const Ordering& before, const Ordering& after) {
  require_ordering_of(g, before);
  require_ordering_of(g, after);
  const auto adj = PositionAdjacency(g, before);
  for (std::size_t i = 0; i < before.size(); ++i)
    for (std::size_t j = i + 1; j < before.size(); ++j) {
      if (adj(i, j)) continue;
      const Vertex u = before.at(i);
      const Vertex v = before.at(j);
      if (after.before(u, v)) return OrderViolation{ViolationKind::Flip, {u, v}};
    }
  return std::nullopt;
}

std::optional<Vertex> lmpn(const Graph& g, const Ordering& o, Vertex a, Vertex b) {
  require_ordering_of(g, o);
  g.check(a);
  g.check(b);
  if (a == b) throw GraphError("lmpn needs two distinct vertices");
  for (Vertex d : o)
    if (d != b && g.adjacent(d, a) && !g.adjacent(d, b)) return d;
  return std::nullopt;
}

std::optional<CliqueSplit> clique_split(const Graph& g, const Ordering& o) {
  require_ordering_of(g, o);
  if (o.size() == 0) return std::nullopt;
  const auto adj = PositionAdjacency(g, o);
  const std::size_t n = o.size();
  auto clique_from_to = [&](std::size_t lo, std::size_t hi, std::size_t p) {
    for (std::size_t q = lo; q < hi; ++q)
      if (q != p && !adj(p, q)) return false;
    return true;
  };
  std::size_t prefix = 1;
  while (prefix < n && clique_from_to(0, prefix, prefix)) ++prefix;
  bool suffix = true;
  for (std::size_t p = prefix; p < n && suffix; ++p) suffix = clique_from_to(p + 1, n, p);
  return CliqueSplit{prefix, suffix};
}

// Asteroidal sets -------------------------------------------------------------

namespace {

// comp[a][x]: component of x in G - N[a], or -1 when x is in N[a].
std::vector<std::vector<int>> components_avoiding_each_vertex(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  std::vector<char> removed(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(removed.begin(), removed.end(), 0);
    removed[a] = 1;
    for (Vertex w : g.neighbors(static_cast<Vertex>(a))) removed[static_cast<std::size_t>(w)] = 1;
    int next_id = 0;
    auto& c = comp[a];
    for (std::size_t s = 0; s < n; ++s) {
      if (removed[s] || c[s] >= 0) continue;
      std::deque<std::size_t> queue{s};
      c[s] = next_id;
      while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(static_cast<Vertex>(u))) {
          auto iw = static_cast<std::size_t>(w);
          if (removed[iw] || c[iw] >= 0) continue;
          c[iw] = next_id;
          queue.push_back(iw);
        }
      }
      ++next_id;
    }
  }
  return comp;
}

class AsteroidalSearch {
 public:
  AsteroidalSearch(const Graph& g, std::size_t cap) : g_(g), cap_(cap), comp_(components_avoiding_each_vertex(g)) {}

  AsteroidalResult run() {
    const std::size_t n = g_.order();
    if (n > 0 && cap_ > 0) {
      best_ = {static_cast<Vertex>(0)};
      std::vector<Vertex> all(n);
      for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
      grow(all);
    }
    AsteroidalResult r;
    r.value = best_.size();
    r.witness = best_;
    r.exact = !capped_;
    return r;
  }

 private:
  bool compatible(Vertex v) const {
    const auto iv = static_cast<std::size_t>(v);
    for (std::size_t i = 0; i < current_.size(); ++i) {
      const auto s = static_cast<std::size_t>(current_[i]);
      // v sits with the others in G - N[s] ...
      if (comp_[s][iv] < 0) return false;
      for (std::size_t j = 0; j < current_.size(); ++j)
        if (j != i && comp_[s][static_cast<std::size_t>(current_[j])] != comp_[s][iv]) return false;
      // ... and the others sit together in G - N[v].
      if (comp_[iv][s] < 0 || comp_[iv][s] != comp_[iv][static_cast<std::size_t>(current_[0])]) return false;
    }
    return true;
  }

  void grow(const std::vector<Vertex>& candidates) {
    if (capped_) return;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current_.size() + (candidates.size() - i) <= best_.size()) return;
      current_.push_back(candidates[i]);
      if (current_.size() > best_.size()) best_ = current_;
      if (current_.size() >= cap_) {
        capped_ = current_.size() < g_.order();
        current_.pop_back();
        return;
      }
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (compatible(candidates[j])) next.push_back(candidates[j]);
      grow(next);
      current_.pop_back();
      if (capped_) return;
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<std::vector<int>> comp_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  bool capped_ = false;
};

}  // namespace

bool is_asteroidal_set(const Graph& g, std::span<const Vertex> set) {
  for (Vertex v : set) g.check(v);
  if (set.size() <= 1) return true;
  for (Vertex a : set) {
    std::vector<Vertex> keep;
    auto closed = g.closed_neighbors(a);
    for (std::size_t v = 0; v < g.order(); ++v)
      if (!std::binary_search(closed.begin(), closed.end(), static_cast<Vertex>(v))) keep.push_back(static_cast<Vertex>(v));
    std::vector<char> kept(g.order(), 0);
    for (Vertex v : keep) kept[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> rest;
    for (Vertex b : set)
      if (b != a) rest.push_back(b);
    for (Vertex b : rest)
      if (!kept[static_cast<std::size_t>(b)]) return false;
    // Reach from the first remaining member inside G - N[a].
    std::vector<char> seen(g.order(), 0);
    std::deque<Vertex> queue{rest.front()};
    seen[static_cast<std::size_t>(rest.front())] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        auto iw = static_cast<std::size_t>(w);
        if (!kept[iw] || seen[iw]) continue;
        seen[iw] = 1;
        queue.push_back(w);
      }
    }
    for (Vertex b : rest)
      if (!seen[static_cast<std::size_t>(b)]) return false;
  }
  return true;
}

AsteroidalResult asteroidal_number(const Graph& g, std::size_t size_cap) {
  return AsteroidalSearch(g, size_cap).run();
}

// Induced patterns -------------------------------------------------------------

namespace {

class InducedMatcher {
 public:
  InducedMatcher(const Graph& g, const Graph& pattern) : g_(g), p_(pattern) {
    const std::size_t k = pattern.order();
    // Breadth-first pattern order so that later vertices have a mapped
    // neighbour to draw candidates from.
    std::vector<char> placed(k, 0);
    for (std::size_t s = 0; s < k; ++s) {
      if (placed[s]) continue;
      std::deque<Vertex> queue{static_cast<Vertex>(s)};
      placed[s] = 1;
      while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        order_.push_back(u);
        for (Vertex w : pattern.neighbors(u))
          if (!placed[static_cast<std::size_t>(w)]) {
            placed[static_cast<std::size_t>(w)] = 1;
            queue.push_back(w);
          }
      }
    }
    image_.assign(k, -1);
    used_.assign(g.order(), 0);
  }

  std::optional<std::vector<Vertex>> run() {
    if (p_.order() > g_.order()) return std::nullopt;
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool consistent(Vertex pv, Vertex gv) const {
    if (used_[static_cast<std::size_t>(gv)] || g_.degree(gv) < p_.degree(pv)) return false;
    for (std::size_t i = 0; i < p_.order(); ++i) {
      const Vertex mapped = image_[i];
      if (mapped < 0) continue;
      if (p_.adjacent(pv, static_cast<Vertex>(i)) != g_.adjacent(gv, mapped)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex pv = order_[depth];
    Vertex anchor = -1;
    for (Vertex w : p_.neighbors(pv))
      if (image_[static_cast<std::size_t>(w)] >= 0) {
        anchor = image_[static_cast<std::size_t>(w)];
        break;
      }
    auto attempt = [&](Vertex gv) {
      if (!consistent(pv, gv)) return false;
      image_[static_cast<std::size_t>(pv)] = gv;
      used_[static_cast<std::size_t>(gv)] = 1;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(gv)] = 0;
      image_[static_cast<std::size_t>(pv)] = -1;
      return false;
    };
    if (anchor >= 0) {
      for (Vertex gv : g_.neighbors(anchor))
        if (attempt(gv)) return true;
    } else {
      for (std::size_t gv = 0; gv < g_.order(); ++gv)
        if (attempt(static_cast<Vertex>(gv))) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& p_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced_subgraph(const Graph& g, const Graph& pattern) {
  return InducedMatcher(g, pattern).run();
}

std::optional<std::vector<Vertex>> find_induced_domino(const Graph& g) {
  static const Graph domino = gen_domino();
  return find_induced_subgraph(g, domino);
}

std::optional<std::vector<Vertex>> find_induced_ladder(const Graph& g, int k) {
  return find_induced_subgraph(g, gen_ladder(k));
}

std::optional<std::vector<Vertex>> find_induced_c4(const Graph& g) {
  static const Graph c4 = gen_cycle(4);
  return find_induced_subgraph(g, c4);
}

}  // namespace lexcycle
