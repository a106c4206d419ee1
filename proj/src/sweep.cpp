#include "lexcycle/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace lexcycle {

std::string_view to_string(SearchKind kind) {
  switch (kind) {
    case SearchKind::LexBFS: return "lexbfs";
    case SearchKind::LexDFS: return "lexdfs";
    case SearchKind::BFS: return "bfs";
  }
  return "?";
}

std::optional<SearchKind> parse_search_kind(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.back() == '+') s.pop_back();
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "lexbfs") return SearchKind::LexBFS;
  if (s == "lexdfs") return SearchKind::LexDFS;
  if (s == "bfs") return SearchKind::BFS;
  return std::nullopt;
}

namespace {

using Word = std::vector<int>;

// ---------------------------------------------------------------------------
// Reference engine: explicit labels, linear scan for the best candidate.

Ordering reference_sweep(SearchKind kind, const Graph& g, const Ordering& tiebreak) {
  const std::size_t n = g.order();
  std::vector<Word> label(n);
  std::vector<char> numbered(n, 0);
  // BFS: number of the earliest numbered neighbour, n meaning none yet.
  std::vector<std::size_t> parent(n, n);
  std::vector<Vertex> out;
  out.reserve(n);

  auto better = [&](Vertex a, Vertex b) {
    const auto ia = static_cast<std::size_t>(a);
    const auto ib = static_cast<std::size_t>(b);
    if (kind == SearchKind::BFS) {
      if (parent[ia] != parent[ib]) return parent[ia] < parent[ib];
    } else if (label[ia] != label[ib]) {
      return std::lexicographical_compare(label[ib].begin(), label[ib].end(), label[ia].begin(), label[ia].end());
    }
    return tiebreak.position(a) > tiebreak.position(b);
  };

  for (std::size_t i = 1; i <= n; ++i) {
    Vertex best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (numbered[v]) continue;
      if (best < 0 || better(static_cast<Vertex>(v), best)) best = static_cast<Vertex>(v);
    }
    numbered[static_cast<std::size_t>(best)] = 1;
    out.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      const auto iw = static_cast<std::size_t>(w);
      if (numbered[iw]) continue;
      switch (kind) {
        case SearchKind::LexBFS: label[iw].push_back(static_cast<int>(n - i)); break;
        case SearchKind::LexDFS: label[iw].insert(label[iw].begin(), static_cast<int>(i)); break;
        case SearchKind::BFS: parent[iw] = std::min(parent[iw], i); break;
      }
    }
  }
  return Ordering(std::move(out));
}

// ---------------------------------------------------------------------------
// Partition refinement.

// Neighbour lists re-sorted by decreasing position in `tiebreak`.
struct TiebreakAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> targets;

  TiebreakAdjacency(const Graph& g, const Ordering& tiebreak) : offsets(g.order() + 1, 0) {
    const std::size_t n = g.order();
    for (std::size_t v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + g.degree(static_cast<Vertex>(v));
    targets.resize(offsets[n]);
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t p = n; p-- > 0;) {
      const Vertex v = tiebreak.at(p);
      for (Vertex w : g.neighbors(v)) targets[fill[static_cast<std::size_t>(w)]++] = v;
    }
  }

  std::span<const Vertex> operator[](Vertex v) const {
    const auto i = static_cast<std::size_t>(v);
    return {targets.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
};

// Unnumbered vertices live in one doubly linked list, grouped into
// contiguous tie-classes ordered by decreasing label. Each class is kept in
// decreasing tiebreak position, so the head of the list is the next vertex.
class LexBfsRefinement {
 public:
  LexBfsRefinement(const Graph& g, const Ordering& tiebreak)
      : n_(g.order()), adj_(g, tiebreak), next_(n_ + 1), prev_(n_ + 1), cls_(n_, 0), numbered_(n_, 0) {
    next_[idx(head())] = prev_[idx(head())] = head();
    Vertex last = head();
    for (std::size_t p = n_; p-- > 0;) {
      const Vertex v = tiebreak.at(p);
      link_after(last, v);
      last = v;
    }
    if (n_ > 0) classes_.push_back({tiebreak.back(), tiebreak.front(), n_, 0, 0});
  }

  Ordering run() {
    std::vector<Vertex> out;
    out.reserve(n_);
    for (std::size_t stamp = 1; stamp <= n_; ++stamp) {
      const Vertex v = next_[idx(head())];
      out.push_back(v);
      detach(v);
      numbered_[idx(v)] = 1;
      for (Vertex w : adj_[v])
        if (!numbered_[idx(w)]) move_forward(w, stamp);
    }
    return Ordering(std::move(out));
  }

 private:
  struct TieClass {
    Vertex first;
    Vertex last;
    std::size_t size;
    std::size_t split_stamp;
    std::size_t split_child;
  };

  Vertex head() const { return static_cast<Vertex>(n_); }
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  void link_after(Vertex anchor, Vertex v) {
    const Vertex after = next_[idx(anchor)];
    next_[idx(anchor)] = v;
    prev_[idx(v)] = anchor;
    next_[idx(v)] = after;
    prev_[idx(after)] = v;
  }

  void unlink(Vertex v) {
    next_[idx(prev_[idx(v)])] = next_[idx(v)];
    prev_[idx(next_[idx(v)])] = prev_[idx(v)];
  }

  // Removes v from its class bookkeeping and from the list. Returns the
  // list node that preceded v.
  Vertex detach(Vertex v) {
    auto& c = classes_[cls_[idx(v)]];
    if (c.first == v) c.first = next_[idx(v)];
    if (c.last == v) c.last = prev_[idx(v)];
    --c.size;
    const Vertex before = prev_[idx(v)];
    unlink(v);
    return before;
  }

  // w gained the newest letter: move it into the class placed immediately
  // before its current class, created on first use for this pivot.
  void move_forward(Vertex w, std::size_t stamp) {
    const std::size_t from = cls_[idx(w)];
    if (classes_[from].split_stamp != stamp) {
      classes_[from].split_stamp = stamp;
      classes_[from].split_child = classes_.size();
      classes_.push_back({-1, -1, 0, 0, 0});
    }
    const std::size_t to = classes_[from].split_child;
    const Vertex old_prev = detach(w);
    auto& target = classes_[to];
    if (target.size > 0) {
      link_after(target.last, w);
    } else if (classes_[from].size > 0) {
      link_after(prev_[idx(classes_[from].first)], w);
    } else {
      link_after(old_prev, w);
    }
    if (target.size == 0) target.first = w;
    target.last = w;
    ++target.size;
    cls_[idx(w)] = to;
  }

  std::size_t n_;
  TiebreakAdjacency adj_;
  std::vector<Vertex> next_;
  std::vector<Vertex> prev_;
  std::vector<std::size_t> cls_;
  std::vector<char> numbered_;
  std::vector<TieClass> classes_;
};

Ordering bfs_queue_sweep(const Graph& g, const Ordering& tiebreak) {
  const std::size_t n = g.order();
  TiebreakAdjacency adj(g, tiebreak);
  std::vector<char> reached(n, 0);
  std::vector<Vertex> out;
  out.reserve(n);
  std::size_t scan = n;  // positions >= scan of tiebreak are all reached
  std::size_t head = 0;
  while (out.size() < n) {
    if (head == out.size()) {
      while (reached[static_cast<std::size_t>(tiebreak.at(scan - 1))]) --scan;
      const Vertex s = tiebreak.at(--scan);
      reached[static_cast<std::size_t>(s)] = 1;
      out.push_back(s);
    }
    const Vertex v = out[head++];
    for (Vertex w : adj[v]) {
      if (reached[static_cast<std::size_t>(w)]) continue;
      reached[static_cast<std::size_t>(w)] = 1;
      out.push_back(w);
    }
  }
  return Ordering(std::move(out));
}

// LexDFS prepends the newest number, so neighbours of the pivot jump ahead
// of everything else while keeping their relative order: a stable partition
// of the pending list, O(n) per vertex.
Ordering lexdfs_partition_sweep(const Graph& g, const Ordering& tiebreak) {
  const std::size_t n = g.order();
  std::vector<Vertex> pending(tiebreak.sequence().rbegin(), tiebreak.sequence().rend());
  std::vector<std::size_t> mark(n, 0);
  std::vector<Vertex> out;
  out.reserve(n);
  for (std::size_t stamp = 1; stamp <= n; ++stamp) {
    const Vertex v = pending.front();
    out.push_back(v);
    pending.erase(pending.begin());
    for (Vertex w : g.neighbors(v)) mark[static_cast<std::size_t>(w)] = stamp;
    std::stable_partition(pending.begin(), pending.end(),
                          [&](Vertex w) { return mark[static_cast<std::size_t>(w)] == stamp; });
  }
  return Ordering(std::move(out));
}

}  // namespace

Ordering plus_sweep(SearchKind kind, const Graph& g, const Ordering& tiebreak, Engine engine) {
  require_ordering_of(g, tiebreak);
  if (engine == Engine::Reference) return reference_sweep(kind, g, tiebreak);
  switch (kind) {
    case SearchKind::LexBFS: return LexBfsRefinement(g, tiebreak).run();
    case SearchKind::LexDFS: return lexdfs_partition_sweep(g, tiebreak);
    case SearchKind::BFS: return bfs_queue_sweep(g, tiebreak);
  }
  return reference_sweep(kind, g, tiebreak);
}

Ordering first_sweep(SearchKind kind, const Graph& g, const std::optional<Ordering>& tiebreak, Engine engine) {
  return plus_sweep(kind, g, tiebreak ? *tiebreak : Ordering::identity(g.order()), engine);
}

SweepTrace sweep_sequence(SearchKind kind, const Graph& g, const Ordering& seed, std::size_t count, Engine engine) {
  if (count < 1) throw GraphError("sweep count must be at least 1");
  SweepTrace trace{kind, seed, {}};
  trace.orderings.reserve(count);
  const Ordering* previous = &seed;
  for (std::size_t i = 0; i < count; ++i) {
    trace.orderings.push_back(plus_sweep(kind, g, *previous, engine));
    previous = &trace.orderings.back();
  }
  return trace;
}

namespace {

class LexBfsEnumerator {
 public:
  LexBfsEnumerator(const Graph& g, std::size_t cap, const std::function<bool(const Ordering&)>& visit)
      : g_(g), cap_(cap), visit_(visit), label_(g.order()), numbered_(g.order(), 0) {
    sequence_.reserve(g.order());
  }

  EnumerationSummary run() {
    recurse();
    return summary_;
  }

 private:
  // Returns false once enumeration must stop.
  bool recurse() {
    const std::size_t n = g_.order();
    const std::size_t step = sequence_.size();
    if (step == n) {
      if (summary_.emitted == cap_) {
        summary_.truncated = true;
        return false;
      }
      ++summary_.emitted;
      if (!visit_(Ordering(sequence_))) {
        summary_.truncated = true;
        return false;
      }
      return true;
    }
    const Word* best = nullptr;
    for (std::size_t v = 0; v < n; ++v) {
      if (numbered_[v]) continue;
      if (!best || std::lexicographical_compare(best->begin(), best->end(), label_[v].begin(), label_[v].end()))
        best = &label_[v];
    }
    const Word top = *best;
    const int letter = static_cast<int>(n - (step + 1));
    for (std::size_t v = 0; v < n; ++v) {
      if (numbered_[v] || label_[v] != top) continue;
      numbered_[v] = 1;
      sequence_.push_back(static_cast<Vertex>(v));
      std::vector<Vertex> touched;
      for (Vertex w : g_.neighbors(static_cast<Vertex>(v))) {
        if (numbered_[static_cast<std::size_t>(w)]) continue;
        label_[static_cast<std::size_t>(w)].push_back(letter);
        touched.push_back(w);
      }
      const bool keep_going = recurse();
      for (Vertex w : touched) label_[static_cast<std::size_t>(w)].pop_back();
      sequence_.pop_back();
      numbered_[v] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  std::size_t cap_;
  const std::function<bool(const Ordering&)>& visit_;
  std::vector<Word> label_;
  std::vector<char> numbered_;
  std::vector<Vertex> sequence_;
  EnumerationSummary summary_;
};

}  // namespace

EnumerationSummary enumerate_lexbfs_orderings(const Graph& g, std::size_t cap,
                                              const std::function<bool(const Ordering&)>& visit) {
  return LexBfsEnumerator(g, cap, visit).run();
}

std::vector<Ordering> all_lexbfs_orderings(const Graph& g, std::size_t cap, bool* truncated) {
  std::vector<Ordering> out;
  auto summary = enumerate_lexbfs_orderings(g, cap, [&](const Ordering& o) {
    out.push_back(o);
    return true;
  });
  if (truncated) *truncated = summary.truncated;
  return out;
}

}  // namespace lexcycle
