#include "lexcycle/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <string_view>
#include <unordered_set>

#include "lexcycle/graph_io.hpp"
#include "lexcycle/random.hpp"

namespace lexcycle {

const Ordering& Fixture::ordering(const std::string& label) const {
  auto it = orderings.find(label);
  if (it == orderings.end()) throw GraphError("fixture has no ordering '" + label + "'");
  return it->second;
}

namespace {

Fixture make_fixture(std::string_view graph_text,
                     std::initializer_list<std::pair<const char*, const char*>> orderings) {
  Fixture f{parse_graph(graph_text), {}};
  for (auto [label, text] : orderings) f.orderings.emplace(label, parse_ordering(f.graph, text));
  return f;
}

}  // namespace

// Worked examples. Their known sweep sequences are replayed in the tests.

Fixture fixture_g3() {
  return make_fixture(R"(
v a
v b
v c
v d
v e
v f
v x
v y
v z
f y
f a
f e
y e
a e
a x
a b
a c
e c
x b
b c
c d
e d
c z
d z
)",
                      {
                          {"sigma1", "x b a c e f d z y"},
                          {"sigma2", "y f e a c d b x z"},
                          {"sigma3", "z d c e a b f y x"},
                      });
}

Fixture fixture_g4() {
  return make_fixture(R"(
v x1
v x2
v x3
v x4
v y1
v y2
v y3
v y4
v z1
v z2
v z3
v z4
z1 x1
z1 y1
z1 y2
x1 y2
y1 y2
y1 x4
y1 y4
y1 y3
y2 y3
x4 z4
y4 y3
y3 z2
y2 z2
y3 x2
z2 x2
y2 y4
x3 z3
z3 y3
z3 y4
x3 y4
z4 y4
z4 y1
z1 y4
y1 z2
y2 z3
z4 y3
)",
                      {
                          {"mu1", "x4 z4 y1 y3 y4 y2 z2 z1 z3 x2 x3 x1"},
                          {"mu2", "x1 z1 y2 y4 y1 y3 z3 z2 z4 x3 x4 x2"},
                          {"mu3", "x2 z2 y3 y1 y2 y4 z4 z3 z1 x4 x1 x3"},
                          {"mu4", "x3 z3 y4 y2 y3 y1 z1 z4 z2 x1 x2 x4"},
                      });
}

Fixture fixture_lexdfs_example() {
  return make_fixture(R"(
v a
v b
v c
v d
v e
v f
v g
g e
g f
g c
e f
e c
f d
c d
c a
d b
)",
                      {
                          {"sigma1", "a c d b f g e"},
                          {"sigma2", "e g f d c a b"},
                          {"sigma3", "b d c a g e f"},
                          {"sigma4", "f e g c d b a"},
                          {"tau", "a c e f g d b"},
                      });
}

StarjoinGraph starjoin(std::span<const Graph> components) {
  if (components.empty()) throw GraphError("starjoin needs at least one component");
  const std::size_t k = components.size();

  std::set<std::string> reserved{"r"};
  for (std::size_t i = 1; i <= k; ++i) reserved.insert("g" + std::to_string(i));
  bool rename = false;
  std::set<std::string> seen;
  for (const auto& c : components)
    for (const auto& name : c.names())
      if (reserved.count(name) || !seen.insert(name).second) rename = true;

  GraphBuilder b;
  StarjoinGraph out;
  out.root = b.add_vertex("r");
  for (std::size_t i = 1; i <= k; ++i) out.joins.push_back(b.add_vertex("g" + std::to_string(i)));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vertex> map;
    for (const auto& name : components[i].names())
      map.push_back(b.add_vertex(rename ? std::to_string(i + 1) + "." + name : name));
    out.components.push_back(std::move(map));
  }
  for (std::size_t i = 0; i < k; ++i) {
    b.add_edge(out.root, out.joins[i]);
    const auto& map = out.components[i];
    for (Vertex v : map) b.add_edge(out.joins[i], v);
    for (auto [u, w] : components[i].edges())
      b.add_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(w)]);
  }
  out.graph = std::move(b).build();
  return out;
}

Graph gen_domino() {
  return parse_graph("a b\na c\nb d\nc d\nc e\nd f\ne f\n");
}

Graph gen_ladder(int k) {
  if (k < 1) throw GraphError("ladder needs k >= 1");
  GraphBuilder b;
  b.add_vertex("x");
  b.add_vertex("y");
  for (int i = 1; i <= k; ++i) b.add_vertex("x" + std::to_string(i));
  for (int i = 1; i <= k; ++i) b.add_vertex("y" + std::to_string(i));
  auto top = [](int i) { return i == 0 ? std::string("x") : "x" + std::to_string(i); };
  auto bottom = [](int i) { return i == 0 ? std::string("y") : "y" + std::to_string(i); };
  b.add_edge("x", "y");
  for (int i = 1; i <= k; ++i) {
    b.add_edge(top(i - 1), top(i));
    b.add_edge(bottom(i - 1), bottom(i));
    b.add_edge(top(i), bottom(i));
  }
  return std::move(b).build();
}

Fixture gen_two_chain(int n) {
  if (n < 2) throw GraphError("two-chain family needs n >= 2");
  GraphBuilder b;
  auto a = [](int i) { return "a" + std::to_string(i); };
  auto bb = [](int i) { return "b" + std::to_string(i); };
  for (int i = 1; i <= n; ++i) b.add_vertex(a(i));
  b.add_vertex("x");
  b.add_vertex("y");
  for (int i = 1; i <= n; ++i) b.add_vertex(bb(i));
  for (int i = 1; i < n; ++i) b.add_edge(a(i), a(i + 1));
  b.add_edge("x", "y");
  b.add_edge("y", bb(1));
  for (int i = 1; i < n; ++i) b.add_edge(bb(i), bb(i + 1));
  Graph g = std::move(b).build();

  // The stepwise recipe for tau:
  //   start tau with x, a1; while the last element is a_i with i odd,
  //   append b_i, b_{i+2}, a_{i+2}; if n is even append b_n, a_n, otherwise
  //   a_{n-1}, b_{n-1}; then append the even vertices a_i, b_i, b_{i-2},
  //   a_{i-2} going down; finally append y.
  // Read literally this repeats b_{i+2} on the second round and does not give
  // the reference n = 6 ordering x,a1,b1,b3,a3,a5,b5,b6,a6,a4,b4,b2,a2,y. That
  // ordering is a snake over the odd indices (switch chain, step +2,
  // switch chain, ...) followed by a snake back down over the even indices,
  // which is what is built here. Any such order puts every odd-indexed chain
  // vertex and x before every even-indexed one and y, which makes it a
  // transitive orientation of the chains.
  std::vector<std::string> tau{"x", a(1)};
  {
    bool on_a = true;
    int i = 1;
    bool switch_next = true;
    while (true) {
      if (switch_next) {
        on_a = !on_a;
      } else {
        i += 2;
        if (i > n) break;
      }
      tau.push_back(on_a ? a(i) : bb(i));
      switch_next = !switch_next;
    }
  }
  {
    int i = n % 2 == 0 ? n : n - 1;
    bool on_a = n % 2 != 0;
    bool switch_next = true;
    tau.push_back(on_a ? a(i) : bb(i));
    while (true) {
      if (switch_next) {
        on_a = !on_a;
      } else {
        i -= 2;
        if (i < 2) break;
      }
      tau.push_back(on_a ? a(i) : bb(i));
      switch_next = !switch_next;
    }
  }
  tau.push_back("y");

  std::ostringstream text;
  for (const auto& name : tau) text << name << ' ';
  Fixture f{std::move(g), {}};
  f.orderings.emplace("tau", parse_ordering(f.graph, text.str()));
  return f;
}

Graph gen_complete(std::size_t n, const std::string& prefix) {
  GraphBuilder b(n);
  b.add_vertices(prefix, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

Graph gen_path(std::size_t n, const std::string& prefix) {
  GraphBuilder b(n);
  b.add_vertices(prefix, n);
  for (std::size_t u = 1; u < n; ++u) b.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(u));
  return std::move(b).build();
}

Graph gen_cycle(std::size_t n, const std::string& prefix) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  b.add_vertices(prefix, n);
  for (std::size_t u = 0; u < n; ++u) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>((u + 1) % n));
  return std::move(b).build();
}

Graph gen_edgeless(std::size_t n, const std::string& prefix) {
  GraphBuilder b(n);
  b.add_vertices(prefix, n);
  return std::move(b).build();
}

Graph gen_star(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  const Vertex c = b.add_vertex("c");
  for (std::size_t i = 0; i < leaves; ++i) b.add_edge(c, b.add_vertex("l" + std::to_string(i)));
  return std::move(b).build();
}

Graph gen_subdivided_claw() {
  return parse_graph("c m1\nm1 l1\nc m2\nm2 l2\nc m3\nm3 l3\n");
}

namespace {

Ordering order_by_key(const std::vector<double>& key) {
  std::vector<Vertex> seq(key.size());
  std::iota(seq.begin(), seq.end(), 0);
  std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) {
    return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
  });
  return Ordering(std::move(seq));
}

GeneratedGraph interval_graph(const std::vector<double>& left, const std::vector<double>& right) {
  const std::size_t n = left.size();
  GraphBuilder b(n);
  b.add_vertices("v", n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (left[u] <= right[v] && left[v] <= right[u]) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return {std::move(b).build(), order_by_key(left)};
}

}  // namespace

GeneratedGraph gen_unit_interval(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const double span = 1.0 + static_cast<double>(n) / 4.0;
  std::vector<double> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = rng.real() * span;
    right[i] = left[i] + 1.0;
  }
  return interval_graph(left, right);
}

GeneratedGraph gen_interval(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const double span = 1.0 + static_cast<double>(n) / 2.0;
  std::vector<double> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = rng.real() * span;
    const double r = rng.real();
    right[i] = left[i] + 0.1 + r * r * span / 3.0;
  }
  return interval_graph(left, right);
}

GeneratedGraph gen_permutation_graph(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  rng.shuffle(std::span<std::size_t>(pi));
  GraphBuilder b(n);
  b.add_vertices("v", n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pi[i] > pi[j]) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return {std::move(b).build(), Ordering::identity(n)};
}

GeneratedGraph gen_cobipartite(std::size_t p, std::size_t q, double density, std::uint64_t seed) {
  if (p == 0 || q == 0) throw GraphError("cobipartite sides must be nonempty");
  if (!(density >= 0.0 && density <= 1.0)) throw GraphError("density must lie in [0, 1]");
  Rng rng(seed);
  GraphBuilder b(p + q);
  b.add_vertices("a", p);
  b.add_vertices("b", q);
  auto av = [](std::size_t i) { return static_cast<Vertex>(i); };
  auto bv = [p](std::size_t j) { return static_cast<Vertex>(p + j); };
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) b.add_edge(av(i), av(j));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j) b.add_edge(bv(i), bv(j));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j)
      if (rng.chance(density)) b.add_edge(av(i), bv(j));
  return {std::move(b).build(), Ordering::identity(p + q)};
}

GeneratedGraph gen_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw GraphError("tree needs at least one vertex");
  Rng rng(seed);
  GraphBuilder b(n);
  b.add_vertices("v", n);
  if (n == 2) b.add_edge(0, 1);
  if (n > 2) {
    std::vector<std::size_t> code(n - 2);
    for (auto& c : code) c = rng.below(n);
    std::vector<std::size_t> degree(n, 1);
    for (auto c : code) ++degree[c];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
    for (std::size_t v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (auto c : code) {
      const std::size_t leaf = leaves.top();
      leaves.pop();
      b.add_edge(static_cast<Vertex>(leaf), static_cast<Vertex>(c));
      if (--degree[c] == 1) leaves.push(c);
    }
    const std::size_t u = leaves.top();
    leaves.pop();
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(leaves.top()));
  }
  return {std::move(b).build(), std::nullopt};
}

GeneratedGraph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  GraphBuilder b(n);
  b.add_vertices("v", n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.chance(p)) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return {std::move(b).build(), std::nullopt};
}

GeneratedGraph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 ? m > 0 : m > n * (n - 1) / 2) throw GraphError("more edges requested than vertex pairs");
  Rng rng(seed);
  GraphBuilder b(n);
  b.add_vertices("v", n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m);
  while (seen.size() < m) {
    auto u = static_cast<std::uint64_t>(rng.below(n));
    auto v = static_cast<std::uint64_t>(rng.below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert(u * n + v).second) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return {std::move(b).build(), std::nullopt};
}

PlantedModules gen_planted_modules(std::size_t blocks, std::size_t max_block_size, double p, std::uint64_t seed) {
  if (blocks == 0 || max_block_size == 0) throw GraphError("need at least one nonempty block");
  Rng rng(seed);
  std::vector<std::size_t> sizes(blocks);
  std::size_t n = 0;
  for (auto& s : sizes) n += (s = rng.between(1, max_block_size));
  std::vector<Vertex> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 0);
  rng.shuffle(std::span<Vertex>(vertices));

  PlantedModules out;
  std::size_t next = 0;
  for (auto s : sizes) {
    out.blocks.emplace_back(vertices.begin() + static_cast<std::ptrdiff_t>(next),
                            vertices.begin() + static_cast<std::ptrdiff_t>(next + s));
    next += s;
  }
  GraphBuilder b(n);
  b.add_vertices("v", n);
  for (std::size_t i = 0; i < blocks; ++i) {
    const auto& bi = out.blocks[i];
    for (std::size_t x = 0; x < bi.size(); ++x)
      for (std::size_t y = x + 1; y < bi.size(); ++y)
        if (rng.chance(p)) b.add_edge(bi[x], bi[y]);
    for (std::size_t j = i + 1; j < blocks; ++j) {
      if (!rng.chance(p)) continue;
      for (Vertex u : bi)
        for (Vertex v : out.blocks[j]) b.add_edge(u, v);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

Ordering random_ordering(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  rng.shuffle(std::span<Vertex>(seq));
  return Ordering(std::move(seq));
}

}  // namespace lexcycle
