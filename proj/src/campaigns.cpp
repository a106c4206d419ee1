#include "lexcycle/campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "lexcycle/checkers.hpp"
#include "lexcycle/constructions.hpp"
#include "lexcycle/cycle.hpp"
#include "lexcycle/graph_io.hpp"
#include "lexcycle/matrix.hpp"
#include "lexcycle/random.hpp"
#include "lexcycle/sweep.hpp"

namespace lexcycle {

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index) + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CampaignResult run_campaign(std::string name, const Trial& trial, const CampaignOptions& options) {
  CampaignResult result;
  result.name = std::move(name);
  result.trials = options.trials;
  std::vector<std::optional<std::string>> outcome(options.trials);
  std::vector<std::size_t> skipped(options.trials, 0);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < options.trials; i = next++) {
      try {
        outcome[i] = trial(i, trial_seed(options.seed, i), skipped[i]);
      } catch (const std::exception& e) {
        outcome[i] = std::string("exception: ") + e.what();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, options.trials));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < options.trials; ++i) {
    result.skipped_parts += skipped[i];
    if (!outcome[i]) continue;
    ++result.failures;
    if (!result.first_failure) result.first_failure = "trial " + std::to_string(i) + ": " + *outcome[i];
  }
  return result;
}

namespace {

std::string show(const Graph& g, const Ordering& o) {
  std::string s = serialize_ordering(g, o);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::string describe(const Graph& g, const OrderViolation& v) {
  std::string s(to_string(v.kind));
  s += " violated at";
  for (Vertex w : v.witness) s += " " + g.name(w);
  return s;
}

std::string with_graph(const Graph& g, const std::string& message) {
  return message + "\n" + serialize_graph(g);
}

}  // namespace

CampaignResult campaign_proper_interval(const CampaignOptions& options) {
  return run_campaign(
      "properinterval",
      [](std::size_t, std::uint64_t seed, std::size_t&) -> std::optional<std::string> {
        Rng rng(seed);
        const auto n = static_cast<std::size_t>(rng.between(6, 40));
        const auto gen = gen_unit_interval(n, rng.next());
        const Graph& g = gen.graph;
        const Ordering& pi = *gen.witness;
        if (auto v = check_pi_order(g, pi)) return with_graph(g, "generator witness: " + describe(g, *v));
        if (plus_sweep(SearchKind::LexBFS, g, pi) != pi.dual())
          return with_graph(g, "LexBFS+ of " + show(g, pi) + " is not its dual");
        const auto orient = transitive_orientation(g, 16);
        const auto& trace = orient.trace;
        if (trace.size() < 3) return with_graph(g, "orientation loop stopped before sweep 3");
        if (auto v = check_pi_order(g, trace[2])) return with_graph(g, "sweep 3 " + describe(g, *v));
        if (orient.sweeps_used > 5)
          return with_graph(g, "orientation loop stopped at sweep " + std::to_string(orient.sweeps_used));
        const auto tail = sweep_sequence(SearchKind::LexBFS, g, trace[2], 2).orderings;
        if (tail[0] != trace[2].dual() || tail[1] != trace[2]) return with_graph(g, "sweep 5 differs from sweep 3");
        return std::nullopt;
      },
      options);
}

CampaignResult campaign_interval(const CampaignOptions& options) {
  return run_campaign(
      "interval",
      [](std::size_t, std::uint64_t seed, std::size_t&) -> std::optional<std::string> {
        Rng rng(seed);
        const auto n = static_cast<std::size_t>(rng.between(6, 40));
        const auto gen = gen_interval(n, rng.next());
        const Graph& g = gen.graph;
        if (auto v = check_cocomp_order(g, *gen.witness)) return with_graph(g, "seed " + describe(g, *v));
        const auto s = sweep_sequence(SearchKind::LexBFS, g, *gen.witness, 3).orderings;
        if (s[0] != s[2]) return with_graph(g, "sweep 1 " + show(g, s[0]) + " differs from sweep 3 " + show(g, s[2]));
        return std::nullopt;
      },
      options);
}

namespace {

std::optional<std::string> check_cobipartite_matrices(const Graph& g, const std::vector<Ordering>& sweeps,
                                                      std::size_t& skipped) {
  // sweeps[0] is the first LexBFS cocomparability ordering.
  const auto split = clique_split(g, sweeps[0]);
  if (!split || split->prefix >= g.order()) {
    ++skipped;
    return std::nullopt;
  }
  std::vector<BinaryMatrix> matrices;
  std::size_t prefix = split->prefix;
  for (std::size_t t = 0; t < sweeps.size(); ++t) {
    if (t > 0) {
      // The previous suffix leads the next sweep.
      const auto& prev = sweeps[t - 1];
      std::vector<Vertex> was(prev.begin() + static_cast<std::ptrdiff_t>(prefix), prev.end());
      std::vector<Vertex> now(sweeps[t].begin(), sweeps[t].begin() + static_cast<std::ptrdiff_t>(was.size()));
      std::reverse(was.begin(), was.end());
      if (was != now) return "sweep " + std::to_string(t + 1) + " does not open with the previous second clique reversed";
      prefix = was.size();
    }
    matrices.push_back(cobipartite_matrix(g, sweeps[t], prefix));
  }
  if (!cols_sorted(matrices[0])) return std::string("columns of the first sweep matrix are not sorted");

  BinaryMatrix p = matrices[0];
  std::vector<int> potential = potential_vector(p);
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    if (k > 0) {
      p = k % 2 == 1 ? sort_rows_lex(p) : sort_cols_lex(p);
      auto next = potential_vector(p);
      if (next > potential) return "potential increased at pass " + std::to_string(k);
      potential = std::move(next);
    }
    const BinaryMatrix expected = k % 2 == 0 ? p : p.transpose();
    if (!(matrices[k] == expected)) return "sweep matrix " + std::to_string(k + 1) + " differs from the sorted matrix";
  }
  const auto report = iterate_to_fixpoint(matrices[0], matrices[0].rows() * matrices[0].cols() + 2);
  for (std::size_t k = 1; k < report.potential_trace.size(); ++k)
    if (report.potential_trace[k] > report.potential_trace[k - 1]) return std::string("fixpoint potential increased");
  return std::nullopt;
}

}  // namespace

CampaignResult campaign_cobipartite(const CampaignOptions& options) {
  return run_campaign(
      "cobipartite",
      [](std::size_t, std::uint64_t seed, std::size_t& skipped) -> std::optional<std::string> {
        Rng rng(seed);
        const auto p = static_cast<std::size_t>(rng.between(3, 20));
        const auto q = static_cast<std::size_t>(rng.between(3, 20));
        const double density = 0.1 + 0.8 * rng.real();
        const auto gen = gen_cobipartite(p, q, density, rng.next());
        const Graph& g = gen.graph;
        const std::size_t n = g.order();
        const auto report = detect_cycle(SearchKind::LexBFS, g, *gen.witness, n * n + 4);
        if (report.cycle_length != 2 && n > 1)
          return with_graph(g, "cycle length " + std::to_string(report.cycle_length));
        if (report.tail >= n * n) return with_graph(g, "tail " + std::to_string(report.tail) + " not below n^2");
        // Sweeps 1 .. total, every one a LexBFS cocomparability ordering.
        auto sweeps = sweep_sequence(SearchKind::LexBFS, g, *gen.witness, report.total_sweeps).orderings;
        for (std::size_t t = 0; t < sweeps.size(); ++t) {
          const auto split = clique_split(g, sweeps[t]);
          if (!split || !split->suffix_is_clique)
            return with_graph(g, "sweep " + std::to_string(t + 1) + " " + show(g, sweeps[t]) + " has no two-clique split");
        }
        if (auto failure = check_cobipartite_matrices(g, sweeps, skipped)) return with_graph(g, *failure);
        return std::nullopt;
      },
      options);
}

CampaignResult campaign_domino_free(const CampaignOptions& options) {
  return run_campaign(
      "dominofree",
      [](std::size_t index, std::uint64_t seed, std::size_t& skipped) -> std::optional<std::string> {
        Rng rng(seed);
        std::optional<GeneratedGraph> gen;
        if (index % 2 == 0) {
          for (int attempt = 0; attempt < 32 && !gen; ++attempt) {
            auto candidate = gen_permutation_graph(static_cast<std::size_t>(rng.between(6, 24)), rng.next());
            if (!find_induced_domino(candidate.graph)) gen = std::move(candidate);
          }
          if (!gen) ++skipped;
        }
        if (!gen) gen = gen_interval(static_cast<std::size_t>(rng.between(6, 40)), rng.next());
        const Graph& g = gen->graph;
        if (auto d = find_induced_domino(g)) return with_graph(g, "instance contains a domino");
        if (auto v = check_cocomp_order(g, *gen->witness)) return with_graph(g, "seed " + describe(g, *v));
        const auto report = detect_cycle(SearchKind::LexBFS, g, *gen->witness);
        if (report.cycle_length > 2 || (report.cycle_length == 1 && g.order() > 1))
          return with_graph(g, "cycle length " + std::to_string(report.cycle_length));
        return std::nullopt;
      },
      options);
}

namespace {

/// Sweeps 1..5 of BFS+ and LexBFS+ on a random tree of 6..60 vertices, then
/// `check` on each trace.
Trial tree_trial(std::optional<std::string> (*check)(const Graph&, const std::vector<Ordering>&)) {
  return [check](std::size_t, std::uint64_t seed, std::size_t&) -> std::optional<std::string> {
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(rng.between(6, 60));
    const Graph g = gen_tree(n, rng.next()).graph;
    const Ordering start = random_ordering(n, rng.next());
    const std::size_t diam = diameter(g);
    for (SearchKind kind : {SearchKind::BFS, SearchKind::LexBFS}) {
      const auto s = sweep_sequence(kind, g, start, 5).orderings;
      const std::string label(to_string(kind));
      if (distance(g, s[0].back(), s[1].back()) != diam)
        return with_graph(g, label + ": last vertices of sweeps 1 and 2 are not at diametral distance");
      if (auto failure = check(g, s)) return with_graph(g, label + ": " + *failure + "; seed " + show(g, start));
    }
    return std::nullopt;
  };
}

}  // namespace

CampaignResult campaign_trees(const CampaignOptions& options) {
  return run_campaign("trees", tree_trial([](const Graph&, const std::vector<Ordering>& s) -> std::optional<std::string> {
                        if (s[3] != s[1]) return "sweep 4 differs from sweep 2";
                        return std::nullopt;
                      }),
                      options);
}

CampaignResult campaign_tree_period(const CampaignOptions& options) {
  return run_campaign("treeperiod",
                      tree_trial([](const Graph&, const std::vector<Ordering>& s) -> std::optional<std::string> {
                        if (s[4] != s[2]) return "sweep 5 differs from sweep 3";
                        return std::nullopt;
                      }),
                      options);
}

namespace {

GeneratedGraph draw_cocomparability(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return gen_permutation_graph(static_cast<std::size_t>(rng.between(6, 40)), rng.next());
    case 1: return gen_interval(static_cast<std::size_t>(rng.between(6, 40)), rng.next());
    case 2: return gen_unit_interval(static_cast<std::size_t>(rng.between(6, 40)), rng.next());
    default:
      return gen_cobipartite(static_cast<std::size_t>(rng.between(3, 20)), static_cast<std::size_t>(rng.between(3, 20)),
                             rng.real(), rng.next());
  }
}

}  // namespace

CampaignResult campaign_flipping(const CampaignOptions& options) {
  return run_campaign(
      "flipping",
      [](std::size_t, std::uint64_t seed, std::size_t&) -> std::optional<std::string> {
        Rng rng(seed);
        const auto gen = draw_cocomparability(rng);
        const Graph& g = gen.graph;
        const Ordering& sigma = *gen.witness;
        if (auto v = check_cocomp_order(g, sigma)) return with_graph(g, "seed " + describe(g, *v));
        const Ordering tau = plus_sweep(SearchKind::LexBFS, g, sigma);
        if (auto v = flipping_check(g, sigma, tau)) return with_graph(g, describe(g, *v));
        if (auto v = check_cocomp_order(g, tau)) return with_graph(g, "sweep " + describe(g, *v));
        const auto report = detect_cycle(SearchKind::LexBFS, g, sigma);
        if (report.cycle_length % 2 != 0 && g.order() > 1)
          return with_graph(g, "odd cycle length " + std::to_string(report.cycle_length));
        return std::nullopt;
      },
      options);
}

CampaignResult campaign_modules(const CampaignOptions& options) {
  return run_campaign(
      "modules",
      [](std::size_t, std::uint64_t seed, std::size_t&) -> std::optional<std::string> {
        Rng rng(seed);
        const auto blocks = static_cast<std::size_t>(rng.between(2, 8));
        const auto planted = gen_planted_modules(blocks, 5, 0.2 + 0.6 * rng.real(), rng.next());
        const Graph& g = planted.graph;
        const Ordering theta = random_ordering(g.order(), rng.next());
        const Ordering sigma = plus_sweep(SearchKind::LexBFS, g, theta);
        const ModularPartition partition(g, planted.blocks);
        for (const auto& block : partition.blocks()) {
          const Graph sub = induced_subgraph(g, block);
          const Ordering expected = plus_sweep(SearchKind::LexBFS, sub, theta.restrict_to(block));
          if (sigma.restrict_to(block) != expected)
            return with_graph(g, "restriction to module {" + show(sub, Ordering::identity(sub.order())) +
                                     "} differs from the sweep on the module");
        }
        const Graph quotient = quotient_graph(g, partition);
        auto to_ordering = [](std::vector<std::size_t> blocks_in_order) {
          return Ordering(std::vector<Vertex>(blocks_in_order.begin(), blocks_in_order.end()));
        };
        const Ordering on_blocks = to_ordering(blocks_by_first_member(partition, sigma));
        const Ordering expected = plus_sweep(SearchKind::LexBFS, quotient, to_ordering(blocks_by_last_member(partition, theta)));
        if (on_blocks != expected)
          return with_graph(g, "block order " + show(quotient, on_blocks) + " differs from the quotient sweep " +
                                   show(quotient, expected));
        return std::nullopt;
      },
      options);
}

CampaignResult campaign_engines(const CampaignOptions& options) {
  return run_campaign(
      "engines",
      [](std::size_t, std::uint64_t seed, std::size_t&) -> std::optional<std::string> {
        Rng rng(seed);
        const auto n = static_cast<std::size_t>(rng.between(6, 30));
        const Graph g = gen_gnp(n, rng.real(), rng.next()).graph;
        const Ordering tiebreak = random_ordering(n, rng.next());
        for (SearchKind kind : {SearchKind::LexBFS, SearchKind::LexDFS, SearchKind::BFS}) {
          const Ordering fast = plus_sweep(kind, g, tiebreak, Engine::PartitionRefinement);
          const Ordering slow = plus_sweep(kind, g, tiebreak, Engine::Reference);
          if (fast != slow)
            return with_graph(g, std::string(to_string(kind)) + " engines disagree: " + show(g, fast) + " vs " + show(g, slow));
          if (kind == SearchKind::LexBFS)
            if (auto v = check_lexbfs_4pc(g, fast)) return with_graph(g, describe(g, *v));
        }
        return std::nullopt;
      },
      options);
}

const std::vector<NamedCampaign>& all_campaigns() {
  static const std::vector<NamedCampaign> list{
      {"properinterval", campaign_proper_interval}, {"interval", campaign_interval},
      {"cobipartite", campaign_cobipartite},       {"dominofree", campaign_domino_free},
      {"trees", campaign_trees},                   {"treeperiod", campaign_tree_period},
      {"flipping", campaign_flipping},
      {"modules", campaign_modules},               {"engines", campaign_engines},
  };
  return list;
}

// Reproductions ---------------------------------------------------------------

namespace {

std::vector<std::string> tokens(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::vector<std::string> tokens_of(const Graph& g, const Ordering& o) {
  std::vector<std::string> out;
  for (Vertex v : o) out.push_back(g.name(v));
  return out;
}

std::string joined(const std::vector<std::string>& t) {
  std::string s;
  for (const auto& x : t) s += (s.empty() ? "" : " ") + x;
  return s;
}

ReproResult cyclic_fixture(std::string name, const Fixture& f, SearchKind kind,
                           const std::vector<std::string>& labels) {
  ReproResult r{std::move(name), true, {}};
  Ordering current = f.ordering(labels.front());
  r.lines.push_back(labels.front() + " = " + show(f.graph, current));
  for (std::size_t i = 1; i <= labels.size(); ++i) {
    current = plus_sweep(kind, f.graph, current);
    const auto& label = labels[i % labels.size()];
    const bool same = current == f.ordering(label);
    r.ok = r.ok && same;
    r.lines.push_back(std::string(to_string(kind)) + "+ -> " + show(f.graph, current) + (same ? "  = " : "  != ") + label);
  }
  const auto report = detect_cycle(kind, f.graph, f.ordering(labels.front()));
  r.ok = r.ok && report.cycle_length == labels.size();
  r.lines.push_back("cycle length " + std::to_string(report.cycle_length) + " (expected " +
                    std::to_string(labels.size()) + ")");
  return r;
}

ReproResult repro_corollary() {
  ReproResult r{"corollary1", false, {}};
  const auto g3 = fixture_g3();
  const auto g4 = fixture_g4();
  const std::vector<StarjoinComponent> components{{g3.graph, g3.ordering("sigma1")}, {g4.graph, g4.ordering("mu1")}};
  const auto check = starjoin_cycle_check(components);
  const auto an = asteroidal_number(check.graph);
  r.lines.push_back("starjoin of the 9- and 12-vertex examples: " + std::to_string(check.graph.order()) + " vertices");
  r.lines.push_back("seed = " + show(check.graph, check.seed));
  r.lines.push_back("component cycle lengths " + std::to_string(check.component_cycle_lengths[0]) + ", " +
                    std::to_string(check.component_cycle_lengths[1]) + "; lcm " +
                    std::to_string(check.required_divisor));
  r.lines.push_back("cycle length " + std::to_string(check.report.cycle_length) + " after tail " +
                    std::to_string(check.report.tail) + (check.divisible ? ", divisible by lcm" : ", NOT divisible by lcm"));
  std::string witness;
  for (Vertex v : an.witness) witness += " " + check.graph.name(v);
  r.lines.push_back("asteroidal number " + std::to_string(an.value) + (an.exact ? " (exact)" : " (lower bound)") +
                    ", witness" + witness);
  r.lines.push_back("note: the k - 1 + max formula predicts 5; exhaustive search finds no asteroidal 5-set");
  r.ok = check.divisible && an.exact && check.report.cycle_length > an.value;
  r.lines.push_back(std::string("cycle length exceeds asteroidal number: ") + (r.ok ? "yes" : "no"));
  return r;
}

ReproResult repro_two_chain() {
  ReproResult r{"g6", true, {}};
  const auto f = gen_two_chain(6);
  const Graph co = complement(f.graph);
  const auto& expected = expected_two_chain_trace();
  const auto& repaired = repaired_two_chain_trace();
  const auto tau = f.ordering("tau");
  const bool tau_same = tokens_of(co, tau) == expected.tau;
  r.ok = tau_same;
  r.lines.push_back("tau = " + show(co, tau) + (tau_same ? "  (as expected)" : "  (DIFFERS)"));
  const auto sweeps = sweep_sequence(SearchKind::LexBFS, co, tau, expected.sigmas.size()).orderings;
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    const auto got = tokens_of(co, sweeps[i]);
    std::string verdict;
    if (got == expected.sigmas[i]) {
      verdict = "matches";
    } else if (got == repaired.sigmas[i]) {
      verdict = "matches after repair of: " + joined(expected.sigmas[i]);
    } else {
      verdict = "DIFFERS from: " + joined(expected.sigmas[i]);
      r.ok = false;
    }
    r.lines.push_back("sigma" + std::to_string(i + 1) + " = " + joined(got) + "  " + verdict);
  }
  const bool period = sweeps[7] == sweeps[5];
  r.lines.push_back(std::string("sigma8 = sigma6: ") + (period ? "yes" : "no"));
  const auto orient = transitive_orientation(co, 64, tau);
  r.lines.push_back("orientation loop stops at sweep " + std::to_string(orient.sweeps_used));
  const bool valid = !validate_transitive_orientation(co, orient.ordering);
  r.lines.push_back(std::string("result orients the complement transitively: ") + (valid ? "yes" : "no"));
  r.ok = r.ok && period && orient.sweeps_used == 8 && valid;
  return r;
}

ReproResult repro_lexdfs() {
  ReproResult r{"lexdfs", true, {}};
  const auto f = fixture_lexdfs_example();
  r = cyclic_fixture("lexdfs", f, SearchKind::LexDFS, {"sigma1", "sigma2", "sigma3", "sigma4"});
  const auto report = detect_cycle(SearchKind::LexDFS, f.graph, f.ordering("sigma1"));
  for (const auto& o : report.cycle) {
    const bool cocomp = !check_cocomp_order(f.graph, o);
    r.ok = r.ok && !cocomp;
    r.lines.push_back(show(f.graph, o) + (cocomp ? "  cocomparability" : "  not cocomparability"));
  }
  const bool tau_ok = !check_cocomp_order(f.graph, f.ordering("tau"));
  r.ok = r.ok && tau_ok;
  r.lines.push_back("tau = " + show(f.graph, f.ordering("tau")) + (tau_ok ? "  cocomparability" : "  not cocomparability"));
  return r;
}

ReproResult repro_campaign(std::string_view name, CampaignResult (*run)(const CampaignOptions&),
                           const CampaignOptions& options) {
  const auto c = run(options);
  ReproResult r{std::string(name), c.ok(), {}};
  r.lines.push_back(c.name + ": " + std::to_string(c.trials) + " trials, " + std::to_string(c.failures) + " failures");
  if (c.skipped_parts) r.lines.push_back("partial checks skipped: " + std::to_string(c.skipped_parts));
  if (c.first_failure) r.lines.push_back("first failure: " + *c.first_failure);
  return r;
}

}  // namespace

const TwoChainTrace& expected_two_chain_trace() {
  static const TwoChainTrace trace{
      tokens("x a1 b1 b3 a3 a5 b5 b6 a6 a4 b4 b2 a2 y"),
      {
          tokens("y a2 b2 b4 a4 a6 b6 a5 b5 b3 a1 a3 x b1"),
          tokens("b1 x a1 a3 b3 b5 a5 a6 b6 b4 a4 a2 b2 y"),
          tokens("y b2 a2 a4 b4 b6 a6 b5 a1 a1 a3 b3 x b1"),
          tokens("b1 x b3 a3 a1 a5 b5 b6 a6 a4 a2 b4 b2 y"),
          tokens("y b2 b4 a2 a4 a6 b6 a5 a1 a3 b5 b3 x b1"),
          tokens("b1 x b3 b5 a3 a1 a5 a6 a4 a2 b6 b4 b2 y"),
          tokens("y b2 b4 b6 a2 a4 a6 a5 a1 a3 b5 b3 x b1"),
          tokens("b1 x b3 b5 a3 a1 a5 a6 a4 a2 b6 b4 b2 y"),
      }};
  return trace;
}

const TwoChainTrace& repaired_two_chain_trace() {
  static const TwoChainTrace trace = [] {
    TwoChainTrace t = expected_two_chain_trace();
    std::swap(t.sigmas[1][2], t.sigmas[1][3]);
    t.sigmas[2][8] = "a5";
    return t;
  }();
  return trace;
}

std::vector<std::string_view> repro_names() {
  std::vector<std::string_view> out{"figure1", "figure2", "corollary1", "g6", "lexdfs"};
  for (const auto& c : all_campaigns()) out.push_back(c.name);
  return out;
}

std::optional<ReproResult> run_repro(std::string_view name, const CampaignOptions& options) {
  if (name == "figure1") return cyclic_fixture("figure1", fixture_g3(), SearchKind::LexBFS, {"sigma1", "sigma2", "sigma3"});
  if (name == "figure2") return cyclic_fixture("figure2", fixture_g4(), SearchKind::LexBFS, {"mu1", "mu2", "mu3", "mu4"});
  if (name == "corollary1") return repro_corollary();
  if (name == "g6") return repro_two_chain();
  if (name == "lexdfs") return repro_lexdfs();
  for (const auto& c : all_campaigns())
    if (c.name == name) return repro_campaign(name, c.run, options);
  return std::nullopt;
}

}  // namespace lexcycle
