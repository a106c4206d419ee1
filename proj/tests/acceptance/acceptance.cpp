// Acceptance suite: one PASS/FAIL line per criterion.
//
// Three criteria state values that do not hold for the objects as defined
// (see KNOWN_DISCREPANCIES in README.md). They are reported as FAIL with the
// measured values. The exit status is 0 when every failing criterion is one
// of those, so a new failure anywhere else still breaks the build.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "lexcycle/campaigns.hpp"
#include "lexcycle/checkers.hpp"
#include "lexcycle/constructions.hpp"
#include "lexcycle/cycle.hpp"
#include "lexcycle/graph_io.hpp"
#include "lexcycle/sweep.hpp"
#include "oracles.hpp"

using namespace lexcycle;
using oracle::names;
using oracle::order;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    notes.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
    pass = pass && ok;
  }
  void note(const std::string& what) { notes.push_back("      " + what); }
};

std::string yes(bool b) { return b ? "yes" : "no"; }

Outcome sweep_trace(SearchKind kind, const Graph& g, const std::string& seed, const std::vector<std::string>& expected,
                    std::size_t period) {
  Outcome out;
  const auto s = sweep_sequence(kind, g, order(g, seed), expected.size()).orderings;
  for (std::size_t i = 0; i < expected.size(); ++i)
    out.require(names(g, s[i]) == expected[i], "sweep " + std::to_string(i + 1) + " = " + names(g, s[i]));
  const auto r = detect_cycle(kind, g, order(g, seed));
  out.require(r.cycle_length == period, "cycle length " + std::to_string(r.cycle_length));
  return out;
}

Outcome campaign(CampaignResult (*run)(const CampaignOptions&), std::size_t trials, std::uint64_t seed) {
  Outcome out;
  const auto r = run({trials, seed, 4});
  out.require(r.ok(), r.name + ": " + std::to_string(r.trials) + " trials, " + std::to_string(r.failures) + " failures");
  if (r.skipped_parts) out.note("partial checks not applicable: " + std::to_string(r.skipped_parts));
  if (r.first_failure) out.note("first failure: " + r.first_failure->substr(0, r.first_failure->find('\n')));
  return out;
}

Outcome nine_vertex_example() {
  return sweep_trace(SearchKind::LexBFS, fixture_g3().graph, "x b a c e f d z y",
                     {"y f e a c d b x z", "z d c e a b f y x", "x b a c e f d z y"}, 3);
}

Outcome twelve_vertex_example() {
  return sweep_trace(SearchKind::LexBFS, fixture_g4().graph, "x4 z4 y1 y3 y4 y2 z2 z1 z3 x2 x3 x1",
                     {"x1 z1 y2 y4 y1 y3 z3 z2 z4 x3 x4 x2", "x2 z2 y3 y1 y2 y4 z4 z3 z1 x4 x1 x3",
                      "x3 z3 y4 y2 y3 y1 z1 z4 z2 x1 x2 x4", "x4 z4 y1 y3 y4 y2 z2 z1 z3 x2 x3 x1"},
                     4);
}

Outcome starjoin_example() {
  Outcome out;
  const std::vector<StarjoinComponent> parts{{fixture_g3().graph, order(fixture_g3().graph, "x b a c e f d z y")},
                                             {fixture_g4().graph, order(fixture_g4().graph,
                                                                        "x4 z4 y1 y3 y4 y2 z2 z1 z3 x2 x3 x1")}};
  const auto r = starjoin_cycle_check(parts);
  const Graph& h = r.graph;
  out.note("joined graph: " + std::to_string(h.order()) + " vertices, seed " + names(h, r.seed));
  const auto an = asteroidal_number(h);
  const bool four = oracle::has_asteroidal_set(h, 4), five = oracle::has_asteroidal_set(h, 5);
  out.note("subset enumeration: asteroidal 4-set " + yes(four) + ", asteroidal 5-set " + yes(five));
  out.require(an.exact && an.value == 5, "asteroidal number " + std::to_string(an.value) + " (claimed 5)");
  out.require(r.divisible && r.report.cycle_length % 12 == 0,
              "cycle length " + std::to_string(r.report.cycle_length) + ", divisible by 12");
  out.require(r.report.cycle_length > an.value, "cycle length exceeds asteroidal number");
  return out;
}

Outcome two_chain_trace() {
  Outcome out;
  const Fixture f = gen_two_chain(6);
  const Graph g = complement(f.graph);
  const auto join = [](const std::vector<std::string>& tokens) {
    std::string joined;
    for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
    return joined;
  };
  const auto& trace = expected_two_chain_trace();
  out.require(names(g, f.ordering("tau")) == join(trace.tau), "seed as listed: " + join(trace.tau));
  std::vector<std::string> listed;
  for (const auto& sigma : trace.sigmas) listed.push_back(join(sigma));
  const auto s = sweep_sequence(SearchKind::LexBFS, g, f.ordering("tau"), 8).orderings;
  for (std::size_t i = 0; i < 8; ++i) {
    const std::string got = names(g, s[i]);
    out.require(got == listed[i], "sweep " + std::to_string(i + 1) + " = " + got);
    if (got != listed[i]) out.note("listed   " + listed[i]);
  }
  out.note("the listed sweep 3 names a1 twice and omits a5, so it is not an ordering");
  out.note("the listed sweep 2 is a LexBFS ordering: " +
           yes(oracle::is_lexbfs_ordering(g, oracle::names_to_seq(g, listed[1]))) +
           "; its + sweep equals computed sweep 3: " +
           yes(plus_sweep(SearchKind::LexBFS, g, order(g, listed[1])) == s[2]));
  out.require(s[7] == s[5], "sweep 8 equals sweep 6");
  const auto orient = transitive_orientation(g, 64, f.ordering("tau"));
  out.require(orient.sweeps_used == 8, "orientation loop stops at sweep " + std::to_string(orient.sweeps_used));
  out.require(!validate_transitive_orientation(g, orient.ordering), "result orients the complement transitively");
  return out;
}

Outcome lexdfs_example() {
  Outcome out;
  const Graph g = fixture_lexdfs_example().graph;
  out.require(names(g, plus_sweep(SearchKind::LexDFS, g, order(g, "a c d b f g e"))) == "e g f d c a b",
              "sweep 2 = e g f d c a b");
  const auto r = detect_cycle(SearchKind::LexDFS, g, order(g, "a c d b f g e"));
  out.require(r.cycle_length == 4, "cycle length " + std::to_string(r.cycle_length));
  for (const auto& o : r.cycle) out.require(check_cocomp_order(g, o).has_value(), names(g, o) + " is not cocomparability");
  out.require(!check_cocomp_order(g, order(g, "a c e f g d b")), "a c e f g d b is cocomparability");
  return out;
}

Outcome trees() {
  Outcome out = campaign(campaign_trees, 200, 1);
  const auto period = campaign_tree_period({200, 1, 4});
  out.note("sweep 5 = sweep 3 and diametral endpoints on the same trees: " + std::to_string(period.failures) +
           " failures");
  return out;
}

Outcome performance() {
  Outcome out;
  const std::size_t n = 100'000, m = 1'000'000;
  const Graph g = gen_gnm(n, m, 2024).graph;
  const Ordering seed = random_ordering(n, 2024);
  const auto start = std::chrono::steady_clock::now();
  const Ordering s = plus_sweep(SearchKind::LexBFS, g, seed);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "n = %zu, m = %zu, one partition-refinement sweep in %.3f s", g.order(), g.size(),
                seconds);
  out.require(seconds < 2.0 && s.size() == n, buf);
  return out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  // Criteria whose stated values were measured to be false.
  const std::set<int> known_discrepancies{3, 4, 10};
  const std::vector<Criterion> criteria{
      {1, "nine-vertex example cycles with period 3", nine_vertex_example},
      {2, "twelve-vertex example cycles with period 4", twelve_vertex_example},
      {3, "starjoin of both examples: asteroidal number 5, period divisible by 12", starjoin_example},
      {4, "two-chain complement trace from tau, sweep 8 = sweep 6", two_chain_trace},
      {5, "LexDFS+ cycle of non-cocomparability orderings", lexdfs_example},
      {6, "proper interval: dual sweep, stop by sweep 5", [] { return campaign(campaign_proper_interval, 200, 1); }},
      {7, "interval: sweep 1 = sweep 3 from a cocomparability seed", [] { return campaign(campaign_interval, 200, 1); }},
      {8, "cobipartite: clique split, period 2, matrix sorting", [] { return campaign(campaign_cobipartite, 200, 1); }},
      {9, "domino-free cocomparability: period 2", [] { return campaign(campaign_domino_free, 200, 1); }},
      {10, "trees: sweep 4 = sweep 2, diametral endpoints", trees},
      {11, "flipping and even periods", [] { return campaign(campaign_flipping, 500, 1); }},
      {12, "module and quotient projection", [] { return campaign(campaign_modules, 200, 1); }},
      {13, "reference engine = partition refinement, four-point condition",
       [] { return campaign(campaign_engines, 1000, 1); }},
      {14, "single sweep on n = 1e5, m = 1e6 under 2 s", performance},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %2d: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title);
    for (const auto& line : o.notes) std::printf("    %s\n", line.c_str());
    if (!o.pass) {
      if (known_discrepancies.count(c.id)) std::printf("    known discrepancy, see README\n");
      else ++unexpected;
    }
  }
  std::printf("%d unexpected failure%s\n", unexpected, unexpected == 1 ? "" : "s");
  return unexpected == 0 ? 0 : 1;
}
