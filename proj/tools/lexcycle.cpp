// lexcycle: command-line front end for sweeps, cycle detection, ordering
// checks, generators, reproductions and the matrix fixpoint.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexcycle/campaigns.hpp"
#include "lexcycle/checkers.hpp"
#include "lexcycle/constructions.hpp"
#include "lexcycle/cycle.hpp"
#include "lexcycle/graph_io.hpp"
#include "lexcycle/matrix.hpp"
#include "lexcycle/sweep.hpp"

using json = nlohmann::ordered_json;
using namespace lexcycle;

namespace {

enum ExitCode : int { kOk = 0, kClaimFailed = 1, kBudget = 2, kUsage = 64, kParse = 65 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  std::uint64_t digest = 0xcbf29ce484222325ULL;
  bool have_inputs = false;
  std::string verdict = "ok";
  json result = json::object();
  std::vector<std::string> text;

  void absorb(std::string_view bytes) {
    have_inputs = true;
    for (unsigned char c : bytes) {
      digest ^= c;
      digest *= 0x100000001b3ULL;
    }
    // Separator so that ("ab", "c") and ("a", "bc") differ.
    digest ^= 0xff;
    digest *= 0x100000001b3ULL;
  }
};

struct Globals {
  std::string format = "text";
  bool timing = false;
};

std::string read_input(Report& report, const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::exception& e) {
    throw ParseError(0, e.what());
  }
  report.absorb(text);
  return text;
}

std::vector<std::string> names_of(const Graph& g, const Ordering& o) {
  std::vector<std::string> out;
  for (Vertex v : o) out.push_back(g.name(v));
  return out;
}

std::string line_of(const Graph& g, const Ordering& o) {
  std::string s = serialize_ordering(g, o);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::size_t sweep_budget(std::optional<std::size_t> flag, std::size_t n) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LEXCYCLE_MAX_SWEEPS")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size() && value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    throw UsageError("LEXCYCLE_MAX_SWEEPS must be a positive integer");
  }
  return default_max_sweeps(n);
}

SearchKind search_of(const std::string& text) {
  auto kind = parse_search_kind(text);
  if (!kind) throw UsageError("unknown search '" + text + "'");
  return *kind;
}

json trace_json(const Graph& g, const std::vector<Ordering>& trace) {
  json out = json::array();
  for (const auto& o : trace) out.push_back(names_of(g, o));
  return out;
}

int budget_exhausted(const Graph& g, const BudgetExhausted& e, Report& r) {
  r.verdict = "budget";
  r.result["error"] = e.what();
  r.result["trace"] = trace_json(g, e.trace());
  r.text.push_back(std::string("budget exhausted: ") + e.what());
  for (const auto& o : e.trace()) r.text.push_back("  " + line_of(g, o));
  return kBudget;
}

// sweep -----------------------------------------------------------------------

struct SweepArgs {
  std::string graph;
  std::string order;
  bool default_seed = false;
  std::string search = "lexbfs+";
  std::size_t sweeps = 1;
  std::string engine = "partition";
};

int run_sweep(const SweepArgs& a, Report& r) {
  const Graph g = parse_graph(read_input(r, a.graph));
  const SearchKind kind = search_of(a.search);
  if (a.sweeps == 0) throw UsageError("--sweeps must be at least 1");
  Engine engine;
  if (a.engine == "partition") engine = Engine::PartitionRefinement;
  else if (a.engine == "reference") engine = Engine::Reference;
  else throw UsageError("unknown engine '" + a.engine + "'");
  const Ordering seed = a.order.empty() ? Ordering::identity(g.order()) : parse_ordering(g, read_input(r, a.order));
  const auto trace = sweep_sequence(kind, g, seed, a.sweeps, engine);
  r.result["search"] = std::string(to_string(kind)) + "+";
  r.result["seed"] = names_of(g, seed);
  r.result["orderings"] = trace_json(g, trace.orderings);
  for (const auto& o : trace.orderings) r.text.push_back(line_of(g, o));
  return kOk;
}

// cycle -----------------------------------------------------------------------

struct CycleArgs {
  std::string graph;
  std::string order;
  bool exhaustive = false;
  std::string search = "lexbfs+";
  std::optional<std::size_t> budget;
  std::size_t cap = kDefaultEnumerationCap;
};

int run_cycle(const CycleArgs& a, Report& r) {
  const Graph g = parse_graph(read_input(r, a.graph));
  const SearchKind kind = search_of(a.search);
  if (a.exhaustive) {
    if (kind != SearchKind::LexBFS) throw UsageError("--exhaustive supports lexbfs+ only");
    const auto best = lex_cycle(g, a.cap);
    r.result["lexcycle"] = best.value;
    r.result["exact"] = best.exact;
    r.result["seeds_examined"] = best.seeds_examined;
    r.result["witness"] = names_of(g, best.witness);
    r.text.push_back(std::string("lexcycle ") + (best.exact ? "" : ">= ") + std::to_string(best.value));
    r.text.push_back("seeds examined " + std::to_string(best.seeds_examined) + (best.exact ? "" : " (enumeration capped)"));
    r.text.push_back("witness " + line_of(g, best.witness));
    return kOk;
  }
  const Ordering seed = a.order.empty() ? Ordering::identity(g.order()) : parse_ordering(g, read_input(r, a.order));
  CycleReport report;
  try {
    report = detect_cycle(kind, g, seed, sweep_budget(a.budget, g.order()));
  } catch (const BudgetExhausted& e) {
    return budget_exhausted(g, e, r);
  }
  r.result["search"] = std::string(to_string(kind)) + "+";
  r.result["tail"] = report.tail;
  r.result["cycle_length"] = report.cycle_length;
  r.result["total_sweeps"] = report.total_sweeps;
  r.result["cycle"] = trace_json(g, report.cycle);
  r.text.push_back("tail " + std::to_string(report.tail));
  r.text.push_back("cycle length " + std::to_string(report.cycle_length));
  r.text.push_back("total sweeps " + std::to_string(report.total_sweeps));
  for (const auto& o : report.cycle) r.text.push_back("  " + line_of(g, o));
  return kOk;
}

// check -----------------------------------------------------------------------

struct CheckArgs {
  std::string graph;
  std::string order;
  std::string property;
};

int run_check(const CheckArgs& a, Report& r) {
  const Graph g = parse_graph(read_input(r, a.graph));
  const Ordering o = parse_ordering(g, read_input(r, a.order));
  CheckResult verdict;
  if (a.property == "pi") verdict = check_pi_order(g, o);
  else if (a.property == "interval") verdict = check_i_order(g, o);
  else if (a.property == "cocomp") verdict = check_cocomp_order(g, o);
  else if (a.property == "lexbfs4pc") verdict = check_lexbfs_4pc(g, o);
  else if (a.property == "transitive") verdict = validate_transitive_orientation(g, o);
  else throw UsageError("unknown property '" + a.property + "'");
  r.result["property"] = a.property;
  r.result["holds"] = !verdict.has_value();
  if (!verdict) {
    r.text.push_back(a.property + ": holds");
    return kOk;
  }
  std::vector<std::string> witness;
  for (Vertex v : verdict->witness) witness.push_back(g.name(v));
  r.result["witness"] = witness;
  std::string line = a.property + ": violated by";
  for (const auto& w : witness) line += " " + w;
  r.text.push_back(line);
  r.verdict = "fail";
  return kClaimFailed;
}

// repro -----------------------------------------------------------------------

struct ReproArgs {
  std::string name;
  CampaignOptions campaign;
};

int run_repro_cmd(const ReproArgs& a, Report& r) {
  const auto result = run_repro(a.name, a.campaign);
  if (!result) {
    std::string known;
    for (auto n : repro_names()) known += " " + std::string(n);
    throw UsageError("unknown reproduction '" + a.name + "'; known:" + known);
  }
  r.result["name"] = result->name;
  r.result["reproduced"] = result->ok;
  r.result["transcript"] = result->lines;
  r.text = result->lines;
  r.text.push_back(result->ok ? "reproduced" : "NOT reproduced");
  if (result->ok) return kOk;
  r.verdict = "fail";
  return kClaimFailed;
}

// gen -------------------------------------------------------------------------

struct GenArgs {
  std::string spec;
  bool complement = false;
  std::string ordering;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

std::uint64_t number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto value = std::stoull(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
}

double fraction(const std::string& text) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size() && value >= 0.0 && value <= 1.0) return value;
  } catch (const std::exception&) {
  }
  throw UsageError("density must lie in [0, 1], got '" + text + "'");
}

int run_gen(const GenArgs& a, Report& r) {
  const auto parts = split(a.spec, ':');
  if (parts.empty()) throw UsageError("empty generator spec");
  const std::string& kind = parts[0];
  auto arity = [&](std::size_t k) {
    if (parts.size() != k + 1) throw UsageError("'" + kind + "' takes " + std::to_string(k) + " parameter(s)");
  };
  Graph g;
  std::map<std::string, Ordering> orderings;
  auto take_fixture = [&](Fixture f) {
    g = std::move(f.graph);
    orderings = std::move(f.orderings);
  };
  auto take_generated = [&](GeneratedGraph gen) {
    g = std::move(gen.graph);
    if (gen.witness) orderings.emplace("witness", *gen.witness);
  };
  if (kind == "g3") arity(0), take_fixture(fixture_g3());
  else if (kind == "g4") arity(0), take_fixture(fixture_g4());
  else if (kind == "lexdfs") arity(0), take_fixture(fixture_lexdfs_example());
  else if (kind == "domino") arity(0), g = gen_domino();
  else if (kind == "ladder") arity(1), g = gen_ladder(static_cast<int>(number(parts[1], "k")));
  else if (kind == "twochain") arity(1), take_fixture(gen_two_chain(static_cast<int>(number(parts[1], "n"))));
  else if (kind == "starjoin") {
    arity(1);
    std::vector<Graph> components;
    for (const auto& file : split(parts[1], ',')) components.push_back(parse_graph(read_input(r, file)));
    g = starjoin(components).graph;
  } else if (kind == "unitinterval") arity(2), take_generated(gen_unit_interval(number(parts[1], "n"), number(parts[2], "seed")));
  else if (kind == "interval") arity(2), take_generated(gen_interval(number(parts[1], "n"), number(parts[2], "seed")));
  else if (kind == "permutation") arity(2), take_generated(gen_permutation_graph(number(parts[1], "n"), number(parts[2], "seed")));
  else if (kind == "cobipartite") {
    arity(4);
    take_generated(gen_cobipartite(number(parts[1], "p"), number(parts[2], "q"), fraction(parts[3]), number(parts[4], "seed")));
  } else if (kind == "tree") arity(2), take_generated(gen_tree(number(parts[1], "n"), number(parts[2], "seed")));
  else if (kind == "gnp") arity(3), take_generated(gen_gnp(number(parts[1], "n"), fraction(parts[2]), number(parts[3], "seed")));
  else throw UsageError("unknown generator '" + kind + "'");

  if (a.complement) g = complement(g);
  if (!a.ordering.empty()) {
    auto it = orderings.find(a.ordering);
    if (it == orderings.end()) {
      std::string known;
      for (const auto& [label, o] : orderings) known += " " + label;
      throw UsageError("'" + kind + "' has no ordering '" + a.ordering + "'" + (known.empty() ? "" : "; known:" + known));
    }
    r.result["ordering"] = names_of(g, it->second);
    r.text.push_back(line_of(g, it->second));
    return kOk;
  }
  r.result["vertices"] = g.names();
  json edges = json::array();
  for (auto [u, w] : g.edges()) edges.push_back({g.name(u), g.name(w)});
  r.result["edges"] = edges;
  std::string text = serialize_graph(g);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  r.text.push_back(text);
  return kOk;
}

// orient ----------------------------------------------------------------------

struct OrientArgs {
  std::string graph;
  std::string order;
  std::optional<std::size_t> budget;
};

int run_orient(const OrientArgs& a, Report& r) {
  const Graph g = parse_graph(read_input(r, a.graph));
  std::optional<Ordering> seed;
  if (!a.order.empty()) seed = parse_ordering(g, read_input(r, a.order));
  OrientationResult result;
  try {
    result = transitive_orientation(g, sweep_budget(a.budget, g.order()), seed);
  } catch (const BudgetExhausted& e) {
    return budget_exhausted(g, e, r);
  }
  const auto violation = validate_transitive_orientation(g, result.ordering);
  r.result["ordering"] = names_of(g, result.ordering);
  r.result["sweeps_used"] = result.sweeps_used;
  r.result["valid"] = !violation.has_value();
  r.result["trace"] = trace_json(g, result.trace);
  r.text.push_back(line_of(g, result.ordering));
  r.text.push_back("stopped at sweep " + std::to_string(result.sweeps_used));
  if (!violation) {
    r.text.push_back("valid transitive orientation of the complement");
    return kOk;
  }
  std::string line = "not transitive:";
  for (Vertex v : violation->witness) line += " " + g.name(v);
  r.text.push_back(line);
  r.result["witness"] = json::array();
  for (Vertex v : violation->witness) r.result["witness"].push_back(g.name(v));
  r.verdict = "fail";
  return kClaimFailed;
}

// matrix ----------------------------------------------------------------------

struct MatrixArgs {
  std::string matrix;
  std::optional<std::size_t> max_steps;
};

std::string bits(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += x ? '1' : '0';
  return s;
}

int run_matrix(const MatrixArgs& a, Report& r) {
  const BinaryMatrix m = parse_matrix(read_input(r, a.matrix));
  const std::size_t limit = a.max_steps ? *a.max_steps : m.rows() * m.cols() + 2;
  if (limit == 0) throw UsageError("--max-steps must be at least 1");
  FixpointReport report{m, 0, {}};
  try {
    report = iterate_to_fixpoint(m, limit);
  } catch (const FixpointNotReached& e) {
    r.verdict = "budget";
    r.result["error"] = e.what();
    r.text.push_back(e.what());
    return kBudget;
  }
  r.result["steps"] = report.steps;
  r.result["final"] = report.final_matrix.to_rows();
  json trace = json::array();
  for (const auto& v : report.potential_trace) trace.push_back(bits(v));
  r.result["potential_trace"] = trace;
  r.text.push_back("passes " + std::to_string(report.steps));
  std::string text = serialize_matrix(report.final_matrix);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  r.text.push_back(text);
  return kOk;
}

void emit(const Globals& globals, const Report& r, std::optional<double> millis) {
  if (globals.format == "json") {
    json out;
    out["command"] = r.command;
    if (r.have_inputs) {
      char hex[17];
      std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(r.digest));
      out["input_digest"] = std::string("fnv1a64:") + hex;
    } else {
      out["input_digest"] = nullptr;
    }
    out["verdict"] = r.verdict;
    out["result"] = r.result;
    if (millis) out["wall_time_ms"] = *millis;
    std::cout << out.dump(2) << '\n';
    return;
  }
  for (const auto& line : r.text) std::cout << line << '\n';
  if (millis) std::cout << "wall time " << *millis << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-sweep graph search toolkit: LexBFS+/LexDFS+/BFS+ sweeps, cycles, ordering checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", globals.timing, "Report wall time (makes output non-deterministic)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run consecutive + sweeps from a seed ordering");
  sweep_cmd->add_option("--graph", sweep.graph, "Graph file")->required();
  auto* sweep_order = sweep_cmd->add_option("--order", sweep.order, "Seed ordering file");
  sweep_cmd->add_flag("--default-seed", sweep.default_seed, "Seed with the input order")->excludes(sweep_order);
  sweep_cmd->add_option("--search", sweep.search, "lexbfs+, lexdfs+ or bfs+")->capture_default_str();
  sweep_cmd->add_option("--sweeps", sweep.sweeps, "Number of sweeps")->capture_default_str();
  sweep_cmd->add_option("--engine", sweep.engine, "partition or reference")->capture_default_str();

  CycleArgs cycle;
  auto* cycle_cmd = app.add_subcommand("cycle", "Sweep until an ordering repeats");
  cycle_cmd->add_option("--graph", cycle.graph, "Graph file")->required();
  auto* cycle_order = cycle_cmd->add_option("--order", cycle.order, "Seed ordering file (default: input order)");
  cycle_cmd->add_flag("--exhaustive", cycle.exhaustive, "Longest cycle over every LexBFS seed")->excludes(cycle_order);
  cycle_cmd->add_option("--search", cycle.search, "lexbfs+, lexdfs+ or bfs+")->capture_default_str();
  cycle_cmd->add_option("--budget", cycle.budget, "Maximum sweeps (default max(4n+8, 64) or LEXCYCLE_MAX_SWEEPS)");
  cycle_cmd->add_option("--cap", cycle.cap, "Maximum LexBFS seeds enumerated")->capture_default_str();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Check an ordering property");
  check_cmd->add_option("--graph", check.graph, "Graph file")->required();
  check_cmd->add_option("--order", check.order, "Ordering file")->required();
  check_cmd->add_option("--property", check.property, "pi, interval, cocomp, lexbfs4pc or transitive")->required();

  ReproArgs repro;
  auto* repro_cmd = app.add_subcommand("repro", "Reproduce a worked example or run a claim campaign");
  repro_cmd->add_option("name", repro.name, "Reproduction name")->required();
  repro_cmd->add_option("--trials", repro.campaign.trials, "Campaign trials")->capture_default_str();
  repro_cmd->add_option("--seed", repro.campaign.seed, "Campaign seed")->capture_default_str();
  repro_cmd->add_option("--jobs", repro.campaign.jobs, "Worker threads")->capture_default_str();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print a generated graph or one of its orderings");
  gen_cmd->add_option("spec", gen.spec,
                      "g3 | g4 | lexdfs | domino | ladder:k | twochain:n | starjoin:f1,f2,... | unitinterval:n:seed | "
                      "interval:n:seed | permutation:n:seed | cobipartite:p:q:d:seed | tree:n:seed | gnp:n:p:seed")
      ->required();
  gen_cmd->add_flag("--complement", gen.complement, "Print the complement instead");
  gen_cmd->add_option("--ordering", gen.ordering, "Print the named ordering (sigma1, mu1, tau, witness, ...)");

  OrientArgs orient;
  auto* orient_cmd = app.add_subcommand("orient", "Repeat LexBFS+ until sweep i equals sweep i-2");
  orient_cmd->add_option("--graph", orient.graph, "Graph file")->required();
  orient_cmd->add_option("--order", orient.order, "Tiebreak for the first sweep (default: input order)");
  orient_cmd->add_option("--budget", orient.budget, "Maximum sweeps (default max(4n+8, 64) or LEXCYCLE_MAX_SWEEPS)");

  MatrixArgs matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "Alternate row and column sorts to a fixpoint");
  matrix_cmd->add_option("--matrix", matrix.matrix, "Matrix file")->required();
  matrix_cmd->add_option("--max-steps", matrix.max_steps, "Pass limit (default p*q+2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kUsage;
  }

  Report report;
  for (int i = 1; i < argc; ++i) report.command += (i > 1 ? " " : "") + std::string(argv[i]);
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (*sweep_cmd) code = run_sweep(sweep, report);
    else if (*cycle_cmd) code = run_cycle(cycle, report);
    else if (*check_cmd) code = run_check(check, report);
    else if (*repro_cmd) code = run_repro_cmd(repro, report);
    else if (*gen_cmd) code = run_gen(gen, report);
    else if (*orient_cmd) code = run_orient(orient, report);
    else if (*matrix_cmd) code = run_matrix(matrix, report);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const GraphError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kParse;
  }
  std::optional<double> millis;
  if (globals.timing)
    millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(globals, report, millis);
  return code;
}
