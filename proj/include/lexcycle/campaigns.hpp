#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexcycle {

// Randomized claim checks. Trial i draws everything from trial_seed(seed, i),
// so results do not depend on the number of worker threads.

struct CampaignOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
};

struct CampaignResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Description of the failing trial with the smallest index.
  std::optional<std::string> first_failure;
  /// Trials in which part of the check did not apply to the drawn instance
  /// (for example the matrix check on a complete graph).
  std::size_t skipped_parts = 0;

  bool ok() const { return failures == 0; }
};

/// A trial returns a failure description, or std::nullopt on success. It may
/// bump `skipped` when part of the check did not apply.
using Trial = std::function<std::optional<std::string>(std::size_t index, std::uint64_t seed, std::size_t& skipped)>;

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index);

CampaignResult run_campaign(std::string name, const Trial& trial, const CampaignOptions& options);

/// LexBFS+ of a proper-interval order is its dual, and the orientation loop
/// stops by sweep 5 with sweep 3 a proper-interval order. Unit-interval
/// graphs with n <= 40.
CampaignResult campaign_proper_interval(const CampaignOptions& options);
/// From a cocomparability seed on an interval graph, sweep 1 equals sweep 3.
CampaignResult campaign_interval(const CampaignOptions& options);
/// Cobipartite graphs: every sweep after a cocomparability seed splits into
/// two cliques, the period is 2 after fewer than n^2 sweeps, the sweep
/// matrices follow alternating row and column sorts, and the potential never
/// increases.
CampaignResult campaign_cobipartite(const CampaignOptions& options);
/// Domino-free cocomparability graphs reach period 2 from a cocomparability
/// seed.
CampaignResult campaign_domino_free(const CampaignOptions& options);
/// Trees: sweep 4 equals sweep 2 under BFS+ and LexBFS+, and the last
/// vertices of sweeps 1 and 2 are at diametral distance. The first part does
/// not hold in general; see campaign_tree_period.
CampaignResult campaign_trees(const CampaignOptions& options);
/// Trees: sweep 5 equals sweep 3 under BFS+ and LexBFS+, and the last
/// vertices of sweeps 1 and 2 are at diametral distance.
CampaignResult campaign_tree_period(const CampaignOptions& options);
/// Non-adjacent pairs reverse under LexBFS+ from a cocomparability order,
/// and every cycle length reached is even.
CampaignResult campaign_flipping(const CampaignOptions& options);
/// A planted module sees the sweep restricted to it, and the quotient sees
/// the sweep on blocks.
CampaignResult campaign_modules(const CampaignOptions& options);
/// Reference and partition-refinement engines agree on all three searches,
/// and LexBFS outputs pass the four-point condition. n <= 30.
CampaignResult campaign_engines(const CampaignOptions& options);

struct NamedCampaign {
  std::string_view name;
  CampaignResult (*run)(const CampaignOptions&);
};
const std::vector<NamedCampaign>& all_campaigns();

// Reproductions of the fixed examples --------------------------------------

struct ReproResult {
  std::string name;
  bool ok = false;
  /// Human-readable transcript: orderings, values, comparisons.
  std::vector<std::string> lines;
};

/// Known names: figure1, figure2, corollary1, g6, lexdfs, and every campaign
/// name in all_campaigns().
/// Returns std::nullopt for an unknown name.
std::optional<ReproResult> run_repro(std::string_view name, const CampaignOptions& options);
std::vector<std::string_view> repro_names();

/// Expected LexBFS+ trace on the complement of the two-chain graph with six
/// vertices per chain: the seed tau and sweeps sigma1..sigma8, as tokens.
/// As given, sigma2 has a1 and a3 swapped and sigma3 lists a1 twice and
/// omits a5, so sigma3 is not an ordering.
struct TwoChainTrace {
  std::vector<std::string> tau;
  std::vector<std::vector<std::string>> sigmas;
};
const TwoChainTrace& expected_two_chain_trace();
/// The same trace with both slips repaired.
const TwoChainTrace& repaired_two_chain_trace();

}  // namespace lexcycle
