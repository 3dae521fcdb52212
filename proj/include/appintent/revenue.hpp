#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace appintent {

// Currency is carried in integer micro-units; dollars appear only at the
// presentation boundary.
using Micro = std::int64_t;

Micro dollars_to_micro(double dollars);
double micro_to_dollars(Micro m);
// Presentation rounding to whole dollars (half away from zero).
std::int64_t micro_to_whole_dollars(Micro m);

// CPA -> CPM arbitrage: price per impression = CPA * predicted CTR, no
// intermediary cut.
Micro to_cpm_micro(Micro cpa, double predicted_ctr);
double to_cpm(double cpa, double predicted_ctr);

struct Advertiser {
  std::string id;
  Micro cpa_budget = 0;        // per click
  std::int64_t click_goal = 0;
  double base_ctr = 0.0;       // intermediary's default prediction
  double uplift_pct = 0.0;     // applied while the advertiser is targeted
};

struct AuctionBid {
  std::string advertiser_id;
  Micro cpm = 0;
  bool interest_matched = false;
};

enum class AuctionPolicy { HighestCpm, InterestTargeted };

// HighestCpm: max CPM, ties to the lower advertiser id. InterestTargeted:
// highest CPM among matched bids, falling back to HighestCpm when none match.
// Empty bid set raises DomainError.
const AuctionBid& run_auction(const std::vector<AuctionBid>& bids, AuctionPolicy policy);

// 100 * (targeted revenue - baseline revenue) / baseline revenue over a
// request stream; <= 0 by construction. nullopt when baseline revenue is 0.
std::optional<double> initial_impact(const std::vector<std::vector<AuctionBid>>& requests);

struct LedgerEntry {
  std::string advertiser_id;
  std::int64_t impressions = 0;
  Micro revenue = 0;
  bool reached_goal = false;
};

struct RevenueReport {
  Micro baseline_revenue = 0;
  Micro targeted_revenue = 0;   // revenue of the targeted run (exact micro)
  Micro long_term_revenue = 0;  // alias of targeted_revenue after exhaustion
  std::optional<double> initial_impact_pct;
  std::optional<double> long_term_impact_pct;  // from presentation-rounded dollars
  std::vector<LedgerEntry> impressions_ledger;
  std::vector<LedgerEntry> baseline_ledger;
  bool nonterminating_advertiser = false;  // zero CTR with a positive goal
};

// Inventory-exhaustion simulation. The targeted advertiser (if any) serves
// first at its uplifted CTR until its click goal is met, then exits; the
// remaining inventory goes to the other advertisers, highest CPM first, each
// exiting at its goal. targeted_share limits targeting to the first
// round(share * inventory) impressions (the applicable fraction); the rest of
// the stream runs untargeted. The baseline run is the same machine with no
// targeting.
RevenueReport simulate_long_term(const std::vector<Advertiser>& advertisers,
                                 std::int64_t inventory,
                                 std::optional<std::size_t> targeted_index,
                                 double targeted_share = 1.0);

struct LongTermRow {
  std::string method;
  double increase_pct = 0.0;
  double applicable_pct = 0.0;
  std::optional<double> initial_impact_pct;
  std::optional<double> long_term_impact_pct;
};

// Per-method long-term estimate: uplift = the method's measured CTR increase,
// applied to the applicable fraction of requests of the given fixture.
std::vector<LongTermRow> estimate_long_term_table(
    const std::vector<std::pair<std::string, std::pair<double, double>>>& method_rows,
    const std::vector<Advertiser>& fixture, std::int64_t inventory,
    std::size_t targeted_index);

}  // namespace appintent
