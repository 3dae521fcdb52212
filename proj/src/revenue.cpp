#include "appintent/revenue.hpp"

#include <algorithm>
#include <cfenv>
#include <cmath>

#include "appintent/errors.hpp"

namespace appintent {
namespace {

double round_half_to_even(double x) { return std::nearbyint(x); }

struct Slot {
  const Advertiser* adv = nullptr;
  bool targeted = false;      // designated by the targeting assignment
  bool ran_targeted = false;  // actually served impressions with uplift
  std::int64_t impressions = 0;
  Micro revenue = 0;
  bool exited = false;

  double ctr(bool uplifted) const {
    return uplifted ? adv->base_ctr * (1.0 + adv->uplift_pct / 100.0) : adv->base_ctr;
  }
  Micro cpm(bool uplifted) const { return to_cpm_micro(adv->cpa_budget, ctr(uplifted)); }
  // Impressions still needed to hit the click goal at the given CTR;
  // -1 when the goal can never be met (zero CTR).
  std::int64_t remaining_needed(bool uplifted) const {
    if (adv->click_goal <= 0) return 0;
    double c = ctr(uplifted);
    if (c <= 0.0) return -1;
    auto needed = static_cast<std::int64_t>(
        round_half_to_even(static_cast<double>(adv->click_goal) / c));
    return std::max<std::int64_t>(0, needed - impressions);
  }
};

// Serves `inventory` impressions. Inside the targeted share of the stream the
// targeted slot goes first at its uplifted CTR; elsewhere the highest-CPM
// active slot wins (ties to the lower advertiser id). A slot exits once its
// click goal is met.
struct RunResult {
  std::vector<Slot> slots;
  Micro revenue = 0;
  bool nonterminating = false;
};

RunResult run_machine(const std::vector<Advertiser>& advertisers, std::int64_t inventory,
                      std::optional<std::size_t> targeted_index,
                      std::int64_t targeted_inventory) {
  RunResult run;
  for (std::size_t i = 0; i < advertisers.size(); ++i) {
    Slot s;
    s.adv = &advertisers[i];
    s.targeted = targeted_index && *targeted_index == i;
    run.slots.push_back(s);
  }

  std::int64_t served_total = 0;
  while (served_total < inventory) {
    bool targeting_phase = served_total < targeted_inventory;
    Slot* chosen = nullptr;
    bool uplifted = false;
    if (targeting_phase && targeted_index && !run.slots[*targeted_index].exited) {
      chosen = &run.slots[*targeted_index];
      uplifted = true;
    } else {
      for (auto& s : run.slots) {
        if (s.exited) continue;
        bool better = !chosen || s.cpm(false) > chosen->cpm(false) ||
                      (s.cpm(false) == chosen->cpm(false) && s.adv->id < chosen->adv->id);
        if (better) chosen = &s;
      }
    }
    if (!chosen) break;  // every advertiser met its goal; inventory unfilled

    std::int64_t needed = chosen->remaining_needed(uplifted);
    std::int64_t available = inventory - served_total;
    if (uplifted) available = std::min(available, targeted_inventory - served_total);

    std::int64_t serve;
    if (needed < 0) {
      run.nonterminating = true;
      serve = available;
    } else if (needed == 0) {
      chosen->exited = true;
      continue;
    } else {
      serve = std::min(needed, available);
    }
    run.revenue += serve * chosen->cpm(uplifted);
    chosen->revenue += serve * chosen->cpm(uplifted);
    chosen->impressions += serve;
    chosen->ran_targeted = chosen->ran_targeted || (uplifted && serve > 0);
    served_total += serve;
    if (needed >= 0 && chosen->remaining_needed(uplifted) == 0) chosen->exited = true;
  }
  return run;
}

}  // namespace

Micro dollars_to_micro(double dollars) {
  return static_cast<Micro>(std::llround(dollars * 1e6));
}

double micro_to_dollars(Micro m) { return static_cast<double>(m) / 1e6; }

std::int64_t micro_to_whole_dollars(Micro m) {
  return static_cast<std::int64_t>(std::llround(static_cast<double>(m) / 1e6));
}

Micro to_cpm_micro(Micro cpa, double predicted_ctr) {
  return static_cast<Micro>(std::llround(static_cast<double>(cpa) * predicted_ctr));
}

double to_cpm(double cpa, double predicted_ctr) {
  return micro_to_dollars(to_cpm_micro(dollars_to_micro(cpa), predicted_ctr));
}

const AuctionBid& run_auction(const std::vector<AuctionBid>& bids, AuctionPolicy policy) {
  if (bids.empty()) throw DomainError("auction with no bids");
  auto better = [](const AuctionBid& a, const AuctionBid& b) {
    if (a.cpm != b.cpm) return a.cpm > b.cpm;
    return a.advertiser_id < b.advertiser_id;
  };
  const AuctionBid* best = nullptr;
  if (policy == AuctionPolicy::InterestTargeted) {
    for (const auto& b : bids) {
      if (b.interest_matched && (!best || better(b, *best))) best = &b;
    }
  }
  if (!best) {
    for (const auto& b : bids) {
      if (!best || better(b, *best)) best = &b;
    }
  }
  return *best;
}

std::optional<double> initial_impact(const std::vector<std::vector<AuctionBid>>& requests) {
  Micro baseline = 0, targeted = 0;
  for (const auto& bids : requests) {
    baseline += run_auction(bids, AuctionPolicy::HighestCpm).cpm;
    targeted += run_auction(bids, AuctionPolicy::InterestTargeted).cpm;
  }
  if (baseline == 0) return std::nullopt;
  return 100.0 * static_cast<double>(targeted - baseline) / static_cast<double>(baseline);
}

RevenueReport simulate_long_term(const std::vector<Advertiser>& advertisers,
                                 std::int64_t inventory,
                                 std::optional<std::size_t> targeted_index,
                                 double targeted_share) {
  RevenueReport report;
  if (inventory < 0) throw DomainError("negative inventory");
  targeted_share = std::clamp(targeted_share, 0.0, 1.0);
  auto targeted_inventory = static_cast<std::int64_t>(
      round_half_to_even(targeted_share * static_cast<double>(inventory)));

  RunResult base = run_machine(advertisers, inventory, std::nullopt, 0);
  RunResult tgt = run_machine(advertisers, inventory, targeted_index, targeted_inventory);

  report.baseline_revenue = base.revenue;
  report.targeted_revenue = tgt.revenue;
  report.long_term_revenue = tgt.revenue;
  report.nonterminating_advertiser = tgt.nonterminating || base.nonterminating;
  for (const auto& s : base.slots) {
    report.baseline_ledger.push_back({s.adv->id, s.impressions, s.revenue, s.exited});
  }
  for (const auto& s : tgt.slots) {
    report.impressions_ledger.push_back({s.adv->id, s.impressions, s.revenue, s.exited});
  }

  // Impact percentages follow the presentation arithmetic: per-advertiser
  // revenues rounded to whole dollars first.
  std::int64_t base_dollars = 0, tgt_dollars = 0;
  for (const auto& e : report.baseline_ledger) base_dollars += micro_to_whole_dollars(e.revenue);
  for (const auto& e : report.impressions_ledger) tgt_dollars += micro_to_whole_dollars(e.revenue);
  if (base_dollars != 0) {
    report.long_term_impact_pct =
        100.0 * static_cast<double>(tgt_dollars - base_dollars) /
        static_cast<double>(base_dollars);
  }

  // Initial impact: the same request stream priced before any uplift
  // materializes, with the targeted advertiser winning the targeted share.
  if (targeted_index && base.revenue > 0) {
    const Advertiser& t = advertisers[*targeted_index];
    Micro base_cpm_winner = 0;
    for (const auto& a : advertisers) {
      base_cpm_winner = std::max(base_cpm_winner, to_cpm_micro(a.cpa_budget, a.base_ctr));
    }
    Micro t_cpm = to_cpm_micro(t.cpa_budget, t.base_ctr);
    Micro initial_targeted = targeted_inventory * t_cpm +
                             (inventory - targeted_inventory) * base_cpm_winner;
    Micro initial_base = inventory * base_cpm_winner;
    if (initial_base > 0) {
      report.initial_impact_pct =
          100.0 * static_cast<double>(initial_targeted - initial_base) /
          static_cast<double>(initial_base);
    }
  }
  return report;
}

std::vector<LongTermRow> estimate_long_term_table(
    const std::vector<std::pair<std::string, std::pair<double, double>>>& method_rows,
    const std::vector<Advertiser>& fixture, std::int64_t inventory,
    std::size_t targeted_index) {
  std::vector<LongTermRow> rows;
  for (const auto& [name, numbers] : method_rows) {
    auto [increase_pct, applicable_pct] = numbers;
    std::vector<Advertiser> advs = fixture;
    advs[targeted_index].uplift_pct = increase_pct;
    RevenueReport rep = simulate_long_term(advs, inventory, targeted_index,
                                           applicable_pct / 100.0);
    LongTermRow row;
    row.method = name;
    row.increase_pct = increase_pct;
    row.applicable_pct = applicable_pct;
    row.initial_impact_pct = rep.initial_impact_pct;
    row.long_term_impact_pct = rep.long_term_impact_pct;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace appintent
