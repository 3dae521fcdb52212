#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "appintent/corpus.hpp"
#include "appintent/interest.hpp"

namespace appintent {

constexpr Timestamp kDay = 86400;

// Default geometry: a 14-day event window whose click window starts 6 days
// in and also spans 14 days, so interests peak mid-window when clicks are
// replayed.
struct EvalWindowConfig {
  Timestamp event_start = 0;
  Timestamp event_end = 0;
  Timestamp click_start = 0;
  Timestamp click_end = 0;

  static EvalWindowConfig from_t0(Timestamp t0, int event_days = 14,
                                  int click_offset_days = 6, int click_days = 14) {
    EvalWindowConfig c;
    c.event_start = t0;
    c.event_end = t0 + event_days * kDay;
    c.click_start = t0 + click_offset_days * kDay;
    c.click_end = t0 + click_offset_days * kDay + click_days * kDay;
    return c;
  }
};

enum class ImpressionClass { Similar, Dissimilar, NotApplicable };

struct EvalRow {
  std::string method;  // method or hybrid-model name
  std::optional<double> ctr1_pct;
  std::optional<double> ctr2_pct;
  std::optional<double> increase_pct;
  std::optional<double> applicable_pct;
  std::size_t n_users = 0;  // users with at least one classified impression
};

struct EvalReport {
  Mode mode = Mode::Install;
  EvalWindowConfig windows;
  bool micro_average = false;
  std::vector<EvalRow> rows;
};

// Per-user click/impression tallies in each class.
struct UserTally {
  std::size_t similar_imps = 0, similar_clicks = 0;
  std::size_t dissimilar_imps = 0, dissimilar_clicks = 0;
};

// NotApplicable when the profile side is empty for the method or the bid has
// no keywords; Similar when match_bid matches; Dissimilar otherwise.
ImpressionClass classify_impression(const InterestProfile& profile,
                                    const std::map<MethodId, KeywordList>& bid_keywords,
                                    const MethodId& method, Mode mode,
                                    const SynonymLexicon& syn);

// Macro average: per-user CTR first, then the unweighted mean over users that
// have impressions of that class. micro_average pools clicks/impressions.
std::pair<std::optional<double>, std::optional<double>> compute_ctrs(
    const std::vector<UserTally>& users, bool micro_average = false);

// Install mode: 100*(ctr1-ctr2)/ctr2. Uninstall mode: 100*(ctr2-ctr1)/ctr1.
// Zero denominator yields nullopt (rendered "n/a").
std::optional<double> compute_increase(double ctr1_pct, double ctr2_pct, Mode mode);

// Percentage of distinct bids matching at least one profile on the relevant
// side under the method. nullopt when no bids are given.
std::optional<double> applicability(
    const std::vector<std::map<MethodId, KeywordList>>& bids,
    const std::vector<const InterestProfile*>& profiles, const MethodId& method,
    Mode mode, const SynonymLexicon& syn);

struct EvalInputs {
  // Preprocessed docs keyed by id; bid keywords are extracted on demand.
  std::unordered_map<std::string, const PreprocessedDoc*> apps;
  std::unordered_map<std::string, const PreprocessedDoc*> bids;
  const std::vector<Snapshot>* snapshots = nullptr;
  const std::vector<ImpressionRecord>* impressions = nullptr;
  std::vector<std::string> bid_order;  // report/application order
};

// Full offline replay for one mode: one row per concrete method plus one per
// hybrid model. Deterministic for fixed inputs and seed; row order is the
// Tables 1-4 order.
EvalReport evaluate_mode(const EvalInputs& in, const EvalWindowConfig& windows,
                         Mode mode, const std::vector<MethodId>& methods,
                         const std::vector<HybridModel>& hybrids,
                         const SynonymLexicon& syn, Extractor& extractor,
                         bool micro_average = false);

}  // namespace appintent
