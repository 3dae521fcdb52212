#include "appintent/evaluate.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "appintent/errors.hpp"

namespace appintent {
namespace {

// Similarity verdicts depend only on (method, bid, app), so they are shared
// across users and across hybrid/single rows.
struct SimCache {
  std::unordered_map<std::string, bool> verdicts;

  bool is_similar(const MethodId& m, const std::string& bid_id, const KeywordList& bid,
                  const KeywordList& app, const SynonymLexicon& syn) {
    std::string key = m.name();
    key += '|';
    key += bid_id;
    key += '|';
    key += app.source_doc;
    auto it = verdicts.find(key);
    if (it != verdicts.end()) return it->second;
    bool v = similar(bid, app, syn);
    verdicts.emplace(std::move(key), v);
    return v;
  }
};

// Row evaluator shared by single methods and hybrid chains.
struct Matcher {
  const MethodId* method = nullptr;     // single-method row
  const HybridModel* hybrid = nullptr;  // hybrid row

  template <typename Fn>
  bool any_method(Fn fn) const {
    if (method) return fn(*method);
    return std::any_of(hybrid->chain.begin(), hybrid->chain.end(), fn);
  }

  bool applicable(const InterestProfile& profile,
                  const std::map<MethodId, KeywordList>& bid_kws, Mode mode) const {
    return any_method([&](const MethodId& m) {
      const auto* side = profile.side(mode, m);
      if (!side || side->empty()) return false;
      auto it = bid_kws.find(m);
      return it != bid_kws.end() && !it->second.empty();
    });
  }

  bool matches(const InterestProfile& profile, const std::string& bid_id,
               const std::map<MethodId, KeywordList>& bid_kws, Mode mode,
               const SynonymLexicon& syn, SimCache& cache) const {
    return any_method([&](const MethodId& m) {
      const auto* side = profile.side(mode, m);
      if (!side) return false;
      auto it = bid_kws.find(m);
      if (it == bid_kws.end()) return false;
      for (const KeywordList& app_list : *side) {
        if (cache.is_similar(m, bid_id, it->second, app_list, syn)) return true;
      }
      return false;
    });
  }

  std::string name() const { return method ? method->name() : hybrid->name; }
};

ImpressionClass classify(const Matcher& matcher, const InterestProfile& profile,
                         const std::string& bid_id,
                         const std::map<MethodId, KeywordList>& bid_kws, Mode mode,
                         const SynonymLexicon& syn, SimCache& cache) {
  if (!matcher.applicable(profile, bid_kws, mode)) return ImpressionClass::NotApplicable;
  return matcher.matches(profile, bid_id, bid_kws, mode, syn, cache)
             ? ImpressionClass::Similar
             : ImpressionClass::Dissimilar;
}

}  // namespace

ImpressionClass classify_impression(const InterestProfile& profile,
                                    const std::map<MethodId, KeywordList>& bid_keywords,
                                    const MethodId& method, Mode mode,
                                    const SynonymLexicon& syn) {
  Matcher m;
  m.method = &method;
  if (!m.applicable(profile, bid_keywords, mode)) return ImpressionClass::NotApplicable;
  return match_bid(profile, bid_keywords, method, mode, syn).matched
             ? ImpressionClass::Similar
             : ImpressionClass::Dissimilar;
}

std::pair<std::optional<double>, std::optional<double>> compute_ctrs(
    const std::vector<UserTally>& users, bool micro_average) {
  if (micro_average) {
    std::size_t si = 0, sc = 0, di = 0, dc = 0;
    for (const auto& u : users) {
      si += u.similar_imps;
      sc += u.similar_clicks;
      di += u.dissimilar_imps;
      dc += u.dissimilar_clicks;
    }
    std::optional<double> ctr1, ctr2;
    if (si > 0) ctr1 = 100.0 * static_cast<double>(sc) / static_cast<double>(si);
    if (di > 0) ctr2 = 100.0 * static_cast<double>(dc) / static_cast<double>(di);
    return {ctr1, ctr2};
  }

  double sum1 = 0.0, sum2 = 0.0;
  std::size_t n1 = 0, n2 = 0;
  for (const auto& u : users) {
    if (u.similar_imps > 0) {
      sum1 += static_cast<double>(u.similar_clicks) / static_cast<double>(u.similar_imps);
      ++n1;
    }
    if (u.dissimilar_imps > 0) {
      sum2 += static_cast<double>(u.dissimilar_clicks) /
              static_cast<double>(u.dissimilar_imps);
      ++n2;
    }
  }
  std::optional<double> ctr1, ctr2;
  if (n1 > 0) ctr1 = 100.0 * sum1 / static_cast<double>(n1);
  if (n2 > 0) ctr2 = 100.0 * sum2 / static_cast<double>(n2);
  return {ctr1, ctr2};
}

std::optional<double> compute_increase(double ctr1_pct, double ctr2_pct, Mode mode) {
  if (mode == Mode::Install) {
    if (ctr2_pct == 0.0) return std::nullopt;
    return 100.0 * (ctr1_pct - ctr2_pct) / ctr2_pct;
  }
  if (ctr1_pct == 0.0) return std::nullopt;
  return 100.0 * (ctr2_pct - ctr1_pct) / ctr1_pct;
}

std::optional<double> applicability(
    const std::vector<std::map<MethodId, KeywordList>>& bids,
    const std::vector<const InterestProfile*>& profiles, const MethodId& method,
    Mode mode, const SynonymLexicon& syn) {
  if (bids.empty()) return std::nullopt;
  std::size_t matched = 0;
  for (const auto& bid : bids) {
    for (const InterestProfile* profile : profiles) {
      if (match_bid(*profile, bid, method, mode, syn).matched) {
        ++matched;
        break;
      }
    }
  }
  return 100.0 * static_cast<double>(matched) / static_cast<double>(bids.size());
}

EvalReport evaluate_mode(const EvalInputs& in, const EvalWindowConfig& windows,
                         Mode mode, const std::vector<MethodId>& methods,
                         const std::vector<HybridModel>& hybrids,
                         const SynonymLexicon& syn, Extractor& extractor,
                         bool micro_average) {
  EvalReport report;
  report.mode = mode;
  report.windows = windows;
  report.micro_average = micro_average;

  auto events = diff_snapshots(*in.snapshots, windows.event_start, windows.event_end);

  // Ordered maps keep the run independent of input record order.
  std::map<std::string, std::vector<AppEvent>> events_by_user;
  for (const auto& ev : events) events_by_user[ev.user_id].push_back(ev);
  std::map<std::string, std::vector<const ImpressionRecord*>> imps_by_user;
  for (const auto& imp : *in.impressions) {
    if (imp.shown_at < windows.click_start || imp.shown_at > windows.click_end) continue;
    imps_by_user[imp.user_id].push_back(&imp);
  }

  std::map<std::string, InterestProfile> profiles;
  for (const auto& [user, user_events] : events_by_user) {
    profiles.emplace(user, build_profile(user, user_events, in.apps, methods,
                                         windows.event_start, windows.event_end,
                                         extractor));
  }
  InterestProfile empty_profile;

  std::map<std::string, std::map<MethodId, KeywordList>> bid_kws;
  for (const auto& [bid_id, doc] : in.bids) {
    auto& per_method = bid_kws[bid_id];
    for (const MethodId& m : methods) {
      per_method[m] = extractor.run(m, *doc, "bid:" + bid_id);
    }
  }

  std::vector<Matcher> matchers;
  for (const MethodId& m : methods) {
    Matcher matcher;
    matcher.method = &m;
    matchers.push_back(matcher);
  }
  for (const HybridModel& h : hybrids) {
    Matcher matcher;
    matcher.hybrid = &h;
    matchers.push_back(matcher);
  }

  SimCache cache;
  for (const Matcher& matcher : matchers) {
    EvalRow row;
    row.method = matcher.name();

    std::vector<UserTally> tallies;
    std::size_t counted_users = 0;
    for (const auto& [user, imps] : imps_by_user) {
      auto pit = profiles.find(user);
      const InterestProfile& profile =
          pit == profiles.end() ? empty_profile : pit->second;
      UserTally tally;
      std::map<std::string, ImpressionClass> verdict;  // per distinct bid
      for (const ImpressionRecord* imp : imps) {
        auto bit = bid_kws.find(imp->bid_id);
        if (bit == bid_kws.end()) continue;  // impression for an unknown bid
        auto [vit, inserted] = verdict.try_emplace(imp->bid_id);
        if (inserted) {
          vit->second =
              classify(matcher, profile, imp->bid_id, bit->second, mode, syn, cache);
        }
        switch (vit->second) {
          case ImpressionClass::Similar:
            ++tally.similar_imps;
            tally.similar_clicks += imp->clicked ? 1 : 0;
            break;
          case ImpressionClass::Dissimilar:
            ++tally.dissimilar_imps;
            tally.dissimilar_clicks += imp->clicked ? 1 : 0;
            break;
          case ImpressionClass::NotApplicable:
            break;
        }
      }
      if (tally.similar_imps + tally.dissimilar_imps > 0) ++counted_users;
      tallies.push_back(tally);
    }
    row.n_users = counted_users;

    auto [ctr1, ctr2] = compute_ctrs(tallies, micro_average);
    row.ctr1_pct = ctr1;
    row.ctr2_pct = ctr2;
    if (ctr1 && ctr2) row.increase_pct = compute_increase(*ctr1, *ctr2, mode);

    // Applicability over distinct bids: a bid counts when it matches at least
    // one profile on the relevant side.
    if (!in.bid_order.empty()) {
      std::size_t matched = 0;
      for (const auto& bid_id : in.bid_order) {
        auto bit = bid_kws.find(bid_id);
        if (bit == bid_kws.end()) continue;
        for (const auto& [user, profile] : profiles) {
          if (matcher.matches(profile, bid_id, bit->second, mode, syn, cache)) {
            ++matched;
            break;
          }
        }
      }
      row.applicable_pct =
          100.0 * static_cast<double>(matched) / static_cast<double>(in.bid_order.size());
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace appintent
