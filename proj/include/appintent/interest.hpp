#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "appintent/corpus.hpp"
#include "appintent/extract.hpp"

namespace appintent {

enum class Mode { Install, Uninstall };

const char* mode_name(Mode m);

// Pluggable synonym table. Symmetric closure is enforced at load; every word
// is implicitly a synonym of itself.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;

  // TSV: lemma<TAB>comma-separated synonyms. Missing file raises ConfigError.
  static SynonymLexicon load(const std::string& path);
  static SynonymLexicon from_pairs(
      const std::vector<std::pair<std::string, std::string>>& pairs);

  void add(const std::string& a, const std::string& b);

  bool synonyms(const std::string& a, const std::string& b) const {
    if (a == b) return true;
    auto it = syn_.find(a);
    return it != syn_.end() && it->second.count(b) != 0;
  }

  std::size_t size() const { return syn_.size(); }

 private:
  std::unordered_map<std::string, std::unordered_set<std::string>> syn_;
};

// Per-user, per-period keyword sets: one KeywordList per event app per method.
struct InterestProfile {
  std::string user_id;
  Timestamp t_start = 0;
  Timestamp t_end = 0;
  std::map<MethodId, std::vector<KeywordList>> install_keywords;
  std::map<MethodId, std::vector<KeywordList>> uninstall_keywords;

  const std::vector<KeywordList>* side(Mode mode, const MethodId& m) const;
};

// Ordered 4-method fallback chain.
struct HybridModel {
  std::string name;
  std::array<MethodId, 4> chain;
};

// The Tables 3-4 chains for the given mode, priority = listed order.
std::vector<HybridModel> default_hybrid_models(Mode mode);

// True iff at least two one-to-one (word, word) pairs match across the lists,
// where words match if lemma-equal or listed as synonyms. One-to-one matching
// means a shared word cannot reach the threshold via two synonyms of itself.
bool similar(const KeywordList& a, const KeywordList& b, const SynonymLexicon& syn);

struct MatchResult {
  bool matched = false;
  std::string app_id;  // first matching app in event order
};

// Builds the profile for one user from their events within the period.
// Events referencing unknown apps are skipped with a warning.
InterestProfile build_profile(
    const std::string& user_id, const std::vector<AppEvent>& events,
    const std::unordered_map<std::string, const PreprocessedDoc*>& apps,
    const std::vector<MethodId>& methods, Timestamp t_start, Timestamp t_end,
    Extractor& extractor);

// Matched iff the bid's keywords are similar to at least one app list on the
// selected profile side. Method must be present in bid_keywords.
MatchResult match_bid(const InterestProfile& profile,
                      const std::map<MethodId, KeywordList>& bid_keywords,
                      const MethodId& method, Mode mode, const SynonymLexicon& syn);

// Tries the chain in priority order; returns the first match together with
// the method that produced it.
std::pair<MatchResult, std::optional<MethodId>> hybrid_match(
    const InterestProfile& profile,
    const std::map<MethodId, KeywordList>& bid_keywords, const HybridModel& model,
    Mode mode, const SynonymLexicon& syn);

}  // namespace appintent
