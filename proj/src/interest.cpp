#include "appintent/interest.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "appintent/errors.hpp"

namespace appintent {

const char* mode_name(Mode m) { return m == Mode::Install ? "install" : "uninstall"; }

SynonymLexicon SynonymLexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("missing synonym file: " + path);
  SynonymLexicon lex;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ConfigError(path + ": expected lemma<TAB>synonyms");
    }
    std::string head = to_lower_ascii(line.substr(0, tab));
    std::istringstream rest(line.substr(tab + 1));
    std::string syn;
    while (std::getline(rest, syn, ',')) {
      if (!syn.empty()) lex.add(head, to_lower_ascii(syn));
    }
  }
  return lex;
}

SynonymLexicon SynonymLexicon::from_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  SynonymLexicon lex;
  for (const auto& [a, b] : pairs) lex.add(a, b);
  return lex;
}

void SynonymLexicon::add(const std::string& a, const std::string& b) {
  if (a == b) return;
  syn_[a].insert(b);  // symmetric closure
  syn_[b].insert(a);
}

const std::vector<KeywordList>* InterestProfile::side(Mode mode, const MethodId& m) const {
  const auto& map = mode == Mode::Install ? install_keywords : uninstall_keywords;
  auto it = map.find(m);
  return it == map.end() ? nullptr : &it->second;
}

std::vector<HybridModel> default_hybrid_models(Mode mode) {
  auto chain = [](const char* name, MethodId a, MethodId b, MethodId c, MethodId d) {
    return HybridModel{name, {a, b, c, d}};
  };
  using M = MethodId;
  if (mode == Mode::Install) {
    return {
        chain("LDA_TopicRank_TextRank_Degree-3", M::lda(), M::topicrank(), M::textrank(),
              M::graph(Centrality::Degree, 3)),
        chain("LDA_TopicRank_TextRank_PageRank-2", M::lda(), M::topicrank(), M::textrank(),
              M::graph(Centrality::PageRank, 2)),
        chain("LDA_TopicRank_TextRank_BwCent-2", M::lda(), M::topicrank(), M::textrank(),
              M::graph(Centrality::Betweenness, 2)),
        chain("LDA_TopicRank_TextRank_ClCent-3", M::lda(), M::topicrank(), M::textrank(),
              M::graph(Centrality::Closeness, 3)),
    };
  }
  return {
      chain("Degree-3_PageRank-2_ClCent-2_TF-IDF", M::graph(Centrality::Degree, 3),
            M::graph(Centrality::PageRank, 2), M::graph(Centrality::Closeness, 2),
            M::tfidf()),
      chain("Degree-3_PageRank-2_ClCent-2_LDA", M::graph(Centrality::Degree, 3),
            M::graph(Centrality::PageRank, 2), M::graph(Centrality::Closeness, 2),
            M::lda()),
      chain("Degree-3_PageRank-2_ClCent-2_TopicRank", M::graph(Centrality::Degree, 3),
            M::graph(Centrality::PageRank, 2), M::graph(Centrality::Closeness, 2),
            M::topicrank()),
  };
}

// At least two common words/synonyms under one-to-one matching: a maximum
// bipartite matching on the <=20x20 compatibility grid, stopped as soon as
// two augmenting paths exist.
bool similar(const KeywordList& a, const KeywordList& b, const SynonymLexicon& syn) {
  const std::size_t n = a.words.size(), m = b.words.size();
  if (n == 0 || m == 0) return false;

  std::vector<std::vector<int>> compat(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (syn.synonyms(a.words[i].lemma, b.words[j].lemma)) {
        compat[i].push_back(static_cast<int>(j));
      }
    }
  }

  std::vector<int> match_b(m, -1);
  std::vector<bool> visited(m);
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (int j : compat[i]) {
      if (visited[j]) continue;
      visited[j] = true;
      if (match_b[j] < 0 || self(self, static_cast<std::size_t>(match_b[j]))) {
        match_b[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };

  int matched = 0;
  for (std::size_t i = 0; i < n && matched < 2; ++i) {
    std::fill(visited.begin(), visited.end(), false);
    if (augment(augment, i)) ++matched;
  }
  return matched >= 2;
}

InterestProfile build_profile(
    const std::string& user_id, const std::vector<AppEvent>& events,
    const std::unordered_map<std::string, const PreprocessedDoc*>& apps,
    const std::vector<MethodId>& methods, Timestamp t_start, Timestamp t_end,
    Extractor& extractor) {
  InterestProfile profile;
  profile.user_id = user_id;
  profile.t_start = t_start;
  profile.t_end = t_end;
  for (const AppEvent& ev : events) {
    if (ev.user_id != user_id || ev.at < t_start || ev.at > t_end) continue;
    auto app = apps.find(ev.app_id);
    if (app == apps.end()) {
      std::cerr << "warning: event for user " << user_id << " references unknown app '"
                << ev.app_id << "', skipped\n";
      continue;
    }
    auto& target = ev.kind == EventKind::Install ? profile.install_keywords
                                                 : profile.uninstall_keywords;
    for (const MethodId& m : methods) {
      target[m].push_back(extractor.run(m, *app->second, ev.app_id));
    }
  }
  return profile;
}

MatchResult match_bid(const InterestProfile& profile,
                      const std::map<MethodId, KeywordList>& bid_keywords,
                      const MethodId& method, Mode mode, const SynonymLexicon& syn) {
  auto bid = bid_keywords.find(method);
  if (bid == bid_keywords.end()) {
    throw ConfigError("bid keywords missing for method " + method.name());
  }
  const auto* lists = profile.side(mode, method);
  if (!lists) return {};
  for (const KeywordList& app_list : *lists) {
    if (similar(bid->second, app_list, syn)) return {true, app_list.source_doc};
  }
  return {};
}

std::pair<MatchResult, std::optional<MethodId>> hybrid_match(
    const InterestProfile& profile,
    const std::map<MethodId, KeywordList>& bid_keywords, const HybridModel& model,
    Mode mode, const SynonymLexicon& syn) {
  for (const MethodId& m : model.chain) {
    MatchResult r = match_bid(profile, bid_keywords, m, mode, syn);
    if (r.matched) return {r, m};
  }
  return {MatchResult{}, std::nullopt};
}

}  // namespace appintent
