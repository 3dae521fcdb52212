#include "appintent/extract.hpp"

#include <cmath>
#include <map>
#include <set>

#include "appintent/errors.hpp"
#include "extract_util.hpp"

namespace appintent {
namespace {

int cooc_rank(Centrality c) {
  switch (c) {
    case Centrality::Degree: return 0;
    case Centrality::PageRank: return 1;
    case Centrality::Betweenness: return 2;
    case Centrality::Closeness: return 3;
  }
  return 0;
}

int base_rank(BaseMethod b) {
  switch (b) {
    case BaseMethod::TfIdf: return 0;
    case BaseMethod::Yake: return 1;
    case BaseMethod::Lda: return 2;
    case BaseMethod::TextRank: return 3;
    case BaseMethod::TopicRank: return 4;
    case BaseMethod::Graph: return 5;
  }
  return 0;
}

}  // namespace

std::vector<MethodId> MethodId::all() {
  std::vector<MethodId> out{tfidf(), yake(), lda(), textrank(), topicrank()};
  for (Centrality metric : {Centrality::Degree, Centrality::PageRank,
                            Centrality::Betweenness, Centrality::Closeness}) {
    for (int type = 1; type <= 3; ++type) out.push_back(graph(metric, type));
  }
  return out;
}

std::string MethodId::name() const {
  switch (base) {
    case BaseMethod::TfIdf: return "TF-IDF";
    case BaseMethod::Yake: return "YAKE";
    case BaseMethod::Lda: return "LDA";
    case BaseMethod::TextRank: return "TextRank";
    case BaseMethod::TopicRank: return "TopicRank";
    case BaseMethod::Graph:
      return std::string(centrality_name(metric)) + "-" + std::to_string(cooc_type);
  }
  return "TF-IDF";
}

std::optional<MethodId> MethodId::parse(const std::string& name) {
  for (const auto& m : all()) {
    if (m.name() == name) return m;
  }
  return std::nullopt;
}

bool MethodId::operator<(const MethodId& o) const {
  if (base != o.base) return base_rank(base) < base_rank(o.base);
  if (base != BaseMethod::Graph) return false;
  if (metric != o.metric) return cooc_rank(metric) < cooc_rank(o.metric);
  return cooc_type < o.cooc_type;
}

CorpusStats build_corpus_stats(const std::vector<PreprocessedDoc>& docs) {
  CorpusStats stats;
  stats.n_docs = docs.size();
  for (const auto& doc : docs) {
    std::set<std::string> seen;
    for (const auto& sent : doc.sentences) {
      for (const auto& tok : sent) seen.insert(tok.lemma);
    }
    for (const auto& lemma : seen) ++stats.doc_freq[lemma];
  }
  return stats;
}

KeywordList extract_tfidf(const PreprocessedDoc& doc, const CorpusStats& stats,
                          const ExtractParams& params) {
  KeywordList out{MethodId::tfidf(), {}, {}};
  auto tokens = detail::flatten(doc);
  if (tokens.empty() || stats.n_docs == 0) return out;

  struct Entry {
    int count = 0;
    int first_pos = 0;
    bool noun = false;
  };
  std::map<std::string, Entry> counts;
  for (const auto* tok : tokens) {
    auto [it, inserted] = counts.try_emplace(tok->lemma);
    if (inserted) it->second.first_pos = doc.global_position(*tok);
    ++it->second.count;
    auto pi = doc.pos_index.find(to_lower_ascii(tok->surface));
    if (pi != doc.pos_index.end() && pi->second == PosTag::Noun) it->second.noun = true;
  }

  const double doc_len = static_cast<double>(tokens.size());
  std::vector<detail::ScoredWord> scored;
  for (const auto& [lemma, e] : counts) {
    if (!e.noun) continue;  // the stored tags filter the output to nouns
    double tf = e.count / doc_len;
    // A term unseen in the reference corpus (possible for bid text) is
    // treated as maximally rare, df = 1.
    double dfreq = static_cast<double>(std::max<std::size_t>(stats.df(lemma), 1));
    double idf = std::log(static_cast<double>(stats.n_docs) / dfreq);
    // A term present in every document scores 0 and is never selected.
    if (tf * idf > 0.0) scored.push_back({lemma, tf * idf, e.first_pos});
  }
  out.words = detail::rank_and_cut(std::move(scored), params.top_k);
  return out;
}

WordGraph build_cooc_graph(const PreprocessedDoc& doc, int cooc_type, bool unweighted) {
  if (cooc_type < 1 || cooc_type > 3) {
    throw ConfigError("co-occurrence type must be 1, 2 or 3");
  }
  WordGraph g;
  for (const auto& sent : doc.sentences) {
    // Register nodes first so single-word sentences still appear.
    for (const auto& tok : sent) g.ensure_node(to_lower_ascii(tok.surface));
    for (std::size_t i = 0; i < sent.size(); ++i) {
      for (std::size_t j = i + 1; j < sent.size(); ++j) {
        int dist = sent[j].position_in_sentence - sent[i].position_in_sentence;
        bool cooc = cooc_type == 1 || (cooc_type == 2 && dist == 1) ||
                    (cooc_type == 3 && dist <= 2);
        if (!cooc) continue;
        std::string a = to_lower_ascii(sent[i].surface);
        std::string b = to_lower_ascii(sent[j].surface);
        if (a == b) continue;
        if (unweighted && g.has_edge(a, b)) continue;
        g.add_edge(a, b, 1.0);
      }
    }
  }
  return g;
}

KeywordList extract_graph(const PreprocessedDoc& doc, int cooc_type, Centrality metric,
                          const ExtractParams& params) {
  KeywordList out{MethodId::graph(metric, cooc_type), {}, {}};
  WordGraph g = build_cooc_graph(doc, cooc_type, params.unweighted_edges);
  if (g.empty()) return out;

  std::vector<int> positions(g.size(), 0);
  {
    std::vector<bool> seen(g.size(), false);
    for (const auto& sent : doc.sentences) {
      for (const auto& tok : sent) {
        int v = g.node_of(to_lower_ascii(tok.surface));
        if (v >= 0 && !seen[v]) {
          seen[v] = true;
          positions[v] = doc.global_position(tok);
        }
      }
    }
  }

  CentralityScores scores = compute_centrality(g, metric);
  for (const auto& label : top_k(g, scores.by_node, params.top_k, &positions)) {
    out.words.push_back({label, scores.by_node[g.node_of(label)]});
  }
  return out;
}

const KeywordList& Extractor::run(const MethodId& method, const PreprocessedDoc& doc,
                                  const std::string& doc_id) {
  std::pair<std::string, std::string> key{method.name(), doc_id};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  KeywordList result = run_uncached(method, doc);
  result.source_doc = doc_id;
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

KeywordList Extractor::run_uncached(const MethodId& method, const PreprocessedDoc& doc) const {
  switch (method.base) {
    case BaseMethod::TfIdf: return extract_tfidf(doc, stats_, params_);
    case BaseMethod::Yake: return extract_yake(doc, lex_, params_);
    case BaseMethod::Lda: return extract_lda(doc, params_);
    case BaseMethod::TextRank: return extract_textrank(doc, params_);
    case BaseMethod::TopicRank: return extract_topicrank(doc, params_);
    case BaseMethod::Graph:
      return extract_graph(doc, method.cooc_type, method.metric, params_);
  }
  throw ConfigError("unknown extraction method");
}

}  // namespace appintent
