#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "appintent/graph.hpp"
#include "appintent/preprocess.hpp"

namespace appintent {

enum class BaseMethod { TfIdf, Yake, Lda, TextRank, TopicRank, Graph };

// One of the 17 concrete extraction methods: the five standalone extractors
// plus 4 centrality metrics x 3 co-occurrence types.
struct MethodId {
  BaseMethod base = BaseMethod::TfIdf;
  Centrality metric = Centrality::Degree;  // Graph only
  int cooc_type = 1;                       // Graph only, 1..3

  static MethodId tfidf() { return {BaseMethod::TfIdf}; }
  static MethodId yake() { return {BaseMethod::Yake}; }
  static MethodId lda() { return {BaseMethod::Lda}; }
  static MethodId textrank() { return {BaseMethod::TextRank}; }
  static MethodId topicrank() { return {BaseMethod::TopicRank}; }
  static MethodId graph(Centrality metric, int cooc_type) {
    return {BaseMethod::Graph, metric, cooc_type};
  }

  // All 17 methods in report order (Tables 1-2 row order).
  static std::vector<MethodId> all();

  // Short names as used in the hybrid-model labels: "TF-IDF", "YAKE", "LDA",
  // "TextRank", "TopicRank", "Degree-1".."Degree-3", "PageRank-1..3",
  // "BwCent-1..3", "ClCent-1..3".
  std::string name() const;
  static std::optional<MethodId> parse(const std::string& name);

  bool operator==(const MethodId& o) const {
    if (base != o.base) return false;
    if (base != BaseMethod::Graph) return true;
    return metric == o.metric && cooc_type == o.cooc_type;
  }
  bool operator<(const MethodId& o) const;  // report order
};

struct Keyword {
  std::string lemma;
  double score = 0.0;
};

// Ranked list of at most 20 keywords for one document under one method.
// Scores run best-first: non-increasing for every method except YAKE, whose
// raw scores are lower-is-better and therefore non-decreasing.
struct KeywordList {
  MethodId method;
  std::vector<Keyword> words;
  std::string source_doc;  // app_id or bid_id

  bool empty() const { return words.empty(); }
};

// Per-lemma document frequencies over the preprocessed app corpus.
struct CorpusStats {
  std::size_t n_docs = 0;
  std::unordered_map<std::string, std::size_t> doc_freq;

  std::size_t df(const std::string& lemma) const {
    auto it = doc_freq.find(lemma);
    return it == doc_freq.end() ? 0 : it->second;
  }
};

CorpusStats build_corpus_stats(const std::vector<PreprocessedDoc>& docs);

struct ExtractParams {
  std::size_t top_k = 20;

  // LDA
  int lda_topics = 1;
  int lda_passes = 50;
  std::uint64_t lda_seed = 42;
  double lda_beta = 0.01;  // alpha defaults to 50 / lda_topics

  // TextRank
  int textrank_window = 3;
  double textrank_top_frac = 0.05;

  // TopicRank
  double topicrank_cluster_threshold = 0.25;

  // YAKE
  int yake_context_window = 1;
  double yake_dedup_threshold = 0.8;

  // Co-occurrence graphs
  bool unweighted_edges = false;
};

KeywordList extract_tfidf(const PreprocessedDoc& doc, const CorpusStats& stats,
                          const ExtractParams& params = {});
KeywordList extract_yake(const PreprocessedDoc& doc, const Lexicons& lex,
                         const ExtractParams& params = {});
KeywordList extract_lda(const PreprocessedDoc& doc, const ExtractParams& params = {});
KeywordList extract_textrank(const PreprocessedDoc& doc, const ExtractParams& params = {});
KeywordList extract_topicrank(const PreprocessedDoc& doc, const ExtractParams& params = {});

// Co-occurrence graph over surviving tokens (lowercased surface forms):
// type 1 pairs all tokens of a sentence, type 2 pairs tokens at original
// distance exactly 1, type 3 at original distance <= 2. Distances are
// measured on pre-removal positions; self-loops are dropped.
WordGraph build_cooc_graph(const PreprocessedDoc& doc, int cooc_type,
                           bool unweighted = false);

KeywordList extract_graph(const PreprocessedDoc& doc, int cooc_type,
                          Centrality metric, const ExtractParams& params = {});

// LDA's intermediate word ranking (all words, best first) before the noun
// filter; exposed for the degenerate-topic checks.
std::vector<Keyword> lda_word_ranking(const PreprocessedDoc& doc,
                                      const ExtractParams& params = {});

// Uniform dispatch with a per-(method, doc) cache. Results are deterministic,
// so concurrent insertions of the same key are benign.
class Extractor {
 public:
  Extractor(CorpusStats stats, Lexicons lex, ExtractParams params = {})
      : stats_(std::move(stats)), lex_(std::move(lex)), params_(params) {}

  const KeywordList& run(const MethodId& method, const PreprocessedDoc& doc,
                         const std::string& doc_id);
  KeywordList run_uncached(const MethodId& method, const PreprocessedDoc& doc) const;

  const ExtractParams& params() const { return params_; }
  const Lexicons& lexicons() const { return lex_; }

 private:
  CorpusStats stats_;
  Lexicons lex_;
  ExtractParams params_;
  mutable std::mutex mu_;
  std::map<std::pair<std::string, std::string>, KeywordList> cache_;
};

}  // namespace appintent
