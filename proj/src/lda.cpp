#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "appintent/extract.hpp"
#include "extract_util.hpp"
#include "rng.hpp"

namespace appintent {
namespace {

struct Token {
  int word = 0;
  int doc = 0;  // sentence index within the training units
};

}  // namespace

// Collapsed Gibbs sampling with the document's sentences as training units
// and symmetric priors (alpha = 50/K, beta configurable).
std::vector<Keyword> lda_word_ranking(const PreprocessedDoc& doc,
                                      const ExtractParams& params) {
  auto flat = detail::flatten(doc);
  if (flat.empty()) return {};

  // Vocabulary in first-occurrence order keeps everything deterministic.
  std::unordered_map<std::string, int> vocab;
  std::vector<std::string> words;
  std::vector<int> first_pos;
  std::vector<Token> tokens;
  tokens.reserve(flat.size());
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    for (const auto& tok : doc.sentences[s]) {
      auto [it, inserted] = vocab.try_emplace(tok.lemma, static_cast<int>(words.size()));
      if (inserted) {
        words.push_back(tok.lemma);
        first_pos.push_back(doc.global_position(tok));
      }
      tokens.push_back({it->second, static_cast<int>(s)});
    }
  }

  const int K = std::max(1, params.lda_topics);
  const int V = static_cast<int>(words.size());
  const int D = static_cast<int>(doc.sentences.size());
  const double alpha = 50.0 / K;
  const double beta = params.lda_beta;

  std::vector<std::vector<int>> n_dk(D, std::vector<int>(K, 0));
  std::vector<std::vector<int>> n_kw(K, std::vector<int>(V, 0));
  std::vector<int> n_k(K, 0);
  std::vector<int> z(tokens.size());

  Rng rng(params.lda_seed);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    int k = K == 1 ? 0 : static_cast<int>(rng.bounded(K));
    z[i] = k;
    ++n_dk[tokens[i].doc][k];
    ++n_kw[k][tokens[i].word];
    ++n_k[k];
  }

  std::vector<double> p(K);
  for (int pass = 0; pass < params.lda_passes; ++pass) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      int old = z[i];
      --n_dk[t.doc][old];
      --n_kw[old][t.word];
      --n_k[old];

      double total = 0.0;
      for (int k = 0; k < K; ++k) {
        p[k] = (n_dk[t.doc][k] + alpha) * (n_kw[k][t.word] + beta) / (n_k[k] + beta * V);
        total += p[k];
      }
      double u = rng.uniform() * total;
      int picked = K - 1;
      for (int k = 0; k < K; ++k) {
        u -= p[k];
        if (u <= 0.0) {
          picked = k;
          break;
        }
      }
      z[i] = picked;
      ++n_dk[t.doc][picked];
      ++n_kw[picked][t.word];
      ++n_k[picked];
    }
  }

  // Rank by word probability in the dominant topic.
  int dominant = 0;
  long best_mass = -1;
  for (int k = 0; k < K; ++k) {
    if (n_k[k] > best_mass) {
      best_mass = n_k[k];
      dominant = k;
    }
  }
  std::vector<detail::ScoredWord> scored;
  scored.reserve(words.size());
  for (int w = 0; w < V; ++w) {
    double phi = (n_kw[dominant][w] + beta) / (n_k[dominant] + beta * V);
    scored.push_back({words[w], phi, first_pos[w]});
  }
  return detail::rank_and_cut(std::move(scored), words.size());
}

KeywordList extract_lda(const PreprocessedDoc& doc, const ExtractParams& params) {
  KeywordList out{MethodId::lda(), {}, {}};
  auto ranking = lda_word_ranking(doc, params);
  if (ranking.empty()) return out;

  // The model's 100 most important words, then the top nouns among them.
  if (ranking.size() > 100) ranking.resize(100);
  for (const auto& kw : ranking) {
    if (out.words.size() >= params.top_k) break;
    if (detail::lemma_is_noun(doc, kw.lemma)) out.words.push_back(kw);
  }
  return out;
}

}  // namespace appintent
