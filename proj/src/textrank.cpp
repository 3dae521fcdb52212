#include <algorithm>
#include <cmath>
#include <set>

#include "appintent/extract.hpp"
#include "extract_util.hpp"

namespace appintent {
namespace {

bool is_content_node(const TaggedToken& t) {
  return t.pos == PosTag::Noun || t.pos == PosTag::Adjective;
}

}  // namespace

KeywordList extract_textrank(const PreprocessedDoc& doc, const ExtractParams& params) {
  KeywordList out{MethodId::textrank(), {}, {}};
  if (doc.empty()) return out;

  // Nodes are noun/adjective lemmas; an edge joins two nodes co-occurring
  // within a window of `textrank_window` content tokens in a sentence.
  WordGraph g;
  std::vector<int> positions;
  auto note_position = [&](int node, const TaggedToken& tok) {
    if (node == static_cast<int>(positions.size())) {
      positions.push_back(doc.global_position(tok));
    }
  };
  const std::size_t window = static_cast<std::size_t>(std::max(2, params.textrank_window));
  for (const auto& sent : doc.sentences) {
    for (std::size_t i = 0; i < sent.size(); ++i) {
      if (!is_content_node(sent[i])) continue;
      note_position(g.ensure_node(sent[i].lemma), sent[i]);
      for (std::size_t j = i + 1; j < sent.size() && j - i < window; ++j) {
        if (!is_content_node(sent[j])) continue;
        if (sent[i].lemma == sent[j].lemma) continue;
        note_position(g.ensure_node(sent[j].lemma), sent[j]);
        g.add_edge(sent[i].lemma, sent[j].lemma, 1.0);
      }
    }
  }
  if (g.empty()) return out;

  CentralityScores scores = pagerank(g);

  std::size_t n_selected = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::ceil(params.textrank_top_frac * static_cast<double>(g.size()))));
  auto selected_labels = top_k(g, scores.by_node, n_selected, &positions);
  std::set<std::string> selected(selected_labels.begin(), selected_labels.end());

  // Phrase generation: maximal runs of selected vertices that are adjacent in
  // the original text. The phrase score (sum of member scores) is kept for
  // ranking parity with the word output, which flattens phrases to words.
  std::set<std::string> phrase_words;
  for (const auto& sent : doc.sentences) {
    std::size_t i = 0;
    while (i < sent.size()) {
      if (!is_content_node(sent[i]) || !selected.count(sent[i].lemma)) {
        ++i;
        continue;
      }
      std::size_t j = i;
      double phrase_score = 0.0;
      while (j < sent.size() && is_content_node(sent[j]) && selected.count(sent[j].lemma) &&
             (j == i || sent[j].position_in_sentence ==
                            sent[j - 1].position_in_sentence + 1)) {
        phrase_score += scores.by_node[g.node_of(sent[j].lemma)];
        phrase_words.insert(sent[j].lemma);
        ++j;
      }
      (void)phrase_score;
      i = j;
    }
  }

  std::vector<detail::ScoredWord> scored;
  for (const auto& w : phrase_words) {
    int v = g.node_of(w);
    scored.push_back({w, scores.by_node[v], positions[v]});
  }
  out.words = detail::rank_and_cut(std::move(scored), params.top_k);
  return out;
}

}  // namespace appintent
