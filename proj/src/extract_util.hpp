#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "appintent/extract.hpp"

namespace appintent::detail {

struct ScoredWord {
  std::string word;
  double score = 0.0;
  int first_pos = 0;  // earliest original position in the document
};

// Orders best-first with the project-wide tie-break (document position, then
// lexicographic) and truncates to k. ascending=true ranks lower scores first
// (YAKE).
inline std::vector<Keyword> rank_and_cut(std::vector<ScoredWord> words, std::size_t k,
                                         bool ascending = false) {
  std::sort(words.begin(), words.end(), [&](const ScoredWord& a, const ScoredWord& b) {
    if (a.score != b.score) return ascending ? a.score < b.score : a.score > b.score;
    if (a.first_pos != b.first_pos) return a.first_pos < b.first_pos;
    return a.word < b.word;
  });
  if (words.size() > k) words.resize(k);
  std::vector<Keyword> out;
  out.reserve(words.size());
  for (auto& w : words) out.push_back({std::move(w.word), w.score});
  return out;
}

inline std::vector<const TaggedToken*> flatten(const PreprocessedDoc& doc) {
  std::vector<const TaggedToken*> out;
  for (const auto& sent : doc.sentences) {
    for (const auto& tok : sent) out.push_back(&tok);
  }
  return out;
}

// True when any occurrence of the lemma was indexed as a Noun in the stored
// POS dictionary.
inline bool lemma_is_noun(const PreprocessedDoc& doc, const std::string& lemma) {
  for (const auto& sent : doc.sentences) {
    for (const auto& tok : sent) {
      if (tok.lemma != lemma) continue;
      auto it = doc.pos_index.find(to_lower_ascii(tok.surface));
      if (it != doc.pos_index.end() && it->second == PosTag::Noun) return true;
    }
  }
  return false;
}

}  // namespace appintent::detail
