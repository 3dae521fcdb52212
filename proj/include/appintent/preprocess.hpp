#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "appintent/corpus.hpp"
#include "appintent/lexicons.hpp"

namespace appintent {

struct TaggedToken {
  std::string surface;      // original casing (YAKE's casing feature needs it)
  std::string lemma;        // lowercase
  PosTag pos = PosTag::Noun;
  int sentence_index = 0;
  int position_in_sentence = 0;  // position in the ORIGINAL sentence, pre-removal
};

// Cleaned document: content tokens with their original positions, plus the
// stored word -> most-frequent-tag dictionary computed on the original text.
struct PreprocessedDoc {
  std::vector<std::vector<TaggedToken>> sentences;
  std::map<std::string, PosTag> pos_index;       // lowercased surface -> tag
  std::vector<int> original_sentence_len;        // pre-removal token counts

  bool empty() const { return sentences.empty(); }

  // Global pre-removal position of a token, usable as a document-wide
  // tie-break and distance measure.
  int global_position(const TaggedToken& t) const;
};

// Corpus-level high-document-frequency ban list.
struct DfTable {
  std::size_t sample_size = 1000;
  double threshold = 0.05;
  std::set<std::string> banned;  // lemmas

  bool is_banned(const std::string& lemma) const { return banned.count(lemma) != 0; }
};

// Sentence split on {. ! ?} plus newline; word split on whitespace with
// leading/trailing punctuation stripped. Tokens that are punctuation-only
// vanish at this stage; empty text gives an empty list. Total function.
std::vector<std::vector<std::string>> tokenize(const std::string& text);

// Seeded uniform sample without replacement of up to sample_size descriptions;
// a lemma is banned iff its document frequency in the sample is strictly
// greater than threshold * actual sample size.
DfTable build_df_table(const std::vector<AppRecord>& corpus, const Lexicons& lex,
                       std::size_t sample_size = 1000, double threshold = 0.05,
                       std::uint64_t seed = 42);

// Full cleaning pipeline on one text: stopword removal, punctuation removal,
// non-ASCII-alphanumeric removal, POS tagging of the original sentences (kept
// in pos_index), lemmatization, and DF-ban removal. Original positions are
// retained on surviving tokens.
PreprocessedDoc preprocess_text(const std::string& text, const DfTable& df,
                                const Lexicons& lex);

inline PreprocessedDoc preprocess(const AppRecord& doc, const DfTable& df,
                                  const Lexicons& lex) {
  return preprocess_text(doc.description, df, lex);
}

}  // namespace appintent
