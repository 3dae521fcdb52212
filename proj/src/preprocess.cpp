#include "appintent/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>

#include "rng.hpp"

namespace appintent {
namespace {

bool is_sentence_break(char c) { return c == '.' || c == '!' || c == '?' || c == '\n'; }

bool is_ascii_punct(unsigned char c) { return c <= 127 && std::ispunct(c); }

// Strips leading/trailing ASCII punctuation; "(hello)," -> "hello".
std::string strip_edges(const std::string& tok) {
  std::size_t b = 0, e = tok.size();
  while (b < e && is_ascii_punct(static_cast<unsigned char>(tok[b]))) ++b;
  while (e > b && is_ascii_punct(static_cast<unsigned char>(tok[e - 1]))) --e;
  return tok.substr(b, e - b);
}

bool is_punct_only(const std::string& tok) {
  return !tok.empty() &&
         std::all_of(tok.begin(), tok.end(),
                     [](char c) { return is_ascii_punct(static_cast<unsigned char>(c)); });
}

// Per-sentence tags for the original token sequence.
std::vector<PosTag> tag_sentence(const std::vector<std::string>& tokens, const Lexicons& lex) {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (const auto& t : tokens) tags.push_back(lex.tag(t));
  return tags;
}

int tag_rank(PosTag t) {
  // Tie preference for pos_index: Noun > Adjective > Verb > Other.
  switch (t) {
    case PosTag::Noun: return 0;
    case PosTag::Adjective: return 1;
    case PosTag::Verb: return 2;
    case PosTag::Other: return 3;
  }
  return 3;
}

}  // namespace

int PreprocessedDoc::global_position(const TaggedToken& t) const {
  int offset = 0;
  for (int s = 0; s < t.sentence_index; ++s) offset += original_sentence_len[s];
  return offset + t.position_in_sentence;
}

std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> sentence;
  std::string word;

  auto flush_word = [&] {
    if (word.empty()) return;
    std::string w = strip_edges(word);
    if (!w.empty()) sentence.push_back(std::move(w));
    word.clear();
  };
  auto flush_sentence = [&] {
    flush_word();
    if (!sentence.empty()) sentences.push_back(std::move(sentence));
    sentence.clear();
  };

  for (char c : text) {
    if (is_sentence_break(c)) {
      flush_sentence();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush_word();
    } else {
      word.push_back(c);
    }
  }
  flush_sentence();
  return sentences;
}

DfTable build_df_table(const std::vector<AppRecord>& corpus, const Lexicons& lex,
                       std::size_t sample_size, double threshold, std::uint64_t seed) {
  DfTable table;
  table.sample_size = sample_size;
  table.threshold = threshold;
  if (corpus.empty()) return table;

  // Seeded partial Fisher-Yates; a corpus smaller than sample_size is used
  // whole.
  std::size_t actual = std::min(sample_size, corpus.size());
  std::vector<std::size_t> idx(corpus.size());
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(seed);
  for (std::size_t i = 0; i < actual; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.bounded(idx.size() - i));
    std::swap(idx[i], idx[j]);
  }

  std::unordered_map<std::string, std::size_t> df;
  for (std::size_t i = 0; i < actual; ++i) {
    const AppRecord& doc = corpus[idx[i]];
    std::set<std::string> lemmas;
    for (const auto& sent : tokenize(doc.description)) {
      for (const auto& tok : sent) {
        std::string lower = to_lower_ascii(tok);
        if (lex.is_stopword(lower)) continue;
        if (is_punct_only(tok)) continue;
        if (!is_ascii_alnum_token(tok)) continue;
        lemmas.insert(lex.lemma(tok, lex.tag(tok)));
      }
    }
    for (const auto& l : lemmas) ++df[l];
  }

  // Strictly greater than threshold * configured sample size ("more than
  // 5%"). The configured size keeps the cutoff stable when the corpus is
  // smaller than the sample.
  double cutoff = threshold * static_cast<double>(sample_size);
  for (const auto& [lemma, count] : df) {
    if (static_cast<double>(count) > cutoff) table.banned.insert(lemma);
  }
  return table;
}

PreprocessedDoc preprocess_text(const std::string& text, const DfTable& df,
                                const Lexicons& lex) {
  PreprocessedDoc out;
  auto raw = tokenize(text);
  if (raw.empty()) return out;

  // POS tags are computed on the original sentences, before any removal, and
  // aggregated into the stored dictionary.
  std::unordered_map<std::string, std::array<int, 4>> tag_counts;
  std::vector<std::vector<PosTag>> tags(raw.size());
  for (std::size_t s = 0; s < raw.size(); ++s) {
    tags[s] = tag_sentence(raw[s], lex);
    for (std::size_t i = 0; i < raw[s].size(); ++i) {
      ++tag_counts[to_lower_ascii(raw[s][i])][static_cast<int>(tags[s][i])];
    }
  }
  for (const auto& [word, counts] : tag_counts) {
    int best = 0;
    for (int t = 1; t < 4; ++t) {
      bool better = counts[t] > counts[best] ||
                    (counts[t] == counts[best] &&
                     tag_rank(static_cast<PosTag>(t)) < tag_rank(static_cast<PosTag>(best)));
      if (better) best = t;
    }
    out.pos_index.emplace(word, static_cast<PosTag>(best));
  }

  out.original_sentence_len.reserve(raw.size());
  for (std::size_t s = 0; s < raw.size(); ++s) {
    out.original_sentence_len.push_back(static_cast<int>(raw[s].size()));
    std::vector<TaggedToken> kept;
    for (std::size_t i = 0; i < raw[s].size(); ++i) {
      const std::string& surface = raw[s][i];
      std::string lower = to_lower_ascii(surface);
      if (lex.is_stopword(lower)) continue;
      if (is_punct_only(surface)) continue;
      if (!is_ascii_alnum_token(surface)) continue;
      std::string lemma = lex.lemma(surface, tags[s][i]);
      if (df.is_banned(lemma)) continue;
      TaggedToken tok;
      tok.surface = surface;
      tok.lemma = std::move(lemma);
      tok.pos = tags[s][i];
      tok.sentence_index = static_cast<int>(s);
      tok.position_in_sentence = static_cast<int>(i);
      kept.push_back(std::move(tok));
    }
    if (!kept.empty()) out.sentences.push_back(std::move(kept));
  }
  return out;
}

}  // namespace appintent
