#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>

namespace appintent {

// Coarse tag set; only the Noun/Adjective distinction is consumed downstream.
enum class PosTag { Noun, Adjective, Verb, Other };

const char* pos_tag_name(PosTag t);

// Stopword list, word -> coarse-tag lexicon and lemma exception table.
// A built-in copy ships inside the library; the three data files under data/
// carry the same content and can be swapped out per deployment.
class Lexicons {
 public:
  static Lexicons builtin();

  // Reads stopwords.txt, pos_lexicon.tsv and lemma_exceptions.tsv from a
  // directory. A missing file raises ConfigError.
  static Lexicons load_from_dir(const std::string& dir);

  bool is_stopword(const std::string& lower) const {
    return stopwords_.count(lower) != 0;
  }

  // Lexicon lookup, then suffix rules, then Noun.
  PosTag tag(const std::string& surface) const;

  // Lowercase, exception table first, then deterministic suffix stripping.
  std::string lemma(const std::string& surface, PosTag pos) const;

  const std::unordered_set<std::string>& stopwords() const { return stopwords_; }

 private:
  std::unordered_set<std::string> stopwords_;
  std::unordered_map<std::string, PosTag> pos_lexicon_;
  std::unordered_map<std::string, std::string> lemma_exceptions_;

  void parse_stopwords(const std::string& text);
  void parse_pos_lexicon(const std::string& text, const std::string& origin);
  void parse_lemma_exceptions(const std::string& text, const std::string& origin);
};

std::string to_lower_ascii(const std::string& s);
bool is_ascii_alnum_token(const std::string& s);

}  // namespace appintent
