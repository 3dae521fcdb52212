#include "appintent/lexicons.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "appintent/errors.hpp"

#include "lexicons_data.inc"

namespace appintent {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("missing lexicon file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PosTag parse_tag(const std::string& s, const std::string& origin) {
  if (s == "NOUN") return PosTag::Noun;
  if (s == "ADJ") return PosTag::Adjective;
  if (s == "VERB") return PosTag::Verb;
  if (s == "OTHER") return PosTag::Other;
  throw ConfigError(origin + ": unknown POS tag '" + s + "'");
}

bool ends_with(const std::string& s, const char* suffix) {
  std::size_t n = std::char_traits<char>::length(suffix);
  return s.size() >= n && s.compare(s.size() - n, n, suffix) == 0;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// Collapse a trailing doubled consonant left behind by -ing/-ed stripping
// ("planned" -> "plann" -> "plan"). "ll"/"ss" endings stay ("fell", "miss").
void collapse_double(std::string& s) {
  if (s.size() >= 3) {
    char a = s[s.size() - 1], b = s[s.size() - 2];
    if (a == b && !is_vowel(a) && a != 'l' && a != 's') s.pop_back();
  }
}

}  // namespace

const char* pos_tag_name(PosTag t) {
  switch (t) {
    case PosTag::Noun: return "NOUN";
    case PosTag::Adjective: return "ADJ";
    case PosTag::Verb: return "VERB";
    case PosTag::Other: return "OTHER";
  }
  return "NOUN";
}

std::string to_lower_ascii(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool is_ascii_alnum_token(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (!std::isalnum(c) || c > 127) return false;
  }
  return true;
}

void Lexicons::parse_stopwords(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) stopwords_.insert(to_lower_ascii(line));
  }
}

void Lexicons::parse_pos_lexicon(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected word<TAB>tag");
    }
    pos_lexicon_[to_lower_ascii(line.substr(0, tab))] =
        parse_tag(line.substr(tab + 1), origin + ":" + std::to_string(lineno));
  }
}

void Lexicons::parse_lemma_exceptions(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected surface<TAB>lemma");
    }
    lemma_exceptions_[to_lower_ascii(line.substr(0, tab))] =
        to_lower_ascii(line.substr(tab + 1));
  }
}

Lexicons Lexicons::builtin() {
  Lexicons lex;
  lex.parse_stopwords(kStopwordsTxt);
  lex.parse_pos_lexicon(kPosLexiconTsv, "<builtin pos_lexicon>");
  lex.parse_lemma_exceptions(kLemmaExceptionsTsv, "<builtin lemma_exceptions>");
  return lex;
}

Lexicons Lexicons::load_from_dir(const std::string& dir) {
  Lexicons lex;
  lex.parse_stopwords(read_file(dir + "/stopwords.txt"));
  lex.parse_pos_lexicon(read_file(dir + "/pos_lexicon.tsv"), dir + "/pos_lexicon.tsv");
  lex.parse_lemma_exceptions(read_file(dir + "/lemma_exceptions.tsv"),
                             dir + "/lemma_exceptions.tsv");
  return lex;
}

PosTag Lexicons::tag(const std::string& surface) const {
  std::string w = to_lower_ascii(surface);
  auto it = pos_lexicon_.find(w);
  if (it != pos_lexicon_.end()) return it->second;
  // Suffix fallbacks; unknown words default to Noun, which maximizes recall
  // for the noun-filtering extractors.
  if (ends_with(w, "ly")) return PosTag::Other;
  if (ends_with(w, "ing") || ends_with(w, "ed")) return PosTag::Verb;
  if (ends_with(w, "ous") || ends_with(w, "ful") || ends_with(w, "ive") ||
      ends_with(w, "able") || ends_with(w, "ible") || ends_with(w, "al") ||
      ends_with(w, "ic")) {
    return PosTag::Adjective;
  }
  return PosTag::Noun;
}

std::string Lexicons::lemma(const std::string& surface, PosTag pos) const {
  std::string w = to_lower_ascii(surface);
  auto it = lemma_exceptions_.find(w);
  if (it != lemma_exceptions_.end()) return it->second;

  if (pos == PosTag::Verb) {
    if (ends_with(w, "ing") && w.size() >= 5) {
      w.erase(w.size() - 3);
      collapse_double(w);
      return w;
    }
    if (ends_with(w, "ed") && w.size() >= 4) {
      w.erase(w.size() - 2);
      collapse_double(w);
      return w;
    }
  }
  if (pos == PosTag::Noun || pos == PosTag::Verb) {
    if (ends_with(w, "ies") && w.size() >= 5) {
      w.erase(w.size() - 3);
      w.push_back('y');
      return w;
    }
    if (ends_with(w, "ses") || ends_with(w, "xes") || ends_with(w, "zes") ||
        ends_with(w, "ches") || ends_with(w, "shes")) {
      w.erase(w.size() - 2);
      return w;
    }
    if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
        !ends_with(w, "is") && w.size() >= 4) {
      w.pop_back();
      return w;
    }
  }
  return w;
}

}  // namespace appintent
