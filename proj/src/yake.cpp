#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>

#include "appintent/extract.hpp"
#include "extract_util.hpp"

namespace appintent {
namespace {

struct TermStats {
  int tf = 0;
  int tf_capitalized = 0;  // uppercase first letter past sentence start
  int tf_acronym = 0;
  std::vector<int> sentence_occurrences;
  std::set<int> sentences;
  std::set<std::string> left_distinct, right_distinct;
  int left_total = 0, right_total = 0;
  int first_pos = 0;
  std::string lemma;
};

double median(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

bool is_acronym(const std::string& s) {
  if (s.size() < 2) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isupper(c) || std::isdigit(c); });
}

std::size_t levenshtein(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t prev = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t cur = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         prev + (a[i - 1] == b[j - 1] ? 0 : 1)});
      prev = cur;
    }
  }
  return row[b.size()];
}

double edit_similarity(const std::string& a, const std::string& b) {
  std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

struct Candidate {
  std::string key;        // lowercased, space-joined
  std::vector<std::string> terms;
  double score = 0.0;
  int tf = 0;
  int first_pos = 0;
  std::string head_lemma;  // lemma of the last token at first occurrence
};

}  // namespace

KeywordList extract_yake(const PreprocessedDoc& doc, const Lexicons& lex,
                         const ExtractParams& params) {
  KeywordList out{MethodId::yake(), {}, {}};
  if (doc.empty()) return out;

  const int window = std::max(1, params.yake_context_window);
  std::map<std::string, TermStats> terms;

  // Single pass over the cleaned stream for every statistical feature.
  for (const auto& sent : doc.sentences) {
    for (std::size_t i = 0; i < sent.size(); ++i) {
      const TaggedToken& tok = sent[i];
      std::string key = to_lower_ascii(tok.surface);
      auto [it, inserted] = terms.try_emplace(key);
      TermStats& st = it->second;
      if (inserted) {
        st.first_pos = doc.global_position(tok);
        st.lemma = tok.lemma;
      }
      ++st.tf;
      if (is_acronym(tok.surface)) {
        ++st.tf_acronym;
      } else if (std::isupper(static_cast<unsigned char>(tok.surface[0])) &&
                 tok.position_in_sentence > 0) {
        ++st.tf_capitalized;
      }
      st.sentence_occurrences.push_back(tok.sentence_index);
      st.sentences.insert(tok.sentence_index);
      for (int d = 1; d <= window; ++d) {
        if (i >= static_cast<std::size_t>(d)) {
          st.left_distinct.insert(to_lower_ascii(sent[i - d].surface));
          ++st.left_total;
        }
        if (i + d < sent.size()) {
          st.right_distinct.insert(to_lower_ascii(sent[i + d].surface));
          ++st.right_total;
        }
      }
    }
  }

  double mean_tf = 0.0, max_tf = 0.0;
  for (const auto& [k, st] : terms) {
    mean_tf += st.tf;
    max_tf = std::max(max_tf, static_cast<double>(st.tf));
  }
  mean_tf /= terms.size();
  double var = 0.0;
  for (const auto& [k, st] : terms) {
    var += (st.tf - mean_tf) * (st.tf - mean_tf);
  }
  double std_tf = std::sqrt(var / terms.size());
  const double total_sentences =
      static_cast<double>(std::max<std::size_t>(1, doc.original_sentence_len.size()));

  std::map<std::string, double> term_score;
  for (const auto& [key, st] : terms) {
    double t_case = std::max(st.tf_capitalized, st.tf_acronym) / (1.0 + std::log(st.tf));
    double t_pos = std::log(std::log(3.0 + median(st.sentence_occurrences)));
    double t_freq = st.tf / (mean_tf + std_tf);
    double dl = st.left_total > 0
                    ? static_cast<double>(st.left_distinct.size()) / st.left_total
                    : 0.0;
    double dr = st.right_total > 0
                    ? static_cast<double>(st.right_distinct.size()) / st.right_total
                    : 0.0;
    double t_rel = 1.0 + (dl + dr) * (st.tf / max_tf);
    double t_sent = static_cast<double>(st.sentences.size()) / total_sentences;
    term_score[key] = (t_rel * t_pos) / (t_case + t_freq / t_rel + t_sent / t_rel);
  }

  // 1-3 grams of adjacent cleaned tokens, rejected when either edge term is a
  // stopword.
  std::map<std::string, Candidate> candidates;
  for (const auto& sent : doc.sentences) {
    for (std::size_t i = 0; i < sent.size(); ++i) {
      for (std::size_t len = 1; len <= 3 && i + len <= sent.size(); ++len) {
        std::string first = to_lower_ascii(sent[i].surface);
        std::string last = to_lower_ascii(sent[i + len - 1].surface);
        if (lex.is_stopword(first) || lex.is_stopword(last)) continue;
        std::string key;
        std::vector<std::string> parts;
        for (std::size_t j = 0; j < len; ++j) {
          if (j) key += ' ';
          std::string term = to_lower_ascii(sent[i + j].surface);
          key += term;
          parts.push_back(std::move(term));
        }
        auto [it, inserted] = candidates.try_emplace(key);
        Candidate& c = it->second;
        if (inserted) {
          c.key = key;
          c.terms = std::move(parts);
          c.first_pos = doc.global_position(sent[i]);
          c.head_lemma = sent[i + len - 1].lemma;
        }
        ++c.tf;
      }
    }
  }
  if (candidates.empty()) return out;

  std::vector<Candidate> ranked;
  ranked.reserve(candidates.size());
  for (auto& [key, c] : candidates) {
    double prod = 1.0, sum = 0.0;
    for (const auto& t : c.terms) {
      prod *= term_score[t];
      sum += term_score[t];
    }
    c.score = prod / (c.tf * (1.0 + sum));
    ranked.push_back(std::move(c));
  }
  std::sort(ranked.begin(), ranked.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score < b.score;  // lower is better
    if (a.first_pos != b.first_pos) return a.first_pos < b.first_pos;
    return a.key < b.key;
  });

  // Near-duplicate removal keeps the lower-scored candidate.
  std::vector<const Candidate*> kept;
  for (const auto& c : ranked) {
    bool duplicate = false;
    for (const auto* k : kept) {
      if (edit_similarity(c.key, k->key) >= params.yake_dedup_threshold) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.push_back(&c);
  }

  std::set<std::string> emitted;
  for (const auto* c : kept) {
    if (out.words.size() >= params.top_k) break;
    if (!emitted.insert(c->head_lemma).second) continue;
    out.words.push_back({c->head_lemma, c->score});
  }
  return out;
}

}  // namespace appintent
