#include <algorithm>
#include <map>
#include <set>

#include "appintent/extract.hpp"
#include "extract_util.hpp"

namespace appintent {
namespace {

struct Candidate {
  std::string key;                  // space-joined lemmas
  std::vector<std::string> lemmas;  // in text order
  std::set<std::string> stems;
  std::vector<int> occurrences;     // global position of each occurrence
};

bool is_phrase_token(const TaggedToken& t) {
  return t.pos == PosTag::Noun || t.pos == PosTag::Adjective;
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::size_t inter = 0;
  for (const auto& s : a) inter += b.count(s);
  std::size_t uni = a.size() + b.size() - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace

KeywordList extract_topicrank(const PreprocessedDoc& doc, const ExtractParams& params) {
  KeywordList out{MethodId::topicrank(), {}, {}};
  if (doc.empty()) return out;

  // Candidates: maximal noun/adjective runs in the cleaned stream.
  std::map<std::string, Candidate> by_key;
  std::vector<std::string> key_order;
  for (const auto& sent : doc.sentences) {
    std::size_t i = 0;
    while (i < sent.size()) {
      if (!is_phrase_token(sent[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < sent.size() && is_phrase_token(sent[j])) ++j;
      std::string key;
      std::vector<std::string> lemmas;
      for (std::size_t m = i; m < j; ++m) {
        if (m > i) key += ' ';
        key += sent[m].lemma;
        lemmas.push_back(sent[m].lemma);
      }
      auto [it, inserted] = by_key.try_emplace(key);
      if (inserted) {
        it->second.key = key;
        it->second.lemmas = std::move(lemmas);
        it->second.stems.insert(it->second.lemmas.begin(), it->second.lemmas.end());
        key_order.push_back(key);
      }
      it->second.occurrences.push_back(doc.global_position(sent[i]));
      i = j;
    }
  }
  if (by_key.empty()) return out;

  std::vector<Candidate> cands;
  cands.reserve(key_order.size());
  for (const auto& k : key_order) cands.push_back(std::move(by_key[k]));

  // Hierarchical agglomerative clustering, average linkage, on stem overlap.
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) clusters.push_back({i});
  auto linkage = [&](const std::vector<int>& a, const std::vector<int>& b) {
    double sum = 0.0;
    for (int i : a) {
      for (int j : b) sum += jaccard(cands[i].stems, cands[j].stems);
    }
    return sum / (a.size() * b.size());
  };
  while (clusters.size() > 1) {
    double best = -1.0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        double sim = linkage(clusters[i], clusters[j]);
        if (sim > best) {
          best = sim;
          bi = i;
          bj = j;
        }
      }
    }
    if (best < params.topicrank_cluster_threshold) break;
    clusters[bi].insert(clusters[bi].end(), clusters[bj].begin(), clusters[bj].end());
    clusters.erase(clusters.begin() + static_cast<long>(bj));
  }

  // Complete topic graph weighted by reciprocal distances between candidate
  // occurrences.
  WordGraph g;
  std::vector<int> topic_pos(clusters.size(), 0);
  for (std::size_t t = 0; t < clusters.size(); ++t) {
    g.ensure_node("topic" + std::to_string(t));
    int earliest = cands[clusters[t][0]].occurrences.front();
    for (int ci : clusters[t]) {
      for (int p : cands[ci].occurrences) earliest = std::min(earliest, p);
    }
    topic_pos[t] = earliest;
  }
  for (std::size_t a = 0; a < clusters.size(); ++a) {
    for (std::size_t b = a + 1; b < clusters.size(); ++b) {
      double w = 0.0;
      for (int ci : clusters[a]) {
        for (int cj : clusters[b]) {
          for (int pi : cands[ci].occurrences) {
            for (int pj : cands[cj].occurrences) {
              int d = pi > pj ? pi - pj : pj - pi;
              if (d > 0) w += 1.0 / d;
            }
          }
        }
      }
      if (w > 0.0) g.add_edge(static_cast<int>(a), static_cast<int>(b), w);
    }
  }

  CentralityScores scores = pagerank(g);
  std::vector<std::size_t> order(clusters.size());
  for (std::size_t t = 0; t < clusters.size(); ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores.by_node[a] != scores.by_node[b]) {
      return scores.by_node[a] > scores.by_node[b];
    }
    return topic_pos[a] < topic_pos[b];
  });

  // Each ranked topic is represented by its earliest-appearing candidate.
  std::set<std::string> emitted;
  for (std::size_t t : order) {
    const Candidate* rep = nullptr;
    int rep_pos = 0;
    for (int ci : clusters[t]) {
      int first = *std::min_element(cands[ci].occurrences.begin(),
                                    cands[ci].occurrences.end());
      if (!rep || first < rep_pos || (first == rep_pos && cands[ci].key < rep->key)) {
        rep = &cands[ci];
        rep_pos = first;
      }
    }
    for (const auto& lemma : rep->lemmas) {
      if (out.words.size() >= params.top_k) return out;
      if (emitted.insert(lemma).second) {
        out.words.push_back({lemma, scores.by_node[t]});
      }
    }
  }
  return out;
}

}  // namespace appintent
