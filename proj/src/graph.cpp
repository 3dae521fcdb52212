#include "appintent/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "appintent/errors.hpp"

namespace appintent {

int WordGraph::ensure_node(const std::string& label) {
  auto it = index_.find(label);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(labels_.size());
  index_.emplace(label, id);
  labels_.push_back(label);
  adj_.emplace_back();
  return id;
}

int WordGraph::node_of(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

void WordGraph::add_edge(int a, int b, double w) {
  if (a == b) return;  // no self-loops
  for (auto& [n, weight] : adj_[a]) {
    if (n == b) {
      weight += w;
      for (auto& [m, wb] : adj_[b]) {
        if (m == a) {
          wb += w;
          break;
        }
      }
      return;
    }
  }
  adj_[a].emplace_back(b, w);
  adj_[b].emplace_back(a, w);
}

void WordGraph::add_edge(const std::string& a, const std::string& b, double w) {
  add_edge(ensure_node(a), ensure_node(b), w);
}

bool WordGraph::has_edge(const std::string& a, const std::string& b) const {
  return edge_weight(a, b) > 0.0;
}

double WordGraph::edge_weight(const std::string& a, const std::string& b) const {
  int ia = node_of(a), ib = node_of(b);
  if (ia < 0 || ib < 0) return 0.0;
  for (const auto& [n, w] : adj_[ia]) {
    if (n == ib) return w;
  }
  return 0.0;
}

const char* centrality_name(Centrality c) {
  switch (c) {
    case Centrality::Degree: return "Degree";
    case Centrality::PageRank: return "PageRank";
    case Centrality::Betweenness: return "BwCent";
    case Centrality::Closeness: return "ClCent";
  }
  return "Degree";
}

CentralityScores degree(const WordGraph& g) {
  CentralityScores out{Centrality::Degree, std::vector<double>(g.size(), 0.0)};
  for (std::size_t v = 0; v < g.size(); ++v) {
    double sum = 0.0;
    for (const auto& [n, w] : g.neighbors(static_cast<int>(v))) sum += w;
    out.by_node[v] = sum;
  }
  return out;
}

CentralityScores pagerank(const WordGraph& g, double damping, double tol, int max_iter) {
  if (g.empty()) throw DomainError("pagerank on empty graph");
  const std::size_t n = g.size();
  CentralityScores out{Centrality::PageRank, std::vector<double>(n, 1.0 / n)};
  std::vector<double> strength(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& [u, w] : g.neighbors(static_cast<int>(v))) strength[v] += w;
  }

  std::vector<double> next(n, 0.0);
  for (int iter = 0; iter < max_iter; ++iter) {
    double dangling = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (strength[v] == 0.0) dangling += out.by_node[v];
    }
    std::fill(next.begin(), next.end(), (1.0 - damping) / n + damping * dangling / n);
    for (std::size_t v = 0; v < n; ++v) {
      if (strength[v] == 0.0) continue;
      double share = damping * out.by_node[v] / strength[v];
      for (const auto& [u, w] : g.neighbors(static_cast<int>(v))) {
        next[u] += share * w;
      }
    }
    double delta = 0.0;
    for (std::size_t v = 0; v < n; ++v) delta += std::fabs(next[v] - out.by_node[v]);
    out.by_node.swap(next);
    if (delta < tol) break;
  }

  // Scores sum to 1 up to accumulated rounding; renormalize to pin it.
  double total = std::accumulate(out.by_node.begin(), out.by_node.end(), 0.0);
  if (total > 0.0) {
    for (double& s : out.by_node) s /= total;
  }
  return out;
}

CentralityScores betweenness(const WordGraph& g) {
  // Brandes over unweighted shortest paths. Summing over every source counts
  // each unordered pair twice, so the accumulation is halved at the end.
  const std::size_t n = g.size();
  CentralityScores out{Centrality::Betweenness, std::vector<double>(n, 0.0)};
  std::vector<int> dist(n), sigma(n);
  std::vector<double> delta(n);
  std::vector<std::vector<int>> pred(n);
  std::vector<int> order;
  order.reserve(n);

  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : pred) p.clear();
    order.clear();

    std::deque<int> queue;
    dist[s] = 0;
    sigma[s] = 1;
    queue.push_back(static_cast<int>(s));
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (const auto& [u, w] : g.neighbors(v)) {
        (void)w;
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
        if (dist[u] == dist[v] + 1) {
          sigma[u] += sigma[v];
          pred[u].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      for (int v : pred[w]) {
        delta[v] += (static_cast<double>(sigma[v]) / sigma[w]) * (1.0 + delta[w]);
      }
      if (static_cast<std::size_t>(w) != s) out.by_node[w] += delta[w];
    }
  }
  for (double& b : out.by_node) b /= 2.0;
  return out;
}

CentralityScores closeness(const WordGraph& g) {
  const std::size_t n = g.size();
  CentralityScores out{Centrality::Closeness, std::vector<double>(n, 0.0)};
  std::vector<int> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue;
    dist[s] = 0;
    queue.push_back(static_cast<int>(s));
    double sum = 0.0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (dist[v] > 0) sum += 1.0 / dist[v];
      for (const auto& [u, w] : g.neighbors(v)) {
        (void)w;
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    out.by_node[s] = sum;
  }
  return out;
}

CentralityScores compute_centrality(const WordGraph& g, Centrality metric) {
  switch (metric) {
    case Centrality::Degree: return degree(g);
    case Centrality::PageRank: return pagerank(g);
    case Centrality::Betweenness: return betweenness(g);
    case Centrality::Closeness: return closeness(g);
  }
  return degree(g);
}

std::vector<std::string> top_k(const WordGraph& g, const std::vector<double>& scores,
                               std::size_t k, const std::vector<int>* positions) {
  std::vector<int> nodes(g.size());
  std::iota(nodes.begin(), nodes.end(), 0);
  auto pos = [&](int v) { return positions ? (*positions)[v] : v; };
  std::sort(nodes.begin(), nodes.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    if (pos(a) != pos(b)) return pos(a) < pos(b);
    return g.label(a) < g.label(b);
  });
  if (nodes.size() > k) nodes.resize(k);
  std::vector<std::string> out;
  out.reserve(nodes.size());
  for (int v : nodes) out.push_back(g.label(v));
  return out;
}

}  // namespace appintent
