#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace appintent {

// Undirected weighted word graph. Nodes are interned strings; parallel edges
// accumulate weight; self-loops are silently dropped.
class WordGraph {
 public:
  int ensure_node(const std::string& label);
  int node_of(const std::string& label) const;  // -1 when absent

  // Adds weight w to the (a, b) edge, creating it if needed. a == b is a no-op.
  void add_edge(int a, int b, double w = 1.0);
  void add_edge(const std::string& a, const std::string& b, double w = 1.0);

  bool has_edge(const std::string& a, const std::string& b) const;
  double edge_weight(const std::string& a, const std::string& b) const;  // 0 when absent

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(int node) const { return labels_[node]; }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::vector<std::pair<int, double>>& neighbors(int node) const {
    return adj_[node];
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
};

enum class Centrality { Degree, PageRank, Betweenness, Closeness };

const char* centrality_name(Centrality c);

struct CentralityScores {
  Centrality metric = Centrality::Degree;
  std::vector<double> by_node;  // parallel to graph node ids
};

// Weighted degree: sum of incident edge weights; isolated node -> 0.
CentralityScores degree(const WordGraph& g);

// Power iteration over the weighted undirected graph (each edge as two
// directed arcs). Dangling mass is redistributed uniformly; iteration stops
// when the L1 change drops below tol. Empty graph raises DomainError.
CentralityScores pagerank(const WordGraph& g, double damping = 0.85,
                          double tol = 1e-6, int max_iter = 100);

// Exact betweenness via Brandes' accumulation over unweighted shortest paths,
// each unordered pair counted once.
CentralityScores betweenness(const WordGraph& g);

// Harmonic closeness C(v) = sum over u != v of 1/d(u, v), with 1/inf = 0, on
// unweighted hop distances. Well defined on disconnected graphs.
CentralityScores closeness(const WordGraph& g);

CentralityScores compute_centrality(const WordGraph& g, Centrality metric);

// Top-k node labels by descending score. Ties break by smallest position
// (callers pass original document positions; defaults to insertion order),
// then lexicographically. Returns fewer than k when the graph is smaller.
std::vector<std::string> top_k(const WordGraph& g, const std::vector<double>& scores,
                               std::size_t k,
                               const std::vector<int>* positions = nullptr);

}  // namespace appintent
