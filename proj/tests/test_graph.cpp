#include <cmath>
#include <numeric>

#include "doctest.h"

#include "appintent/errors.hpp"
#include "appintent/graph.hpp"
#include "oracles.hpp"

using namespace appintent;

namespace {

WordGraph path_abc() {
  WordGraph g;
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  return g;
}

WordGraph triangle() {
  WordGraph g;
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("a", "c");
  return g;
}

double score_of(const WordGraph& g, const CentralityScores& s, const std::string& label) {
  return s.by_node[g.node_of(label)];
}

}  // namespace

TEST_CASE("degree sums incident edge weights") {
  auto tri = triangle();
  auto d = degree(tri);
  for (const auto& label : {"a", "b", "c"}) CHECK(score_of(tri, d, label) == 2.0);

  auto path = path_abc();
  d = degree(path);
  CHECK(score_of(path, d, "b") == 2.0);
  CHECK(score_of(path, d, "a") == 1.0);
  CHECK(score_of(path, d, "c") == 1.0);

  WordGraph weighted;
  weighted.add_edge("a", "b", 3.0);
  d = degree(weighted);
  CHECK(score_of(weighted, d, "a") == 3.0);

  WordGraph with_isolated;
  with_isolated.ensure_node("solo");
  d = degree(with_isolated);
  CHECK(d.by_node[0] == 0.0);
}

TEST_CASE("self-loops are dropped and parallel edges accumulate") {
  WordGraph g;
  g.add_edge("a", "a");
  CHECK(g.size() == 1);
  CHECK_FALSE(g.has_edge("a", "a"));
  g.add_edge("a", "b");
  g.add_edge("a", "b");
  CHECK(g.edge_weight("a", "b") == 2.0);
}

TEST_CASE("pagerank handles the trivial and symmetric cases") {
  WordGraph single;
  single.ensure_node("only");
  auto pr = pagerank(single);
  CHECK(pr.by_node[0] == doctest::Approx(1.0));

  auto tri = triangle();
  pr = pagerank(tri);
  for (const auto& label : {"a", "b", "c"}) {
    CHECK(score_of(tri, pr, label) == doctest::Approx(1.0 / 3));
  }

  WordGraph empty;
  CHECK_THROWS_AS(pagerank(empty), DomainError);
}

TEST_CASE("pagerank matches the fixed-point oracle on a star") {
  WordGraph g;
  g.add_edge("hub", "s1");
  g.add_edge("hub", "s2");
  g.add_edge("hub", "s3");
  auto pr = pagerank(g, 0.85, 1e-12, 10000);
  auto expected = oracles::pagerank_fixpoint(g);
  for (std::size_t v = 0; v < g.size(); ++v) {
    CHECK(pr.by_node[v] == doctest::Approx(expected[v]).epsilon(1e-9));
  }
}

TEST_CASE("pagerank sums to one on random graphs") {
  oracles::GraphGen gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = gen.make(7);
    auto pr = pagerank(g);
    double total = std::accumulate(pr.by_node.begin(), pr.by_node.end(), 0.0);
    CHECK(std::fabs(total - 1.0) < 1e-9);
    for (double s : pr.by_node) CHECK(s >= 0.0);
  }
}

TEST_CASE("betweenness on paths and cliques") {
  auto path = path_abc();
  auto b = betweenness(path);
  CHECK(score_of(path, b, "b") == doctest::Approx(1.0));
  CHECK(score_of(path, b, "a") == doctest::Approx(0.0));
  CHECK(score_of(path, b, "c") == doctest::Approx(0.0));

  WordGraph k4;
  for (const auto& [x, y] : {std::pair{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"},
                             {"b", "d"}, {"c", "d"}}) {
    k4.add_edge(x, y);
  }
  b = betweenness(k4);
  for (double s : b.by_node) CHECK(s == doctest::Approx(0.0));
}

TEST_CASE("betweenness equals brute-force enumeration on random graphs") {
  oracles::GraphGen gen(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = gen.make(7);
    auto mine = betweenness(g);
    auto expected = oracles::betweenness_bruteforce(g);
    for (std::size_t v = 0; v < g.size(); ++v) {
      CHECK(mine.by_node[v] == doctest::Approx(expected[v]).epsilon(1e-9));
    }
  }
}

TEST_CASE("harmonic closeness handles paths and disconnection") {
  auto path = path_abc();
  auto c = closeness(path);
  CHECK(score_of(path, c, "b") == doctest::Approx(2.0));
  CHECK(score_of(path, c, "a") == doctest::Approx(1.5));
  CHECK(score_of(path, c, "c") == doctest::Approx(1.5));

  WordGraph two_edges;  // a-b, c-d disconnected
  two_edges.add_edge("a", "b");
  two_edges.add_edge("c", "d");
  c = closeness(two_edges);
  for (double s : c.by_node) CHECK(s == doctest::Approx(1.0));

  WordGraph single;
  single.ensure_node("solo");
  c = closeness(single);
  CHECK(c.by_node[0] == 0.0);
}

TEST_CASE("metrics are invariant under node relabeling") {
  oracles::GraphGen gen(29);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = gen.make(6);
    // Same topology, inserted under permuted labels.
    WordGraph h;
    std::vector<std::string> relabel(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
      relabel[v] = "m" + std::to_string((v * 7 + 3) % g.size());
    }
    for (std::size_t v = 0; v < g.size(); ++v) h.ensure_node(relabel[v]);
    for (std::size_t v = 0; v < g.size(); ++v) {
      for (const auto& [u, w] : g.neighbors(static_cast<int>(v))) {
        if (static_cast<std::size_t>(u) > v) {
          h.add_edge(relabel[v], relabel[u], w);
        }
      }
    }
    for (auto metric : {Centrality::Degree, Centrality::PageRank, Centrality::Betweenness,
                        Centrality::Closeness}) {
      auto sg = compute_centrality(g, metric);
      auto sh = compute_centrality(h, metric);
      for (std::size_t v = 0; v < g.size(); ++v) {
        CHECK(sg.by_node[v] ==
              doctest::Approx(sh.by_node[h.node_of(relabel[v])]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("degree and closeness grow monotonically for edge endpoints") {
  oracles::GraphGen gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = gen.make(6);
    if (g.size() < 2) continue;
    auto d0 = degree(g);
    auto c0 = closeness(g);
    int a = 0, b = static_cast<int>(g.size()) - 1;
    if (a == b) continue;
    g.add_edge(a, b, 1.0);
    auto d1 = degree(g);
    auto c1 = closeness(g);
    CHECK(d1.by_node[a] >= d0.by_node[a]);
    CHECK(d1.by_node[b] >= d0.by_node[b]);
    CHECK(c1.by_node[a] >= c0.by_node[a] - 1e-12);
    CHECK(c1.by_node[b] >= c0.by_node[b] - 1e-12);
  }
}

TEST_CASE("top_k orders by score with position and label tie-breaks") {
  WordGraph g;
  g.ensure_node("a");
  g.ensure_node("b");
  g.ensure_node("c");
  std::vector<double> scores{2.0, 3.0, 1.0};

  auto top = top_k(g, scores, 2);
  REQUIRE(top.size() == 2);
  CHECK(top[0] == "b");
  CHECK(top[1] == "a");

  // k larger than the graph returns everything.
  CHECK(top_k(g, scores, 20).size() == 3);

  // Equal scores: document position wins, then the label.
  std::vector<double> flat{1.0, 1.0, 1.0};
  std::vector<int> positions{9, 4, 4};
  top = top_k(g, flat, 3, &positions);
  CHECK(top == std::vector<std::string>{"b", "c", "a"});
}
