// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "appintent/corpus.hpp"
#include "appintent/evaluate.hpp"
#include "appintent/extract.hpp"
#include "appintent/interest.hpp"
#include "appintent/preprocess.hpp"
#include "appintent/report.hpp"
#include "appintent/revenue.hpp"
#include "appintent/synthetic.hpp"

#include "oracles.hpp"

using namespace appintent;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Criterion {
  std::string name;
  std::function<bool(std::ostream&)> run;
};

// ---------------------------------------------------------------------------
// 1. Table-5 reproduction (exact)
// ---------------------------------------------------------------------------
bool table5_reproduction(std::ostream& log) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Advertiser> advs{{"adv1", dollars_to_micro(12.0), 100, 0.1, 0.0},
                               {"adv2", dollars_to_micro(10.0), 100, 0.1, 44.67}};
  auto report = simulate_long_term(advs, 1000, 1);

  std::int64_t adv1_imps = 0, adv2_imps = 0, adv1_dollars = 0, adv2_dollars = 0;
  for (const auto& e : report.impressions_ledger) {
    if (e.advertiser_id == "adv1") {
      adv1_imps = e.impressions;
      adv1_dollars = micro_to_whole_dollars(e.revenue);
    } else {
      adv2_imps = e.impressions;
      adv2_dollars = micro_to_whole_dollars(e.revenue);
    }
  }
  std::int64_t baseline_dollars = micro_to_whole_dollars(report.baseline_revenue);
  std::int64_t gain = adv1_dollars + adv2_dollars - baseline_dollars;
  double elapsed = seconds_since(start);

  bool ok = adv2_imps == 691 && adv1_imps == 309 && adv1_dollars == 371 &&
            adv2_dollars == 1000 && baseline_dollars == 1200 && gain == 171 &&
            elapsed < 1.0;
  log << "    targeted impressions=" << adv2_imps << " (want 691), additional revenue=$"
      << adv1_dollars << " (want $371), net gain=$" << gain << " (want $171), "
      << elapsed << "s\n";
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Increase-formula round-trip over all 34 published rows
// ---------------------------------------------------------------------------
struct PublishedRow {
  const char* method;
  double ctr1, ctr2, increase;
};

bool increase_roundtrip(std::ostream& log) {
  auto start = std::chrono::steady_clock::now();
  const std::vector<PublishedRow> install{
      {"TF-IDF", 4.99, 3.37, 48.07},    {"YAKE", 4.09, 3.57, 14.57},
      {"LDA", 5.28, 2.79, 89.20},       {"TextRank", 5.52, 2.85, 93.68},
      {"TopicRank", 5.34, 3.28, 62.8},  {"Degree-1", 4.52, 3.69, 22.49},
      {"Degree-2", 4.51, 3.49, 29.23},  {"Degree-3", 4.64, 3.42, 35.67},
      {"PageRank-1", 4.38, 3.87, 13.18}, {"PageRank-2", 4.51, 3.50, 28.85},
      {"PageRank-3", 4.50, 3.50, 28.57}, {"BwCent-1", 4.61, 3.29, 39.74},
      {"BwCent-2", 4.71, 3.26, 44.48},  {"BwCent-3", 4.66, 3.29, 41.64},
      {"ClCent-1", 4.52, 3.79, 19.26},  {"ClCent-2", 4.52, 3.86, 17.09},
      {"ClCent-3", 4.71, 3.31, 42.29}};
  const std::vector<PublishedRow> uninstall{
      {"TF-IDF", 3.13, 3.98, 27.16},    {"YAKE", 3.22, 4.53, 40.68},
      {"LDA", 3.54, 4.76, 34.46},       {"TextRank", 3.29, 5.15, 56.53},
      {"TopicRank", 3.23, 4.71, 45.82}, {"Degree-1", 2.92, 5.80, 98.63},
      {"Degree-2", 2.95, 5.83, 97.62},  {"Degree-3", 2.91, 5.89, 102.41},
      {"PageRank-1", 2.95, 5.62, 90.51}, {"PageRank-2", 2.89, 5.93, 105.19},
      {"PageRank-3", 2.91, 5.88, 102.61}, {"BwCent-1", 2.93, 5.77, 96.92},
      {"BwCent-2", 2.94, 5.83, 98.30},  {"BwCent-3", 2.96, 5.51, 86.15},
      {"ClCent-1", 2.98, 5.97, 100.33}, {"ClCent-2", 2.87, 6.13, 113.58},
      {"ClCent-3", 2.94, 6.11, 107.82}};

  int checked = 0, failed = 0;
  auto check_rows = [&](const std::vector<PublishedRow>& rows, Mode mode) {
    for (const auto& row : rows) {
      auto computed = compute_increase(row.ctr1, row.ctr2, mode);
      ++checked;
      double diff = computed ? std::fabs(*computed - row.increase) : 1e9;
      if (diff > 0.02) {
        ++failed;
        log << "    " << mode_name(mode) << "/" << row.method << ": computed "
            << (computed ? *computed : 0.0) << " vs published " << row.increase
            << " (diff " << diff << " > 0.02)\n";
      }
    }
  };
  check_rows(install, Mode::Install);
  check_rows(uninstall, Mode::Uninstall);
  double elapsed = seconds_since(start);
  log << "    " << (checked - failed) << "/" << checked << " rows within +-0.02, "
      << elapsed << "s\n";
  if (failed > 0) {
    log << "    note: the failing rows are internally inconsistent in the source\n"
        << "    tables themselves (their published increase does not match their\n"
        << "    published CTR pair under the stated formula in either direction).\n";
  }
  return failed == 0 && elapsed < 1.0;
}

// ---------------------------------------------------------------------------
// 3. Co-occurrence example conformance
// ---------------------------------------------------------------------------
bool cooc_example(std::ostream& log) {
  auto lex = Lexicons::builtin();
  auto doc = preprocess_text("stock market is booming high", DfTable{}, lex);
  auto t1 = build_cooc_graph(doc, 1);
  auto t2 = build_cooc_graph(doc, 2);
  auto t3 = build_cooc_graph(doc, 3);

  struct Expect {
    const WordGraph* g;
    const char* a;
    const char* b;
    bool present;
    const char* what;
  } expectations[] = {
      {&t1, "stock", "high", true, "type1 (stock,high)"},
      {&t1, "stock", "booming", true, "type1 (stock,booming)"},
      {&t2, "stock", "market", true, "type2 (stock,market)"},
      {&t3, "stock", "market", true, "type3 (stock,market)"},
      {&t3, "stock", "booming", false, "type3 (stock,booming) absent"},
  };
  bool ok = true;
  for (const auto& e : expectations) {
    bool has = e.g->has_edge(e.a, e.b);
    if (has != e.present) {
      ok = false;
      log << "    FAILED: " << e.what << "\n";
    }
  }
  log << "    all 5 published memberships reproduced: " << (ok ? "yes" : "no") << "\n";
  return ok;
}

// ---------------------------------------------------------------------------
// 4. CPA -> CPM examples, exact
// ---------------------------------------------------------------------------
bool cpm_examples(std::ostream& log) {
  bool ok = to_cpm(10.0, 0.1) == 1.0 && to_cpm(12.0, 0.1) == 1.2;
  log << "    to_cpm(10,0.1)=" << to_cpm(10.0, 0.1) << ", to_cpm(12,0.1)="
      << to_cpm(12.0, 0.1) << "\n";
  return ok;
}

// ---------------------------------------------------------------------------
// 5. Planted-signal end-to-end
// ---------------------------------------------------------------------------
EvalReport run_pipeline(const SyntheticSpec& spec) {
  auto data = generate_synthetic(spec);
  auto lex = Lexicons::builtin();
  auto df = build_df_table(data.corpus.apps, lex, 1000, 0.05, spec.seed);

  std::vector<PreprocessedDoc> app_docs, bid_docs;
  app_docs.reserve(data.corpus.apps.size());
  for (const auto& a : data.corpus.apps) app_docs.push_back(preprocess(a, df, lex));
  bid_docs.reserve(data.corpus.bids.size());
  for (const auto& b : data.corpus.bids) {
    bid_docs.push_back(preprocess_text(b.product_description, df, lex));
  }

  EvalInputs in;
  for (std::size_t i = 0; i < app_docs.size(); ++i) {
    in.apps[data.corpus.apps[i].app_id] = &app_docs[i];
  }
  for (std::size_t i = 0; i < bid_docs.size(); ++i) {
    in.bids[data.corpus.bids[i].bid_id] = &bid_docs[i];
    in.bid_order.push_back(data.corpus.bids[i].bid_id);
  }
  in.snapshots = &data.corpus.snapshots;
  in.impressions = &data.corpus.impressions;

  ExtractParams params;
  params.lda_seed = spec.seed;
  Extractor extractor(build_corpus_stats(app_docs), lex, params);
  SynonymLexicon syn;
  auto windows = EvalWindowConfig::from_t0(data.t0);
  return evaluate_mode(in, windows, Mode::Install, MethodId::all(),
                       default_hybrid_models(Mode::Install), syn, extractor);
}

bool planted_signal(std::ostream& log) {
  auto start = std::chrono::steady_clock::now();
  SyntheticSpec spec;  // 1000 users, 200 apps, 50 bids, seed 42
  spec.planted_uplift_pct = 50.0;

  auto with_signal = run_pipeline(spec);
  bool ok = true;
  double min_increase = 1e9, max_abs_null = 0.0;
  for (const auto& row : with_signal.rows) {
    bool is_hybrid = !MethodId::parse(row.method).has_value();
    if (is_hybrid) continue;
    if (!row.increase_pct || *row.increase_pct <= 0.0) {
      ok = false;
      log << "    uplift-50 run: " << row.method << " increase="
          << (row.increase_pct ? std::to_string(*row.increase_pct) : "n/a")
          << " (want > 0)\n";
    }
    if (row.increase_pct) min_increase = std::min(min_increase, *row.increase_pct);
  }

  spec.planted_uplift_pct = 0.0;
  auto null_run = run_pipeline(spec);
  for (const auto& row : null_run.rows) {
    bool is_hybrid = !MethodId::parse(row.method).has_value();
    if (is_hybrid) continue;
    if (!row.increase_pct || std::fabs(*row.increase_pct) >= 5.0) {
      ok = false;
      log << "    uplift-0 run: " << row.method << " |increase|="
          << (row.increase_pct ? std::to_string(std::fabs(*row.increase_pct)) : "n/a")
          << " (want < 5)\n";
    }
    if (row.increase_pct) {
      max_abs_null = std::max(max_abs_null, std::fabs(*row.increase_pct));
    }
  }

  double elapsed = seconds_since(start);
  log << "    17/17 methods, min increase (uplift 50) = " << min_increase
      << "%, max |increase| (uplift 0) = " << max_abs_null << "%, " << elapsed << "s\n";
  if (elapsed >= 120.0) {
    ok = false;
    log << "    exceeded the 2-minute budget\n";
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 6. Graph-oracle equivalence on 200 random graphs
// ---------------------------------------------------------------------------
bool graph_oracles(std::ostream& log) {
  oracles::GraphGen gen(4242);
  double worst_pr = 0.0, worst_bw = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    auto g = gen.make(7);

    auto bw = betweenness(g);
    auto bw_expected = oracles::betweenness_bruteforce(g);
    for (std::size_t v = 0; v < g.size(); ++v) {
      worst_bw = std::max(worst_bw, std::fabs(bw.by_node[v] - bw_expected[v]));
    }

    auto pr = pagerank(g, 0.85, 1e-12, 100000);
    auto pr_expected = oracles::pagerank_fixpoint(g);
    for (std::size_t v = 0; v < g.size(); ++v) {
      worst_pr = std::max(worst_pr, std::fabs(pr.by_node[v] - pr_expected[v]));
    }
  }
  log << "    200 graphs: betweenness max |diff| = " << worst_bw
      << " (exact), pagerank Linf = " << worst_pr << " (<= 1e-6)\n";
  return worst_bw <= 1e-9 && worst_pr <= 1e-6;
}

// ---------------------------------------------------------------------------
// 7. LDA degenerate-topic property on 50 random documents
// ---------------------------------------------------------------------------
bool lda_degenerate(std::ostream& log) {
  auto lex = Lexicons::builtin();
  oracles::GraphGen rng(777);
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::string text;
    int n = 1 + static_cast<int>(rng.bounded(60));
    for (int i = 0; i < n; ++i) {
      text += "w" + std::to_string(rng.bounded(15)) + " ";
      if (rng.bounded(7) == 0) text += ". ";
    }
    auto doc = preprocess_text(text, DfTable{}, lex);
    auto ranking = lda_word_ranking(doc);

    std::map<std::string, std::pair<int, int>> counts;
    for (const auto& sent : doc.sentences) {
      for (const auto& tok : sent) {
        auto [it, inserted] = counts.try_emplace(tok.lemma, std::pair{0, 0});
        if (inserted) it->second.second = doc.global_position(tok);
        ++it->second.first;
      }
    }
    std::vector<std::pair<std::string, std::pair<int, int>>> expected(counts.begin(),
                                                                      counts.end());
    std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
      if (a.second.first != b.second.first) return a.second.first > b.second.first;
      if (a.second.second != b.second.second) return a.second.second < b.second.second;
      return a.first < b.first;
    });
    if (ranking.size() != expected.size()) {
      log << "    trial " << trial << ": size mismatch\n";
      return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (ranking[i].lemma != expected[i].first) {
        log << "    trial " << trial << ": rank " << i << " is '" << ranking[i].lemma
            << "', frequency oracle says '" << expected[i].first << "'\n";
        return false;
      }
    }
    ++checked;
  }
  log << "    " << checked << "/50 documents match the frequency ranking\n";
  return checked == 50;
}

// ---------------------------------------------------------------------------
// 8. Totality & shape over a 10,000-document fuzz corpus
// ---------------------------------------------------------------------------
bool totality_fuzz(std::ostream& log) {
  auto start = std::chrono::steady_clock::now();
  auto lex = Lexicons::builtin();
  oracles::GraphGen rng(31337);
  std::vector<std::string> vocab{
      "stock", "market", "car",  "deal",  "game",  "is",   "the",  "a",
      "best",  "apps",   "news", "12",    "x9y",   "...",  "(a)",  "e-mail",
      "\xE6\x97\xA5\xE6\x9C\xAC\xE8\xAA\x9E", "\xD0\xBF\xD1\x80\xD0\xB8",
      "HIGH",  "Boom",   "cars", "cities", "running"};

  std::vector<PreprocessedDoc> docs;
  docs.push_back(preprocess_text("", DfTable{}, lex));
  docs.push_back(preprocess_text("zebra", DfTable{}, lex));
  docs.push_back(preprocess_text("the is a of and", DfTable{}, lex));
  docs.push_back(preprocess_text("\xE6\x97\xA5\xE6\x9C\xAC\xE8\xAA\x9E", DfTable{}, lex));
  while (docs.size() < 10000) {
    std::string text;
    std::size_t n = rng.bounded(40);
    for (std::size_t i = 0; i < n; ++i) {
      text += vocab[rng.bounded(vocab.size())];
      text += rng.bounded(9) == 0 ? ". " : " ";
    }
    docs.push_back(preprocess_text(text, DfTable{}, lex));
  }

  CorpusStats stats = build_corpus_stats(docs);
  ExtractParams params;
  params.lda_passes = 50;
  Extractor ex(stats, lex, params);

  std::size_t runs = 0;
  for (const auto& doc : docs) {
    std::set<std::string> vocab_set;
    for (const auto& sent : doc.sentences) {
      for (const auto& tok : sent) {
        vocab_set.insert(tok.lemma);
        vocab_set.insert(to_lower_ascii(tok.surface));
      }
    }
    for (const auto& m : MethodId::all()) {
      KeywordList kws;
      try {
        kws = ex.run_uncached(m, doc);
      } catch (const std::exception& e) {
        log << "    " << m.name() << " threw: " << e.what() << "\n";
        return false;
      }
      if (kws.words.size() > 20) {
        log << "    " << m.name() << " returned " << kws.words.size() << " words\n";
        return false;
      }
      std::set<std::string> seen;
      for (const auto& w : kws.words) {
        if (!seen.insert(w.lemma).second) {
          log << "    " << m.name() << " returned duplicate '" << w.lemma << "'\n";
          return false;
        }
        if (!vocab_set.count(w.lemma)) {
          log << "    " << m.name() << " hallucinated '" << w.lemma << "'\n";
          return false;
        }
      }
      ++runs;
    }
  }
  log << "    " << runs << " extractions over " << docs.size() << " documents, "
      << seconds_since(start) << "s\n";
  return true;
}

// ---------------------------------------------------------------------------
// 9. Determinism: byte-identical report.json across two full runs
// ---------------------------------------------------------------------------
std::string pipeline_report_bytes(const std::filesystem::path& dir) {
  SyntheticSpec spec;
  spec.n_users = 150;
  spec.n_apps = 80;
  spec.n_bids = 24;
  spec.impressions_per_user = 12;
  std::filesystem::create_directories(dir);
  write_synthetic(spec, dir.string());

  auto apps = load_apps((dir / "apps.jsonl").string());
  auto snapshots = load_snapshots((dir / "snapshots.jsonl").string());
  auto bids = load_bids((dir / "bids.jsonl").string());
  auto impressions = load_impressions((dir / "impressions.jsonl").string());

  auto lex = Lexicons::builtin();
  auto df = build_df_table(apps, lex, 1000, 0.05, spec.seed);
  std::vector<PreprocessedDoc> app_docs, bid_docs;
  for (const auto& a : apps) app_docs.push_back(preprocess(a, df, lex));
  for (const auto& b : bids) {
    bid_docs.push_back(preprocess_text(b.product_description, df, lex));
  }
  EvalInputs in;
  for (std::size_t i = 0; i < apps.size(); ++i) in.apps[apps[i].app_id] = &app_docs[i];
  for (std::size_t i = 0; i < bids.size(); ++i) {
    in.bids[bids[i].bid_id] = &bid_docs[i];
    in.bid_order.push_back(bids[i].bid_id);
  }
  in.snapshots = &snapshots;
  in.impressions = &impressions;

  ExtractParams params;
  params.lda_seed = spec.seed;
  Extractor extractor(build_corpus_stats(app_docs), lex, params);
  SynonymLexicon syn;
  auto windows = EvalWindowConfig::from_t0(spec.t0);

  std::vector<EvalReport> reports;
  reports.push_back(evaluate_mode(in, windows, Mode::Install, MethodId::all(),
                                  default_hybrid_models(Mode::Install), syn, extractor));
  reports.push_back(evaluate_mode(in, windows, Mode::Uninstall, MethodId::all(),
                                  default_hybrid_models(Mode::Uninstall), syn, extractor));
  write_eval_report((dir / "report.json").string(), reports);

  std::ifstream f(dir / "report.json", std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool determinism(std::ostream& log) {
  auto base = std::filesystem::temp_directory_path() /
              ("appintent_acceptance_" + std::to_string(::getpid()));
  auto run1 = pipeline_report_bytes(base / "run1");
  auto run2 = pipeline_report_bytes(base / "run2");
  std::error_code ec;
  std::filesystem::remove_all(base, ec);
  log << "    report.json bytes: " << run1.size() << " vs " << run2.size()
      << (run1 == run2 ? " (identical)" : " (DIFFER)") << "\n";
  return !run1.empty() && run1 == run2;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"Table-5 reproduction (691 impressions, $371, $171, < 1s)", table5_reproduction},
      {"Increase-formula round-trip (34 published rows, +-0.02)", increase_roundtrip},
      {"Co-occurrence example conformance (types 1/2/3)", cooc_example},
      {"CPA->CPM examples (exact)", cpm_examples},
      {"Planted-signal end-to-end (17 methods, uplift 50 vs 0)", planted_signal},
      {"Graph-oracle equivalence (200 random graphs <= 7 nodes)", graph_oracles},
      {"LDA degenerate-topic ranking (50 random documents)", lda_degenerate},
      {"Totality & shape fuzz (10,000 documents x 17 methods)", totality_fuzz},
      {"Determinism (byte-identical report.json)", determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::ostringstream log;
    bool ok = false;
    try {
      ok = criterion.run(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " - " << criterion.name << "\n" << log.str();
    if (!ok) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failures == 0 ? 0 : 1;
}
