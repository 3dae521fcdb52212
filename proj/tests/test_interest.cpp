#include "doctest.h"

#include "appintent/interest.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace appintent;
using test_util::doc_of;
using test_util::lexicons;

namespace {

KeywordList kw_list(const std::vector<std::string>& lemmas, const std::string& source = "") {
  KeywordList kws{MethodId::tfidf(), {}, source};
  double score = 1.0;
  for (const auto& l : lemmas) kws.words.push_back({l, score -= 0.01});
  return kws;
}

}  // namespace

TEST_CASE("synonym lexicon enforces symmetric closure and identity") {
  auto syn = SynonymLexicon::from_pairs({{"car", "automobile"}});
  CHECK(syn.synonyms("car", "automobile"));
  CHECK(syn.synonyms("automobile", "car"));
  CHECK(syn.synonyms("zebra", "zebra"));
  CHECK_FALSE(syn.synonyms("car", "zebra"));
}

TEST_CASE("synonym lexicon loads the TSV format") {
  test_util::TempDir dir;
  test_util::write_file(dir.file("syn.tsv"), "car\tautomobile,auto\nbuy\tpurchase\n");
  auto syn = SynonymLexicon::load(dir.file("syn.tsv"));
  CHECK(syn.synonyms("auto", "car"));
  CHECK(syn.synonyms("purchase", "buy"));
  CHECK_THROWS_AS(SynonymLexicon::load(dir.file("missing.tsv")), ConfigError);
}

TEST_CASE("similar needs two one-to-one matched words") {
  SynonymLexicon none;
  CHECK(similar(kw_list({"stock", "market"}), kw_list({"stock", "market"}), none));
  CHECK_FALSE(similar(kw_list({"stock", "zebra"}), kw_list({"stock", "walrus"}), none));
  CHECK_FALSE(similar(kw_list({}), kw_list({"stock"}), none));

  // One shared word plus one synonym pair crosses the threshold.
  auto syn = SynonymLexicon::from_pairs({{"car", "automobile"}});
  CHECK(similar(kw_list({"stock", "car"}), kw_list({"stock", "automobile"}), syn));
}

TEST_CASE("one word cannot double-count through its own synonyms") {
  // a = [car]; b = [car, automobile]: only one a-side word exists, so the
  // bipartite matching caps at one pair.
  auto syn = SynonymLexicon::from_pairs({{"car", "automobile"}});
  CHECK_FALSE(similar(kw_list({"car"}), kw_list({"car", "automobile"}), syn));
  CHECK_FALSE(similar(kw_list({"car", "car2"}), kw_list({"car", "automobile"}), syn));
  // Two distinct synonym-linked words do cross it.
  CHECK(similar(kw_list({"car", "automobile"}), kw_list({"car", "automobile"}), syn));
}

TEST_CASE("similar is symmetric and monotone under word addition") {
  auto syn = SynonymLexicon::from_pairs({{"car", "automobile"}, {"buy", "purchase"}});
  oracles::GraphGen rng(61);
  std::vector<std::string> vocab{"car", "automobile", "buy", "purchase", "stock",
                                 "market", "zebra", "walrus", "news", "game"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> a, b;
    for (const auto& w : vocab) {
      if (rng.bounded(3) == 0) a.push_back(w);
      if (rng.bounded(3) == 0) b.push_back(w);
    }
    auto la = kw_list(a), lb = kw_list(b);
    bool ab = similar(la, lb, syn);
    CHECK(ab == similar(lb, la, syn));

    //

    // Adding words to both sides never flips true to false.
    if (ab) {
      a.push_back("extraword");
      b.push_back("otherword");
      CHECK(similar(kw_list(a), kw_list(b), syn));
    }
  }
}

TEST_CASE("match_bid picks the first matching app on the requested side") {
  SynonymLexicon syn;
  InterestProfile profile;
  profile.install_keywords[MethodId::tfidf()] = {kw_list({"stock", "market"}, "appA"),
                                                 kw_list({"car", "deal"}, "appB")};
  profile.uninstall_keywords[MethodId::tfidf()] = {kw_list({"game", "arcade"}, "appC")};

  std::map<MethodId, KeywordList> bid;
  bid[MethodId::tfidf()] = kw_list({"car", "deal"});
  auto r = match_bid(profile, bid, MethodId::tfidf(), Mode::Install, syn);
  CHECK(r.matched);
  CHECK(r.app_id == "appB");

  // Matching only an uninstalled app fails in Install mode.
  bid[MethodId::tfidf()] = kw_list({"game", "arcade"});
  CHECK_FALSE(match_bid(profile, bid, MethodId::tfidf(), Mode::Install, syn).matched);
  CHECK(match_bid(profile, bid, MethodId::tfidf(), Mode::Uninstall, syn).matched);

  // Empty profile side -> no match.
  InterestProfile empty;
  CHECK_FALSE(match_bid(empty, bid, MethodId::tfidf(), Mode::Install, syn).matched);

  // Missing method in the bid keywords is a configuration error.
  std::map<MethodId, KeywordList> missing;
  CHECK_THROWS_AS(match_bid(profile, missing, MethodId::tfidf(), Mode::Install, syn),
                  ConfigError);
}

TEST_CASE("hybrid_match short-circuits in priority order") {
  SynonymLexicon syn;
  HybridModel model{"Test_Chain",
                    {MethodId::tfidf(), MethodId::yake(), MethodId::lda(),
                     MethodId::textrank()}};

  InterestProfile profile;
  profile.install_keywords[MethodId::tfidf()] = {kw_list({"stock", "market"}, "appA")};
  profile.install_keywords[MethodId::yake()] = {kw_list({"stock", "market"}, "appA")};
  profile.install_keywords[MethodId::lda()] = {kw_list({"car", "deal"}, "appA")};
  profile.install_keywords[MethodId::textrank()] = {kw_list({"game", "puzzle"}, "appA")};

  std::map<MethodId, KeywordList> bid;
  bid[MethodId::tfidf()] = kw_list({"stock", "market"});
  bid[MethodId::yake()] = kw_list({"stock", "market"});
  bid[MethodId::lda()] = kw_list({"nothing", "here"});
  bid[MethodId::textrank()] = kw_list({"game", "puzzle"});

  auto [r1, used1] = hybrid_match(profile, bid, model, Mode::Install, syn);
  CHECK(r1.matched);
  REQUIRE(used1.has_value());
  CHECK(*used1 == MethodId::tfidf());  // the second method is never consulted

  // Only the fourth method matches.
  bid[MethodId::tfidf()] = kw_list({"aaa", "bbb"});
  bid[MethodId::yake()] = kw_list({"ccc", "ddd"});
  auto [r2, used2] = hybrid_match(profile, bid, model, Mode::Install, syn);
  CHECK(r2.matched);
  REQUIRE(used2.has_value());
  CHECK(*used2 == MethodId::textrank());

  // None match.
  bid[MethodId::textrank()] = kw_list({"eee", "fff"});
  bid[MethodId::lda()] = kw_list({"ggg", "hhh"});
  auto [r3, used3] = hybrid_match(profile, bid, model, Mode::Install, syn);
  CHECK_FALSE(r3.matched);
  CHECK_FALSE(used3.has_value());
}

TEST_CASE("hybrid matches exactly when some constituent matches") {
  SynonymLexicon syn;
  HybridModel model{"Chain", {MethodId::tfidf(), MethodId::yake(), MethodId::lda(),
                              MethodId::textrank()}};
  oracles::GraphGen rng(67);
  std::vector<std::string> vocab{"a", "b", "c", "d", "e", "f"};
  for (int trial = 0; trial < 100; ++trial) {
    InterestProfile profile;
    std::map<MethodId, KeywordList> bid;
    for (const auto& m : model.chain) {
      std::vector<std::string> app_words, bid_words;
      for (const auto& w : vocab) {
        if (rng.bounded(2)) app_words.push_back(w);
        if (rng.bounded(2)) bid_words.push_back(w);
      }
      profile.install_keywords[m] = {kw_list(app_words, "app")};
      bid[m] = kw_list(bid_words);
    }
    bool any = false;
    for (const auto& m : model.chain) {
      if (match_bid(profile, bid, m, Mode::Install, syn).matched) any = true;
    }
    CHECK(hybrid_match(profile, bid, model, Mode::Install, syn).first.matched == any);
  }
}

TEST_CASE("default hybrid chains replicate the published model names") {
  auto install = default_hybrid_models(Mode::Install);
  REQUIRE(install.size() == 4);
  CHECK(install[2].name == "LDA_TopicRank_TextRank_BwCent-2");
  for (const auto& model : install) {
    CHECK(model.chain[0] == MethodId::lda());
    std::set<std::string> unique;
    for (const auto& m : model.chain) unique.insert(m.name());
    CHECK(unique.size() == 4);  // no duplicate constituents
  }
  auto uninstall = default_hybrid_models(Mode::Uninstall);
  REQUIRE(uninstall.size() == 3);
  CHECK(uninstall[2].name == "Degree-3_PageRank-2_ClCent-2_TopicRank");
}

TEST_CASE("build_profile populates both sides and skips unknown apps") {
  auto appA = doc_of("stock market news daily");
  auto appB = doc_of("racing game arcade fun");
  std::unordered_map<std::string, const PreprocessedDoc*> apps{{"appA", &appA},
                                                               {"appB", &appB}};
  Extractor ex(build_corpus_stats({appA, appB}), lexicons());
  std::vector<MethodId> methods{MethodId::tfidf()};

  SUBCASE("no events give an empty profile") {
    auto profile = build_profile("u1", {}, apps, methods, 0, 100, ex);
    CHECK(profile.install_keywords.empty());
    CHECK(profile.uninstall_keywords.empty());
  }

  SUBCASE("one install, one method") {
    std::vector<AppEvent> events{{"u1", "appA", EventKind::Install, 50}};
    auto profile = build_profile("u1", events, apps, methods, 0, 100, ex);
    REQUIRE(profile.install_keywords.count(MethodId::tfidf()) == 1);
    CHECK(profile.install_keywords.at(MethodId::tfidf()).size() == 1);
    CHECK(profile.install_keywords.at(MethodId::tfidf())[0].source_doc == "appA");
    CHECK(profile.uninstall_keywords.empty());
  }

  SUBCASE("reinstall churn lands on both sides") {
    std::vector<AppEvent> events{{"u1", "appA", EventKind::Uninstall, 40},
                                 {"u1", "appA", EventKind::Install, 60}};
    auto profile = build_profile("u1", events, apps, methods, 0, 100, ex);
    CHECK(profile.install_keywords.at(MethodId::tfidf()).size() == 1);
    CHECK(profile.uninstall_keywords.at(MethodId::tfidf()).size() == 1);
  }

  SUBCASE("unknown apps are skipped with a warning") {
    std::vector<AppEvent> events{{"u1", "ghost", EventKind::Install, 50},
                                 {"u1", "appB", EventKind::Install, 51}};
    auto profile = build_profile("u1", events, apps, methods, 0, 100, ex);
    CHECK(profile.install_keywords.at(MethodId::tfidf()).size() == 1);
  }

  SUBCASE("events outside the period are ignored") {
    std::vector<AppEvent> events{{"u1", "appA", EventKind::Install, 500}};
    auto profile = build_profile("u1", events, apps, methods, 0, 100, ex);
    CHECK(profile.install_keywords.empty());
  }
}
