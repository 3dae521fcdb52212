#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "appintent/corpus.hpp"
#include "appintent/errors.hpp"
#include "appintent/evaluate.hpp"
#include "appintent/extract.hpp"
#include "appintent/interest.hpp"
#include "appintent/preprocess.hpp"
#include "appintent/report.hpp"
#include "appintent/revenue.hpp"
#include "appintent/synthetic.hpp"

namespace appintent {
namespace {

using ordered_json = nlohmann::ordered_json;

// Flags override config-file values; the config file rejects unknown keys.
struct Config {
  std::string apps, snapshots, bids, impressions;
  std::string data_dir;  // lexicon directory; builtin tables when empty
  std::string synonyms;
  std::string salt;
  std::uint64_t seed = 42;
  std::size_t df_sample_size = 1000;
  double df_threshold = 0.05;
  int event_window_days = 14;
  int click_offset_days = 6;
  int click_window_days = 14;
  Timestamp t0 = 1530403200;  // 2018-07-01
  bool micro_average = false;
  bool unweighted_edges = false;
};

const std::set<std::string> kConfigKeys = {
    "apps",           "snapshots",        "bids",
    "impressions",    "data_dir",         "synonyms",
    "salt",           "seed",             "df_sample_size",
    "df_threshold",   "event_window_days", "click_offset_days",
    "click_window_days", "t0",            "micro_average",
    "unweighted_edges"};

void require_file(const std::string& path, const std::string& key) {
  if (!std::filesystem::exists(path)) {
    throw ConfigError("config: " + key + " references missing file " + path);
  }
}

Config load_config(const std::string& path) {
  Config cfg;
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path);
  ordered_json j = ordered_json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ConfigError(path + ": invalid JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kConfigKeys.count(key)) throw ConfigError(path + ": unknown key '" + key + "'");
    if (key == "apps") cfg.apps = value.get<std::string>();
    else if (key == "snapshots") cfg.snapshots = value.get<std::string>();
    else if (key == "bids") cfg.bids = value.get<std::string>();
    else if (key == "impressions") cfg.impressions = value.get<std::string>();
    else if (key == "data_dir") cfg.data_dir = value.get<std::string>();
    else if (key == "synonyms") cfg.synonyms = value.get<std::string>();
    else if (key == "salt") cfg.salt = value.get<std::string>();
    else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
    else if (key == "df_sample_size") cfg.df_sample_size = value.get<std::size_t>();
    else if (key == "df_threshold") cfg.df_threshold = value.get<double>();
    else if (key == "event_window_days") cfg.event_window_days = value.get<int>();
    else if (key == "click_offset_days") cfg.click_offset_days = value.get<int>();
    else if (key == "click_window_days") cfg.click_window_days = value.get<int>();
    else if (key == "t0") cfg.t0 = value.get<Timestamp>();
    else if (key == "micro_average") cfg.micro_average = value.get<bool>();
    else if (key == "unweighted_edges") cfg.unweighted_edges = value.get<bool>();
  }
  for (const auto& [path_value, key] :
       {std::pair{cfg.apps, "apps"}, {cfg.snapshots, "snapshots"}, {cfg.bids, "bids"},
        {cfg.impressions, "impressions"}, {cfg.synonyms, "synonyms"}}) {
    if (!path_value.empty()) require_file(path_value, key);
  }
  if (!cfg.data_dir.empty()) require_file(cfg.data_dir, "data_dir");
  return cfg;
}

// Days-from-civil; accepts "YYYY-MM-DD" (UTC midnight) or raw epoch seconds.
Timestamp parse_date(const std::string& s) {
  if (s.find('-') == std::string::npos || s.size() < 8) {
    try {
      return std::stoll(s);
    } catch (...) {
      throw ValidationError("invalid date/timestamp: " + s);
    }
  }
  int y, m, d;
  if (std::sscanf(s.c_str(), "%d-%d-%d", &y, &m, &d) != 3 || m < 1 || m > 12 || d < 1 ||
      d > 31) {
    throw ValidationError("invalid date: " + s + " (expected YYYY-MM-DD)");
  }
  std::int64_t yy = y - (m <= 2 ? 1 : 0);
  std::int64_t era = (yy >= 0 ? yy : yy - 399) / 400;
  std::int64_t yoe = yy - era * 400;
  std::int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return (era * 146097 + doe - 719468) * kDay;
}

Lexicons load_lexicons(const Config& cfg) {
  return cfg.data_dir.empty() ? Lexicons::builtin() : Lexicons::load_from_dir(cfg.data_dir);
}

SynonymLexicon load_synonyms(const Config& cfg) {
  return cfg.synonyms.empty() ? SynonymLexicon{} : SynonymLexicon::load(cfg.synonyms);
}

ordered_json keyword_list_json(const KeywordList& kws) {
  ordered_json j;
  j["method"] = kws.method.name();
  j["source_doc"] = kws.source_doc;
  j["words"] = ordered_json::array();
  for (const auto& w : kws.words) {
    j["words"].push_back({{"lemma", w.lemma}, {"score", w.score}});
  }
  return j;
}

struct PreparedCorpus {
  std::vector<AppRecord> apps;
  std::vector<PreprocessedDoc> app_docs;
  std::vector<BidRecord> bids;
  std::vector<PreprocessedDoc> bid_docs;
  DfTable df;
  Lexicons lex;
  CorpusStats stats;
};

PreparedCorpus prepare(const Config& cfg, bool need_bids) {
  if (cfg.apps.empty()) throw ConfigError("no apps file given (--apps or config)");
  PreparedCorpus pc;
  pc.lex = load_lexicons(cfg);
  pc.apps = load_apps(cfg.apps);
  pc.df = build_df_table(pc.apps, pc.lex, cfg.df_sample_size, cfg.df_threshold, cfg.seed);
  pc.app_docs.reserve(pc.apps.size());
  for (const auto& a : pc.apps) pc.app_docs.push_back(preprocess(a, pc.df, pc.lex));
  pc.stats = build_corpus_stats(pc.app_docs);
  if (need_bids) {
    if (cfg.bids.empty()) throw ConfigError("no bids file given (--bids or config)");
    pc.bids = load_bids(cfg.bids);
    pc.bid_docs.reserve(pc.bids.size());
    for (const auto& b : pc.bids) {
      pc.bid_docs.push_back(preprocess_text(b.product_description, pc.df, pc.lex));
    }
  }
  return pc;
}

ExtractParams params_from(const Config& cfg) {
  ExtractParams params;
  params.lda_seed = cfg.seed;
  params.unweighted_edges = cfg.unweighted_edges;
  return params;
}

int cmd_generate_synthetic(const SyntheticSpec& spec, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
  write_synthetic(spec, out_dir);
  std::cerr << "wrote apps.jsonl, snapshots.jsonl, bids.jsonl, impressions.jsonl to "
            << out_dir << "\n";
  return 0;
}

int cmd_ingest(const Config& cfg, const std::string& out_dir) {
  std::string salt = cfg.salt;
  if (salt.empty()) {
    const char* env = std::getenv("APPINTENT_SALT");
    if (env) salt = env;
  }
  if (salt.empty()) {
    throw ConfigError("no salt given (use --salt or the APPINTENT_SALT env var)");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());

  if (!cfg.apps.empty()) {
    auto apps = load_apps(cfg.apps);
    save_apps(out_dir + "/apps.jsonl", apps);
    std::cerr << "apps: " << apps.size() << " records\n";
  }
  if (!cfg.snapshots.empty()) {
    auto snaps = load_snapshots(cfg.snapshots);
    for (auto& s : snaps) s.user_id = anonymize(s.user_id, salt);
    save_snapshots(out_dir + "/snapshots.jsonl", snaps);
    std::cerr << "snapshots: " << snaps.size() << " records (user ids anonymized)\n";
  }
  if (!cfg.bids.empty()) {
    auto bids = load_bids(cfg.bids);
    save_bids(out_dir + "/bids.jsonl", bids);
    std::cerr << "bids: " << bids.size() << " records\n";
  }
  if (!cfg.impressions.empty()) {
    auto imps = load_impressions(cfg.impressions);
    for (auto& r : imps) r.user_id = anonymize(r.user_id, salt);
    save_impressions(out_dir + "/impressions.jsonl", imps);
    std::cerr << "impressions: " << imps.size() << " records (user ids anonymized)\n";
  }
  return 0;
}

int cmd_extract(const Config& cfg, const std::string& app_id, const std::string& method_name,
                bool all_methods) {
  PreparedCorpus pc = prepare(cfg, false);
  const PreprocessedDoc* doc = nullptr;
  for (std::size_t i = 0; i < pc.apps.size(); ++i) {
    if (pc.apps[i].app_id == app_id) doc = &pc.app_docs[i];
  }
  if (!doc) throw ValidationError("unknown app_id: " + app_id);

  Extractor extractor(pc.stats, pc.lex, params_from(cfg));
  ordered_json out;
  if (all_methods) {
    out = ordered_json::array();
    for (const MethodId& m : MethodId::all()) {
      out.push_back(keyword_list_json(extractor.run(m, *doc, app_id)));
    }
  } else {
    auto method = MethodId::parse(method_name);
    if (!method) throw ConfigError("unknown method: " + method_name);
    out = keyword_list_json(extractor.run(*method, *doc, app_id));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_profile(const Config& cfg, const std::string& user, Timestamp from, Timestamp to) {
  if (cfg.snapshots.empty()) throw ConfigError("no snapshots file given");
  PreparedCorpus pc = prepare(cfg, false);
  auto snapshots = load_snapshots(cfg.snapshots);
  auto events = diff_snapshots(snapshots, from, to);

  std::unordered_map<std::string, const PreprocessedDoc*> app_index;
  for (std::size_t i = 0; i < pc.apps.size(); ++i) {
    app_index[pc.apps[i].app_id] = &pc.app_docs[i];
  }
  std::vector<AppEvent> user_events;
  for (const auto& ev : events) {
    if (ev.user_id == user) user_events.push_back(ev);
  }
  Extractor extractor(pc.stats, pc.lex, params_from(cfg));
  InterestProfile profile = build_profile(user, user_events, app_index, MethodId::all(),
                                          from, to, extractor);

  ordered_json out;
  out["user_id"] = profile.user_id;
  out["period"] = {{"from", profile.t_start}, {"to", profile.t_end}};
  auto side_json = [&](const std::map<MethodId, std::vector<KeywordList>>& side) {
    ordered_json j = ordered_json::object();
    for (const auto& [method, lists] : side) {
      ordered_json arr = ordered_json::array();
      for (const auto& kws : lists) arr.push_back(keyword_list_json(kws));
      j[method.name()] = std::move(arr);
    }
    return j;
  };
  out["install_keywords"] = side_json(profile.install_keywords);
  out["uninstall_keywords"] = side_json(profile.uninstall_keywords);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_evaluate(const Config& cfg, const std::string& mode_arg, const std::string& out_path) {
  if (cfg.snapshots.empty() || cfg.impressions.empty()) {
    throw ConfigError("evaluate needs apps, snapshots, bids and impressions files");
  }
  PreparedCorpus pc = prepare(cfg, true);
  auto snapshots = load_snapshots(cfg.snapshots);
  auto impressions = load_impressions(cfg.impressions);
  SynonymLexicon syn = load_synonyms(cfg);

  EvalInputs in;
  for (std::size_t i = 0; i < pc.apps.size(); ++i) {
    in.apps[pc.apps[i].app_id] = &pc.app_docs[i];
  }
  for (std::size_t i = 0; i < pc.bids.size(); ++i) {
    in.bids[pc.bids[i].bid_id] = &pc.bid_docs[i];
    in.bid_order.push_back(pc.bids[i].bid_id);
  }
  in.snapshots = &snapshots;
  in.impressions = &impressions;

  EvalWindowConfig windows = EvalWindowConfig::from_t0(
      cfg.t0, cfg.event_window_days, cfg.click_offset_days, cfg.click_window_days);
  Extractor extractor(pc.stats, pc.lex, params_from(cfg));

  std::vector<EvalReport> reports;
  auto run_mode = [&](Mode mode) {
    reports.push_back(evaluate_mode(in, windows, mode, MethodId::all(),
                                    default_hybrid_models(mode), syn, extractor,
                                    cfg.micro_average));
  };
  if (mode_arg == "install" || mode_arg == "both") run_mode(Mode::Install);
  if (mode_arg == "uninstall" || mode_arg == "both") run_mode(Mode::Uninstall);
  if (reports.empty()) throw ConfigError("mode must be install, uninstall or both");

  for (const auto& rep : reports) std::cout << render_eval_table(rep) << "\n";
  write_eval_report(out_path, reports);
  std::cerr << "wrote " << out_path << "\n";
  return 0;
}

int cmd_simulate_revenue(const std::string& scenario_path, const std::string& out_path) {
  std::ifstream in(scenario_path);
  if (!in) throw IoError("cannot open scenario " + scenario_path);
  ordered_json j = ordered_json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ValidationError(scenario_path + ": invalid JSON object");
  }

  std::vector<Advertiser> advertisers;
  for (const auto& ja : j.at("advertisers")) {
    Advertiser a;
    a.id = ja.at("id").get<std::string>();
    a.cpa_budget = dollars_to_micro(ja.at("cpa_budget").get<double>());
    a.click_goal = ja.at("click_goal").get<std::int64_t>();
    a.base_ctr = ja.at("base_ctr").get<double>();
    if (ja.contains("uplift_pct")) a.uplift_pct = ja.at("uplift_pct").get<double>();
    advertisers.push_back(std::move(a));
  }
  if (advertisers.empty()) throw ValidationError(scenario_path + ": no advertisers");
  std::int64_t inventory = j.at("inventory").get<std::int64_t>();

  std::optional<std::size_t> targeted;
  if (j.contains("targeted")) {
    std::string id = j.at("targeted").get<std::string>();
    for (std::size_t i = 0; i < advertisers.size(); ++i) {
      if (advertisers[i].id == id) targeted = i;
    }
    if (!targeted) throw ValidationError(scenario_path + ": unknown targeted advertiser " + id);
  }
  double share = j.contains("targeted_share_pct")
                     ? j.at("targeted_share_pct").get<double>() / 100.0
                     : 1.0;

  RevenueReport rep = simulate_long_term(advertisers, inventory, targeted, share);

  std::vector<LongTermRow> rows;
  if (j.contains("methods") && targeted) {
    std::vector<std::pair<std::string, std::pair<double, double>>> method_rows;
    for (const auto& jm : j.at("methods")) {
      method_rows.push_back({jm.at("name").get<std::string>(),
                             {jm.at("increase_pct").get<double>(),
                              jm.at("applicable_pct").get<double>()}});
    }
    rows = estimate_long_term_table(method_rows, advertisers, inventory, *targeted);
  }

  std::cout << render_revenue_tables(rep, advertisers, inventory, rows);
  std::ofstream out(out_path, std::ios::trunc | std::ios::binary);
  if (!out) throw IoError("cannot open " + out_path + " for writing");
  out << revenue_report_json(rep, advertisers, inventory, rows);
  std::cerr << "wrote " << out_path << "\n";
  return 0;
}

int cmd_report(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw IoError("cannot open " + path);
  ordered_json j = ordered_json::parse(probe, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ValidationError(path + ": invalid JSON");
  if (j.contains("reports")) {
    for (const auto& rep : read_eval_report(path)) {
      std::cout << render_eval_table(rep) << "\n";
    }
    return 0;
  }
  if (j.contains("simulation")) {
    std::vector<Advertiser> advertisers;
    for (const auto& ja : j.at("scenario").at("advertisers")) {
      Advertiser a;
      a.id = ja.at("id").get<std::string>();
      a.cpa_budget = dollars_to_micro(ja.at("cpa_budget").get<double>());
      a.click_goal = ja.at("click_goal").get<std::int64_t>();
      a.base_ctr = ja.at("base_ctr").get<double>();
      a.uplift_pct = ja.at("uplift_pct").get<double>();
      advertisers.push_back(std::move(a));
    }
    RevenueReport rep;
    const auto& sim = j.at("simulation");
    rep.baseline_revenue = dollars_to_micro(sim.at("baseline_revenue_dollars").get<double>());
    rep.long_term_revenue =
        dollars_to_micro(sim.at("long_term_revenue_dollars").get<double>());
    rep.targeted_revenue = rep.long_term_revenue;
    if (!sim.at("initial_impact_pct").is_null()) {
      rep.initial_impact_pct = sim.at("initial_impact_pct").get<double>();
    }
    if (!sim.at("long_term_impact_pct").is_null()) {
      rep.long_term_impact_pct = sim.at("long_term_impact_pct").get<double>();
    }
    rep.nonterminating_advertiser = sim.at("nonterminating_advertiser").get<bool>();
    auto ledger = [](const ordered_json& arr) {
      std::vector<LedgerEntry> out;
      for (const auto& je : arr) {
        out.push_back({je.at("advertiser").get<std::string>(),
                       je.at("impressions").get<std::int64_t>(),
                       dollars_to_micro(je.at("revenue_dollars").get<double>()),
                       je.at("reached_goal").get<bool>()});
      }
      return out;
    };
    rep.baseline_ledger = ledger(sim.at("baseline_ledger"));
    rep.impressions_ledger = ledger(sim.at("targeted_ledger"));
    std::vector<LongTermRow> rows;
    for (const auto& jr : j.at("long_term_table")) {
      LongTermRow r;
      r.method = jr.at("method").get<std::string>();
      r.increase_pct = jr.at("increase_pct").get<double>();
      r.applicable_pct = jr.at("applicable_pct").get<double>();
      if (!jr.at("initial_impact_pct").is_null()) {
        r.initial_impact_pct = jr.at("initial_impact_pct").get<double>();
      }
      if (!jr.at("long_term_impact_pct").is_null()) {
        r.long_term_impact_pct = jr.at("long_term_impact_pct").get<double>();
      }
      rows.push_back(std::move(r));
    }
    std::int64_t inventory = j.at("scenario").at("inventory").get<std::int64_t>();
    std::cout << render_revenue_tables(rep, advertisers, inventory, rows);
    return 0;
  }
  throw ValidationError(path + ": not a recognized report file");
}

int run(int argc, char** argv) {
  CLI::App app{"appintent: short-term interest identification from app adoption patterns"};
  app.require_subcommand(1);

  Config cfg;
  std::string config_path;

  auto add_data_flags = [&](CLI::App* cmd, bool with_pipeline_params) {
    cmd->add_option("--config", config_path, "JSON config file (flags override it)");
    cmd->add_option("--apps", cfg.apps, "apps.jsonl path");
    cmd->add_option("--snapshots", cfg.snapshots, "snapshots.jsonl path");
    cmd->add_option("--bids", cfg.bids, "bids.jsonl path");
    cmd->add_option("--impressions", cfg.impressions, "impressions.jsonl path");
    if (with_pipeline_params) {
      cmd->add_option("--data-dir", cfg.data_dir,
                      "directory with stopwords.txt, pos_lexicon.tsv, lemma_exceptions.tsv");
      cmd->add_option("--synonyms", cfg.synonyms, "synonyms.tsv path");
      cmd->add_option("--seed", cfg.seed, "RNG seed (DF sampling and LDA)");
      cmd->add_option("--df-sample-size", cfg.df_sample_size,
                      "documents sampled for the DF ban list");
      cmd->add_option("--df-threshold", cfg.df_threshold,
                      "DF fraction above which a lemma is banned");
      cmd->add_flag("--unweighted-edges", cfg.unweighted_edges,
                    "keep co-occurrence edge weights at 1");
    }
  };

  // generate-synthetic
  auto* gen = app.add_subcommand("generate-synthetic",
                                 "write a synthetic dataset with a planted CTR uplift");
  SyntheticSpec spec;
  std::string gen_out = "synthetic";
  gen->add_option("--out", gen_out, "output directory")->required();
  gen->add_option("--users", spec.n_users, "number of users");
  gen->add_option("--apps", spec.n_apps, "number of apps");
  gen->add_option("--bids", spec.n_bids, "number of bids");
  gen->add_option("--uplift", spec.planted_uplift_pct, "planted CTR uplift percent");
  gen->add_option("--seed", spec.seed, "RNG seed");
  gen->add_option("--impressions-per-user", spec.impressions_per_user,
                  "impressions generated per user");
  gen->add_option("--base-ctr", spec.base_ctr, "baseline click probability");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "validate, anonymize and rewrite datasets");
  std::string ingest_out = "ingested";
  add_data_flags(ingest, false);
  ingest->add_option("--salt", cfg.salt, "anonymization salt (overrides APPINTENT_SALT)");
  ingest->add_option("--out", ingest_out, "output directory");

  // extract
  auto* extract = app.add_subcommand("extract", "print keywords for one app");
  std::string method_name = "TF-IDF", app_id;
  bool all_methods = false;
  add_data_flags(extract, true);
  extract->add_option("--method", method_name,
                      "method id (TF-IDF, YAKE, LDA, TextRank, TopicRank, Degree-1..3, "
                      "PageRank-1..3, BwCent-1..3, ClCent-1..3)");
  extract->add_option("--app", app_id, "app_id to extract")->required();
  extract->add_flag("--all-methods", all_methods, "emit the 17-method matrix");

  // profile
  auto* profile = app.add_subcommand("profile", "print a user's interest profile");
  std::string user, from_str, to_str;
  add_data_flags(profile, true);
  profile->add_option("--user", user, "user id")->required();
  profile->add_option("--from", from_str, "period start (YYYY-MM-DD or epoch seconds)")
      ->required();
  profile->add_option("--to", to_str, "period end (YYYY-MM-DD or epoch seconds)")->required();

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "offline CTR replay over all methods");
  std::string mode = "both", report_out = "report.json", t0_str;
  add_data_flags(evaluate, true);
  evaluate->add_option("--mode", mode, "install, uninstall or both");
  evaluate->add_option("--t0", t0_str, "event-window start (YYYY-MM-DD or epoch seconds)");
  evaluate->add_option("--event-window-days", cfg.event_window_days, "event window length");
  evaluate->add_option("--click-offset-days", cfg.click_offset_days,
                       "click window start offset");
  evaluate->add_option("--click-window-days", cfg.click_window_days, "click window length");
  evaluate->add_flag("--micro-average", cfg.micro_average,
                     "pool impressions instead of macro-averaging per user");
  evaluate->add_option("--out", report_out, "report.json output path");

  // simulate-revenue
  auto* sim = app.add_subcommand("simulate-revenue",
                                 "CPA->CPM arbitrage and inventory-exhaustion simulation");
  std::string scenario_path, revenue_out = "revenue_report.json";
  sim->add_option("--scenario", scenario_path, "scenario.json")->required();
  sim->add_option("--out", revenue_out, "revenue_report.json output path");

  // report
  auto* report = app.add_subcommand("report", "render a report.json as text tables");
  std::string report_path;
  report->add_option("file", report_path, "report.json or revenue_report.json")->required();

  CLI11_PARSE(app, argc, argv);

  // Config file first, then re-apply flags on top.
  if (!config_path.empty()) {
    Config file_cfg = load_config(config_path);
    Config flag_cfg = cfg;
    cfg = file_cfg;
    auto take = [](const std::string& flag, std::string& target) {
      if (!flag.empty()) target = flag;
    };
    take(flag_cfg.apps, cfg.apps);
    take(flag_cfg.snapshots, cfg.snapshots);
    take(flag_cfg.bids, cfg.bids);
    take(flag_cfg.impressions, cfg.impressions);
    take(flag_cfg.data_dir, cfg.data_dir);
    take(flag_cfg.synonyms, cfg.synonyms);
    take(flag_cfg.salt, cfg.salt);
    Config defaults;
    if (flag_cfg.seed != defaults.seed) cfg.seed = flag_cfg.seed;
    if (flag_cfg.df_sample_size != defaults.df_sample_size) {
      cfg.df_sample_size = flag_cfg.df_sample_size;
    }
    if (flag_cfg.df_threshold != defaults.df_threshold) cfg.df_threshold = flag_cfg.df_threshold;
    if (flag_cfg.event_window_days != defaults.event_window_days) {
      cfg.event_window_days = flag_cfg.event_window_days;
    }
    if (flag_cfg.click_offset_days != defaults.click_offset_days) {
      cfg.click_offset_days = flag_cfg.click_offset_days;
    }
    if (flag_cfg.click_window_days != defaults.click_window_days) {
      cfg.click_window_days = flag_cfg.click_window_days;
    }
    if (flag_cfg.micro_average) cfg.micro_average = true;
    if (flag_cfg.unweighted_edges) cfg.unweighted_edges = true;
  }

  if (gen->parsed()) return cmd_generate_synthetic(spec, gen_out);
  if (ingest->parsed()) return cmd_ingest(cfg, ingest_out);
  if (extract->parsed()) return cmd_extract(cfg, app_id, method_name, all_methods);
  if (profile->parsed()) {
    return cmd_profile(cfg, user, parse_date(from_str), parse_date(to_str));
  }
  if (evaluate->parsed()) {
    if (!t0_str.empty()) cfg.t0 = parse_date(t0_str);
    return cmd_evaluate(cfg, mode, report_out);
  }
  if (sim->parsed()) return cmd_simulate_revenue(scenario_path, revenue_out);
  if (report->parsed()) return cmd_report(report_path);
  return 0;
}

}  // namespace
}  // namespace appintent

int main(int argc, char** argv) {
  try {
    return appintent::run(argc, argv);
  } catch (const appintent::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
