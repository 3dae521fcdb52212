#include "appintent/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "appintent/errors.hpp"

#include "json.hpp"

namespace appintent {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v, int decimals = 2) {
  return v ? fmt(*v, decimals) : "n/a";
}

ordered_json opt_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

// Left-aligned first column, right-aligned numeric columns.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << row[c] << std::string(width[c] - row[c].size(), ' ');
      } else {
        out << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
    }
    out << '\n';
  };
  emit(header);
  std::size_t total = 0;
  for (std::size_t c = 0; c < header.size(); ++c) total += width[c] + (c ? 2 : 0);
  out << std::string(total, '-') << '\n';
  for (const auto& row : rows) emit(row);
  return out.str();
}

}  // namespace

std::string eval_report_json(const std::vector<EvalReport>& reports) {
  ordered_json root;
  root["reports"] = ordered_json::array();
  for (const auto& rep : reports) {
    ordered_json jr;
    jr["mode"] = mode_name(rep.mode);
    jr["windows"] = {{"event_start", rep.windows.event_start},
                     {"event_end", rep.windows.event_end},
                     {"click_start", rep.windows.click_start},
                     {"click_end", rep.windows.click_end}};
    jr["micro_average"] = rep.micro_average;
    jr["rows"] = ordered_json::array();
    for (const auto& row : rep.rows) {
      ordered_json jrow;
      jrow["method"] = row.method;
      jrow["ctr1_pct"] = opt_json(row.ctr1_pct);
      jrow["ctr2_pct"] = opt_json(row.ctr2_pct);
      jrow["increase_pct"] = opt_json(row.increase_pct);
      jrow["applicable_pct"] = opt_json(row.applicable_pct);
      jrow["n_users"] = row.n_users;
      jr["rows"].push_back(std::move(jrow));
    }
    root["reports"].push_back(std::move(jr));
  }
  return root.dump(2) + "\n";
}

void write_eval_report(const std::string& path, const std::vector<EvalReport>& reports) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << eval_report_json(reports);
}

std::vector<EvalReport> read_eval_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  ordered_json root = ordered_json::parse(in, nullptr, false);
  if (root.is_discarded() || !root.is_object() || !root.contains("reports")) {
    throw ValidationError(path + ": not a report file");
  }
  std::vector<EvalReport> reports;
  for (const auto& jr : root["reports"]) {
    EvalReport rep;
    std::string mode = jr.at("mode").get<std::string>();
    if (mode != "install" && mode != "uninstall") {
      throw ValidationError(path + ": unknown mode '" + mode + "'");
    }
    rep.mode = mode == "install" ? Mode::Install : Mode::Uninstall;
    const auto& w = jr.at("windows");
    rep.windows.event_start = w.at("event_start").get<Timestamp>();
    rep.windows.event_end = w.at("event_end").get<Timestamp>();
    rep.windows.click_start = w.at("click_start").get<Timestamp>();
    rep.windows.click_end = w.at("click_end").get<Timestamp>();
    rep.micro_average = jr.at("micro_average").get<bool>();
    for (const auto& jrow : jr.at("rows")) {
      EvalRow row;
      row.method = jrow.at("method").get<std::string>();
      auto opt = [&](const char* key) -> std::optional<double> {
        if (jrow.at(key).is_null()) return std::nullopt;
        return jrow.at(key).get<double>();
      };
      row.ctr1_pct = opt("ctr1_pct");
      row.ctr2_pct = opt("ctr2_pct");
      row.increase_pct = opt("increase_pct");
      row.applicable_pct = opt("applicable_pct");
      row.n_users = jrow.at("n_users").get<std::size_t>();
      rep.rows.push_back(std::move(row));
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

std::string render_eval_table(const EvalReport& report) {
  std::ostringstream out;
  out << "CTR enhancement for interests identified based on "
      << (report.mode == Mode::Install ? "installed" : "uninstalled") << " apps"
      << (report.micro_average ? " (micro average)" : "") << "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : report.rows) {
    rows.push_back({row.method, fmt_opt(row.ctr1_pct), fmt_opt(row.ctr2_pct),
                    fmt_opt(row.increase_pct), fmt_opt(row.applicable_pct),
                    std::to_string(row.n_users)});
  }
  out << render_table({"Method", "CTR1 (%)", "CTR2 (%)", "Increase in CTR (%)",
                       "Applicable Bids (%)", "Users"},
                      rows);
  return out.str();
}

std::string revenue_report_json(const RevenueReport& table5,
                                const std::vector<Advertiser>& advertisers,
                                std::int64_t inventory,
                                const std::vector<LongTermRow>& rows) {
  ordered_json root;
  root["scenario"]["inventory"] = inventory;
  root["scenario"]["advertisers"] = ordered_json::array();
  for (const auto& a : advertisers) {
    root["scenario"]["advertisers"].push_back({{"id", a.id},
                                               {"cpa_budget", micro_to_dollars(a.cpa_budget)},
                                               {"click_goal", a.click_goal},
                                               {"base_ctr", a.base_ctr},
                                               {"uplift_pct", a.uplift_pct}});
  }
  auto ledger_json = [](const std::vector<LedgerEntry>& ledger) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : ledger) {
      arr.push_back({{"advertiser", e.advertiser_id},
                     {"impressions", e.impressions},
                     {"revenue_dollars", micro_to_dollars(e.revenue)},
                     {"revenue_whole_dollars", micro_to_whole_dollars(e.revenue)},
                     {"reached_goal", e.reached_goal}});
    }
    return arr;
  };
  root["simulation"]["baseline_revenue_dollars"] = micro_to_dollars(table5.baseline_revenue);
  root["simulation"]["long_term_revenue_dollars"] = micro_to_dollars(table5.long_term_revenue);
  root["simulation"]["initial_impact_pct"] = opt_json(table5.initial_impact_pct);
  root["simulation"]["long_term_impact_pct"] = opt_json(table5.long_term_impact_pct);
  root["simulation"]["nonterminating_advertiser"] = table5.nonterminating_advertiser;
  root["simulation"]["baseline_ledger"] = ledger_json(table5.baseline_ledger);
  root["simulation"]["targeted_ledger"] = ledger_json(table5.impressions_ledger);
  root["long_term_table"] = ordered_json::array();
  for (const auto& r : rows) {
    root["long_term_table"].push_back({{"method", r.method},
                                       {"increase_pct", r.increase_pct},
                                       {"applicable_pct", r.applicable_pct},
                                       {"initial_impact_pct", opt_json(r.initial_impact_pct)},
                                       {"long_term_impact_pct", opt_json(r.long_term_impact_pct)}});
  }
  return root.dump(2) + "\n";
}

std::string render_revenue_tables(const RevenueReport& table5,
                                  const std::vector<Advertiser>& advertisers,
                                  std::int64_t inventory,
                                  const std::vector<LongTermRow>& rows) {
  std::ostringstream out;
  out << "Long-term impact on publisher revenue (inventory " << inventory << ")\n\n";

  out << "Part A: without targeting\n";
  std::vector<std::vector<std::string>> part_a;
  for (const auto& a : advertisers) {
    part_a.push_back({a.id, "$" + fmt(micro_to_dollars(a.cpa_budget)), fmt(a.base_ctr, 5),
                      "$" + fmt(micro_to_dollars(to_cpm_micro(a.cpa_budget, a.base_ctr)), 4)});
  }
  out << render_table({"Advertiser", "Budget per click", "Predicted CTR",
                       "Revenue per impression"},
                      part_a);

  out << "\nPart B: with targeting applied\n";
  std::vector<std::vector<std::string>> part_b;
  for (std::size_t i = 0; i < advertisers.size(); ++i) {
    const auto& a = advertisers[i];
    bool targeted = false;
    for (const auto& e : table5.impressions_ledger) {
      if (e.advertiser_id == a.id && e.impressions > 0) {
        // The ledger carries the CTR actually used via its revenue.
        targeted = a.uplift_pct != 0.0 &&
                   e.revenue != e.impressions * to_cpm_micro(a.cpa_budget, a.base_ctr);
      }
    }
    double ctr = targeted ? a.base_ctr * (1.0 + a.uplift_pct / 100.0) : a.base_ctr;
    part_b.push_back({a.id, "$" + fmt(micro_to_dollars(a.cpa_budget)), fmt(ctr, 5),
                      "$" + fmt(micro_to_dollars(to_cpm_micro(a.cpa_budget, ctr)), 4)});
  }
  out << render_table({"Advertiser", "Budget per click", "Predicted CTR",
                       "Revenue per impression"},
                      part_b);

  out << "\nServed impressions\n";
  std::vector<std::vector<std::string>> served;
  for (const auto& e : table5.impressions_ledger) {
    served.push_back({e.advertiser_id, std::to_string(e.impressions),
                      "$" + fmt(micro_to_dollars(e.revenue)),
                      e.reached_goal ? "yes" : "no"});
  }
  out << render_table({"Advertiser", "Impressions", "Revenue", "Goal met"}, served);

  out << "\nBaseline revenue:  $" << fmt(micro_to_dollars(table5.baseline_revenue)) << "\n";
  out << "Long-term revenue: $" << fmt(micro_to_dollars(table5.long_term_revenue)) << "\n";
  out << "Initial impact:    " << fmt_opt(table5.initial_impact_pct) << "%\n";
  out << "Long-term impact:  " << fmt_opt(table5.long_term_impact_pct) << "%\n";
  if (table5.nonterminating_advertiser) {
    out << "warning: an advertiser with zero CTR and a positive click goal never exits\n";
  }

  if (!rows.empty()) {
    out << "\nEstimated long-term impact per method\n";
    std::vector<std::vector<std::string>> method_rows;
    for (const auto& r : rows) {
      method_rows.push_back({r.method, fmt_opt(r.initial_impact_pct, 4),
                             fmt(r.increase_pct), fmt(r.applicable_pct),
                             fmt_opt(r.long_term_impact_pct, 4)});
    }
    out << render_table({"Method", "Initial Impact (%)", "Increase in CTR (%)",
                         "Applicable Bids (%)", "Estimated Long-term Impact (%)"},
                        method_rows);
  }
  return out.str();
}

}  // namespace appintent
