#pragma once

#include <string>
#include <vector>

#include "appintent/evaluate.hpp"
#include "appintent/revenue.hpp"

namespace appintent {

// Machine-readable report mirroring the Tables 1-4 columns. Key order and
// number formatting are fixed so identical inputs give identical bytes.
std::string eval_report_json(const std::vector<EvalReport>& reports);
void write_eval_report(const std::string& path, const std::vector<EvalReport>& reports);
std::vector<EvalReport> read_eval_report(const std::string& path);

// Column-aligned text tables (UTF-8, stdout-friendly). Undefined cells render
// as "n/a".
std::string render_eval_table(const EvalReport& report);

std::string revenue_report_json(const RevenueReport& table5,
                                const std::vector<Advertiser>& advertisers,
                                std::int64_t inventory,
                                const std::vector<LongTermRow>& rows);
// Part A / Part B layout plus the per-method long-term table when present.
std::string render_revenue_tables(const RevenueReport& table5,
                                  const std::vector<Advertiser>& advertisers,
                                  std::int64_t inventory,
                                  const std::vector<LongTermRow>& rows);

}  // namespace appintent
