#include "appintent/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <openssl/evp.h>

#include "json.hpp"

namespace appintent {
namespace {

using nlohmann::json;

json parse_line(const std::string& path, std::size_t lineno, const std::string& line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ParseError(path + ":" + std::to_string(lineno) + ": parse error: not a JSON object");
  }
  return j;
}

template <typename T>
T field(const json& j, const std::string& path, std::size_t lineno, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(path + ":" + std::to_string(lineno) + ": parse error: missing field '" +
                     key + "'");
  }
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw ParseError(path + ":" + std::to_string(lineno) + ": parse error: field '" + key +
                     "': " + e.what());
  }
}

// Streams a JSONL file line by line through `fn(lineno, object)`.
template <typename Fn>
void for_each_line(const std::string& path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    fn(lineno, parse_line(path, lineno, line));
  }
  if (in.bad()) throw IoError("I/O error while reading " + path);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

}  // namespace

std::vector<AppRecord> load_apps(const std::string& path) {
  std::vector<AppRecord> apps;
  std::unordered_map<std::string, std::size_t> seen;  // app_id -> index
  for_each_line(path, [&](std::size_t lineno, const json& j) {
    AppRecord rec;
    rec.app_id = field<std::string>(j, path, lineno, "app_id");
    rec.title = field<std::string>(j, path, lineno, "title");
    rec.description = field<std::string>(j, path, lineno, "description");
    if (rec.app_id.empty()) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": parse error: empty app_id");
    }
    auto it = seen.find(rec.app_id);
    if (it != seen.end()) {
      std::cerr << "warning: " << path << ":" << lineno << ": duplicate app_id '"
                << rec.app_id << "', keeping the later record\n";
      apps[it->second] = std::move(rec);
    } else {
      seen.emplace(rec.app_id, apps.size());
      apps.push_back(std::move(rec));
    }
  });
  return apps;
}

std::vector<Snapshot> load_snapshots(const std::string& path) {
  std::vector<Snapshot> snaps;
  for_each_line(path, [&](std::size_t lineno, const json& j) {
    Snapshot s;
    s.user_id = field<std::string>(j, path, lineno, "user_id");
    s.taken_at = field<Timestamp>(j, path, lineno, "taken_at");
    s.installed = field<std::vector<std::string>>(j, path, lineno, "installed");
    std::sort(s.installed.begin(), s.installed.end());
    s.installed.erase(std::unique(s.installed.begin(), s.installed.end()), s.installed.end());
    snaps.push_back(std::move(s));
  });
  return snaps;
}

std::vector<BidRecord> load_bids(const std::string& path) {
  std::vector<BidRecord> bids;
  for_each_line(path, [&](std::size_t lineno, const json& j) {
    BidRecord b;
    b.bid_id = field<std::string>(j, path, lineno, "bid_id");
    b.advertiser_id = field<std::string>(j, path, lineno, "advertiser_id");
    b.product_description = field<std::string>(j, path, lineno, "product_description");
    b.cpa_price = field<double>(j, path, lineno, "cpa_price");
    b.at = field<Timestamp>(j, path, lineno, "at");
    if (b.cpa_price < 0) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": parse error: negative cpa_price");
    }
    bids.push_back(std::move(b));
  });
  return bids;
}

std::vector<ImpressionRecord> load_impressions(const std::string& path) {
  std::vector<ImpressionRecord> imps;
  for_each_line(path, [&](std::size_t lineno, const json& j) {
    ImpressionRecord r;
    r.user_id = field<std::string>(j, path, lineno, "user_id");
    r.bid_id = field<std::string>(j, path, lineno, "bid_id");
    r.shown_at = field<Timestamp>(j, path, lineno, "shown_at");
    r.clicked = field<bool>(j, path, lineno, "clicked");
    imps.push_back(std::move(r));
  });
  return imps;
}

void save_apps(const std::string& path, const std::vector<AppRecord>& apps) {
  auto out = open_out(path);
  for (const auto& a : apps) {
    json j{{"app_id", a.app_id}, {"title", a.title}, {"description", a.description}};
    out << j.dump() << '\n';
  }
}

void save_snapshots(const std::string& path, const std::vector<Snapshot>& snaps) {
  auto out = open_out(path);
  for (const auto& s : snaps) {
    json j{{"user_id", s.user_id}, {"taken_at", s.taken_at}, {"installed", s.installed}};
    out << j.dump() << '\n';
  }
}

void save_bids(const std::string& path, const std::vector<BidRecord>& bids) {
  auto out = open_out(path);
  for (const auto& b : bids) {
    json j{{"bid_id", b.bid_id},
           {"advertiser_id", b.advertiser_id},
           {"product_description", b.product_description},
           {"cpa_price", b.cpa_price},
           {"at", b.at}};
    out << j.dump() << '\n';
  }
}

void save_impressions(const std::string& path, const std::vector<ImpressionRecord>& imps) {
  auto out = open_out(path);
  for (const auto& r : imps) {
    json j{{"user_id", r.user_id},
           {"bid_id", r.bid_id},
           {"shown_at", r.shown_at},
           {"clicked", r.clicked}};
    out << j.dump() << '\n';
  }
}

std::vector<AppEvent> diff_snapshots(const std::vector<Snapshot>& snapshots,
                                     Timestamp t_start, Timestamp t_end) {
  // Group per user preserving input order, then diff consecutive pairs.
  std::map<std::string, std::vector<const Snapshot*>> by_user;
  for (const auto& s : snapshots) by_user[s.user_id].push_back(&s);

  std::vector<AppEvent> events;
  for (const auto& [user, snaps] : by_user) {
    for (std::size_t i = 1; i < snaps.size(); ++i) {
      const Snapshot& earlier = *snaps[i - 1];
      const Snapshot& later = *snaps[i];
      if (later.taken_at < earlier.taken_at) {
        throw ValidationError("snapshots out of time order for user " + user);
      }
      if (later.taken_at < t_start || later.taken_at > t_end) continue;
      std::vector<std::string> installed, removed;
      std::set_difference(later.installed.begin(), later.installed.end(),
                          earlier.installed.begin(), earlier.installed.end(),
                          std::back_inserter(installed));
      std::set_difference(earlier.installed.begin(), earlier.installed.end(),
                          later.installed.begin(), later.installed.end(),
                          std::back_inserter(removed));
      for (auto& app : installed) {
        events.push_back({user, std::move(app), EventKind::Install, later.taken_at});
      }
      for (auto& app : removed) {
        events.push_back({user, std::move(app), EventKind::Uninstall, later.taken_at});
      }
    }
  }
  return events;
}

std::string anonymize(const std::string& raw_id, const std::string& salt) {
  if (salt.empty()) throw ConfigError("anonymization salt must be non-empty");
  std::string payload = salt;
  payload.push_back('\x1f');
  payload += raw_id;

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(payload.data(), payload.size(), digest, &len, EVP_sha256(), nullptr)) {
    throw ConfigError("digest computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string token;
  token.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    token.push_back(hex[digest[i] >> 4]);
    token.push_back(hex[digest[i] & 0xf]);
  }
  return token;
}

}  // namespace appintent
