#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "appintent/errors.hpp"

namespace appintent {

// All timestamps are UTC integer seconds.
using Timestamp = std::int64_t;

struct AppRecord {
  std::string app_id;
  std::string title;
  std::string description;  // may be empty; may contain non-English segments
};

// Installed-app set of one user at one point in time. `installed` is kept
// sorted and deduplicated on load.
struct Snapshot {
  std::string user_id;  // anonymized token, never a raw device identifier
  Timestamp taken_at = 0;
  std::vector<std::string> installed;
};

enum class EventKind { Install, Uninstall };

// Derived from consecutive-snapshot diffs only.
struct AppEvent {
  std::string user_id;
  std::string app_id;
  EventKind kind = EventKind::Install;
  Timestamp at = 0;
};

struct BidRecord {
  std::string bid_id;
  std::string advertiser_id;
  std::string product_description;  // treated exactly like an app description
  double cpa_price = 0.0;           // currency units per action, >= 0
  Timestamp at = 0;
};

struct ImpressionRecord {
  std::string user_id;
  std::string bid_id;
  Timestamp shown_at = 0;
  bool clicked = false;
};

struct Corpus {
  std::vector<AppRecord> apps;
  std::vector<Snapshot> snapshots;
  std::vector<BidRecord> bids;
  std::vector<ImpressionRecord> impressions;
};

// JSONL loaders, one object per line. Malformed lines raise ParseError naming
// the line number; unreadable files raise IoError. Duplicate app_id keeps the
// last record and logs a warning to stderr.
std::vector<AppRecord> load_apps(const std::string& path);
std::vector<Snapshot> load_snapshots(const std::string& path);
std::vector<BidRecord> load_bids(const std::string& path);
std::vector<ImpressionRecord> load_impressions(const std::string& path);

void save_apps(const std::string& path, const std::vector<AppRecord>& apps);
void save_snapshots(const std::string& path, const std::vector<Snapshot>& snaps);
void save_bids(const std::string& path, const std::vector<BidRecord>& bids);
void save_impressions(const std::string& path, const std::vector<ImpressionRecord>& imps);

// Emits Install/Uninstall events from consecutive per-user snapshot pairs.
// Event timestamp is the later snapshot's taken_at; events outside
// [t_start, t_end] are dropped. An app removed and re-added within the period
// produces both events. Snapshots out of time order for a user raise
// ValidationError.
std::vector<AppEvent> diff_snapshots(const std::vector<Snapshot>& snapshots,
                                     Timestamp t_start, Timestamp t_end);

// Salted one-way digest of a raw identifier (hex). Empty salt raises
// ConfigError.
std::string anonymize(const std::string& raw_id, const std::string& salt);

}  // namespace appintent
