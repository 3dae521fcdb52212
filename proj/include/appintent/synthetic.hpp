#pragma once

#include <cstdint>
#include <string>

#include "appintent/corpus.hpp"

namespace appintent {

// Synthetic-corpus generator for tests and demos. Users who installed apps of
// a category click same-category ads at base_ctr * (1 + planted_uplift/100)
// and uninstall-category ads at base_ctr / (1 + planted_uplift/100).
// Deterministic per seed.
struct SyntheticSpec {
  std::size_t n_users = 1000;
  std::size_t n_apps = 200;
  std::size_t n_bids = 50;
  double planted_uplift_pct = 50.0;
  std::uint64_t seed = 42;

  std::size_t impressions_per_user = 80;
  double base_ctr = 0.1;
  Timestamp t0 = 1530403200;  // 2018-07-01 00:00:00 UTC
};

struct SyntheticCorpus {
  Corpus corpus;
  Timestamp t0 = 0;
};

SyntheticCorpus generate_synthetic(const SyntheticSpec& spec);

// Writes apps.jsonl, snapshots.jsonl, bids.jsonl and impressions.jsonl under
// out_dir. Byte-identical across runs for a fixed spec.
void write_synthetic(const SyntheticSpec& spec, const std::string& out_dir);

}  // namespace appintent
