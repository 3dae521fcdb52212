#include "appintent/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "appintent/evaluate.hpp"
#include "rng.hpp"

namespace appintent {
namespace {

// Pseudo-words built from a consonant table with vowel separators. The shape
// avoids every lemmatizer suffix rule and the default tagger reads them as
// nouns, so planted category vocabularies survive preprocessing untouched.
const char kConsonants[] = "bdfgjklmnp";

std::string category_word(std::size_t cat, std::size_t idx) {
  std::string w = "z";
  w += kConsonants[(cat / 10) % 10];
  w += 'a';
  w += kConsonants[cat % 10];
  w += 'o';
  w += kConsonants[(idx / 10) % 10];
  w += 'e';
  w += kConsonants[idx % 10];
  w += 'i';
  return w;
}

std::string unique_word(std::size_t doc, std::size_t k) {
  std::string w = "x";
  w += kConsonants[(doc / 100) % 10];
  w += 'a';
  w += kConsonants[(doc / 10) % 10];
  w += 'o';
  w += kConsonants[doc % 10];
  w += 'e';
  w += kConsonants[k % 10];
  w += 'u';
  return w;
}

constexpr std::size_t kSignatureWords = 4;
constexpr std::size_t kExtraWords = 16;
constexpr std::size_t kExtrasPerDoc = 16;

// A category description: a leading sentence of the four signature words, then
// the remaining occurrences shuffled into short sentences with stopwords and
// universal fillers mixed in. Signature occurrence counts descend so every
// ranking method orders them the same way.
std::string make_description(std::size_t cat, std::size_t doc_index, Rng& rng) {
  std::vector<std::string> pool;
  auto push_n = [&](const std::string& w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) pool.push_back(w);
  };
  push_n(category_word(cat, 0), 5);
  push_n(category_word(cat, 1), 4);
  push_n(category_word(cat, 2), 3);
  push_n(category_word(cat, 3), 2);
  // Every category extra appears in every doc of the category: the documents
  // need > 20 distinct surviving words so that the 5%-vertex selection of the
  // TextRank-style extractors still yields multi-word lists.
  for (std::size_t e = 0; e < kExtrasPerDoc; ++e) {
    std::size_t idx = kSignatureWords + (doc_index * 3 + e) % kExtraWords;
    push_n(category_word(cat, idx), 1 + (doc_index + e) % 2);
  }
  push_n(unique_word(doc_index, 1), 1);
  push_n(unique_word(doc_index, 2), 1);
  // Universal fillers land in every document and get banned by the DF table.
  for (const char* f : {"app", "app", "free", "best", "download"}) pool.push_back(f);
  for (const char* s : {"the", "is", "a", "of", "and", "to", "for", "with"}) {
    pool.push_back(s);
  }
  if (doc_index % 7 == 0) pool.push_back("\xE6\x97\xA5\xE6\x9C\xAC\xE8\xAA\x9E");
  if (doc_index % 5 == 0) pool.push_back("--");

  for (std::size_t i = pool.size(); i > 1; --i) {
    std::swap(pool[i - 1], pool[rng.bounded(i)]);
  }

  std::string text;
  text += category_word(cat, 0) + " " + category_word(cat, 1) + " " +
          category_word(cat, 2) + " " + category_word(cat, 3) + ".";
  std::size_t i = 0;
  while (i < pool.size()) {
    std::size_t len = 6 + rng.bounded(4);
    text += ' ';
    for (std::size_t j = 0; j < len && i < pool.size(); ++j, ++i) {
      if (j) text += ' ';
      text += pool[i];
    }
    text += '.';
  }
  return text;
}

}  // namespace

SyntheticCorpus generate_synthetic(const SyntheticSpec& spec) {
  SyntheticCorpus out;
  out.t0 = spec.t0;
  Rng rng(spec.seed);

  const std::size_t n_categories =
      std::max<std::size_t>(1, std::min<std::size_t>(spec.n_apps / 8, 40));

  // Apps, round-robin over categories.
  std::vector<std::size_t> app_category(spec.n_apps);
  for (std::size_t i = 0; i < spec.n_apps; ++i) {
    std::size_t cat = i % n_categories;
    app_category[i] = cat;
    AppRecord rec;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "app%04zu", i);
    rec.app_id = buf;
    rec.title = category_word(cat, 0) + " app";
    rec.description = make_description(cat, i, rng);
    out.corpus.apps.push_back(std::move(rec));
  }

  // Bids, also round-robin, with descriptions drawn from the same generator.
  std::vector<std::size_t> bid_category(spec.n_bids);
  for (std::size_t j = 0; j < spec.n_bids; ++j) {
    std::size_t cat = j % n_categories;
    bid_category[j] = cat;
    BidRecord bid;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "bid%04zu", j);
    bid.bid_id = buf;
    bid.advertiser_id = "adv" + std::to_string(j % 10);
    bid.product_description = make_description(cat, spec.n_apps + j, rng);
    bid.cpa_price = 1.0 + static_cast<double>(rng.bounded(2000)) / 100.0;
    bid.at = spec.t0;
    out.corpus.bids.push_back(std::move(bid));
  }

  if (spec.n_apps == 0 || spec.n_bids == 0) return out;

  // Apps of one category, for picking installs/uninstalls.
  std::vector<std::vector<std::string>> apps_in_cat(n_categories);
  for (std::size_t i = 0; i < spec.n_apps; ++i) {
    apps_in_cat[app_category[i]].push_back(out.corpus.apps[i].app_id);
  }
  std::vector<std::vector<std::size_t>> bids_in_cat(n_categories);
  for (std::size_t j = 0; j < spec.n_bids; ++j) {
    bids_in_cat[bid_category[j]].push_back(j);
  }

  const Timestamp snap0 = spec.t0 - 2 * kDay;
  const Timestamp snap1 = spec.t0 + 5 * kDay;
  const Timestamp click_start = spec.t0 + 6 * kDay;
  const Timestamp click_span = 14 * kDay;

  for (std::size_t u = 0; u < spec.n_users; ++u) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "u%05zu", u);
    std::string user_id = buf;

    std::size_t interest = rng.bounded(n_categories);
    std::size_t interest2 =
        n_categories > 1 ? (interest + 1 + rng.bounded(n_categories - 1)) % n_categories
                         : interest;
    bool two_interests = n_categories > 1 && rng.bounded(100) < 40;
    std::size_t disliked =
        n_categories > 1 ? (interest + 1 + rng.bounded(n_categories - 1)) % n_categories
                         : interest;
    if (two_interests && disliked == interest2) {
      disliked = (disliked + 1) % n_categories;
      if (disliked == interest) disliked = (disliked + 1) % n_categories;
    }
    auto is_interest = [&](std::size_t cat) {
      return cat == interest || (two_interests && cat == interest2);
    };

    // Baseline installed set: two random apps plus one or two apps of the
    // disliked category (those get uninstalled).
    std::vector<std::string> base_apps;
    for (int k = 0; k < 2; ++k) {
      base_apps.push_back(out.corpus.apps[rng.bounded(spec.n_apps)].app_id);
    }
    std::vector<std::string> to_uninstall;
    if (n_categories > 1 && !apps_in_cat[disliked].empty()) {
      std::size_t n_bad = 1 + rng.bounded(2);
      for (std::size_t k = 0; k < n_bad; ++k) {
        const auto& cat_apps = apps_in_cat[disliked];
        to_uninstall.push_back(cat_apps[rng.bounded(cat_apps.size())]);
      }
      std::sort(to_uninstall.begin(), to_uninstall.end());
      to_uninstall.erase(std::unique(to_uninstall.begin(), to_uninstall.end()),
                         to_uninstall.end());
      base_apps.insert(base_apps.end(), to_uninstall.begin(), to_uninstall.end());
    }

    Snapshot s0{user_id, snap0, base_apps};
    std::sort(s0.installed.begin(), s0.installed.end());
    s0.installed.erase(std::unique(s0.installed.begin(), s0.installed.end()),
                       s0.installed.end());

    // Second snapshot: drop the disliked apps, add interest-category apps.
    Snapshot s1{user_id, snap1, s0.installed};
    for (const auto& bad : to_uninstall) {
      s1.installed.erase(std::remove(s1.installed.begin(), s1.installed.end(), bad),
                         s1.installed.end());
    }
    std::size_t n_installs = 2 + rng.bounded(2);
    for (std::size_t k = 0; k < n_installs; ++k) {
      std::size_t cat = (two_interests && k % 2 == 1) ? interest2 : interest;
      const auto& cat_apps = apps_in_cat[cat];
      if (cat_apps.empty()) continue;
      s1.installed.push_back(cat_apps[rng.bounded(cat_apps.size())]);
    }
    std::sort(s1.installed.begin(), s1.installed.end());
    s1.installed.erase(std::unique(s1.installed.begin(), s1.installed.end()),
                       s1.installed.end());

    out.corpus.snapshots.push_back(std::move(s0));
    out.corpus.snapshots.push_back(std::move(s1));

    // Replayed impressions: roughly 35% interest-category bids, 15% disliked,
    // the rest uniform. Clicks carry the planted uplift.
    const double uplift = 1.0 + spec.planted_uplift_pct / 100.0;
    for (std::size_t k = 0; k < spec.impressions_per_user; ++k) {
      std::size_t roll = rng.bounded(100);
      std::size_t bid_index;
      if (roll < 35 && !bids_in_cat[interest].empty()) {
        const auto& v = bids_in_cat[two_interests && k % 2 == 1 ? interest2 : interest];
        bid_index = v.empty() ? rng.bounded(spec.n_bids) : v[rng.bounded(v.size())];
      } else if (roll < 50 && !bids_in_cat[disliked].empty()) {
        const auto& v = bids_in_cat[disliked];
        bid_index = v[rng.bounded(v.size())];
      } else {
        bid_index = rng.bounded(spec.n_bids);
      }
      double p = spec.base_ctr;
      if (is_interest(bid_category[bid_index])) {
        p = spec.base_ctr * uplift;
      } else if (n_categories > 1 && bid_category[bid_index] == disliked) {
        p = spec.base_ctr / uplift;
      }
      ImpressionRecord imp;
      imp.user_id = user_id;
      imp.bid_id = out.corpus.bids[bid_index].bid_id;
      imp.shown_at = click_start + static_cast<Timestamp>(rng.bounded(
                                       static_cast<std::uint64_t>(click_span)));
      imp.clicked = rng.uniform() < p;
      out.corpus.impressions.push_back(std::move(imp));
    }
  }
  return out;
}

void write_synthetic(const SyntheticSpec& spec, const std::string& out_dir) {
  SyntheticCorpus data = generate_synthetic(spec);
  save_apps(out_dir + "/apps.jsonl", data.corpus.apps);
  save_snapshots(out_dir + "/snapshots.jsonl", data.corpus.snapshots);
  save_bids(out_dir + "/bids.jsonl", data.corpus.bids);
  save_impressions(out_dir + "/impressions.jsonl", data.corpus.impressions);
}

}  // namespace appintent
