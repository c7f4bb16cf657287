#include "mcb/paving.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>

#include "mcb/error.hpp"

namespace mcb {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; i++) {
    r = r * (n - k + i) / i;
    if (r > (1LL << 62) / 128) fail("TooLarge", "binomial overflow");
  }
  return r;
}

// Calls f once per k-subset of pool, as a SmallSet.
template <typename F>
void for_each_subset(const std::vector<int>& pool, int k, F f) {
  int n = static_cast<int>(pool.size());
  if (k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; i++) idx[i] = i;
  while (true) {
    SmallSet s;
    for (int i : idx) s.set(pool[i]);
    f(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) i--;
    if (i < 0) break;
    idx[i]++;
    for (int j = i + 1; j < k; j++) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<int> range_vec(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; i++) v[i] = i;
  return v;
}

}  // namespace

Matroid paving_from_blocks(int n, int m, std::vector<SmallSet> blocks) {
  if (n < 1 || n > 128 || m < 1 || m > n)
    fail("BadParameters", "need 1 <= m <= n <= 128");
  SmallSet ground = SmallSet::full(n);
  long long work = 0;
  for (const auto& b : blocks) {
    if (!b.subset_of(ground)) fail("BadParameters", "block " + b.str() + " outside the ground set");
    if (b.count() < m)
      fail("TooSmallBlock", "block " + b.str() + " has fewer than " + std::to_string(m) + " elements");
    work += binomial(b.count(), m);
  }
  long long total = binomial(n, m);
  if (work > 2'000'000 || total > 2'000'000)
    fail("TooLarge", "too many m-subsets to validate: " + std::to_string(std::max(work, total)));

  std::unordered_set<SmallSet, SmallSetHash> seen;
  seen.reserve(static_cast<size_t>(total) * 2);
  for (const auto& b : blocks) {
    bool clash = false;
    SmallSet clash_set;
    for_each_subset(b.elements(), m, [&](SmallSet s) {
      if (!clash && !seen.insert(s).second) {
        clash = true;
        clash_set = s;
      }
    });
    if (clash) fail("DoublyCovered", "m-subset " + clash_set.str() + " lies in two blocks");
  }
  if (static_cast<long long>(seen.size()) != total) {
    std::string detail = std::to_string(seen.size()) + " of " + std::to_string(total) +
                         " m-subsets covered";
    if (total <= 20000) {
      for_each_subset(range_vec(n), m, [&](SmallSet s) {
        if (!seen.count(s)) detail = "m-subset " + s.str() + " lies in no block";
      });
    }
    fail("UncoveredMSet", detail);
  }

  // Flats: all subsets of size < m, the proper blocks, the ground set.
  std::vector<std::pair<SmallSet, int>> ranked;
  long long small_count = 0;
  for (int k = 0; k < m; k++) small_count += binomial(n, k);
  if (small_count > 500'000) fail("TooLarge", "too many low-rank flats");
  std::vector<int> all = range_vec(n);
  for (int k = 0; k < m; k++)
    for_each_subset(all, k, [&](SmallSet s) { ranked.emplace_back(s, k); });
  bool ground_is_block = false;
  for (const auto& b : blocks) {
    if (b == ground) {
      ground_is_block = true;
      continue;
    }
    ranked.emplace_back(b, m);
  }
  ranked.emplace_back(ground, ground_is_block ? m : m + 1);

  if (ranked.size() <= 5000) {
    std::vector<SmallSet> flats;
    flats.reserve(ranked.size());
    for (auto& [f, r] : ranked) flats.push_back(f);
    return matroid_from_flats(n, std::move(flats));
  }
  return matroid_from_ranked_flats(n, std::move(ranked));
}

Cover min_hyperplane_cover(const Matroid& m) {
  auto hyps = m.hyperplanes();
  auto cov = min_cover(m.ground(), hyps, m.n);
  if (!cov) fail("NotACover", "hyperplanes do not cover the ground set");
  return *cov;
}

PavBound1 pav_bound_part1_values(int n, int m, int k, int ratio_cap) {
  if (n < 1 || m < 2 || k < 1 || ratio_cap < 1)
    fail("BadParameters", "need n >= 1, m >= 2, k >= 1, C >= 1");
  PavBound1 out;
  out.k = k;
  out.ratio_cap = ratio_cap;
  long long denom = 2LL * ratio_cap * k * k * (m - 1);
  out.bound = k - 1 + static_cast<int>(n / denom);
  out.in_regime = n >= 4LL * ratio_cap * k * k * k * (m - 1);
  return out;
}

PavBound1 pav_bound_part1(const Matroid& m, int k, int ratio_cap) {
  auto hyps = m.hyperplanes();
  if (k > static_cast<int>(hyps.size()))
    fail("BadParameters", "only " + std::to_string(hyps.size()) + " hyperplanes, need k=" +
                              std::to_string(k));
  PavBound1 out = pav_bound_part1_values(m.n, m.rank - 1, k, ratio_cap);
  std::sort(hyps.begin(), hyps.end(), [](SmallSet a, SmallSet b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a < b;
  });
  hyps.resize(k);
  SmallSet covered;
  for (const auto& h : hyps) covered = covered | h;
  if (!(covered == m.ground()))
    fail("NotACover", "largest " + std::to_string(k) + " hyperplanes do not cover the ground set");
  long long largest = hyps.front().count(), smallest = hyps.back().count();
  if (largest >= static_cast<long long>(ratio_cap) * smallest)
    fail("RatioViolated", "size ratio " + std::to_string(largest) + "/" +
                              std::to_string(smallest) + " is not below " +
                              std::to_string(ratio_cap));
  out.designated = std::move(hyps);
  return out;
}

PavBound2 pav_bound_part2(const Matroid& m, const std::vector<SmallSet>& designated) {
  if (m.rank < 3) fail("BadParameters", "need rank >= 3 so that m - 1 >= 1");
  if (designated.empty()) fail("BadParameters", "no designated hyperplanes");
  auto hyps = m.hyperplanes();
  SmallSet covered;
  long long smallest = -1;
  for (const auto& d : designated) {
    if (std::find(hyps.begin(), hyps.end(), d) == hyps.end())
      fail("BadParameters", "designated set " + d.str() + " is not a hyperplane");
    covered = covered | d;
    long long c = d.count();
    if (smallest < 0 || c < smallest) smallest = c;
  }
  if (!(covered == m.ground())) fail("NotACover", "designated hyperplanes do not cover the ground set");
  PavBound2 out;
  out.k = static_cast<int>(designated.size());
  out.min_designated = smallest;
  long long p = (out.k - 1) * smallest;
  long long q = static_cast<long long>(out.k) * (m.rank - 2);
  out.bound = static_cast<int>((p + q - 1) / q);
  return out;
}

Matroid random_sparse_paving(int n, int m, std::uint64_t seed) {
  if (m < 2 || n <= m) fail("BadParameters", "need n > m >= 2");
  if (n > 20) fail("TooLarge", "generator capped at 20 elements");
  std::mt19937_64 rng(seed);
  std::vector<SmallSet> accepted;
  if (n >= m + 2) {
    std::vector<int> pool = range_vec(n);
    int tries = 50 * n;
    for (int t = 0; t < tries; t++) {
      // partial Fisher-Yates draw of an (m+1)-subset
      for (int i = 0; i <= m; i++) {
        int j = i + static_cast<int>(rng() % (n - i));
        std::swap(pool[i], pool[j]);
      }
      SmallSet cand;
      for (int i = 0; i <= m; i++) cand.set(pool[i]);
      bool ok = true;
      for (const auto& b : accepted)
        if ((b & cand).count() >= m) ok = false;
      if (ok) accepted.push_back(cand);
    }
  }
  std::vector<SmallSet> blocks = accepted;
  for_each_subset(range_vec(n), m, [&](SmallSet s) {
    for (const auto& b : accepted)
      if (s.subset_of(b)) return;
    blocks.push_back(s);
  });
  return paving_from_blocks(n, m, std::move(blocks));
}

Matroid partition_paving(int n, int m, int k) {
  if (m < 2 || n < m + 1 || n > 128 || k < 2 || n % k != 0 || n / k < m)
    fail("BadParameters", "need m >= 2, k >= 2, k | n, n/k >= m, n <= 128");
  int part = n / k;
  std::vector<int> part_of(n);
  std::vector<SmallSet> blocks;
  for (int i = 0; i < k; i++) {
    SmallSet b;
    for (int j = i * part; j < (i + 1) * part; j++) {
      b.set(j);
      part_of[j] = i;
    }
    blocks.push_back(b);
  }
  for_each_subset(range_vec(n), m, [&](SmallSet s) {
    auto els = s.elements();
    for (size_t i = 1; i < els.size(); i++)
      if (part_of[els[i]] != part_of[els[0]]) {
        blocks.push_back(s);
        return;
      }
  });
  return paving_from_blocks(n, m, std::move(blocks));
}

}  // namespace mcb
