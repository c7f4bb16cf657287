#include "mcb/cover.hpp"

#include <algorithm>
#include <climits>

namespace mcb {

namespace {

// Drop members contained in another member. Quadratic; skipped for very
// large families where domination pruning costs more than it saves.
std::vector<SmallSet> maximal_members(std::vector<SmallSet> ms) {
  if (ms.size() > 4000) return ms;
  std::sort(ms.begin(), ms.end(), [](SmallSet a, SmallSet b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a < b;
  });
  std::vector<SmallSet> out;
  for (const auto& m : ms) {
    bool dominated = false;
    for (const auto& k : out)
      if (m.subset_of(k)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  return out;
}

struct Searcher {
  const std::vector<SmallSet>& members;
  std::vector<int> size_prefix;  // size_prefix[k] = sum of k largest member sizes
  SmallSet target;
  int best;
  std::vector<int> best_pick;
  std::vector<int> pick;

  Searcher(const std::vector<SmallSet>& ms, SmallSet t, int cap) : members(ms), target(t) {
    best = cap + 1;
    std::vector<int> sizes;
    sizes.reserve(ms.size());
    for (const auto& m : ms) sizes.push_back(m.count());
    std::sort(sizes.rbegin(), sizes.rend());
    size_prefix.assign(sizes.size() + 1, 0);
    for (size_t i = 0; i < sizes.size(); i++) size_prefix[i + 1] = size_prefix[i] + sizes[i];
  }

  void run(SmallSet uncovered) {
    if (uncovered.empty()) {
      best = static_cast<int>(pick.size());
      best_pick = pick;
      return;
    }
    int avail = best - 1 - static_cast<int>(pick.size());
    if (avail <= 0) return;
    avail = std::min(avail, static_cast<int>(members.size()));
    if (size_prefix[avail] < uncovered.count()) return;

    // branch on the uncovered element with the fewest candidate members
    int branch_e = -1, branch_cnt = INT_MAX;
    uncovered.for_each([&](int e) {
      int c = 0;
      for (const auto& m : members)
        if (m.test(e)) c++;
      if (c < branch_cnt) {
        branch_cnt = c;
        branch_e = e;
      }
    });
    if (branch_cnt == 0) return;  // element not coverable

    std::vector<int> cand;
    for (size_t i = 0; i < members.size(); i++)
      if (members[i].test(branch_e)) cand.push_back(static_cast<int>(i));
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
      int ca = members[a].count(), cb = members[b].count();
      if (ca != cb) return ca > cb;
      return members[a] < members[b];
    });
    for (int i : cand) {
      pick.push_back(i);
      run(uncovered - members[i]);
      pick.pop_back();
    }
  }
};

}  // namespace

std::optional<Cover> min_cover(SmallSet target, const std::vector<SmallSet>& members, int cap) {
  if (target.empty()) return Cover{0, {}};
  if (cap <= 0) return std::nullopt;

  std::vector<SmallSet> ms;
  ms.reserve(members.size());
  for (const auto& m : members) {
    SmallSet clipped = m & target;
    if (!clipped.empty()) ms.push_back(clipped);
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  SmallSet all;
  for (const auto& m : ms) all = all | m;
  if (!(all == target)) return std::nullopt;

  // cheap certificate of infeasibility within the cap: even the cap largest
  // members together are too small
  {
    std::vector<int> sizes;
    sizes.reserve(ms.size());
    for (const auto& m : ms) sizes.push_back(m.count());
    int take = std::min<int>(cap, static_cast<int>(sizes.size()));
    std::partial_sort(sizes.begin(), sizes.begin() + take, sizes.end(), std::greater<int>());
    long long reach = 0;
    for (int i = 0; i < take; i++) reach += sizes[i];
    if (reach < target.count()) return std::nullopt;
  }

  ms = maximal_members(std::move(ms));

  Searcher s(ms, target, cap);

  // greedy upper bound, ties by canonical order
  {
    SmallSet uncovered = target;
    std::vector<int> picks;
    while (!uncovered.empty()) {
      int bi = -1, bc = -1;
      for (size_t i = 0; i < ms.size(); i++) {
        int c = (ms[i] & uncovered).count();
        if (c > bc || (c == bc && bi >= 0 && ms[i] < ms[bi])) {
          bc = c;
          bi = static_cast<int>(i);
        }
      }
      picks.push_back(bi);
      uncovered = uncovered - ms[bi];
    }
    if (static_cast<int>(picks.size()) <= cap) {
      s.best = static_cast<int>(picks.size());
      s.best_pick = picks;
    }
  }

  s.run(target);
  if (s.best > cap) return std::nullopt;
  Cover out;
  out.size = s.best;
  for (int i : s.best_pick) out.members.push_back(ms[i]);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

namespace {

std::vector<SmallSet> proper_members(int n, const std::vector<SmallSet>& family) {
  SmallSet top = SmallSet::full(n);
  std::vector<SmallSet> out;
  out.reserve(family.size());
  for (const auto& f : family)
    if (!(f == top)) out.push_back(f);
  return out;
}

}  // namespace

McbReport mcb_check_family(int n, const std::vector<SmallSet>& family, int degree) {
  McbReport rep;
  rep.degree = degree;
  auto fam = proper_members(n, family);
  SmallSet top = SmallSet::full(n);
  for (int p = 0; p < n; p++) {
    std::vector<SmallSet> avoiding;
    for (const auto& f : fam)
      if (!f.test(p)) avoiding.push_back(f);
    SmallSet target = top;
    target.reset(p);
    auto cov = min_cover(target, avoiding, degree);
    if (cov) {
      rep.holds = false;
      rep.p = p;
      rep.witness = cov->members;
      return rep;
    }
  }
  return rep;
}

std::optional<int> min_failure_degree_family(int n, const std::vector<SmallSet>& family) {
  auto fam = proper_members(n, family);
  SmallSet top = SmallSet::full(n);
  std::optional<int> bestv;
  for (int p = 0; p < n; p++) {
    std::vector<SmallSet> avoiding;
    for (const auto& f : fam)
      if (!f.test(p)) avoiding.push_back(f);
    SmallSet target = top;
    target.reset(p);
    int cap = bestv ? *bestv - 1 : n + 1;
    auto cov = min_cover(target, avoiding, cap);
    if (cov && (!bestv || cov->size < *bestv)) bestv = cov->size;
  }
  return bestv;
}

std::optional<int> min_nontrivial_degree_family(int n, const std::vector<SmallSet>& family) {
  auto fam = proper_members(n, family);
  SmallSet top = SmallSet::full(n);
  std::optional<int> bestv;
  for (int p = 0; p < n; p++) {
    SmallSet target = top;
    target.reset(p);
    int cap = bestv ? *bestv - 1 : n + 1;
    auto cov = min_cover(target, fam, cap);  // min_cover clips members to the target
    if (cov && (!bestv || cov->size < *bestv)) bestv = cov->size;
  }
  return bestv;
}

std::optional<Cover> min_cover_avoiding(int n, const std::vector<SmallSet>& family, int p) {
  std::vector<SmallSet> avoiding;
  for (const auto& f : family)
    if (!f.test(p)) avoiding.push_back(f);
  SmallSet target = SmallSet::full(n);
  target.reset(p);
  return min_cover(target, avoiding, n + 1);
}

McbReport is_mcb(const Matroid& m, int degree) { return mcb_check_family(m.n, m.flats, degree); }

std::optional<int> min_failure_degree(const Matroid& m) {
  return min_failure_degree_family(m.n, m.flats);
}

std::optional<int> min_nontrivial_degree(const Matroid& m) {
  return min_nontrivial_degree_family(m.n, m.flats);
}

McbProfile mcb_profile(const Matroid& m) {
  McbProfile prof;
  prof.min_failure_degree = min_failure_degree_family(m.n, m.flats);
  prof.min_nontrivial_degree = min_nontrivial_degree_family(m.n, m.flats);
  return prof;
}

}  // namespace mcb
