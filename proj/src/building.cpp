#include "mcb/building.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "mcb/error.hpp"

namespace mcb {

namespace {

void canonicalize(std::vector<SmallSet>& ms) {
  std::sort(ms.begin(), ms.end(), [](SmallSet a, SmallSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}

}  // namespace

bool BuildingSet::connected() const {
  return !members.empty() && members.back() == SmallSet::full(n);
}

std::vector<SmallSet> BuildingSet::maximal_proper() const {
  SmallSet top = SmallSet::full(n);
  std::vector<SmallSet> out;
  for (const auto& m : members) {
    if (m == top) continue;
    bool maximal = true;
    for (const auto& k : members)
      if (!(k == m) && !(k == top) && m.subset_of(k)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(m);
  }
  return out;
}

BuildingSet building_set(int n, std::vector<SmallSet> members) {
  if (n < 1 || n > SmallSet::max_elements)
    fail("BadGroundSet", "need 1 <= n <= 128");
  SmallSet top = SmallSet::full(n);
  for (const auto& m : members) {
    if (m.empty()) fail("EmptyMember", "empty set is not allowed");
    if (!m.subset_of(top))
      fail("BadGroundSet", "member " + m.str() + " not inside ground set");
  }
  canonicalize(members);
  std::unordered_set<SmallSet, SmallSetHash> present(members.begin(), members.end());
  for (int i = 0; i < n; i++)
    if (!present.count(SmallSet::single(i)))
      fail("MissingSingleton", "singleton {" + std::to_string(i) + "} missing");
  for (size_t i = 0; i < members.size(); i++)
    for (size_t j = i + 1; j < members.size(); j++)
      if (members[i].intersects(members[j]) && !present.count(members[i] | members[j]))
        fail("MissingUnion",
             members[i].str() + " meets " + members[j].str() + " but their union is missing");
  BuildingSet b;
  b.n = n;
  b.members = std::move(members);
  return b;
}

BuildingSet building_set_closure(int n, std::vector<SmallSet> members) {
  if (n < 1 || n > SmallSet::max_elements)
    fail("BadGroundSet", "need 1 <= n <= 128");
  SmallSet top = SmallSet::full(n);
  std::unordered_set<SmallSet, SmallSetHash> present;
  std::vector<SmallSet> work;
  auto push = [&](SmallSet s) {
    if (present.insert(s).second) work.push_back(s);
  };
  for (int i = 0; i < n; i++) push(SmallSet::single(i));
  for (const auto& m : members) {
    if (m.empty()) fail("EmptyMember", "empty set is not allowed");
    if (!m.subset_of(top))
      fail("BadGroundSet", "member " + m.str() + " not inside ground set");
    push(m);
  }
  for (size_t i = 0; i < work.size(); i++)
    for (size_t j = 0; j < i; j++)
      if (work[i].intersects(work[j])) push(work[i] | work[j]);
  BuildingSet b;
  b.n = n;
  b.members.assign(present.begin(), present.end());
  canonicalize(b.members);
  return b;
}

McbReport bs_mcb(const BuildingSet& b, int degree) {
  return mcb_check_family(b.n, b.members, degree);
}

std::optional<int> bs_min_nontrivial_degree(const BuildingSet& b) {
  return min_nontrivial_degree_family(b.n, b.members);
}

NestReport nestmcb_predicate(const BuildingSet& b) {
  if (!b.connected()) fail("NotConnected", "building set has no ground-set member");
  NestReport rep;
  rep.predicate = true;
  for (const auto& I : b.maximal_proper()) {
    std::vector<SmallSet> inside;
    for (const auto& j : b.members)
      if (!(j == I) && j.subset_of(I)) inside.push_back(j);
    int count = 0;
    for (const auto& j : inside) {
      bool maximal = true;
      for (const auto& k : inside)
        if (!(k == j) && j.subset_of(k)) {
          maximal = false;
          break;
        }
      if (maximal) count++;
    }
    rep.counts.emplace_back(I, count);
    if (count < 2) rep.predicate = false;
  }
  return rep;
}

BsComponents bs_components(const BuildingSet& b) {
  auto bmax = b.maximal_proper();
  int k = static_cast<int>(bmax.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < k; i++)
    for (int j = i + 1; j < k; j++)
      if (bmax[i].intersects(bmax[j])) parent[find(i)] = find(j);
  std::unordered_set<int> roots;
  for (int i = 0; i < k; i++) roots.insert(find(i));
  BsComponents out;
  out.components = static_cast<int>(roots.size());
  out.n_minus_c = b.n - out.components;
  return out;
}

}  // namespace mcb
