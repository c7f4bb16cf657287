#include "mcb/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "mcb/error.hpp"

namespace mcb {

SmallSet Matroid::closure(SmallSet s) const {
  SmallSet out = ground();
  for (const auto& f : flats)
    if (s.subset_of(f)) out = out & f;
  return out;
}

int Matroid::rank_of(SmallSet s) const {
  auto it = flat_index.find(closure(s));
  return flat_rank[it->second];
}

std::vector<SmallSet> Matroid::proper_flats() const {
  std::vector<SmallSet> out;
  out.reserve(flats.size() - 1);
  SmallSet top = ground();
  for (const auto& f : flats)
    if (!(f == top)) out.push_back(f);
  return out;
}

std::vector<SmallSet> Matroid::flats_of_rank(int r) const {
  std::vector<SmallSet> out;
  for (size_t i = 0; i < flats.size(); i++)
    if (flat_rank[i] == r) out.push_back(flats[i]);
  return out;
}

namespace {

void sort_and_index(Matroid& m) {
  std::vector<int> order(m.flats.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (m.flat_rank[a] != m.flat_rank[b]) return m.flat_rank[a] < m.flat_rank[b];
    return m.flats[a] < m.flats[b];
  });
  std::vector<SmallSet> fs;
  std::vector<int> rs;
  fs.reserve(order.size());
  rs.reserve(order.size());
  for (int i : order) {
    fs.push_back(m.flats[i]);
    rs.push_back(m.flat_rank[i]);
  }
  m.flats = std::move(fs);
  m.flat_rank = std::move(rs);
  m.flat_index.clear();
  for (size_t i = 0; i < m.flats.size(); i++) m.flat_index[m.flats[i]] = static_cast<int>(i);
  m.rank = m.flat_rank.back();
}

// Longest-chain depth from the bottom flat; input must be sorted by popcount.
std::vector<int> chain_depths(const std::vector<SmallSet>& flats) {
  std::vector<int> rank(flats.size(), 0);
  for (size_t i = 1; i < flats.size(); i++) {
    int best = 0;
    for (size_t j = 0; j < i; j++)
      if (!(flats[j] == flats[i]) && flats[j].subset_of(flats[i]))
        best = std::max(best, rank[j] + 1);
    rank[i] = best;
  }
  return rank;
}

}  // namespace

Matroid matroid_from_flats(int n, std::vector<SmallSet> flat_list) {
  if (n < 1 || n > SmallSet::max_elements)
    fail("BadGroundSet", "need 1 <= n <= 128, got n=" + std::to_string(n));
  SmallSet top = SmallSet::full(n);
  for (const auto& f : flat_list)
    if (!f.subset_of(top))
      fail("BadGroundSet", "flat " + f.str() + " not inside ground set");

  std::sort(flat_list.begin(), flat_list.end(), [](SmallSet a, SmallSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  flat_list.erase(std::unique(flat_list.begin(), flat_list.end()), flat_list.end());

  if (flat_list.empty() || !(flat_list.back() == top))
    fail("MissingTop", "ground set is not in the flat family");

  std::unordered_set<SmallSet, SmallSetHash> present(flat_list.begin(), flat_list.end());
  for (size_t i = 0; i < flat_list.size(); i++)
    for (size_t j = i + 1; j < flat_list.size(); j++) {
      SmallSet meet = flat_list[i] & flat_list[j];
      if (!present.count(meet))
        fail("NotIntersectionClosed",
             flat_list[i].str() + " and " + flat_list[j].str() + " meet in the non-flat " +
                 meet.str());
    }

  // Covers of F must slice E \ F into disjoint pieces with nothing left over.
  for (size_t i = 0; i < flat_list.size(); i++) {
    SmallSet f = flat_list[i];
    if (f == top) continue;
    std::vector<SmallSet> above;
    for (const auto& g : flat_list)
      if (!(g == f) && f.subset_of(g)) above.push_back(g);
    std::vector<SmallSet> covers;
    for (const auto& g : above) {
      bool minimal = true;
      for (const auto& h : above)
        if (!(h == g) && h.subset_of(g)) {
          minimal = false;
          break;
        }
      if (minimal) covers.push_back(g);
    }
    SmallSet seen = f;
    for (const auto& g : covers) {
      SmallSet diff = g - f;
      if (diff.intersects(seen - f))
        fail("BadPartition",
             "covers of " + f.str() + " overlap outside it");
      seen = seen | diff;
    }
    if (!(seen == top))
      fail("BadPartition",
           "covers of " + f.str() + " miss " + (top - seen).str());
  }

  Matroid m;
  m.n = n;
  m.flats = std::move(flat_list);
  m.flat_rank = chain_depths(m.flats);
  sort_and_index(m);
  return m;
}

Matroid matroid_from_ranked_flats(int n, std::vector<std::pair<SmallSet, int>> ranked) {
  Matroid m;
  m.n = n;
  m.flats.reserve(ranked.size());
  m.flat_rank.reserve(ranked.size());
  for (auto& [f, r] : ranked) {
    m.flats.push_back(f);
    m.flat_rank.push_back(r);
  }
  sort_and_index(m);
  return m;
}

Matroid uniform_matroid(int r, int n) {
  if (n < 1 || n > SmallSet::max_elements || r < 0 || r > n)
    fail("BadGroundSet",
         "uniform matroid needs 0 <= r <= n, n <= 128");
  std::vector<SmallSet> flats;
  // Subsets of size < r, enumerated as combinations, plus the ground set.
  std::vector<int> idx;
  for (int k = 0; k < r; k++) {
    idx.assign(k, 0);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      flats.push_back(SmallSet::of(idx));
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) i--;
      if (i < 0) break;
      idx[i]++;
      for (int j = i + 1; j < k; j++) idx[j] = idx[j - 1] + 1;
    }
  }
  flats.push_back(SmallSet::full(n));
  return matroid_from_flats(n, std::move(flats));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Matroid matroid_from_graph(const Graph& g) {
  int V = g.vertices;
  int E = static_cast<int>(g.edges.size());
  if (E < 1 || E > SmallSet::max_elements)
    fail("BadGraph", "need between 1 and 128 edges, got " + std::to_string(E));
  std::set<std::pair<int, int>> seen_edges;
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= V || v >= V) fail("BadGraph", "edge endpoint out of range");
    if (u == v) fail("SelfLoop", "edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}");
    auto key = std::minmax(u, v);
    if (!seen_edges.insert(key).second)
      fail("DuplicateEdge", "edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "} repeated");
  }

  // closure(S) = all edges whose endpoints lie in one component of (V, S)
  auto close = [&](SmallSet s) {
    UnionFind uf(V);
    s.for_each([&](int e) { uf.unite(g.edges[e].first, g.edges[e].second); });
    SmallSet out;
    for (int e = 0; e < E; e++) {
      auto [u, v] = g.edges[e];
      if (uf.find(u) == uf.find(v)) out.set(e);
    }
    return out;
  };

  std::unordered_set<SmallSet, SmallSetHash> seen;
  std::vector<SmallSet> frontier{close(SmallSet{})};
  seen.insert(frontier[0]);
  std::vector<SmallSet> flats;
  while (!frontier.empty()) {
    std::vector<SmallSet> next;
    for (const auto& f : frontier) {
      flats.push_back(f);
      for (int e = 0; e < E; e++) {
        if (f.test(e)) continue;
        SmallSet g2 = f;
        g2.set(e);
        SmallSet c = close(g2);
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return matroid_from_flats(E, std::move(flats));
}

std::vector<long long> mobius_from_bottom(const Matroid& m) {
  size_t F = m.flats.size();
  std::vector<long long> mu(F, 0);
  // flats are sorted by rank, so all subflats of flats[i] precede it
  for (size_t i = 0; i < F; i++) {
    long long s = 0;
    for (size_t j = 0; j < i; j++)
      if (m.flats[j].subset_of(m.flats[i])) s += mu[j];
    mu[i] = (i == 0) ? 1 : -s;
  }
  return mu;
}

FlatLattice mobius_and_lattice(const Matroid& m) {
  FlatLattice lat;
  lat.mobius = mobius_from_bottom(m);
  size_t F = m.flats.size();
  for (size_t i = 0; i < F; i++)
    for (size_t j = 0; j < F; j++)
      if (m.flat_rank[j] == m.flat_rank[i] + 1 && m.flats[i].subset_of(m.flats[j]))
        lat.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return lat;
}

IntPoly characteristic_polynomial(const Matroid& m) {
  if (!m.loopless()) return IntPoly::zero();
  auto mu = mobius_from_bottom(m);
  std::vector<long long> coeffs(m.rank + 1, 0);
  for (size_t i = 0; i < m.flats.size(); i++) coeffs[m.rank - m.flat_rank[i]] += mu[i];
  return IntPoly(std::move(coeffs));
}

std::vector<SmallSet> connected_components(const Matroid& m) {
  int n = m.n;
  // Greedy basis, then fundamental circuits with respect to it: the
  // components of the circuit graph are the components of the matroid.
  std::vector<int> basis;
  SmallSet bset;
  for (int e = 0; e < n; e++) {
    SmallSet trial = bset;
    trial.set(e);
    if (m.rank_of(trial) > m.rank_of(bset)) {
      basis.push_back(e);
      bset = trial;
    }
  }
  UnionFind uf(n);
  int r = m.rank_of(bset);
  for (int e = 0; e < n; e++) {
    if (bset.test(e)) continue;
    for (int b : basis) {
      SmallSet swapped = bset;
      swapped.reset(b);
      swapped.set(e);
      if (m.rank_of(swapped) == r) uf.unite(e, b);  // b is in the circuit of e
    }
  }
  std::vector<SmallSet> comp(n);
  for (int e = 0; e < n; e++) comp[uf.find(e)].set(e);
  std::vector<SmallSet> out;
  for (int e = 0; e < n; e++)
    if (!comp[e].empty()) out.push_back(comp[e]);
  std::sort(out.begin(), out.end());
  return out;
}

Matroid restriction(const Matroid& m, SmallSet s) {
  std::vector<int> keep = s.elements();
  std::vector<int> pos(m.n, -1);
  for (size_t i = 0; i < keep.size(); i++) pos[keep[i]] = static_cast<int>(i);
  std::vector<SmallSet> traces;
  for (const auto& f : m.flats) {
    SmallSet t;
    for (int e : keep)
      if (f.test(e)) t.set(pos[e]);
    traces.push_back(t);
  }
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
  return matroid_from_flats(static_cast<int>(keep.size()), std::move(traces));
}

}  // namespace mcb
