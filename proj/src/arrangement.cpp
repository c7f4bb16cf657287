#include "mcb/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "mcb/error.hpp"

namespace mcb {

namespace {

bool is_zero_vec(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

BigInt dot(const IntVec& a, const IntVec& b) {
  BigInt s = 0;
  for (size_t i = 0; i < a.size(); i++) s += a[i] * b[i];
  return s;
}

int lead_col(const IntVec& v) {
  for (size_t i = 0; i < v.size(); i++)
    if (v[i] != 0) return static_cast<int>(i);
  return -1;
}

// Incremental fraction-free row echelon, rows kept sorted by pivot column.
// Small dimensions only; every row is reduced to a primitive vector.
struct Echelon {
  IntMat rows;

  IntVec reduce(IntVec v) const {
    for (const auto& r : rows) {
      int c = lead_col(r);
      if (v[c] == 0) continue;
      BigInt a = r[c], b = v[c];
      for (size_t i = 0; i < v.size(); i++) v[i] = a * v[i] - b * r[i];
      v = primitive_vector(std::move(v));
    }
    return v;
  }
  bool contains(const IntVec& v) const { return is_zero_vec(reduce(v)); }
  bool insert(IntVec v) {
    v = reduce(std::move(v));
    if (is_zero_vec(v)) return false;
    rows.push_back(std::move(v));
    std::sort(rows.begin(), rows.end(),
              [](const IntVec& a, const IntVec& b) { return lead_col(a) < lead_col(b); });
    return true;
  }
  int rank() const { return static_cast<int>(rows.size()); }
};

Echelon echelon_of(const Arrangement& a, SmallSet s) {
  Echelon e;
  for (int i : s.elements()) e.insert(a.normals[i]);
  return e;
}

SmallSet closure_of(const Arrangement& a, SmallSet s) {
  Echelon e = echelon_of(a, s);
  SmallSet out = s;
  int n = static_cast<int>(a.normals.size());
  for (int j = 0; j < n; j++)
    if (!out.test(j) && e.contains(a.normals[j])) out.set(j);
  return out;
}

std::string set_str_1based(SmallSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace

Arrangement arrangement_from_integer_normals(int dim, std::vector<IntVec> normals) {
  if (dim < 1 || dim > 512) fail("BadParameters", "ambient dimension out of range");
  if (normals.empty() || normals.size() > 128)
    fail("BadParameters", "need between 1 and 128 hyperplanes, got " + std::to_string(normals.size()));
  Arrangement a;
  a.dim = dim;
  std::set<IntVec> seen;
  for (size_t i = 0; i < normals.size(); i++) {
    if (static_cast<int>(normals[i].size()) != dim)
      fail("BadNormal", "normal " + std::to_string(i + 1) + " has length " +
                            std::to_string(normals[i].size()) + ", expected " + std::to_string(dim));
    IntVec p = primitive_vector(std::move(normals[i]));
    if (is_zero_vec(p)) fail("ZeroNormal", "normal " + std::to_string(i + 1) + " is zero");
    if (!seen.insert(p).second)
      fail("DuplicateHyperplane",
           "normal " + std::to_string(i + 1) + " repeats an earlier hyperplane");
    a.normals.push_back(std::move(p));
  }
  return a;
}

Arrangement arrangement_from_normals(int dim, const std::vector<std::vector<Rational>>& normals) {
  std::vector<IntVec> rows;
  for (const auto& r : normals) rows.push_back(rationals_to_primitive(r));
  return arrangement_from_integer_normals(dim, std::move(rows));
}

Arrangement graphic_arrangement(const Graph& g) {
  if (g.vertices < 1 || g.vertices > 512) fail("BadParameters", "vertex count out of range");
  std::vector<IntVec> rows;
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices)
      fail("BadParameters", "edge endpoint out of range");
    IntVec r(g.vertices, 0);
    if (u == v) fail("ZeroNormal", "self loop at vertex " + std::to_string(u + 1));
    r[std::min(u, v)] = 1;
    r[std::max(u, v)] = -1;
    rows.push_back(std::move(r));
  }
  return arrangement_from_integer_normals(g.vertices, std::move(rows));
}

Matroid intersection_matroid(const Arrangement& a) {
  int n = static_cast<int>(a.normals.size());
  SmallSet bottom;  // normals are nonzero, so the empty set is closed
  std::set<SmallSet> seen{bottom};
  std::deque<SmallSet> queue{bottom};
  while (!queue.empty()) {
    SmallSet f = queue.front();
    queue.pop_front();
    for (int e = 0; e < n; e++) {
      if (f.test(e)) continue;
      SmallSet g = f;
      g.set(e);
      SmallSet cl = closure_of(a, g);
      if (seen.insert(cl).second) queue.push_back(cl);
    }
  }
  std::vector<SmallSet> flats(seen.begin(), seen.end());
  return matroid_from_flats(n, std::move(flats));
}

LineArrangement lines_from_incidences(int n_lines, std::vector<SmallSet> points) {
  if (n_lines < 1 || n_lines > 128)
    fail("BadParameters", "need between 1 and 128 lines, got " + std::to_string(n_lines));
  SmallSet ground = SmallSet::full(n_lines);
  std::vector<std::vector<char>> covered(n_lines, std::vector<char>(n_lines, 0));
  for (const auto& p : points) {
    if (!p.subset_of(ground)) fail("BadIncidence", "point " + set_str_1based(p) + " names a missing line");
    if (p.count() < 2) fail("BadIncidence", "point " + set_str_1based(p) + " lies on fewer than two lines");
    auto els = p.elements();
    for (size_t i = 0; i < els.size(); i++)
      for (size_t j = i + 1; j < els.size(); j++) {
        if (covered[els[i]][els[j]]++)
          fail("BadIncidence", "lines " + std::to_string(els[i] + 1) + " and " +
                                   std::to_string(els[j] + 1) + " share two points");
      }
  }
  for (int i = 0; i < n_lines; i++)
    for (int j = i + 1; j < n_lines; j++)
      if (!covered[i][j])
        fail("BadIncidence",
             "lines " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " never meet");
  std::sort(points.begin(), points.end());
  LineArrangement l;
  l.lines = n_lines;
  l.points = std::move(points);
  return l;
}

LineArrangement lines_from_triples(const std::vector<std::array<Rational, 3>>& triples) {
  if (triples.empty() || triples.size() > 128)
    fail("BadParameters", "need between 1 and 128 lines, got " + std::to_string(triples.size()));
  std::vector<IntVec> coeffs;
  std::set<IntVec> seen;
  for (size_t i = 0; i < triples.size(); i++) {
    IntVec p = rationals_to_primitive({triples[i][0], triples[i][1], triples[i][2]});
    if (is_zero_vec(p)) fail("ZeroLine", "line " + std::to_string(i + 1) + " has zero coefficients");
    if (!seen.insert(p).second)
      fail("DuplicateLine", "line " + std::to_string(i + 1) + " repeats an earlier line");
    coeffs.push_back(std::move(p));
  }
  int n = static_cast<int>(coeffs.size());
  std::map<IntVec, SmallSet> points;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      const IntVec &u = coeffs[i], &v = coeffs[j];
      IntVec cross = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                      u[0] * v[1] - u[1] * v[0]};
      cross = primitive_vector(std::move(cross));
      points[cross].set(i);
      points[cross].set(j);
    }
  std::vector<SmallSet> incidences;
  for (auto& [coord, ls] : points) incidences.push_back(ls);
  return lines_from_incidences(n, std::move(incidences));
}

TVectorReport line_arrangement_tvector(const LineArrangement& l) {
  TVectorReport rep;
  for (const auto& p : l.points) rep.t[static_cast<int>(p.count())]++;
  if (l.lines >= 4) {
    rep.diagnostic_available = true;
    long long penalty = l.lines;
    for (const auto& [k, tk] : rep.t)
      if (k >= 5) penalty += (k - 4) * tk;
    long long low = 0;
    if (rep.t.count(2)) low += rep.t.at(2);
    if (rep.t.count(3)) low += rep.t.at(3);
    rep.diagnostic = low - penalty;
  }
  return rep;
}

Matroid line_matroid(const LineArrangement& l) {
  int n = l.lines;
  std::vector<SmallSet> flats;
  flats.push_back(SmallSet());
  for (int i = 0; i < n; i++) {
    SmallSet s;
    s.set(i);
    flats.push_back(s);
  }
  for (const auto& p : l.points)
    if (static_cast<int>(p.count()) < n) flats.push_back(p);
  flats.push_back(SmallSet::full(n));
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  return matroid_from_flats(n, std::move(flats));
}

HhFamily hh_two_modular(int a, int b) {
  if (!(2 <= a && a < b)) fail("BadParameters", "need 2 <= a < b");
  int n = a + b - 1;
  if (n > 128) fail("BadParameters", "too many lines: " + std::to_string(n));
  // Line 0 joins the two modular points; lines 1..a-1 pass through the
  // first, lines a..a+b-2 through the second; all other meets are double.
  std::vector<SmallSet> pts;
  SmallSet pa, pb;
  pa.set(0);
  pb.set(0);
  for (int i = 1; i < a; i++) pa.set(i);
  for (int j = a; j < n; j++) pb.set(j);
  pts.push_back(pa);
  pts.push_back(pb);
  for (int i = 1; i < a; i++)
    for (int j = a; j < n; j++) {
      SmallSet d;
      d.set(i);
      d.set(j);
      pts.push_back(d);
    }
  HhFamily fam;
  fam.kind = "two_modular";
  fam.params = {a, b};
  fam.lines = lines_from_incidences(n, std::move(pts));
  fam.matroid = line_matroid(fam.lines);
  return fam;
}

HhFamily hh_three_modular(int m) {
  if (m <= 3) fail("BadParameters", "need m > 3");
  int q = m - 2;
  int n = 3 * (m - 1);
  if (n > 128) fail("BadParameters", "too many lines: " + std::to_string(n));
  // Lines 0,1,2 form the triangle of modular points; three bundles of q
  // lines each pass through one triangle vertex apiece. Bundle members
  // meet pairwise in triple points, one from each of the other bundles,
  // with the cyclic offset keeping every pair in exactly one point.
  auto ab = [&](int k) { return 3 + k; };
  auto ac = [&](int k) { return 3 + q + k; };
  auto bc = [&](int k) { return 3 + 2 * q + k; };
  std::vector<SmallSet> pts;
  SmallSet pxy, pxz, pyz;
  pxy.set(0);
  pxy.set(1);
  pxz.set(0);
  pxz.set(2);
  pyz.set(1);
  pyz.set(2);
  for (int k = 0; k < q; k++) {
    pxy.set(ab(k));
    pxz.set(ac(k));
    pyz.set(bc(k));
  }
  pts.push_back(pxy);
  pts.push_back(pxz);
  pts.push_back(pyz);
  for (int j = 0; j < q; j++)
    for (int k = 0; k < q; k++) {
      SmallSet t;
      t.set(ab(j));
      t.set(ac(k));
      t.set(bc(((k - j) % q + q) % q));
      pts.push_back(t);
    }
  for (int k = 0; k < q; k++) {
    SmallSet d1, d2, d3;
    d1.set(0);
    d1.set(bc(k));
    d2.set(1);
    d2.set(ac(k));
    d3.set(2);
    d3.set(ab(k));
    pts.push_back(d1);
    pts.push_back(d2);
    pts.push_back(d3);
  }
  HhFamily fam;
  fam.kind = "three_modular";
  fam.params = {m};
  fam.lines = lines_from_incidences(n, std::move(pts));
  fam.matroid = line_matroid(fam.lines);
  return fam;
}

HhFamily hh_four_modular() {
  auto r = [](long long v) { return Rational{v, 1}; };
  std::vector<std::array<Rational, 3>> rows = {
      {r(1), r(0), r(0)},  {r(0), r(1), r(0)},  {r(0), r(0), r(1)},
      {r(1), r(-1), r(0)}, {r(1), r(0), r(-1)}, {r(0), r(1), r(-1)},
  };
  HhFamily fam;
  fam.kind = "four_modular";
  fam.lines = lines_from_triples(rows);
  fam.matroid = line_matroid(fam.lines);
  return fam;
}

DegreeRange unexpected_degree_range(int n_lines, int m) {
  DegreeRange r;
  r.lo = m;
  r.hi = n_lines - m - 1;
  r.empty_range = r.lo > r.hi;
  r.companion_bound = m >= 0 ? m / 3 : -((-m + 2) / 3);
  return r;
}

SupersolvableChain supersolvable_decompose_matroid(const Matroid& m) {
  int nf = static_cast<int>(m.flats.size());
  std::vector<int> lines;
  for (int i = 0; i < nf; i++)
    if (m.flat_rank[i] == 2) lines.push_back(i);

  // A coatom X of [bottom, T] is modular there iff every rank-2 flat
  // inside T but not inside X meets X in a rank-1 flat.
  auto modular_in = [&](int xi, int ti) {
    const SmallSet& x = m.flats[xi];
    const SmallSet& t = m.flats[ti];
    for (int qi : lines) {
      const SmallSet& q = m.flats[qi];
      if (!q.subset_of(t) || q.subset_of(x)) continue;
      SmallSet meet = q & x;
      if (m.flat_rank[m.flat_index.at(meet)] != 1) return false;
    }
    return true;
  };

  std::unordered_map<int, std::optional<std::vector<int>>> memo;
  std::function<std::optional<std::vector<int>>(int)> rec =
      [&](int ti) -> std::optional<std::vector<int>> {
    auto it = memo.find(ti);
    if (it != memo.end()) return it->second;
    int rt = m.flat_rank[ti];
    const SmallSet& t = m.flats[ti];
    std::optional<std::vector<int>> result;
    if (rt == 0) {
      result = std::vector<int>{ti};
    } else if (rt == 1) {
      result = std::vector<int>{0, ti};
    } else if (rt == 2) {
      for (int i = 0; i < nf; i++)
        if (m.flat_rank[i] == 1 && m.flats[i].subset_of(t)) {
          result = std::vector<int>{0, i, ti};
          break;
        }
    } else {
      for (int xi = 0; xi < nf && !result; xi++) {
        if (m.flat_rank[xi] != rt - 1 || !m.flats[xi].subset_of(t)) continue;
        if (!modular_in(xi, ti)) continue;
        auto sub = rec(xi);
        if (sub) {
          sub->push_back(ti);
          result = std::move(sub);
        }
      }
    }
    memo[ti] = result;
    return result;
  };

  SupersolvableChain out;
  auto chain = rec(nf - 1);  // flats are sorted by rank, the ground set is last
  if (!chain) return out;
  out.supersolvable = true;
  std::vector<int> atoms;
  for (int i = 0; i < nf; i++)
    if (m.flat_rank[i] == 1) atoms.push_back(i);
  int prev = 0;
  for (size_t i = 0; i < chain->size(); i++) {
    out.chain.push_back(m.flats[(*chain)[i]]);
    if (i == 0) continue;
    int below = 0;
    for (int ai : atoms)
      if (m.flats[ai].subset_of(out.chain.back())) below++;
    out.e.push_back(below - prev);
    prev = below;
  }
  return out;
}

SupersolvableChain supersolvable_decompose(const Arrangement& a) {
  return supersolvable_decompose_matroid(intersection_matroid(a));
}

bool graph_is_chordal(const Graph& g) {
  int v = g.vertices;
  std::vector<std::vector<char>> adj(v, std::vector<char>(v, 0));
  for (auto [a, b] : g.edges) adj[a][b] = adj[b][a] = 1;
  std::vector<char> alive(v, 1);
  // Peel simplicial vertices; a graph is chordal iff this empties it.
  for (int round = 0; round < v; round++) {
    int pick = -1;
    for (int x = 0; x < v && pick < 0; x++) {
      if (!alive[x]) continue;
      bool simplicial = true;
      for (int y = 0; y < v && simplicial; y++) {
        if (!alive[y] || !adj[x][y]) continue;
        for (int z = y + 1; z < v && simplicial; z++)
          if (alive[z] && adj[x][z] && !adj[y][z]) simplicial = false;
      }
      if (simplicial) pick = x;
    }
    if (pick < 0) return false;
    alive[pick] = 0;
  }
  return true;
}

GraphicMcbReport graphic_mcb_predicate(const Graph& g) {
  std::vector<int> deg(g.vertices, 0);
  for (auto [u, v] : g.edges) {
    deg[u]++;
    deg[v]++;
  }
  GraphicMcbReport rep;
  rep.predicate = !g.edges.empty();
  for (auto [u, v] : g.edges)
    if (deg[u] < 2 || deg[v] < 2) rep.predicate = false;
  rep.min_failure = min_failure_degree(matroid_from_graph(g));
  return rep;
}

RecursiveMcbReport supersolvable_mcb_recursive(const Arrangement& a, int degree) {
  Matroid m = intersection_matroid(a);
  auto dec = supersolvable_decompose_matroid(m);
  if (!dec.supersolvable) fail("NotSupersolvable", "no modular coatom chain exists");
  RecursiveMcbReport rep;
  rep.direct = is_mcb(m, degree);

  SmallSet a0 = dec.chain[dec.chain.size() - 2];
  SmallSet a1 = m.ground() - a0;

  auto holds_on = [&](SmallSet s, int k) {
    if (s.empty()) return true;
    return is_mcb(restriction(m, s), k).holds;
  };

  // Members of a0 that a pair of new hyperplanes forces into play.
  SmallSet forced;
  auto a1els = a1.elements();
  for (size_t i = 0; i < a1els.size(); i++)
    for (size_t j = i + 1; j < a1els.size(); j++) {
      SmallSet pair;
      pair.set(a1els[i]);
      pair.set(a1els[j]);
      forced = forced | m.closure(pair);
    }
  SmallSet a0_strict = a0 - forced;

  rep.strict_reading = true;
  rep.loose_reading = true;
  for (int k = 0; k <= degree; k++) {
    bool top = holds_on(a1, k);
    if (!(top && holds_on(a0_strict, degree - k))) rep.strict_reading = false;
    if (!(top && holds_on(a0, degree - k))) rep.loose_reading = false;
  }
  rep.strict_agrees = rep.strict_reading == rep.direct.holds;
  rep.loose_agrees = rep.loose_reading == rep.direct.holds;
  return rep;
}

Arrangement extend_by_pencil(const Arrangement& a0, const IntMat& subspace_rows, int count) {
  int d = a0.dim;
  if (count < 0) fail("BadParameters", "negative count");
  if (static_cast<int>(a0.normals.size()) + count > 128)
    fail("BadParameters", "extension exceeds 128 hyperplanes");
  for (const auto& r : subspace_rows)
    if (static_cast<int>(r.size()) != d) fail("BadSubspace", "basis row length mismatch");

  IntMat wbasis = rref_canonical(subspace_rows);
  if (static_cast<int>(wbasis.size()) != d - 2)
    fail("BadSubspace", "subspace rank is " + std::to_string(wbasis.size()) + ", expected " +
                            std::to_string(d - 2));

  auto contains_subspace = [&](const IntVec& normal, const IntMat& basis) {
    for (const auto& row : basis)
      if (dot(normal, row) != 0) return false;
    return true;
  };

  bool inside_some = false;
  for (const auto& nv : a0.normals)
    if (contains_subspace(nv, wbasis)) inside_some = true;
  if (!inside_some) fail("BadSubspace", "subspace lies in no hyperplane of the arrangement");

  IntMat center = nullspace(a0.normals);
  Echelon wech;
  for (const auto& r : wbasis) wech.insert(r);
  bool center_escapes = false;
  for (const auto& z : center)
    if (!wech.contains(z)) center_escapes = true;
  if (!center_escapes)
    fail("BadSubspace", "arrangement center lies inside the subspace, no new rank direction");

  if (!supersolvable_decompose(a0).supersolvable)
    fail("NotSupersolvable", "base arrangement admits no modular coatom chain");

  IntMat pencil = nullspace(wbasis);  // two independent normals through the subspace
  const IntVec& u1 = pencil[0];
  const IntVec& u2 = pencil[1];

  std::set<IntVec> existing(a0.normals.begin(), a0.normals.end());
  Arrangement out = a0;
  // Candidate normals u1, u2, then u1 + t*u2 for t = 1, -1, 2, -2, ...
  // The single member containing the whole center is skipped: it would
  // join the old arrangement's flat instead of adding a fresh direction.
  auto try_candidate = [&](const IntVec& v) {
    if (count == 0) return;
    IntVec p = primitive_vector(v);
    if (contains_subspace(p, center)) return;
    if (!existing.insert(p).second) return;
    out.normals.push_back(std::move(p));
    count--;
  };
  try_candidate(u1);
  try_candidate(u2);
  for (long long t = 1; count > 0; t++) {
    IntVec plus(d), minus(d);
    for (int i = 0; i < d; i++) {
      plus[i] = u1[i] + t * u2[i];
      minus[i] = u1[i] - t * u2[i];
    }
    try_candidate(plus);
    try_candidate(minus);
  }
  return out;
}

bool pencil_invariant_holds(const Arrangement& a0, const Arrangement& extended) {
  size_t n0 = a0.normals.size();
  if (extended.dim != a0.dim || extended.normals.size() < n0)
    fail("BadParameters", "second arrangement does not extend the first");
  for (size_t i = 0; i < n0; i++)
    if (extended.normals[i] != a0.normals[i])
      fail("BadParameters", "second arrangement does not extend the first");
  IntMat whole = nullspace(extended.normals);
  for (size_t i = n0; i < extended.normals.size(); i++) {
    IntMat meet_rows = a0.normals;
    meet_rows.push_back(extended.normals[i]);
    if (nullspace(meet_rows) != whole) return false;
  }
  return true;
}

RegionsReport regions_count(const Arrangement& a) {
  Matroid m = intersection_matroid(a);
  if (m.rank > 3) fail("TooLarge", "rank " + std::to_string(m.rank) + " exceeds 3");
  RegionsReport rep;
  long long chi = characteristic_polynomial(m).eval(-1);
  rep.via_chi = chi < 0 ? -chi : chi;
  int n = m.n;
  if (m.rank <= 1) {
    rep.via_euler = m.rank == 0 ? 1 : 2;
  } else if (m.rank == 2) {
    rep.via_euler = 2LL * n;
  } else {
    // Sphere picture: each hyperplane cuts a great circle, each rank-2
    // flat an antipodal vertex pair; V - E + F = 2 gives the cell count.
    long long p2 = 0, incid = 0;
    for (size_t i = 0; i < m.flats.size(); i++) {
      if (m.flat_rank[i] != 2) continue;
      p2++;
      incid += static_cast<long long>(m.flats[i].count());
    }
    rep.via_euler = 2 - 2 * p2 + 2 * incid;
  }
  return rep;
}

}  // namespace mcb
