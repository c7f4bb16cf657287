#include "mcb/chow.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "mcb/error.hpp"
#include "mcb/linalg.hpp"

namespace mcb {

namespace {

// ---- sparse exact row reduction ------------------------------------------
//
// Degree slices are sparse with coefficients +-1; elimination stays small
// after per-row gcd reduction. First pass works in int64 with 128-bit
// intermediates; a detected overflow reruns the slice in big integers.

struct OverflowSignal {};

long long narrow_value(__int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw OverflowSignal{};
  return static_cast<long long>(v);
}
const BigInt& narrow_value(const BigInt& v) { return v; }

__int128 wide_gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
BigInt wide_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

using Row64 = std::vector<std::pair<int, long long>>;

template <class V, class W>
class SparseGauss {
 public:
  using Row = std::vector<std::pair<int, V>>;

  void add(Row row) {
    while (!row.empty()) {
      int c = row.front().first;
      auto it = pivot_.find(c);
      if (it == pivot_.end()) {
        pivot_.emplace(c, std::move(row));
        rank_++;
        return;
      }
      row = combine(row, it->second);
    }
  }

  int rank() const { return rank_; }

 private:
  // a*row - b*piv with the shared leading column cancelled, gcd reduced.
  static Row combine(const Row& row, const Row& piv) {
    W pl = static_cast<W>(piv.front().second);
    W rl = static_cast<W>(row.front().second);
    W g = wide_gcd(pl, rl);
    W a = pl / g, b = rl / g;
    std::vector<std::pair<int, W>> wide;
    size_t i = 1, j = 1;  // leading entries cancel exactly
    while (i < row.size() || j < piv.size()) {
      int rc = i < row.size() ? row[i].first : std::numeric_limits<int>::max();
      int pc = j < piv.size() ? piv[j].first : std::numeric_limits<int>::max();
      int col = std::min(rc, pc);
      W v = 0;
      if (rc == col) v += a * static_cast<W>(row[i++].second);
      if (pc == col) v -= b * static_cast<W>(piv[j++].second);
      if (v != 0) wide.emplace_back(col, std::move(v));
    }
    W rg = 0;
    for (const auto& [c, v] : wide) rg = wide_gcd(rg, v);
    Row out;
    out.reserve(wide.size());
    for (auto& [c, v] : wide) out.emplace_back(c, narrow_value(rg > 1 ? W(v / rg) : v));
    return out;
  }

  std::unordered_map<int, Row> pivot_;
  int rank_ = 0;
};

template <class V, class W>
std::pair<int, int> two_stage_rank_as(const std::vector<Row64>& base,
                                      const std::vector<Row64>& extra) {
  SparseGauss<V, W> g;
  for (const auto& r : base) {
    typename SparseGauss<V, W>::Row row(r.begin(), r.end());
    g.add(std::move(row));
  }
  int base_rank = g.rank();
  for (const auto& r : extra) {
    typename SparseGauss<V, W>::Row row(r.begin(), r.end());
    g.add(std::move(row));
  }
  return {base_rank, g.rank()};
}

std::pair<int, int> two_stage_rank(const std::vector<Row64>& base,
                                   const std::vector<Row64>& extra) {
  try {
    return two_stage_rank_as<long long, __int128>(base, extra);
  } catch (const OverflowSignal&) {
    return two_stage_rank_as<BigInt, BigInt>(base, extra);
  }
}

int rows_rank(const std::vector<Row64>& rows) { return two_stage_rank(rows, {}).first; }

// ---- presentation slices ---------------------------------------------------

// Variables of the presentation: nonempty proper flats in matroid order.
struct PresCtx {
  int n = 0;
  std::vector<SmallSet> vars;
  std::vector<SmallSet> comparable;  // masks over var indices, self included
};

PresCtx make_ctx(const Matroid& m) {
  PresCtx ctx;
  ctx.n = m.n;
  SmallSet top = m.ground();
  for (const auto& f : m.flats)
    if (!f.empty() && !(f == top)) ctx.vars.push_back(f);
  size_t v = ctx.vars.size();
  ctx.comparable.assign(v, SmallSet{});
  for (size_t i = 0; i < v; i++) {
    ctx.comparable[i].set(static_cast<int>(i));
    for (size_t j = i + 1; j < v; j++)
      if (ctx.vars[i].subset_of(ctx.vars[j]) || ctx.vars[j].subset_of(ctx.vars[i])) {
        ctx.comparable[i].set(static_cast<int>(j));
        ctx.comparable[j].set(static_cast<int>(i));
      }
  }
  return ctx;
}

// Monomial supported on a chain of variables: (var index, exponent) pairs
// ascending by index; index order refines rank order, so chains ascend.
using Mon = std::vector<std::pair<int, int>>;

struct DegreeSlice {
  std::vector<Mon> mons;
  std::map<Mon, int> index;
};

DegreeSlice chain_monomials(const PresCtx& ctx, int degree) {
  DegreeSlice slice;
  Mon cur;
  int v_count = static_cast<int>(ctx.vars.size());
  std::function<void(int, int)> rec = [&](int last, int rem) {
    if (rem == 0) {
      slice.index.emplace(cur, static_cast<int>(slice.mons.size()));
      slice.mons.push_back(cur);
      return;
    }
    for (int v = last + 1; v < v_count; v++) {
      if (last >= 0 && !ctx.vars[last].subset_of(ctx.vars[v])) continue;
      for (int e = 1; e <= rem; e++) {
        cur.emplace_back(v, e);
        rec(v, rem - e);
        cur.pop_back();
      }
    }
  };
  rec(-1, degree);
  return slice;
}

Mon times_var(const Mon& m, int v) {
  Mon out;
  out.reserve(m.size() + 1);
  bool placed = false;
  for (const auto& f : m) {
    if (f.first == v) {
      out.emplace_back(v, f.second + 1);
      placed = true;
    } else {
      if (!placed && f.first > v) {
        out.emplace_back(v, 1);
        placed = true;
      }
      out.push_back(f);
    }
  }
  if (!placed) out.emplace_back(v, 1);
  return out;
}

SmallSet support_of(const Mon& m) {
  SmallSet s;
  for (const auto& [v, e] : m) s.set(v);
  return s;
}

// Degree-(d+1) slice of the ideal: every degree-d chain monomial times
// every linear form A_0 - A_j, projected back onto chain monomials (a
// product leaving the chain world dies against the incomparability
// relations). Rows are sign-normalized and deduplicated.
std::vector<Row64> ideal_rows(const PresCtx& ctx, const DegreeSlice& lo, const DegreeSlice& hi) {
  std::vector<Row64> rows;
  int v_count = static_cast<int>(ctx.vars.size());
  for (const Mon& m : lo.mons) {
    SmallSet support = support_of(m);
    for (int j = 1; j < ctx.n; j++) {
      std::map<int, long long> acc;
      for (int v = 0; v < v_count; v++) {
        int coeff = (ctx.vars[v].test(0) ? 1 : 0) - (ctx.vars[v].test(j) ? 1 : 0);
        if (coeff == 0) continue;
        if (!(support - ctx.comparable[v]).empty()) continue;
        acc[hi.index.at(times_var(m, v))] += coeff;
      }
      Row64 row;
      for (const auto& [col, val] : acc)
        if (val != 0) row.emplace_back(col, val);
      if (row.empty()) continue;
      if (row.front().second < 0)
        for (auto& [col, val] : row) val = -val;
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

void require_presentable(const Matroid& m) {
  if (m.n > 6) fail("TooLarge", "presentation oracle is limited to 6 elements");
  if (!m.loopless()) fail("LoopyMatroid", "presentation needs a loopless matroid");
}

}  // namespace

IntPoly hilbert_fy(const Matroid& m) {
  if (!m.loopless()) fail("LoopyMatroid", "Chow Hilbert series needs a loopless matroid");
  size_t count = m.flats.size();
  std::vector<IntPoly> at(count, IntPoly::zero());
  at[0] = IntPoly::constant(1);
  IntPoly total = IntPoly::zero();
  for (size_t i = 0; i < count; i++) {
    for (size_t j = 0; j < i; j++) {
      if (!m.flats[j].subset_of(m.flats[i])) continue;
      int gap = m.flat_rank[i] - m.flat_rank[j];
      if (gap < 2) continue;  // single-step factor is empty
      std::vector<long long> step(gap, 1);
      step[0] = 0;
      at[i] = at[i] + at[j] * IntPoly(step);
    }
    total = total + at[i];
  }
  return total;
}

IntPoly hilbert_presentation_oracle(const Matroid& m, int max_degree) {
  require_presentable(m);
  if (max_degree < 0) max_degree = 0;
  PresCtx ctx = make_ctx(m);
  std::vector<long long> dims{1};
  DegreeSlice lo = chain_monomials(ctx, 0);
  // the ring is generated in degree 1, so a vanishing slice ends the series
  for (int d = 1; d <= std::min(max_degree, m.rank); d++) {
    DegreeSlice hi = chain_monomials(ctx, d);
    int rk = rows_rank(ideal_rows(ctx, lo, hi));
    dims.push_back(static_cast<long long>(hi.mons.size()) - rk);
    lo = std::move(hi);
  }
  return IntPoly(dims);
}

std::vector<FyMonomial> fy_basis_enumerate(const Matroid& m, int degree) {
  if (!m.loopless()) fail("LoopyMatroid", "basis enumeration needs a loopless matroid");
  std::vector<FyMonomial> out;
  FyMonomial cur;
  size_t count = m.flats.size();
  std::function<void(size_t, int)> rec = [&](size_t last, int rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (size_t i = last + 1; i < count; i++) {
      if (!m.flats[last].subset_of(m.flats[i])) continue;
      int gap = m.flat_rank[i] - m.flat_rank[last];
      int top_exp = std::min(gap - 1, rem);
      for (int e = 1; e <= top_exp; e++) {
        cur.push_back(FyFactor{m.flats[i], e});
        rec(i, rem - e);
        cur.pop_back();
      }
    }
  };
  rec(0, degree);  // flats[0] is the bottom flat
  return out;
}

AnnihilatorReport annihilator_quotient_dims(const Matroid& m, SmallSet hyperplane) {
  require_presentable(m);
  auto it = m.flat_index.find(hyperplane);
  if (it == m.flat_index.end() || m.flat_rank[it->second] != m.rank - 1 || hyperplane.empty())
    fail("NotAHyperplane",
         "need a nonempty flat of rank " + std::to_string(m.rank - 1) + ", got " +
             hyperplane.str());

  PresCtx ctx = make_ctx(m);
  int fvar = -1;
  for (size_t v = 0; v < ctx.vars.size(); v++)
    if (ctx.vars[v] == hyperplane) fvar = static_cast<int>(v);

  AnnihilatorReport rep;
  rep.hyperplane = hyperplane;
  rep.dims.assign(m.rank, 0);
  DegreeSlice lo = chain_monomials(ctx, 0);
  for (int d = 0; d + 1 < m.rank; d++) {  // the top degree multiplies into 0
    DegreeSlice hi = chain_monomials(ctx, d + 1);
    std::vector<Row64> mult;
    for (const Mon& mon : lo.mons) {
      if (!(support_of(mon) - ctx.comparable[fvar]).empty()) continue;
      mult.push_back(Row64{{hi.index.at(times_var(mon, fvar)), 1}});
    }
    auto [base, all] = two_stage_rank(ideal_rows(ctx, lo, hi), mult);
    rep.dims[d] = all - base;
    lo = std::move(hi);
  }
  for (long long v : rep.dims) rep.total += v;
  return rep;
}

}  // namespace mcb
