#include "mcb/linalg.hpp"

#include <algorithm>

#include "mcb/error.hpp"

namespace mcb {

namespace {

BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void reduce_row(IntVec& row) {
  BigInt g = 0;
  for (const auto& x : row) g = gcd(g, x);
  if (g > 1)
    for (auto& x : row) x /= g;
}

// Forward elimination with cross-multiplication; rows are gcd-reduced after
// each step so entries stay small. Returns pivot (row, col) pairs.
std::vector<std::pair<int, int>> echelon(IntMat& m) {
  std::vector<std::pair<int, int>> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; c++) {
    int pr = -1;
    for (int i = r; i < rows; i++)
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    for (int i = r + 1; i < rows; i++) {
      if (m[i][c] == 0) continue;
      BigInt a = m[r][c], b = m[i][c];
      for (int j = c; j < cols; j++) m[i][j] = m[i][j] * a - m[r][j] * b;
      reduce_row(m[i]);
    }
    pivots.emplace_back(r, c);
    r++;
  }
  return pivots;
}

}  // namespace

int matrix_rank(IntMat m) { return static_cast<int>(echelon(m).size()); }

IntVec primitive_vector(IntVec v) {
  reduce_row(v);
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

IntMat rref_canonical(IntMat m) {
  auto pivots = echelon(m);
  int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  // eliminate above each pivot, bottom up
  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; k--) {
    auto [r, c] = pivots[k];
    for (int i = 0; i < r; i++) {
      if (m[i][c] == 0) continue;
      BigInt a = m[r][c], b = m[i][c];
      for (int j = 0; j < cols; j++) m[i][j] = m[i][j] * a - m[r][j] * b;
      reduce_row(m[i]);
    }
  }
  IntMat out;
  for (auto& [r, c] : pivots) out.push_back(primitive_vector(std::move(m[r])));
  return out;
}

IntMat nullspace(const IntMat& m) {
  if (m.empty()) return {};
  int cols = static_cast<int>(m[0].size());
  IntMat r = rref_canonical(m);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : r) {
    int c = 0;
    while (c < cols && row[c] == 0) c++;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  IntMat out;
  for (int f = 0; f < cols; f++) {
    if (is_pivot[f]) continue;
    BigInt L = 1;
    for (size_t i = 0; i < r.size(); i++) {
      BigInt p = r[i][pivot_col[i]];
      L = L / gcd(L, p) * p;
    }
    IntVec x(cols, 0);
    x[f] = L;
    for (size_t i = 0; i < r.size(); i++) x[pivot_col[i]] = -L * r[i][f] / r[i][pivot_col[i]];
    out.push_back(primitive_vector(std::move(x)));
  }
  return out;
}

Rational parse_rational(const std::string& s) {
  auto bad = [&]() { fail("BadRational", "cannot parse rational '" + s + "'"); };
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) bad();
  auto slash = t.find('/');
  std::string ns = slash == std::string::npos ? t : t.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : t.substr(slash + 1);
  auto is_int = [](const std::string& x) {
    if (x.empty()) return false;
    size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); i++)
      if (!isdigit(static_cast<unsigned char>(x[i]))) return false;
    return true;
  };
  if (!is_int(ns) || !is_int(ds)) bad();
  Rational q;
  q.num = BigInt(ns);
  q.den = BigInt(ds);
  if (q.den == 0) bad();
  if (q.den < 0) {
    q.den = -q.den;
    q.num = -q.num;
  }
  BigInt g = gcd(q.num, q.den);
  if (g > 1) {
    q.num /= g;
    q.den /= g;
  }
  return q;
}

IntVec rationals_to_primitive(const std::vector<Rational>& v) {
  BigInt L = 1;
  for (const auto& q : v) L = L / gcd(L, q.den) * q.den;
  IntVec out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.num * (L / q.den));
  return primitive_vector(std::move(out));
}

}  // namespace mcb
