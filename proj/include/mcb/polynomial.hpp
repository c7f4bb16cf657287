#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcb {

// Dense integer polynomial, coefficient of t^i at c[i].
struct IntPoly {
  std::vector<long long> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<long long> coeffs) : c(std::move(coeffs)) { trim(); }
  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(long long v) { return IntPoly({v}); }
  static IntPoly monomial(int deg, long long v = 1) {
    std::vector<long long> cs(deg + 1, 0);
    cs[deg] = v;
    return IntPoly(std::move(cs));
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return c.empty() ? -1 : static_cast<int>(c.size()) - 1; }
  long long coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
  }

  bool operator==(const IntPoly& o) const { return c == o.c; }

  IntPoly operator+(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); i++) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); i++) r.c[i] += o.c[i];
    r.trim();
    return r;
  }
  IntPoly operator-(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); i++) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); i++) r.c[i] -= o.c[i];
    r.trim();
    return r;
  }
  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); i++)
      for (size_t j = 0; j < o.c.size(); j++) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
  }

  long long eval(long long x) const {
    long long v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  }

  // Quotient by (t - root) when the division is exact; remainder returned too.
  std::pair<IntPoly, long long> divide_linear(long long root) const {
    if (is_zero()) return {IntPoly(), 0};
    std::vector<long long> q(c.size() - 1, 0);
    long long carry = 0;
    for (int i = degree(); i >= 1; i--) {
      carry = carry * root + c[i];
      q[i - 1] = carry;
    }
    long long rem = carry * root + c[0];
    return {IntPoly(std::move(q)), rem};
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; i--) {
      long long v = c[i];
      if (v == 0) continue;
      if (!out.empty()) out += v > 0 ? " + " : " - ";
      else if (v < 0) out += "-";
      long long a = v < 0 ? -v : v;
      if (i == 0 || a != 1) out += std::to_string(a);
      if (i >= 1) out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return out;
  }
};

}  // namespace mcb
