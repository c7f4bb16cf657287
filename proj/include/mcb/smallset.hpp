#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mcb {

// Subset of {0, ..., n-1} for n <= 128, two machine words.
struct SmallSet {
  std::uint64_t w0 = 0, w1 = 0;

  static constexpr int max_elements = 128;

  static SmallSet full(int n) {
    SmallSet s;
    if (n >= 64) {
      s.w0 = ~0ull;
      s.w1 = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
    } else {
      s.w0 = (n == 64) ? ~0ull : ((1ull << n) - 1);
    }
    return s;
  }
  static SmallSet single(int i) {
    SmallSet s;
    s.set(i);
    return s;
  }

  void set(int i) { (i < 64 ? w0 : w1) |= 1ull << (i & 63); }
  void reset(int i) { (i < 64 ? w0 : w1) &= ~(1ull << (i & 63)); }
  bool test(int i) const { return ((i < 64 ? w0 : w1) >> (i & 63)) & 1; }
  bool empty() const { return w0 == 0 && w1 == 0; }
  int count() const { return std::popcount(w0) + std::popcount(w1); }

  SmallSet operator&(SmallSet o) const { return {w0 & o.w0, w1 & o.w1}; }
  SmallSet operator|(SmallSet o) const { return {w0 | o.w0, w1 | o.w1}; }
  SmallSet operator-(SmallSet o) const { return {w0 & ~o.w0, w1 & ~o.w1}; }
  bool operator==(const SmallSet&) const = default;

  bool subset_of(SmallSet o) const { return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0; }
  bool intersects(SmallSet o) const { return (w0 & o.w0) != 0 || (w1 & o.w1) != 0; }

  // Canonical total order used for all deterministic tie-breaking.
  bool operator<(SmallSet o) const { return w1 != o.w1 ? w1 < o.w1 : w0 < o.w0; }

  int lowest() const {  // -1 if empty
    if (w0) return std::countr_zero(w0);
    if (w1) return 64 + std::countr_zero(w1);
    return -1;
  }

  template <typename F>
  void for_each(F f) const {
    for (std::uint64_t x = w0; x;) {
      int i = std::countr_zero(x);
      f(i);
      x &= x - 1;
    }
    for (std::uint64_t x = w1; x;) {
      int i = std::countr_zero(x);
      f(64 + i);
      x &= x - 1;
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  static SmallSet of(const std::vector<int>& elems) {
    SmallSet s;
    for (int e : elems) s.set(e);
    return s;
  }

  std::string str() const {  // "{0,3,5}" for debugging and error messages
    std::string out = "{";
    bool first = true;
    for_each([&](int i) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    });
    return out + "}";
  }
};

struct SmallSetHash {
  std::size_t operator()(const SmallSet& s) const {
    std::uint64_t h = s.w0 * 0x9e3779b97f4a7c15ull;
    h ^= s.w1 + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace mcb
