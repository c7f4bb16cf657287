#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcb/error.hpp"
#include "mcb/smallset.hpp"

namespace testutil {

// Runs f and returns the error code it threw, or "" when it returned.
template <typename F>
std::string error_code_of(F&& f) {
  try {
    f();
  } catch (const mcb::Error& e) {
    return e.code();
  }
  return "";
}

inline mcb::SmallSet set_of(std::initializer_list<int> xs) {
  return mcb::SmallSet::of(std::vector<int>(xs));
}

inline std::vector<mcb::SmallSet> all_subsets(int n) {
  std::vector<mcb::SmallSet> out;
  for (std::uint64_t mask = 0; mask < (1ULL << n); mask++) {
    mcb::SmallSet s;
    for (int i = 0; i < n; i++)
      if (mask >> i & 1) s.set(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace testutil
