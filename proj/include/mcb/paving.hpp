#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcb/cover.hpp"
#include "mcb/matroid.hpp"
#include "mcb/smallset.hpp"

namespace mcb {

// Rank-(m+1) matroid whose proper flats are every subset of size < m plus
// the blocks. Valid iff each m-subset of the ground set lies in exactly
// one block; checked by hashing the m-subsets of every block and counting.
// Codes UncoveredMSet, DoublyCovered, TooSmallBlock, TooLarge.
Matroid paving_from_blocks(int n, int m, std::vector<SmallSet> blocks);

// Exact minimum number of hyperplanes whose union is the ground set,
// with one optimal cover as witness.
Cover min_hyperplane_cover(const Matroid& m);

// Degree bound (k-1) + floor(n / (2 C k^2 (m-1))) read off a cover by the
// k largest hyperplanes whose size ratio stays below C. in_regime records
// whether n >= 4 C k^3 (m-1); the factor 4 is the desk-scale stand-in for
// "much larger" and is echoed in regime_factor.
struct PavBound1 {
  int bound = 0;
  bool in_regime = false;
  int regime_factor = 4;
  int k = 0;
  int ratio_cap = 0;
  std::vector<SmallSet> designated;
};
// Arithmetic core: no instance, no ratio or cover checks.
PavBound1 pav_bound_part1_values(int n, int m, int k, int ratio_cap);
// Instance form: designates the k largest hyperplanes, requires them to
// cover the ground set (NotACover) with max/min < ratio_cap (RatioViolated).
PavBound1 pav_bound_part1(const Matroid& m, int k, int ratio_cap);

// Largest degree strictly below 1 + (k-1) min|H_i| / (k (m-1)), i.e.
// ceil((k-1) min|H_i| / (k (m-1))). The designated hyperplanes must cover
// the ground set (NotACover) and be hyperplanes of m (BadParameters).
struct PavBound2 {
  int bound = 0;
  int k = 0;
  long long min_designated = 0;
};
PavBound2 pav_bound_part2(const Matroid& m, const std::vector<SmallSet>& designated);

// Deterministic-seeded sparse paving of rank m+1: (m+1)-subsets are
// adopted as blocks by rejection sampling (pairwise meets below m),
// leftover m-subsets become their own blocks. n <= 20 (TooLarge).
Matroid random_sparse_paving(int n, int m, std::uint64_t seed);

// k disjoint blocks of size n/k plus every crossing m-subset: the
// canonical instance family for the part-1 regime. Requires k | n and
// n/k >= m.
Matroid partition_paving(int n, int m, int k);

}  // namespace mcb
