#pragma once

#include <vector>

#include "mcb/cover.hpp"
#include "mcb/smallset.hpp"

namespace mcb {

// Family of nonempty subsets of {0..n-1} containing every singleton and
// closed under union of intersecting members.
struct BuildingSet {
  int n = 0;
  std::vector<SmallSet> members;  // sorted by (size, canonical), deduped

  bool connected() const;  // ground set is a member
  std::vector<SmallSet> maximal_proper() const;
};

// Validating constructor; codes EmptyMember,
// MissingSingleton, MissingUnion.
BuildingSet building_set(int n, std::vector<SmallSet> members);

// Smallest building set containing the input: add singletons, then saturate
// unions of intersecting pairs to a fixed point.
BuildingSet building_set_closure(int n, std::vector<SmallSet> members);

// Degree-a check over the members other than the ground set.
McbReport bs_mcb(const BuildingSet& b, int degree);
std::optional<int> bs_min_nontrivial_degree(const BuildingSet& b);

// For each maximal member I of B minus the ground set, the number of
// maximal members of B strictly inside I; the predicate asks for at least
// two everywhere. Requires a connected building set (NotConnected).
struct NestReport {
  bool predicate = false;
  std::vector<std::pair<SmallSet, int>> counts;  // (maximal member, count inside)
};
NestReport nestmcb_predicate(const BuildingSet& b);

// Connected components of the intersection graph on the maximal members of
// B minus the ground set; reports c and n - c.
struct BsComponents {
  int components = 0;
  int n_minus_c = 0;
};
BsComponents bs_components(const BuildingSet& b);

}  // namespace mcb
