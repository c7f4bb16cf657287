#pragma once

#include <optional>
#include <vector>

#include "mcb/matroid.hpp"
#include "mcb/smallset.hpp"

namespace mcb {

// Exact minimum cover of `target` by members (each taken as member & target),
// with union required to equal target. Searches sizes up to `cap`; returns
// nullopt if no cover of size <= cap exists. Branch and bound: greedy upper
// bound, sum-of-largest-sizes lower bound, branch on the uncovered element
// with fewest candidates, candidates ordered largest first with canonical
// set order breaking ties. Fully deterministic.
struct Cover {
  int size = 0;
  std::vector<SmallSet> members;
};
std::optional<Cover> min_cover(SmallSet target, const std::vector<SmallSet>& members, int cap);

// Degree-a check for a set family over {0..n-1}: fails iff some p has a
// cover of E minus p by at most a members avoiding p (union exactly E minus
// p). Members equal to the ground set are ignored. Repeated members never
// shrink a cover, so multiset semantics coincide with set semantics here.
struct McbReport {
  bool holds = true;
  int degree = 0;
  int p = -1;                     // failing element when holds is false
  std::vector<SmallSet> witness;  // cover of E minus p avoiding p
};
McbReport mcb_check_family(int n, const std::vector<SmallSet>& family, int degree);

// Exact minimum number of p-avoiding family members whose union is exactly
// the ground set minus p, with one optimal cover; nullopt when even the
// full p-avoiding family falls short.
std::optional<Cover> min_cover_avoiding(int n, const std::vector<SmallSet>& family, int p);

// Least degree where mcb_check_family fails: min over p of the exact
// minimum p-avoiding cover size. nullopt when no p admits any cover.
std::optional<int> min_failure_degree_family(int n, const std::vector<SmallSet>& family);

// Least number of proper members whose union contains E minus p for some p
// (members may touch p; they are projected). nullopt when infeasible.
std::optional<int> min_nontrivial_degree_family(int n, const std::vector<SmallSet>& family);

McbReport is_mcb(const Matroid& m, int degree);
std::optional<int> min_failure_degree(const Matroid& m);
std::optional<int> min_nontrivial_degree(const Matroid& m);

struct McbProfile {
  std::optional<int> min_failure_degree;
  std::optional<int> min_nontrivial_degree;
};
McbProfile mcb_profile(const Matroid& m);

}  // namespace mcb
