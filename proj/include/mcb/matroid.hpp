#pragma once

#include <unordered_map>
#include <vector>

#include "mcb/polynomial.hpp"
#include "mcb/smallset.hpp"

namespace mcb {

// Matroid given by its full list of flats (closed sets), including the
// bottom flat (the loops) and the ground set. Flats are kept sorted by
// (rank, canonical set order); ranks are chain depths from the bottom.
struct Matroid {
  int n = 0;
  int rank = 0;
  std::vector<SmallSet> flats;
  std::vector<int> flat_rank;
  std::unordered_map<SmallSet, int, SmallSetHash> flat_index;

  SmallSet ground() const { return SmallSet::full(n); }
  const SmallSet& bottom() const { return flats.front(); }
  bool loopless() const { return flats.front().empty(); }

  bool is_flat(SmallSet s) const { return flat_index.count(s) != 0; }

  // Smallest flat containing s (the family is intersection closed).
  SmallSet closure(SmallSet s) const;
  int rank_of(SmallSet s) const;

  // All flats except the ground set (the bottom flat is included).
  std::vector<SmallSet> proper_flats() const;
  std::vector<SmallSet> flats_of_rank(int r) const;
  std::vector<SmallSet> hyperplanes() const { return flats_of_rank(rank - 1); }
};

// Validating constructor. Checks: ground set present, intersection closed,
// and for every flat the minimal proper superflats partition the remaining
// elements. Throws Error with codes MissingTop,
// NotIntersectionClosed, BadPartition.
Matroid matroid_from_flats(int n, std::vector<SmallSet> flat_list);

// Fast path for constructions whose flat family is valid by construction
// (ranks supplied by the caller, no axiom sweep). Used for large paving
// instances where the quadratic validator is too slow.
Matroid matroid_from_ranked_flats(int n, std::vector<std::pair<SmallSet, int>> ranked);

Matroid uniform_matroid(int r, int n);

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Cycle matroid on the edge list; closed sets enumerated via the
// same-component closure operator. Simple graphs only: codes SelfLoop,
// DuplicateEdge.
Matroid matroid_from_graph(const Graph& g);

// Mobius function mu(bottom, F) for every flat, indexed like m.flats.
std::vector<long long> mobius_from_bottom(const Matroid& m);

// Covering relations and Mobius values of the lattice of flats. Indices
// refer to m.flats.
struct FlatLattice {
  std::vector<std::pair<int, int>> covers;  // (lower, upper), upper covers lower
  std::vector<long long> mobius;
};
FlatLattice mobius_and_lattice(const Matroid& m);

// Sum over flats of mu(bottom, F) t^(rank - rank(F)); identically zero
// when the matroid has loops.
IntPoly characteristic_polynomial(const Matroid& m);

// Connected components as a partition of the ground set; loops and
// coloops are singleton components.
std::vector<SmallSet> connected_components(const Matroid& m);

// Restriction to a subset of the ground set, renumbered ascending to
// 0..|s|-1. Flats are the distinct traces F & s.
Matroid restriction(const Matroid& m, SmallSet s);

}  // namespace mcb
