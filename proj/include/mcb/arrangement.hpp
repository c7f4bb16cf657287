#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcb/cover.hpp"
#include "mcb/linalg.hpp"
#include "mcb/matroid.hpp"
#include "mcb/polynomial.hpp"
#include "mcb/smallset.hpp"

namespace mcb {

// Central hyperplane arrangement: primitive integer normals with positive
// leading entry, pairwise distinct (scalar multiples identified).
struct Arrangement {
  int dim = 0;
  std::vector<IntVec> normals;
};

// Scales each normal to a primitive integer vector. Codes ZeroNormal,
// BadNormal (length mismatch), DuplicateHyperplane.
Arrangement arrangement_from_normals(int dim, const std::vector<std::vector<Rational>>& normals);
Arrangement arrangement_from_integer_normals(int dim, std::vector<IntVec> normals);

// One hyperplane x_u = x_v per edge.
Arrangement graphic_arrangement(const Graph& g);

// Matroid on hyperplane indices: rank of a subset is the rank of its
// normal-vector matrix; a flat is the maximal index set with a given
// intersection subspace. Exact integer elimination throughout.
Matroid intersection_matroid(const Arrangement& a);

// Projective line arrangement recorded by incidences: for every pairwise
// intersection point, the set of lines through it (multiplicity >= 2).
struct LineArrangement {
  int lines = 0;
  std::vector<SmallSet> points;
};

// Validates that distinct points share at most one line and that every
// pair of lines meets in exactly one listed point.
LineArrangement lines_from_incidences(int n_lines, std::vector<SmallSet> points);

// Builds the incidences from exact projective coefficient triples.
// Codes ZeroLine, DuplicateLine.
LineArrangement lines_from_triples(const std::vector<std::array<Rational, 3>>& triples);

// Multiplicity counts t_k, plus the sign diagnostic
//   t_2 + t_3 - (#lines + sum_{j>=5} (j-4) t_j),
// reported for >= 4 lines. The additive constant is the line count; the
// interpretation tag says so in every report.
struct TVectorReport {
  std::map<int, long long> t;
  bool diagnostic_available = false;
  long long diagnostic = 0;
  std::string k_interpretation = "line_count";
};
TVectorReport line_arrangement_tvector(const LineArrangement& l);

// Rank <= 3 matroid on line indices: proper flats are the empty set, the
// single lines, and the multiple points; a point on every line collapses
// the rank to 2.
Matroid line_matroid(const LineArrangement& l);

// Incidence-classified families with modular points. All three are built
// combinatorially, so no irrational coordinates are ever needed.
struct HhFamily {
  std::string kind;
  std::vector<int> params;
  LineArrangement lines;
  Matroid matroid;
};
HhFamily hh_two_modular(int a, int b);  // 2 <= a < b, else BadParameters
HhFamily hh_three_modular(int m);       // m > 3, else BadParameters
HhFamily hh_four_modular();

// Closed degree interval [m, n_lines - m - 1] plus the companion degree
// bound floor(m/3); empty_range when the interval is inverted.
struct DegreeRange {
  int lo = 0;
  int hi = 0;
  bool empty_range = true;
  int companion_bound = 0;
};
DegreeRange unexpected_degree_range(int n_lines, int m);

// Modular-coatom chain search. chain is bottom ... ground ascending when
// found; e[i] counts the rank-1 flats below chain[i+1] but not chain[i].
struct SupersolvableChain {
  bool supersolvable = false;
  std::vector<int> e;
  std::vector<SmallSet> chain;
};
SupersolvableChain supersolvable_decompose_matroid(const Matroid& m);
SupersolvableChain supersolvable_decompose(const Arrangement& a);

// Perfect-elimination-ordering search (maximum cardinality order).
bool graph_is_chordal(const Graph& g);

// Degree >= 2 on both endpoints of every edge, next to the engine value
// for the cycle matroid so callers can compare the two.
struct GraphicMcbReport {
  bool predicate = false;
  std::optional<int> min_failure;
};
GraphicMcbReport graphic_mcb_predicate(const Graph& g);

// Split-based degree-a check for a supersolvable arrangement: peel the top
// chain level into A1, keep A0, and test all degree splits k + (a-k). The
// inner family is read two ways (with and without discounting the A0
// members forced by pairs of A1 members); the direct engine verdict is
// authoritative and both agreement flags are reported.
struct RecursiveMcbReport {
  McbReport direct;
  bool strict_reading = false;
  bool loose_reading = false;
  bool strict_agrees = false;
  bool loose_agrees = false;
};
RecursiveMcbReport supersolvable_mcb_recursive(const Arrangement& a, int degree);

// Appends `count` hyperplanes through a (dim-2)-subspace given by its
// basis rows. The subspace must lie in an existing hyperplane and must not
// contain the center of a0; the one pencil member through the center is
// skipped, so every new hyperplane meets the center in the new center.
// Codes BadSubspace, NotSupersolvable.
Arrangement extend_by_pencil(const Arrangement& a0, const IntMat& subspace_rows, int count);

// Exact subspace check: every hyperplane of `extended` beyond a0 meets
// the intersection of a0 in the intersection of all of `extended`.
bool pencil_invariant_holds(const Arrangement& a0, const Arrangement& extended);

// Regions of the real complement, two ways: |chi(-1)| and the Euler
// relation on the induced sphere complex. Rank <= 3 only (TooLarge).
struct RegionsReport {
  long long via_chi = 0;
  long long via_euler = 0;
};
RegionsReport regions_count(const Arrangement& a);

}  // namespace mcb
