#pragma once

#include <vector>

#include "mcb/matroid.hpp"
#include "mcb/polynomial.hpp"
#include "mcb/smallset.hpp"

namespace mcb {

// Hilbert series of the Chow ring, summed over flags of flats. Flags live
// in the lattice minus the bottom flat; the ground set itself is a valid
// flag entry. A step from F to G contributes t + t^2 + ... + t^(gap-1)
// with gap = rank(G) - rank(F), so steps of gap 1 kill the flag.
// Loopless input only (LoopyMatroid).
IntPoly hilbert_fy(const Matroid& m);

// Independent check: per-degree dimension of the graded ring presented by
// one variable per nonempty proper flat, modulo products of incomparable
// flats and the linear forms sum_{F: i in F} x_F - sum_{F: j in F} x_F.
// Exact integer row reduction on each degree slice. Guard: at most 6
// elements (TooLarge); loopless only (LoopyMatroid).
IntPoly hilbert_presentation_oracle(const Matroid& m, int max_degree);

// One factor of a basis monomial: a flat raised to a positive power.
struct FyFactor {
  SmallSet flat;
  int exponent = 0;
};
using FyMonomial = std::vector<FyFactor>;  // factors along an ascending chain

// All degree-d basis monomials: chains of flats above the bottom (ground
// set allowed) with 1 <= exponent <= rank gap - 1 at every step. The count
// per degree matches the hilbert_fy coefficient.
std::vector<FyMonomial> fy_basis_enumerate(const Matroid& m, int degree);

// Per-degree dimensions of the quotient of the Chow ring by the
// annihilator of x_F, for a hyperplane flat F: degree-d entry is the rank
// of multiplication by x_F from degree d to degree d+1. Same guard as the
// presentation oracle (TooLarge); F must be a flat of rank rank(M)-1 that
// is a variable of the presentation (NotAHyperplane).
struct AnnihilatorReport {
  SmallSet hyperplane;
  std::vector<long long> dims;
  long long total = 0;
};
AnnihilatorReport annihilator_quotient_dims(const Matroid& m, SmallSet hyperplane);

}  // namespace mcb
