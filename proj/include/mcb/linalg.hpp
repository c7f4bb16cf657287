#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace mcb {

using BigInt = boost::multiprecision::cpp_int;
using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;

// Exact rank by fraction-free elimination; the input is copied.
int matrix_rank(IntMat m);

// Unique canonical description of the row space: reduced echelon over Q,
// each row scaled to a primitive integer vector with positive leading
// entry, rows ordered by pivot column. Two matrices have equal row spaces
// iff their canonical forms are identical.
IntMat rref_canonical(IntMat m);

// Canonical basis of {x : m x = 0}, one primitive integer row per free
// column. Empty matrix means the nullspace is zero.
IntMat nullspace(const IntMat& m);

// Divide through by the gcd and make the first nonzero entry positive.
IntVec primitive_vector(IntVec v);

struct Rational {
  BigInt num = 0, den = 1;  // den > 0, reduced
};
// Accepts "p", "-p", "p/q"; code BadRational on junk.
Rational parse_rational(const std::string& s);

// Clear denominators and reduce to a primitive integer vector.
IntVec rationals_to_primitive(const std::vector<Rational>& v);

}  // namespace mcb
