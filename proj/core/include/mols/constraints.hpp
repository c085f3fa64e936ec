#pragma once

#include <array>
#include <string>
#include <vector>

#include "mols/latin.hpp"

namespace mols {

// The seven scale-factor conditions on a reduced pair (a1, a2) over GF(q),
// evaluated as "satisfied" when the quantity is nonzero:
//   1: 2*a1 - a2            5: a1^2 + a1*a2 - a2^2
//   2: 2*a2 - a1            6: a2^2 + a1*a2 - a1^2
//   3: a1 + a2              7: a1^2 - 3*a1*a2 + a2^2
//   4: a1^2 - a1*a2 + a2^2
// Violating 1, 2 or 3 admits eight-cell stopping structures; 4..7 govern
// ten-cell ones. Swapping a1 and a2 swaps 1<->2 and 5<->6.
struct ConstraintReport {
  int q = 0;
  int a1 = 0, a2 = 0;          // reduced scale factors the checks ran on
  std::array<bool, 7> ok{};    // ok[i] = constraint i+1 satisfied
  bool all() const;
  std::vector<int> violated() const; // 1-based constraint numbers
};

// Reduces both pairs and evaluates the constraints. Throws
// Errc::ZeroScaleFactor for zero coefficients and Errc::SameClass when the
// pairs lie in the same equivalence class.
ConstraintReport check_constraints(const Field& f, ScalePair p1, ScalePair p2);
ConstraintReport check_constraints(const Field& f, int a1, int a2);

struct GoodTupleSearch {
  std::vector<std::vector<int>> tuples; // each ascending, starts with 1
  // Characteristic 2 or 3 weakens the distance guarantees the constraints
  // exist for; the checks themselves still evaluate.
  bool small_characteristic = false;
};

// All ascending tuples (1, a2, ..., am) of reduced scale factors whose pairs
// satisfy every constraint, in lexicographic order, at most `limit` of them.
// Throws Errc::NoneFound when the field admits no such tuple.
GoodTupleSearch find_good_tuples(const Field& f, int m, int limit);

// Scale pairs of the lattice construction with block size c over prime q:
// pairs (q-i, i+1) for i = 1..c-2, plus their reduced representatives and
// the pairwise constraint reports. Throws Errc::NonPrimeOrder for composite
// q and Errc::InvalidBlockSize unless 3 <= c <= q.
struct LatticeFactors {
  std::vector<ScalePair> pairs;
  std::vector<ScalePair> reduced;
  std::vector<ConstraintReport> reports; // one per unordered pair, i<j order
};

LatticeFactors lattice_scale_factors(const Field& f, int c);

} // namespace mols
