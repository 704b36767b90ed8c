#pragma once

#include <vector>

#include "barw/matrix.hpp"

namespace barw {

struct SnfResult {
  IntMatrix d;  // diagonal, d(0,0) | d(1,1) | ..., nonnegative, zeros trailing
  IntMatrix u;  // unimodular, rows() x rows() of input
  IntMatrix v;  // unimodular, cols() x cols() of input
  // u * a * v == d

  // Nonzero diagonal entries, in divisibility order.
  std::vector<Int> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

// Smith normal form over Z.  Deterministic: the pivot is the minimal-absolute-
// value nonzero entry of the working submatrix, ties broken by (row, col).
SnfResult smith_normal_form(const IntMatrix& a);

// Rank over F_p by Gaussian elimination mod p.  Independent of the SNF
// routine so the two can be played against each other in tests.
std::size_t rank_mod_p(const IntMatrix& a, const Int& p);

}  // namespace barw
