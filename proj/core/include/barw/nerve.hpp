#pragma once

#include "barw/category.hpp"
#include "barw/chain.hpp"
#include "barw/sset.hpp"
#include "barw/table.hpp"

namespace barw {

// Nerve of a monoid: degree-n generators are the n-tuples with no unit
// entries; inner faces multiply adjacent entries, outer faces drop.  Based at
// the unique vertex.
SimplicialSet nerve(const FinMonoid& m, unsigned maxdim);

// Nerve of a category: generators are composable tuples with no identity
// entries; based only when there is a single object.
SimplicialSet nerve(const FinCategory& c, unsigned maxdim);

// Semisimplicial nerve of a semigroup: ALL n-tuples in every degree, no
// degeneracy quotient.  Models the construction that ignores degeneracies.
SimplicialSet semigroup_nerve(const FinSemigroup& g, unsigned maxdim);

// Chains of a simplicial set: normalized complex on the nondegenerate
// generators (degenerate faces contribute zero); for a semisimplicial set the
// unnormalized complex on all generators.  Boundary = alternating face sum.
ChainComplex chains(const SimplicialSet& x);

}  // namespace barw
