#pragma once

#include "barw/moore.hpp"
#include "barw/wtuple.hpp"

namespace barw {

// The explicit path-valued homomorphism: a semigroup-mode tuple
// (x_0,t_1,...,x_n) over a monoid maps to the path v_0+...+v_n of length
// t_1+...+t_n+1 inside the simplex (e, x_0, ..., x_n), linear segment by
// segment in barycentric coordinates.
EmPath zeta(const FinMonoid& m, const WTuple& a);

// Monoid structure on paths from the base vertex into the vertex skeleton:
// w1 (+) w2 = w1 + (endpoint of w1) . w2.
EmPath pem_oplus(const FinMonoid& m, const EmPath& w1, const EmPath& w2);

// Unit for the (+) structure: the empty path at the unit vertex.
EmPath pem_unit(const FinMonoid& m);

// Whether the path starts at the unit vertex and ends at a vertex.
bool pem_invariants_ok(const FinMonoid& m, const EmPath& p);

// Element at the endpoint vertex; requires pem_invariants_ok.
unsigned pem_endpoint(const FinMonoid& m, const EmPath& p);

}  // namespace barw
