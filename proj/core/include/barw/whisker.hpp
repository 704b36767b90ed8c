#pragma once

#include "barw/rational.hpp"
#include "barw/table.hpp"

namespace barw {

// Element of the whiskered monoid: either a monoid element, or a point of the
// attached interval with coordinate in [0,1).  Coordinate 1 is the same point
// as the unit of m and is always stored in element form; coordinate 0 is the
// new unit.
struct WhiskerElem {
  bool on_whisker = false;
  unsigned elem = 0;  // valid when !on_whisker
  Rat s;              // valid when on_whisker, in [0,1)

  bool operator==(const WhiskerElem& o) const = default;
};

WhiskerElem whisker_of(const FinMonoid& m, Rat s);  // canonicalizes s = 1
WhiskerElem whisker_elem(unsigned x);
WhiskerElem whisker_unit();  // coordinate 0

WhiskerElem whisker_mul(const FinMonoid& m, const WhiskerElem& u, const WhiskerElem& v);

// Collapse of the whisker onto the unit; a homomorphism to m.
unsigned whisker_q(const FinMonoid& m, const WhiskerElem& u);

}  // namespace barw
