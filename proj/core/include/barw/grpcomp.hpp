#pragma once

#include "barw/diagram.hpp"
#include "barw/homology.hpp"
#include "barw/table.hpp"

namespace barw {

// Presentation of the universal abelian group of a commutative monoid:
// one generator per element, one relation column x + y - xy per ordered pair.
struct CommMonoidPresentation {
  std::size_t generators = 0;
  IntMatrix relations;  // generators x relation-columns
};

CommMonoidPresentation presentation_of(const FinMonoid& m);  // commutative only

AbelianGroup grothendieck_group(const CommMonoidPresentation& p);
AbelianGroup grothendieck_group(const FinMonoid& m);

// H_1 of the classifying model of m (nerve truncated at 3).
AbelianGroup h1_of_bm(const FinMonoid& m);

// Span diagram  l <- point -> r  of based simplicial sets.
Diagram span_diagram(const SimplicialSet& l, const SimplicialSet& r, unsigned maxdim);

// Reduced homology of the homotopy colimit of  nerve(g1) <- point -> nerve(g2)
// against the degreewise direct sum of the two nerve homologies.
struct HocolimCheckLine {
  unsigned degree = 0;
  AbelianGroup lhs, rhs;
  bool pass = false;
};
struct HocolimCheckReport {
  std::vector<HocolimCheckLine> lines;
  bool pass = true;
};
HocolimCheckReport hocolim_preservation_check(const FinMonoid& g1, const FinMonoid& g2,
                                              unsigned maxdeg);

}  // namespace barw
