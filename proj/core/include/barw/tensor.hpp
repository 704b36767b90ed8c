#pragma once

#include <map>
#include <tuple>

#include "barw/diagram.hpp"
#include "barw/twobar.hpp"

namespace barw {

// Degree-wise coequalizer of  ∐_f X(dst f) x D(src f)  ⇉  ∐_a X(a) x D(a),
// identifying (X(f)x, y) with (x, D(f)y).  X is a diagram over c.op(), D over
// c.  The result keeps a lookup from input pairs to quotient simplices.
class TensorResult {
 public:
  SimplicialSet space;

  // Quotient simplex of the pair (x, y) at the given object.
  Simplex image(unsigned obj, const Simplex& x, const Simplex& y) const;

  using Key = std::tuple<unsigned, Simplex, Simplex>;
  std::vector<std::map<Key, Simplex>> lookup;  // per degree
};

TensorResult tensor_over_c(const Diagram& x, const Diagram& d, unsigned maxdim);

// Bar-model homotopy colimit: B(*, c, c) tensored over c with the diagram.
TensorResult hocolim(const Diagram& d, unsigned maxdim);

}  // namespace barw
