#pragma once

#include "barw/sset.hpp"

namespace barw {

// Degreewise product, presented on the nondegenerate pairs.  Both factors are
// read up to `maxdim`, so they must have no hidden generators above their own
// top degree within that range.
SimplicialSet product_sset(const SimplicialSet& x, const SimplicialSet& y,
                           unsigned maxdim);

// (X x Y) / (X v Y); both factors based.
SimplicialSet smash(const SimplicialSet& x, const SimplicialSet& y, unsigned maxdim);

// Reduced suspension, modelled as S^1 smash X; raises maxdim by one.
SimplicialSet suspension(const SimplicialSet& x);

}  // namespace barw
