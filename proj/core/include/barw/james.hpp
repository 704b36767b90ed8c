#pragma once

#include <vector>

#include "barw/homology.hpp"
#include "barw/sset.hpp"

namespace barw {

// Word-length-truncated free based monoid on a based simplicial set: degree-n
// simplices are words of length <= L over the non-base n-simplices, with
// letterwise structure maps and base-letter deletion.
struct JamesTruncation {
  unsigned letter_bound = 0;
  SimplicialSet space;
  // words, per degree, in item order (indices into the base's simplex lists)
  std::vector<std::vector<std::vector<int>>> words;
};

JamesTruncation james(const SimplicialSet& x, unsigned letter_bound, unsigned maxdim);

// Homology of the k-fold smash power, computed by iterated smash from first
// principles; the independent oracle for the word-filtration homology.
std::vector<HomologyResult> smash_power_oracle(const SimplicialSet& x, unsigned k,
                                               unsigned maxdim);

}  // namespace barw
