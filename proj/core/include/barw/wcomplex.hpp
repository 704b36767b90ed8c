#pragma once

#include <map>
#include <string>
#include <vector>

#include "barw/chain.hpp"
#include "barw/table.hpp"

namespace barw {

// Cubical cell of the interval-word resolution of a semigroup: a sequence of
// blocks (nonempty words); walls between blocks are parameters frozen at 1,
// free parameters inside a block range over (0,1).  Dimension is the number
// of free parameters, sum of (block length - 1).
struct BlockCell {
  std::vector<std::vector<unsigned>> blocks;

  std::size_t dim() const;
  std::size_t letters() const;
  bool operator==(const BlockCell& o) const = default;
  bool operator<(const BlockCell& o) const { return blocks < o.blocks; }
  std::string str(const FinSemigroup& g) const;
};

// Chain complex of all cells with at most `letters` letters.  The boundary of
// a free slot is the (merge at 0) minus (split at 1) face pair with the
// standard cubical sign by global slot index.  letters >= 1.
ChainComplex wbar_complex(const FinSemigroup& g, std::size_t letters);

// Partition of the words with at most `letters` letters induced by the
// 1-skeleton; must coincide with the fibers of the product map.
struct WbarComponents {
  std::vector<std::vector<unsigned>> words;  // all words, canonical order
  std::vector<int> component;                // per word
  std::size_t num_components = 0;
};
WbarComponents wbar_components(const FinSemigroup& g, std::size_t letters);

// All cells with at most `letters` letters, grouped by dimension; canonical
// (lexicographic) order within each dimension.  Exposed for tests.
std::vector<std::vector<BlockCell>> wbar_cells(const FinSemigroup& g,
                                               std::size_t letters);

}  // namespace barw
