#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "barw/sset.hpp"

namespace barw {

// A fully materialized simplicial table: all simplices per degree 0..maxdim
// as opaque items, with total face and degeneracy index tables.  This is the
// common substrate for products, bar diagonals, word constructions and
// degree-wise quotients; a presented SimplicialSet is extracted at the end.
struct CellTable {
  unsigned maxdim = 0;
  std::vector<std::vector<std::string>> labels;      // [n][item]
  std::vector<std::vector<std::vector<int>>> face;   // [n][item][i], n >= 1
  std::vector<std::vector<std::vector<int>>> degen;  // [n][item][j], n < maxdim
  std::optional<int> base_item;                      // degree-0 item

  std::size_t count(unsigned n) const {
    return n < labels.size() ? labels[n].size() : 0;
  }
  // item == s_j (d_j item)?
  bool strippable(unsigned n, int item, unsigned j) const {
    return degen[n - 1][face[n][item][j]][j] == item;
  }
  void init(unsigned maxd) {
    maxdim = maxd;
    labels.assign(maxd + 1, {});
    face.assign(maxd + 1, {});
    degen.assign(maxd + 1, {});
  }
  // Spot-checks the simplicial identities on the tables; throws on failure.
  void validate() const;
};

// Quotient of the table by the smallest simplicial equivalence containing the
// given same-degree item pairs (congruence closure under faces and
// degeneracies is taken internally).  With no pairs this just extracts the
// presented simplicial set.
struct QuotientResult {
  SimplicialSet space;
  // image[n][item]: the quotient simplex each input item maps to.
  std::vector<std::vector<Simplex>> image;
};

using ItemPair = std::pair<std::pair<unsigned, int>, std::pair<unsigned, int>>;

QuotientResult quotient_table(const CellTable& t, const std::vector<ItemPair>& pairs,
                              const std::string& name);

// Materializes all simplices of x in degrees 0..maxdim.  maxdim may exceed
// x.maxdim() only when x has no generators above its top degree that matter;
// the enumeration then lists pure degeneracies.
struct SsetTable {
  CellTable table;
  std::vector<std::vector<Simplex>> items;       // [n] -> simplices in item order
  std::vector<std::map<Simplex, int>> index_of;  // [n]
};
SsetTable table_of_sset(const SimplicialSet& x, unsigned maxdim);

}  // namespace barw
