#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "barw/diagram.hpp"

namespace barw {

// Decoded generator of a two-sided bar construction: the composable tuple
// (f_1..f_n) with A = src(f_n), B = dst(f_1) (A = B = obj_a when n = 0), and
// the simplices carried in the outer slots.
struct BarGen {
  unsigned obj_a = 0, obj_b = 0;
  std::vector<unsigned> tuple;
  Simplex x, y;
};

class BarResult {
 public:
  using Key = std::tuple<unsigned, std::vector<unsigned>, Simplex, Simplex>;

  SimplicialSet space;
  std::vector<std::vector<BarGen>> gens;  // [n][g], aligned with space generators
  std::vector<std::map<Key, int>> index_by_degree;

  // Generator carrying exactly this data; -1 if absent (e.g. degenerate).
  int gen_index(unsigned n, unsigned obj_a, const std::vector<unsigned>& tuple,
                const Simplex& x, const Simplex& y) const {
    const auto& m = index_by_degree[n];
    auto it = m.find(Key{obj_a, tuple, x, y});
    return it == m.end() ? -1 : it->second;
  }
};

// Diagonal of the two-sided bar construction.  `x` is a diagram over c.op(),
// `y` over c; set-valued slots are discrete diagrams.  Output is based when c
// has one object and both slots are based there.
BarResult two_sided_bar(const Diagram& x, const FinCategory& c, const Diagram& y,
                        unsigned maxdim);

// The family a |-> B(*, c, c(a,-)) as a diagram over c.op(), with decoded
// generators per object.
struct BarFamily {
  Diagram diagram;
  std::vector<std::vector<std::vector<BarGen>>> gens;  // [obj][n][g]
};
BarFamily bar_star_cc(const FinCategory& c, unsigned maxdim);

// The family (b,a) |-> B(c(-,b), c, c(a,-)) over product_category(c, c.op()).
// Pair object index is b * num_objects + a.
BarFamily bar_ccc(const FinCategory& c, unsigned maxdim);

// Collapse maps: for each pair object (b,a), the simplicial map from the
// bar_ccc value to the discrete set c(a,b), sending a tuple to its composite.
struct DeltaFamily {
  std::vector<std::unique_ptr<SimplicialSet>> target;  // discrete c(a,b)
  std::vector<SimplicialMap> map;                      // indexed like bar_ccc objects
};
DeltaFamily delta(const FinCategory& c, const BarFamily& bcc);

}  // namespace barw
