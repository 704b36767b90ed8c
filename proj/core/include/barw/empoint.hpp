#pragma once

#include <string>
#include <vector>

#include "barw/rational.hpp"
#include "barw/table.hpp"

namespace barw {

// Simplex of the one-sided bar resolution (em_mode: leading slot y with chain
// z_1..z_m) or of the classifying-space model (no leading slot).  Vertices
// number chain.size() + 1 either way.
struct EmSimplex {
  bool em_mode = true;
  unsigned lead = 0;  // meaningful in em_mode
  std::vector<unsigned> chain;

  std::size_t verts() const { return chain.size() + 1; }
  bool operator==(const EmSimplex& o) const = default;
  bool operator<(const EmSimplex& o) const {
    if (em_mode != o.em_mode) return em_mode < o.em_mode;
    if (lead != o.lead) return lead < o.lead;
    return chain < o.chain;
  }
};

// The face dropping vertex i (outer slots act, inner slots multiply).
EmSimplex em_face(const FinMonoid& m, const EmSimplex& s, unsigned i);

// Point of the realization in canonical form: barycentric coordinates all
// strictly positive (zero coordinates are removed through the face
// identifications), summing to one.
struct EMPoint {
  EmSimplex splx;
  std::vector<Rat> coords;

  bool operator==(const EMPoint& o) const = default;
  std::string str(const FinMonoid& m) const;
};

EMPoint em_canonical(const FinMonoid& m, EmSimplex s, std::vector<Rat> coords);
EMPoint em_vertex(const FinMonoid& m, unsigned x);  // em-mode vertex (x)
EMPoint bm_vertex();                                // the single classifying vertex

// Left translation z . (y; z_1...) = (z y; z_1...); em-mode points only.
EMPoint em_act(const FinMonoid& m, unsigned z, const EMPoint& p);

// Collapse of the leading slot; lands in the no-lead mode.
EMPoint em_project_point(const FinMonoid& m, const EMPoint& p);

}  // namespace barw
