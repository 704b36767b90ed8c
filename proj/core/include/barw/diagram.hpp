#pragma once

#include <memory>
#include <vector>

#include "barw/category.hpp"
#include "barw/sset.hpp"

namespace barw {

// A functor from a finite shape category to simplicial sets.  Contravariant
// diagrams are diagrams over shape().op(); morphism indices are shared
// between a category and its opposite.  Move-only: arrows hold pointers into
// the stored values.
class Diagram {
 public:
  explicit Diagram(FinCategory shape);
  Diagram(Diagram&&) = default;
  Diagram& operator=(Diagram&&) = default;
  Diagram(const Diagram&) = delete;

  const FinCategory& shape() const { return shape_; }
  SimplicialSet& set_at(unsigned obj, SimplicialSet x);
  // Arrow f: at(src f) -> at(dst f), given on generators.
  void set_arrow(unsigned f, std::vector<std::vector<Simplex>> gen_images);
  // Missing arrows for identity morphisms default to identity maps.
  void finish();

  const SimplicialSet& at(unsigned obj) const { return *at_[obj]; }
  const SimplicialMap& arrow(unsigned f) const { return arrows_[f]; }

  // Functoriality on all generators: identities and composites.
  void validate() const;

 private:
  FinCategory shape_;
  std::vector<std::unique_ptr<SimplicialSet>> at_;
  std::vector<SimplicialMap> arrows_;
  std::vector<char> arrow_set_;
};

// Constant diagram at one simplicial set.
Diagram constant_diagram(FinCategory shape, const SimplicialSet& value);

// Covariant hom diagram b |-> C(a, b) as discrete simplicial sets; an arrow
// f: b -> b' post-composes.
Diagram hom_from(const FinCategory& c, unsigned a, unsigned maxdim);

// Contravariant hom diagram a |-> C(a, b) over c.op(); an arrow pre-composes.
Diagram hom_into(const FinCategory& c, unsigned b, unsigned maxdim);

// A set with a left/right monoid action as a diagram over the one-object
// category of m (covariant = right slot, contravariant over op = left slot).
Diagram monoid_as_diagram_cov(const FinMonoid& m, unsigned maxdim);
Diagram monoid_as_diagram_contra(const FinMonoid& m, unsigned maxdim);
Diagram point_diagram(FinCategory shape, unsigned maxdim);

}  // namespace barw
