#pragma once

#include <string>
#include <vector>

#include "barw/table.hpp"

namespace barw {

// Finite category: objects and morphisms by index, total composition table on
// composable pairs.  comp(f, g) = f after g, defined when src(f) == dst(g).
// The constructor validates identities and associativity exhaustively.
class FinCategory {
 public:
  struct Mor {
    unsigned src, dst;
    std::string label;
  };

  FinCategory() = default;
  FinCategory(std::string name, std::vector<std::string> objects,
              std::vector<Mor> morphisms, std::vector<int> ids,
              std::vector<std::vector<int>> comp);

  const std::string& name() const { return name_; }
  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return mors_.size(); }
  const std::string& object_name(unsigned a) const { return objects_[a]; }
  const Mor& mor(unsigned f) const { return mors_[f]; }
  unsigned src(unsigned f) const { return mors_[f].src; }
  unsigned dst(unsigned f) const { return mors_[f].dst; }
  unsigned id(unsigned a) const { return static_cast<unsigned>(ids_[a]); }
  bool is_id(unsigned f) const { return ids_[mors_[f].src] == static_cast<int>(f); }
  bool composable(unsigned f, unsigned g) const { return src(f) == dst(g); }
  unsigned comp(unsigned f, unsigned g) const;  // f o g

  int object_index(const std::string& s) const;
  int mor_index(const std::string& s) const;

  // Morphism indices in hom(a, b), ascending.
  std::vector<unsigned> hom(unsigned a, unsigned b) const;

  // Same objects and morphism indices, all arrows reversed.
  FinCategory op() const;

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Mor> mors_;
  std::vector<int> ids_;                 // per object
  std::vector<std::vector<int>> comp_;   // comp_[f][g], -1 when not composable
};

// A monoid viewed as a one-object category; morphism i is element i and
// composition is the monoid product in the same order.
FinCategory as_category(const FinMonoid& m);

// Product category c x d; used for the two-variable diagrams over C x C^op.
FinCategory product_category(const FinCategory& c, const FinCategory& d);

// Objects l, m, r with arrows m -> l and m -> r.
FinCategory span_category();

// Single object, single identity.
FinCategory one_object_category();

// Composable n-tuples (f_1,...,f_n), n >= 1, with src(f_n) = a if a >= 0 and
// dst(f_1) = b if b >= 0; lexicographic in morphism indices.
std::vector<std::vector<unsigned>> composable_tuples(const FinCategory& c,
                                                     std::size_t n, int a = -1,
                                                     int b = -1);

}  // namespace barw
