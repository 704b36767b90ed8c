#pragma once

#include <string>
#include <vector>

#include "barw/rational.hpp"

namespace barw {

// Finite semigroup given by a total multiplication table.  Elements are
// indices 0..size-1 with printable names.  The constructor checks
// associativity on all triples and rejects bad tables.
class FinSemigroup {
 public:
  FinSemigroup() = default;
  FinSemigroup(std::string name, std::vector<std::string> elems,
               std::vector<unsigned> table);

  const std::string& name() const { return name_; }
  std::size_t size() const { return elems_.size(); }
  unsigned mul(unsigned x, unsigned y) const { return table_[x * size() + y]; }
  const std::string& elem_name(unsigned x) const { return elems_[x]; }
  const std::vector<std::string>& elem_names() const { return elems_; }
  int elem_index(const std::string& s) const;  // -1 if unknown

  bool is_commutative() const;
  // Index of a two-sided identity, or -1 if none exists.
  int find_unit() const;

  bool operator==(const FinSemigroup& o) const {
    return elems_ == o.elems_ && table_ == o.table_;
  }

 private:
  std::string name_;
  std::vector<std::string> elems_;
  std::vector<unsigned> table_;
};

class FinMonoid {
 public:
  FinMonoid() = default;
  // Checks that `unit` really is a two-sided identity.
  FinMonoid(FinSemigroup sg, unsigned unit);

  const std::string& name() const { return sg_.name(); }
  std::size_t size() const { return sg_.size(); }
  unsigned unit() const { return unit_; }
  unsigned mul(unsigned x, unsigned y) const { return sg_.mul(x, y); }
  const std::string& elem_name(unsigned x) const { return sg_.elem_name(x); }
  int elem_index(const std::string& s) const { return sg_.elem_index(s); }
  const FinSemigroup& as_semigroup() const { return sg_; }

  bool is_commutative() const { return sg_.is_commutative(); }
  bool is_group() const;

  bool operator==(const FinMonoid& o) const {
    return sg_ == o.sg_ && unit_ == o.unit_;
  }

 private:
  FinSemigroup sg_;
  unsigned unit_ = 0;
};

// G_+ = G with a fresh two-sided unit adjoined (inserted at index 0).
FinMonoid adjoin_unit(const FinSemigroup& g);

// Quotient by the smallest congruence forcing xy = yx.
FinMonoid abelianization(const FinMonoid& m);

// Map between tables, given as the image of each element.  Validation is by
// exhaustive check of multiplicativity (and unit preservation for monoids).
struct HomTable {
  std::vector<unsigned> image;
  bool is_semigroup_hom(const FinSemigroup& src, const FinSemigroup& dst) const;
  bool is_monoid_hom(const FinMonoid& src, const FinMonoid& dst) const;
};

// All associative tables on {0..n-1} with 0 as two-sided unit, in
// lexicographic table order.  Covers every monoid of that size up to
// renaming; sizes up to 4 stay in the hundreds.
std::vector<FinMonoid> all_monoid_tables(std::size_t n);

}  // namespace barw
