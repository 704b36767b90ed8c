#pragma once

#include <optional>
#include <string>
#include <vector>

#include "barw/category.hpp"
#include "barw/sset.hpp"
#include "barw/table.hpp"

namespace barw {
namespace fixtures {

// Built-in corpus.  The files shipped under fixtures/ mirror these tables;
// a test keeps the two in sync.

FinMonoid trivial_monoid();
FinMonoid z2();
FinMonoid z3();
FinMonoid z4();
FinMonoid klein4();
FinMonoid idem2();   // {e, a}, a a = a
FinMonoid flip3();   // {e, a, b}, x y = y for x,y != e (right zero + unit)

FinSemigroup leftzero2();
FinSemigroup rightzero2();
FinSemigroup null2();  // all products equal the first element
FinSemigroup idem1();  // one idempotent

FinCategory one_cat();
FinCategory arrow_cat();
FinCategory span_cat();
FinCategory parallel_cat();  // two objects, two parallel arrows
FinCategory triangle_cat();  // a -> b -> c with composite
FinCategory idem_cat();      // one object, p p = p
FinCategory z2_cat();        // one object, g g = id

std::vector<FinMonoid> all_monoids();
std::vector<FinSemigroup> all_semigroups();  // includes monoid underlyings
std::vector<FinCategory> all_categories();
std::vector<FinMonoid> group_fixtures();  // groups of size <= 4

std::optional<FinMonoid> monoid_by_name(const std::string& name);
std::optional<FinSemigroup> semigroup_by_name(const std::string& name);
std::optional<FinCategory> category_by_name(const std::string& name);

// Named built-in spaces: "point", "s0", "s1", "s2".
std::optional<SimplicialSet> space_by_name(const std::string& name, unsigned maxdim);

}  // namespace fixtures
}  // namespace barw
