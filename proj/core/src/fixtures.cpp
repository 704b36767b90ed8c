#include "barw/fixtures.hpp"

namespace barw {
namespace fixtures {

FinMonoid trivial_monoid() {
  return FinMonoid(FinSemigroup("trivial", {"e"}, {0}), 0);
}

FinMonoid z2() { return FinMonoid(FinSemigroup("z2", {"e", "a"}, {0, 1, 1, 0}), 0); }

FinMonoid z3() {
  return FinMonoid(FinSemigroup("z3", {"0", "1", "2"}, {0, 1, 2, 1, 2, 0, 2, 0, 1}), 0);
}

FinMonoid z4() {
  std::vector<unsigned> t(16);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) t[i * 4 + j] = (i + j) % 4;
  return FinMonoid(FinSemigroup("z4", {"0", "1", "2", "3"}, std::move(t)), 0);
}

FinMonoid klein4() {
  std::vector<unsigned> t(16);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) t[i * 4 + j] = i ^ j;
  return FinMonoid(FinSemigroup("klein4", {"e", "a", "b", "c"}, std::move(t)), 0);
}

FinMonoid idem2() { return FinMonoid(FinSemigroup("idem2", {"e", "a"}, {0, 1, 1, 1}), 0); }

FinMonoid flip3() {
  // unit e; a b = b, b a = a, a a = a, b b = b
  return FinMonoid(
      FinSemigroup("flip3", {"e", "a", "b"}, {0, 1, 2, 1, 1, 2, 2, 1, 2}), 0);
}

FinSemigroup leftzero2() {
  return FinSemigroup("leftzero2", {"a", "b"}, {0, 0, 1, 1});
}

FinSemigroup rightzero2() {
  return FinSemigroup("rightzero2", {"a", "b"}, {0, 1, 0, 1});
}

FinSemigroup null2() { return FinSemigroup("null2", {"z", "a"}, {0, 0, 0, 0}); }

FinSemigroup idem1() { return FinSemigroup("idem1", {"a"}, {0}); }

FinCategory one_cat() { return one_object_category(); }

FinCategory arrow_cat() {
  std::vector<FinCategory::Mor> mors = {{0, 0, "ida"}, {1, 1, "idb"}, {0, 1, "f"}};
  std::vector<std::vector<int>> comp(3, std::vector<int>(3, -1));
  comp[0][0] = 0;
  comp[1][1] = 1;
  comp[2][0] = 2;
  comp[1][2] = 2;
  return FinCategory("arrow", {"a", "b"}, std::move(mors), {0, 1}, std::move(comp));
}

FinCategory span_cat() { return span_category(); }

FinCategory parallel_cat() {
  std::vector<FinCategory::Mor> mors = {
      {0, 0, "ida"}, {1, 1, "idb"}, {0, 1, "f"}, {0, 1, "g"}};
  std::vector<std::vector<int>> comp(4, std::vector<int>(4, -1));
  comp[0][0] = 0;
  comp[1][1] = 1;
  comp[2][0] = 2;
  comp[1][2] = 2;
  comp[3][0] = 3;
  comp[1][3] = 3;
  return FinCategory("parallel", {"a", "b"}, std::move(mors), {0, 1}, std::move(comp));
}

FinCategory triangle_cat() {
  std::vector<FinCategory::Mor> mors = {{0, 0, "ida"}, {1, 1, "idb"}, {2, 2, "idc"},
                                        {0, 1, "f"},   {1, 2, "g"},   {0, 2, "h"}};
  std::vector<std::vector<int>> comp(6, std::vector<int>(6, -1));
  comp[0][0] = 0;
  comp[1][1] = 1;
  comp[2][2] = 2;
  comp[3][0] = 3;
  comp[1][3] = 3;
  comp[4][1] = 4;
  comp[2][4] = 4;
  comp[5][0] = 5;
  comp[2][5] = 5;
  comp[4][3] = 5;  // g o f = h
  return FinCategory("triangle", {"a", "b", "c"}, std::move(mors), {0, 1, 2},
                     std::move(comp));
}

FinCategory idem_cat() {
  // one object, morphisms id and p with p p = p
  std::vector<FinCategory::Mor> mors = {{0, 0, "id"}, {0, 0, "p"}};
  std::vector<std::vector<int>> comp = {{0, 1}, {1, 1}};
  return FinCategory("idemcat", {"*"}, std::move(mors), {0}, std::move(comp));
}

FinCategory z2_cat() {
  std::vector<FinCategory::Mor> mors = {{0, 0, "id"}, {0, 0, "g"}};
  std::vector<std::vector<int>> comp = {{0, 1}, {1, 0}};
  return FinCategory("z2cat", {"*"}, std::move(mors), {0}, std::move(comp));
}

std::vector<FinMonoid> all_monoids() {
  return {trivial_monoid(), z2(), z3(), z4(), klein4(), idem2(), flip3()};
}

std::vector<FinSemigroup> all_semigroups() {
  std::vector<FinSemigroup> out = {idem1(), leftzero2(), rightzero2(), null2()};
  for (const FinMonoid& m : all_monoids()) out.push_back(m.as_semigroup());
  return out;
}

std::vector<FinCategory> all_categories() {
  return {one_cat(),      arrow_cat(), span_cat(), parallel_cat(),
          triangle_cat(), idem_cat(),  z2_cat()};
}

std::vector<FinMonoid> group_fixtures() {
  return {trivial_monoid(), z2(), z3(), z4(), klein4()};
}

std::optional<FinMonoid> monoid_by_name(const std::string& name) {
  for (FinMonoid& m : all_monoids())
    if (m.name() == name) return std::move(m);
  return std::nullopt;
}

std::optional<FinSemigroup> semigroup_by_name(const std::string& name) {
  for (FinSemigroup& g : all_semigroups())
    if (g.name() == name) return std::move(g);
  return std::nullopt;
}

std::optional<FinCategory> category_by_name(const std::string& name) {
  for (FinCategory& c : all_categories())
    if (c.name() == name) return std::move(c);
  return std::nullopt;
}

std::optional<SimplicialSet> space_by_name(const std::string& name, unsigned maxdim) {
  if (name == "point") return point_sset(maxdim);
  if (name == "s0") return sphere_sset(0, maxdim);
  if (name == "s1") return sphere_sset(1, std::max(maxdim, 1u));
  if (name == "s2") return sphere_sset(2, std::max(maxdim, 2u));
  return std::nullopt;
}

}  // namespace fixtures
}  // namespace barw
