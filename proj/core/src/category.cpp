#include "barw/category.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace barw {

FinCategory::FinCategory(std::string name, std::vector<std::string> objects,
                         std::vector<Mor> morphisms, std::vector<int> ids,
                         std::vector<std::vector<int>> comp_table)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      mors_(std::move(morphisms)),
      ids_(std::move(ids)),
      comp_(std::move(comp_table)) {
  std::size_t no = objects_.size(), nm = mors_.size();
  if (no == 0) throw std::invalid_argument("category needs at least one object");
  if (ids_.size() != no) throw std::invalid_argument("one identity per object required");
  for (const auto& m : mors_)
    if (m.src >= no || m.dst >= no)
      throw std::invalid_argument("morphism endpoint out of range: " + m.label);
  for (std::size_t a = 0; a < no; ++a) {
    int e = ids_[a];
    if (e < 0 || e >= static_cast<int>(nm))
      throw std::invalid_argument("identity of '" + objects_[a] + "' missing");
    if (mors_[e].src != a || mors_[e].dst != a)
      throw std::invalid_argument("identity of '" + objects_[a] + "' is not an endomorphism");
  }
  if (comp_.size() != nm) throw std::invalid_argument("composition table has wrong size");
  for (auto& row : comp_)
    if (row.size() != nm) throw std::invalid_argument("composition table has wrong size");

  for (unsigned f = 0; f < nm; ++f)
    for (unsigned g = 0; g < nm; ++g) {
      int h = comp_[f][g];
      if (!composable(f, g)) {
        if (h != -1)
          throw std::invalid_argument("composite defined for non-composable pair " +
                                      mors_[f].label + " o " + mors_[g].label);
        continue;
      }
      if (h < 0 || h >= static_cast<int>(nm))
        throw std::invalid_argument("missing composite " + mors_[f].label + " o " +
                                    mors_[g].label);
      if (mors_[h].src != mors_[g].src || mors_[h].dst != mors_[f].dst)
        throw std::invalid_argument("composite has wrong endpoints: " + mors_[f].label +
                                    " o " + mors_[g].label);
    }
  for (unsigned f = 0; f < nm; ++f) {
    if (comp(f, id(src(f))) != f || comp(id(dst(f)), f) != f)
      throw std::invalid_argument("identity law fails at " + mors_[f].label);
  }
  for (unsigned f = 0; f < nm; ++f)
    for (unsigned g = 0; g < nm; ++g) {
      if (!composable(f, g)) continue;
      for (unsigned h = 0; h < nm; ++h) {
        if (!composable(g, h)) continue;
        if (comp(comp(f, g), h) != comp(f, comp(g, h)))
          throw std::invalid_argument("composition not associative at (" +
                                      mors_[f].label + "," + mors_[g].label + "," +
                                      mors_[h].label + ")");
      }
    }
}

unsigned FinCategory::comp(unsigned f, unsigned g) const {
  int h = comp_[f][g];
  if (h < 0) throw std::invalid_argument("morphisms not composable");
  return static_cast<unsigned>(h);
}

int FinCategory::object_index(const std::string& s) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == s) return static_cast<int>(i);
  return -1;
}

int FinCategory::mor_index(const std::string& s) const {
  for (std::size_t i = 0; i < mors_.size(); ++i)
    if (mors_[i].label == s) return static_cast<int>(i);
  return -1;
}

std::vector<unsigned> FinCategory::hom(unsigned a, unsigned b) const {
  std::vector<unsigned> out;
  for (unsigned f = 0; f < mors_.size(); ++f)
    if (src(f) == a && dst(f) == b) out.push_back(f);
  return out;
}

FinCategory FinCategory::op() const {
  std::vector<Mor> rev;
  rev.reserve(mors_.size());
  for (const auto& m : mors_) rev.push_back({m.dst, m.src, m.label});
  std::vector<std::vector<int>> comp(mors_.size(), std::vector<int>(mors_.size(), -1));
  for (unsigned f = 0; f < mors_.size(); ++f)
    for (unsigned g = 0; g < mors_.size(); ++g)
      if (rev[f].src == rev[g].dst) comp[f][g] = comp_[g][f];
  return FinCategory(name_ + "_op", objects_, std::move(rev), ids_, std::move(comp));
}

FinCategory as_category(const FinMonoid& m) {
  std::vector<FinCategory::Mor> mors;
  for (unsigned x = 0; x < m.size(); ++x) mors.push_back({0, 0, m.elem_name(x)});
  std::vector<std::vector<int>> comp(m.size(), std::vector<int>(m.size()));
  for (unsigned x = 0; x < m.size(); ++x)
    for (unsigned y = 0; y < m.size(); ++y)
      comp[x][y] = static_cast<int>(m.mul(x, y));
  return FinCategory(m.name(), {"*"}, std::move(mors),
                     {static_cast<int>(m.unit())}, std::move(comp));
}

FinCategory product_category(const FinCategory& c, const FinCategory& d) {
  std::size_t nc = c.num_morphisms(), nd = d.num_morphisms();
  std::vector<std::string> objects;
  for (unsigned a = 0; a < c.num_objects(); ++a)
    for (unsigned b = 0; b < d.num_objects(); ++b)
      objects.push_back("(" + c.object_name(a) + "," + d.object_name(b) + ")");
  auto obj = [&](unsigned a, unsigned b) {
    return static_cast<unsigned>(a * d.num_objects() + b);
  };
  std::vector<FinCategory::Mor> mors;
  for (unsigned f = 0; f < nc; ++f)
    for (unsigned g = 0; g < nd; ++g)
      mors.push_back({obj(c.src(f), d.src(g)), obj(c.dst(f), d.dst(g)),
                      "(" + c.mor(f).label + "," + d.mor(g).label + ")"});
  auto mi = [&](unsigned f, unsigned g) { return static_cast<int>(f * nd + g); };
  std::vector<int> ids;
  for (unsigned a = 0; a < c.num_objects(); ++a)
    for (unsigned b = 0; b < d.num_objects(); ++b) ids.push_back(mi(c.id(a), d.id(b)));
  std::vector<std::vector<int>> comp(nc * nd, std::vector<int>(nc * nd, -1));
  for (unsigned f1 = 0; f1 < nc; ++f1)
    for (unsigned g1 = 0; g1 < nd; ++g1)
      for (unsigned f2 = 0; f2 < nc; ++f2)
        for (unsigned g2 = 0; g2 < nd; ++g2)
          if (c.composable(f1, f2) && d.composable(g1, g2))
            comp[mi(f1, g1)][mi(f2, g2)] = mi(c.comp(f1, f2), d.comp(g1, g2));
  return FinCategory(c.name() + "x" + d.name(), std::move(objects), std::move(mors),
                     std::move(ids), std::move(comp));
}

FinCategory span_category() {
  // objects: l m r; arrows lam: m -> l, rho: m -> r
  std::vector<FinCategory::Mor> mors = {
      {0, 0, "idl"}, {1, 1, "idm"}, {2, 2, "idr"}, {1, 0, "lam"}, {1, 2, "rho"}};
  std::vector<std::vector<int>> comp(5, std::vector<int>(5, -1));
  auto set = [&](int f, int g, int h) { comp[f][g] = h; };
  set(0, 0, 0);
  set(1, 1, 1);
  set(2, 2, 2);
  set(0, 3, 3);  // idl o lam
  set(3, 1, 3);  // lam o idm
  set(2, 4, 4);  // idr o rho
  set(4, 1, 4);  // rho o idm
  return FinCategory("span", {"l", "m", "r"}, std::move(mors), {0, 1, 2},
                     std::move(comp));
}

FinCategory one_object_category() {
  return FinCategory("one", {"*"}, {{0, 0, "id"}}, {0}, {{0}});
}

std::vector<std::vector<unsigned>> composable_tuples(const FinCategory& c,
                                                     std::size_t n, int a, int b) {
  std::vector<std::vector<unsigned>> out;
  if (n == 0) throw std::invalid_argument("composable_tuples needs n >= 1");
  std::vector<unsigned> cur(n);
  // src(f_i) == dst(f_{i+1}); fill left to right so output comes out sorted.
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int need_dst) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned f = 0; f < c.num_morphisms(); ++f) {
      if (need_dst >= 0 && static_cast<int>(c.dst(f)) != need_dst) continue;
      if (pos == n - 1 && a >= 0 && static_cast<int>(c.src(f)) != a) continue;
      cur[pos] = f;
      rec(pos + 1, static_cast<int>(c.src(f)));
    }
  };
  rec(0, b);
  return out;
}

}  // namespace barw
