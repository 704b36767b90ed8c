#include "barw/table.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace barw {

FinSemigroup::FinSemigroup(std::string name, std::vector<std::string> elems,
                           std::vector<unsigned> table)
    : name_(std::move(name)), elems_(std::move(elems)), table_(std::move(table)) {
  std::size_t n = elems_.size();
  if (n == 0) throw std::invalid_argument("semigroup needs at least one element");
  if (table_.size() != n * n)
    throw std::invalid_argument("multiplication table has wrong size");
  for (unsigned v : table_)
    if (v >= n) throw std::invalid_argument("multiplication table entry out of range");
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      for (unsigned z = 0; z < n; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw std::invalid_argument(
              "table is not associative at (" + elems_[x] + "," + elems_[y] + "," +
              elems_[z] + ")");
}

int FinSemigroup::elem_index(const std::string& s) const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] == s) return static_cast<int>(i);
  return -1;
}

bool FinSemigroup::is_commutative() const {
  for (unsigned x = 0; x < size(); ++x)
    for (unsigned y = x + 1; y < size(); ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

int FinSemigroup::find_unit() const {
  for (unsigned e = 0; e < size(); ++e) {
    bool ok = true;
    for (unsigned x = 0; x < size() && ok; ++x)
      ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) return static_cast<int>(e);
  }
  return -1;
}

FinMonoid::FinMonoid(FinSemigroup sg, unsigned unit) : sg_(std::move(sg)), unit_(unit) {
  if (unit_ >= sg_.size()) throw std::invalid_argument("unit index out of range");
  for (unsigned x = 0; x < sg_.size(); ++x)
    if (sg_.mul(unit_, x) != x || sg_.mul(x, unit_) != x)
      throw std::invalid_argument("designated unit is not a two-sided identity");
}

bool FinMonoid::is_group() const {
  for (unsigned x = 0; x < size(); ++x) {
    bool inv = false;
    for (unsigned y = 0; y < size() && !inv; ++y)
      inv = mul(x, y) == unit_ && mul(y, x) == unit_;
    if (!inv) return false;
  }
  return true;
}

FinMonoid adjoin_unit(const FinSemigroup& g) {
  std::size_t n = g.size();
  std::vector<std::string> elems;
  elems.push_back("*");
  for (unsigned x = 0; x < n; ++x) elems.push_back(g.elem_name(x));
  std::vector<unsigned> table((n + 1) * (n + 1));
  for (unsigned x = 0; x <= n; ++x)
    for (unsigned y = 0; y <= n; ++y) {
      unsigned v;
      if (x == 0)
        v = y;
      else if (y == 0)
        v = x;
      else
        v = g.mul(x - 1, y - 1) + 1;
      table[x * (n + 1) + y] = v;
    }
  return FinMonoid(FinSemigroup(g.name() + "+", std::move(elems), std::move(table)), 0);
}

FinMonoid abelianization(const FinMonoid& m) {
  std::size_t n = m.size();
  std::vector<unsigned> rep(n);
  std::iota(rep.begin(), rep.end(), 0u);
  std::function<unsigned(unsigned)> find = [&](unsigned x) {
    while (rep[x] != x) {
      rep[x] = rep[rep[x]];
      x = rep[x];
    }
    return x;
  };
  auto unite = [&](unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    rep[b] = a;
    return true;
  };
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) unite(m.mul(x, y), m.mul(y, x));
  // Close under multiplication until the relation is a congruence.
  bool changed = true;
  while (changed) {
    changed = false;
    for (unsigned x = 0; x < n; ++x) {
      unsigned rx = find(x);
      if (rx == x) continue;
      for (unsigned z = 0; z < n; ++z) {
        changed |= unite(m.mul(x, z), m.mul(rx, z));
        changed |= unite(m.mul(z, x), m.mul(z, rx));
      }
    }
  }
  // Quotient table on class representatives, in ascending representative order.
  std::vector<unsigned> classes;
  std::vector<int> class_of(n, -1);
  for (unsigned x = 0; x < n; ++x)
    if (find(x) == x) {
      class_of[x] = static_cast<int>(classes.size());
      classes.push_back(x);
    }
  std::size_t k = classes.size();
  std::vector<std::string> elems;
  for (unsigned c : classes) elems.push_back(m.elem_name(c));
  std::vector<unsigned> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = static_cast<unsigned>(class_of[find(m.mul(classes[i], classes[j]))]);
  unsigned unit = static_cast<unsigned>(class_of[find(m.unit())]);
  return FinMonoid(FinSemigroup(m.name() + "_ab", std::move(elems), std::move(table)),
                   unit);
}

bool HomTable::is_semigroup_hom(const FinSemigroup& src, const FinSemigroup& dst) const {
  if (image.size() != src.size()) return false;
  for (unsigned v : image)
    if (v >= dst.size()) return false;
  for (unsigned x = 0; x < src.size(); ++x)
    for (unsigned y = 0; y < src.size(); ++y)
      if (image[src.mul(x, y)] != dst.mul(image[x], image[y])) return false;
  return true;
}

bool HomTable::is_monoid_hom(const FinMonoid& src, const FinMonoid& dst) const {
  return image.size() == src.size() && image[src.unit()] == dst.unit() &&
         is_semigroup_hom(src.as_semigroup(), dst.as_semigroup());
}

std::vector<FinMonoid> all_monoid_tables(std::size_t n) {
  std::vector<FinMonoid> out;
  if (n == 0) return out;
  std::vector<std::string> elems;
  elems.push_back("e");
  for (std::size_t i = 1; i < n; ++i) elems.push_back("x" + std::to_string(i));

  std::vector<unsigned> table(n * n, 0);
  for (unsigned i = 0; i < n; ++i) {
    table[i] = i;          // e * x = x
    table[i * n] = i;      // x * e = x
  }
  std::size_t free_cells = (n - 1) * (n - 1);
  auto cell = [&](std::size_t f) -> unsigned& {
    std::size_t r = 1 + f / (n - 1), c = 1 + f % (n - 1);
    return table[r * n + c];
  };
  auto associative = [&]() {
    for (unsigned x = 0; x < n; ++x)
      for (unsigned y = 0; y < n; ++y)
        for (unsigned z = 0; z < n; ++z)
          if (table[table[x * n + y] * n + z] != table[x * n + table[y * n + z]])
            return false;
    return true;
  };
  std::vector<unsigned> vals(free_cells, 0);
  for (;;) {
    for (std::size_t f = 0; f < free_cells; ++f) cell(f) = vals[f];
    if (associative()) {
      std::string name = "m" + std::to_string(n) + "_" + std::to_string(out.size());
      out.emplace_back(FinSemigroup(name, elems, table), 0);
    }
    std::size_t f = 0;
    while (f < free_cells) {
      if (++vals[f] < n) break;
      vals[f] = 0;
      ++f;
    }
    if (f == free_cells) break;
  }
  return out;
}

}  // namespace barw
