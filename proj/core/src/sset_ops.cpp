#include "barw/sset_ops.hpp"

#include <stdexcept>

#include "barw/cells.hpp"

namespace barw {

namespace {

struct ProductTable {
  CellTable t;
  SsetTable tx, ty;
  // index of pair (u, v) at degree n
  std::vector<std::vector<std::vector<int>>> pair_index;  // [n][u][v]
};

ProductTable product_table(const SimplicialSet& x, const SimplicialSet& y,
                           unsigned maxdim) {
  ProductTable pt;
  pt.tx = table_of_sset(x, maxdim);
  pt.ty = table_of_sset(y, maxdim);
  pt.t.init(maxdim);
  pt.pair_index.resize(maxdim + 1);
  for (unsigned n = 0; n <= maxdim; ++n) {
    std::size_t cx = pt.tx.table.count(n), cy = pt.ty.table.count(n);
    pt.pair_index[n].assign(cx, std::vector<int>(cy));
    for (std::size_t u = 0; u < cx; ++u)
      for (std::size_t v = 0; v < cy; ++v) {
        pt.pair_index[n][u][v] = static_cast<int>(pt.t.labels[n].size());
        pt.t.labels[n].push_back("(" + pt.tx.table.labels[n][u] + "," +
                                 pt.ty.table.labels[n][v] + ")");
      }
  }
  for (unsigned n = 1; n <= maxdim; ++n) {
    std::size_t cx = pt.tx.table.count(n), cy = pt.ty.table.count(n);
    pt.t.face[n].resize(cx * cy, std::vector<int>(n + 1));
    for (std::size_t u = 0; u < cx; ++u)
      for (std::size_t v = 0; v < cy; ++v)
        for (unsigned i = 0; i <= n; ++i)
          pt.t.face[n][pt.pair_index[n][u][v]][i] =
              pt.pair_index[n - 1][pt.tx.table.face[n][u][i]]
                            [pt.ty.table.face[n][v][i]];
  }
  for (unsigned n = 0; n < maxdim; ++n) {
    std::size_t cx = pt.tx.table.count(n), cy = pt.ty.table.count(n);
    pt.t.degen[n].resize(cx * cy, std::vector<int>(n + 1));
    for (std::size_t u = 0; u < cx; ++u)
      for (std::size_t v = 0; v < cy; ++v)
        for (unsigned j = 0; j <= n; ++j)
          pt.t.degen[n][pt.pair_index[n][u][v]][j] =
              pt.pair_index[n + 1][pt.tx.table.degen[n][u][j]]
                            [pt.ty.table.degen[n][v][j]];
  }
  if (pt.tx.table.base_item && pt.ty.table.base_item)
    pt.t.base_item = pt.pair_index[0][*pt.tx.table.base_item][*pt.ty.table.base_item];
  return pt;
}

}  // namespace

SimplicialSet product_sset(const SimplicialSet& x, const SimplicialSet& y,
                           unsigned maxdim) {
  ProductTable pt = product_table(x, y, maxdim);
  auto qr = quotient_table(pt.t, {}, x.name() + "x" + y.name());
  return std::move(qr.space);
}

SimplicialSet smash(const SimplicialSet& x, const SimplicialSet& y, unsigned maxdim) {
  if (!x.basepoint() || !y.basepoint())
    throw std::invalid_argument("smash needs based factors");
  ProductTable pt = product_table(x, y, maxdim);
  std::vector<ItemPair> pairs;
  for (unsigned n = 0; n <= maxdim; ++n) {
    int bx = pt.tx.index_of[n].at(x.basepoint_at(n));
    int by = pt.ty.index_of[n].at(y.basepoint_at(n));
    int bb = pt.pair_index[n][bx][by];
    for (std::size_t u = 0; u < pt.tx.table.count(n); ++u)
      pairs.push_back({{n, pt.pair_index[n][u][by]}, {n, bb}});
    for (std::size_t v = 0; v < pt.ty.table.count(n); ++v)
      pairs.push_back({{n, pt.pair_index[n][bx][v]}, {n, bb}});
  }
  auto qr = quotient_table(pt.t, pairs, x.name() + "^" + y.name());
  return std::move(qr.space);
}

SimplicialSet suspension(const SimplicialSet& x) {
  if (!x.basepoint()) throw std::invalid_argument("suspension needs a based input");
  unsigned maxdim = x.maxdim() + 1;
  SimplicialSet s1 = sphere_sset(1, maxdim);
  SimplicialSet out = smash(s1, x, maxdim);
  out.set_name("susp_" + x.name());
  return out;
}

}  // namespace barw
