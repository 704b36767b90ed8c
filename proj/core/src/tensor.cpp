#include "barw/tensor.hpp"

#include <stdexcept>

#include "barw/cells.hpp"

namespace barw {

Simplex TensorResult::image(unsigned obj, const Simplex& x, const Simplex& y) const {
  if (x.dim != y.dim) throw std::invalid_argument("tensor pair degrees differ");
  return lookup[x.dim].at(Key{obj, x, y});
}

TensorResult tensor_over_c(const Diagram& xd, const Diagram& dd, unsigned maxdim) {
  const FinCategory& cop = xd.shape();
  const FinCategory& c = dd.shape();
  if (cop.num_objects() != c.num_objects() ||
      cop.num_morphisms() != c.num_morphisms())
    throw std::invalid_argument("tensor_over_c: shape mismatch");
  for (unsigned f = 0; f < c.num_morphisms(); ++f)
    if (cop.src(f) != c.dst(f) || cop.dst(f) != c.src(f))
      throw std::invalid_argument("tensor_over_c: left diagram is not over the opposite");

  std::size_t nobj = c.num_objects();
  std::vector<SsetTable> xt, yt;
  for (unsigned o = 0; o < nobj; ++o) {
    xt.push_back(table_of_sset(xd.at(o), maxdim));
    yt.push_back(table_of_sset(dd.at(o), maxdim));
  }

  // Items: (obj, xi, yi) per degree, object-major.
  std::vector<std::vector<std::size_t>> offset(maxdim + 1,
                                               std::vector<std::size_t>(nobj + 1, 0));
  CellTable tab;
  tab.init(maxdim);
  for (unsigned n = 0; n <= maxdim; ++n) {
    for (unsigned o = 0; o < nobj; ++o) {
      offset[n][o] = tab.labels[n].size();
      for (std::size_t xi = 0; xi < xt[o].table.count(n); ++xi)
        for (std::size_t yi = 0; yi < yt[o].table.count(n); ++yi)
          tab.labels[n].push_back(c.object_name(o) + ":(" +
                                  xt[o].table.labels[n][xi] + "," +
                                  yt[o].table.labels[n][yi] + ")");
    }
    offset[n][nobj] = tab.labels[n].size();
  }
  auto item = [&](unsigned n, unsigned o, int xi, int yi) -> int {
    return static_cast<int>(offset[n][o] + xi * yt[o].table.count(n) + yi);
  };

  for (unsigned n = 1; n <= maxdim; ++n) {
    tab.face[n].resize(tab.labels[n].size(), std::vector<int>(n + 1));
    for (unsigned o = 0; o < nobj; ++o)
      for (std::size_t xi = 0; xi < xt[o].table.count(n); ++xi)
        for (std::size_t yi = 0; yi < yt[o].table.count(n); ++yi)
          for (unsigned i = 0; i <= n; ++i)
            tab.face[n][item(n, o, xi, yi)][i] =
                item(n - 1, o, xt[o].table.face[n][xi][i], yt[o].table.face[n][yi][i]);
  }
  for (unsigned n = 0; n < maxdim; ++n) {
    tab.degen[n].resize(tab.labels[n].size(), std::vector<int>(n + 1));
    for (unsigned o = 0; o < nobj; ++o)
      for (std::size_t xi = 0; xi < xt[o].table.count(n); ++xi)
        for (std::size_t yi = 0; yi < yt[o].table.count(n); ++yi)
          for (unsigned j = 0; j <= n; ++j)
            tab.degen[n][item(n, o, xi, yi)][j] =
                item(n + 1, o, xt[o].table.degen[n][xi][j],
                     yt[o].table.degen[n][yi][j]);
  }

  std::vector<ItemPair> pairs;
  for (unsigned f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_id(f)) continue;
    unsigned a = c.src(f), b = c.dst(f);
    for (unsigned n = 0; n <= maxdim; ++n)
      for (std::size_t xi = 0; xi < xt[b].table.count(n); ++xi) {
        Simplex moved_x = xd.arrow(f).apply(xt[b].items[n][xi]);
        int xa = xt[a].index_of[n].at(moved_x);
        for (std::size_t yi = 0; yi < yt[a].table.count(n); ++yi) {
          Simplex moved_y = dd.arrow(f).apply(yt[a].items[n][yi]);
          int yb = yt[b].index_of[n].at(moved_y);
          pairs.push_back({{n, item(n, a, xa, static_cast<int>(yi))},
                           {n, item(n, b, static_cast<int>(xi), yb)}});
        }
      }
  }

  auto qr = quotient_table(tab, pairs, "tensor");
  TensorResult res;
  res.space = std::move(qr.space);
  res.lookup.resize(maxdim + 1);
  for (unsigned n = 0; n <= maxdim; ++n)
    for (unsigned o = 0; o < nobj; ++o)
      for (std::size_t xi = 0; xi < xt[o].table.count(n); ++xi)
        for (std::size_t yi = 0; yi < yt[o].table.count(n); ++yi)
          res.lookup[n][TensorResult::Key{o, xt[o].items[n][xi], yt[o].items[n][yi]}] =
              qr.image[n][item(n, o, static_cast<int>(xi), static_cast<int>(yi))];
  return res;
}

TensorResult hocolim(const Diagram& d, unsigned maxdim) {
  BarFamily fam = bar_star_cc(d.shape(), maxdim);
  TensorResult res = tensor_over_c(fam.diagram, d, maxdim);
  res.space.set_name("hocolim_" + d.shape().name());
  return res;
}

}  // namespace barw
