#include "barw/twobar.hpp"

#include <stdexcept>

#include "barw/cells.hpp"

namespace barw {

namespace {

void check_shapes(const Diagram& x, const FinCategory& c, const Diagram& y) {
  const FinCategory& xs = x.shape();
  const FinCategory& ys = y.shape();
  bool ok = xs.num_objects() == c.num_objects() && ys.num_objects() == c.num_objects() &&
            xs.num_morphisms() == c.num_morphisms() &&
            ys.num_morphisms() == c.num_morphisms();
  for (unsigned f = 0; ok && f < c.num_morphisms(); ++f) {
    ok = xs.src(f) == c.dst(f) && xs.dst(f) == c.src(f) && ys.src(f) == c.src(f) &&
         ys.dst(f) == c.dst(f);
  }
  for (unsigned f = 0; ok && f < c.num_morphisms(); ++f)
    for (unsigned g = 0; ok && g < c.num_morphisms(); ++g) {
      if (c.composable(f, g)) ok = ys.comp(f, g) == c.comp(f, g) && xs.comp(g, f) == c.comp(f, g);
    }
  if (!ok)
    throw std::invalid_argument("two_sided_bar: diagram shapes do not match the category");
}

Simplex full_degeneracy(unsigned vertex, unsigned n) {
  std::vector<unsigned> w(n);
  for (unsigned t = 0; t < n; ++t) w[t] = n - 1 - t;
  return Simplex{n, std::move(w), vertex};
}

struct BarItem {
  unsigned a, b;
  std::vector<unsigned> tuple;
  int xi, yi;
};

}  // namespace

BarResult two_sided_bar(const Diagram& xd, const FinCategory& c, const Diagram& yd,
                        unsigned maxdim) {
  check_shapes(xd, c, yd);
  std::size_t nobj = c.num_objects();
  std::vector<SsetTable> xt, yt;
  xt.reserve(nobj);
  yt.reserve(nobj);
  for (unsigned o = 0; o < nobj; ++o) {
    xt.push_back(table_of_sset(xd.at(o), maxdim));
    yt.push_back(table_of_sset(yd.at(o), maxdim));
  }

  using Key = std::tuple<unsigned, std::vector<unsigned>, int, int>;
  std::vector<std::vector<BarItem>> items(maxdim + 1);
  std::vector<std::map<Key, int>> idx(maxdim + 1);
  auto add_item = [&](unsigned n, BarItem it) {
    idx[n][Key{it.a, it.tuple, it.xi, it.yi}] = static_cast<int>(items[n].size());
    items[n].push_back(std::move(it));
  };
  auto find_item = [&](unsigned n, unsigned a, const std::vector<unsigned>& t, int xi,
                       int yi) { return idx[n].at(Key{a, t, xi, yi}); };

  for (unsigned a = 0; a < nobj; ++a)
    for (std::size_t xi = 0; xi < xt[a].table.count(0); ++xi)
      for (std::size_t yi = 0; yi < yt[a].table.count(0); ++yi)
        add_item(0, BarItem{a, a, {}, static_cast<int>(xi), static_cast<int>(yi)});
  for (unsigned n = 1; n <= maxdim; ++n)
    for (const auto& t : composable_tuples(c, n)) {
      unsigned a = c.src(t.back()), b = c.dst(t.front());
      for (std::size_t xi = 0; xi < xt[b].table.count(n); ++xi)
        for (std::size_t yi = 0; yi < yt[a].table.count(n); ++yi)
          add_item(n, BarItem{a, b, t, static_cast<int>(xi), static_cast<int>(yi)});
    }

  CellTable tab;
  tab.init(maxdim);
  for (unsigned n = 0; n <= maxdim; ++n) {
    tab.labels[n].reserve(items[n].size());
    for (const auto& it : items[n]) {
      std::string lbl = "(";
      lbl += xt[it.b].table.labels[n][it.xi];
      lbl += ";";
      for (std::size_t p = 0; p < it.tuple.size(); ++p) {
        if (p) lbl += "|";
        lbl += c.mor(it.tuple[p]).label;
      }
      lbl += ";";
      lbl += yt[it.a].table.labels[n][it.yi];
      lbl += ")";
      tab.labels[n].push_back(std::move(lbl));
    }
  }

  // Faces: vertical face on both carried slots, then the bar face on the
  // tuple, acting through the diagrams in the outer cases.
  for (unsigned n = 1; n <= maxdim; ++n) {
    tab.face[n].resize(items[n].size(), std::vector<int>(n + 1));
    for (std::size_t u = 0; u < items[n].size(); ++u) {
      const BarItem& it = items[n][u];
      for (unsigned i = 0; i <= n; ++i) {
        int fx = xt[it.b].table.face[n][it.xi][i];
        int fy = yt[it.a].table.face[n][it.yi][i];
        if (i == 0) {
          unsigned f1 = it.tuple.front();
          unsigned b2 = c.src(f1);
          Simplex moved = xd.arrow(f1).apply(xt[it.b].items[n - 1][fx]);
          int xi2 = xt[b2].index_of[n - 1].at(moved);
          std::vector<unsigned> t2(it.tuple.begin() + 1, it.tuple.end());
          unsigned a2 = (n == 1) ? b2 : it.a;
          tab.face[n][u][i] = find_item(n - 1, a2, t2, xi2, fy);
        } else if (i == n) {
          unsigned fn = it.tuple.back();
          unsigned a2 = c.dst(fn);
          Simplex moved = yd.arrow(fn).apply(yt[it.a].items[n - 1][fy]);
          int yi2 = yt[a2].index_of[n - 1].at(moved);
          std::vector<unsigned> t2(it.tuple.begin(), it.tuple.end() - 1);
          tab.face[n][u][i] = find_item(n - 1, (n == 1) ? it.b : a2, t2, fx, yi2);
        } else {
          std::vector<unsigned> t2;
          t2.reserve(n - 1);
          for (unsigned p = 0; p + 1 < i; ++p) t2.push_back(it.tuple[p]);
          t2.push_back(c.comp(it.tuple[i - 1], it.tuple[i]));
          for (unsigned p = i + 1; p < n; ++p) t2.push_back(it.tuple[p]);
          tab.face[n][u][i] = find_item(n - 1, it.a, t2, fx, fy);
        }
      }
    }
  }
  for (unsigned n = 0; n < maxdim; ++n) {
    tab.degen[n].resize(items[n].size(), std::vector<int>(n + 1));
    for (std::size_t u = 0; u < items[n].size(); ++u) {
      const BarItem& it = items[n][u];
      for (unsigned j = 0; j <= n; ++j) {
        int sx = xt[it.b].table.degen[n][it.xi][j];
        int sy = yt[it.a].table.degen[n][it.yi][j];
        unsigned obj = (j == 0) ? it.b : c.src(it.tuple[j - 1]);
        std::vector<unsigned> t2;
        t2.reserve(n + 1);
        for (unsigned p = 0; p < j; ++p) t2.push_back(it.tuple[p]);
        t2.push_back(c.id(obj));
        for (unsigned p = j; p < n; ++p) t2.push_back(it.tuple[p]);
        tab.degen[n][u][j] = find_item(n + 1, it.a, t2, sx, sy);
      }
    }
  }

  if (nobj == 1 && xt[0].table.base_item && yt[0].table.base_item)
    tab.base_item = find_item(0, 0, {}, *xt[0].table.base_item, *yt[0].table.base_item);

  auto qr = quotient_table(tab, {}, "bar");
  BarResult res;
  res.space = std::move(qr.space);
  res.gens.resize(maxdim + 1);
  res.index_by_degree.resize(maxdim + 1);
  for (unsigned n = 0; n <= maxdim; ++n) {
    res.gens[n].resize(res.space.num_gens(n));
    for (std::size_t u = 0; u < items[n].size(); ++u) {
      const Simplex& img = qr.image[n][u];
      if (!img.word.empty()) continue;
      const BarItem& it = items[n][u];
      BarGen bg{it.a, it.b, it.tuple, xt[it.b].items[n][it.xi], yt[it.a].items[n][it.yi]};
      res.index_by_degree[n][BarResult::Key{bg.obj_a, bg.tuple, bg.x, bg.y}] =
          static_cast<int>(img.gen);
      res.gens[n][img.gen] = std::move(bg);
    }
  }
  return res;
}

BarFamily bar_star_cc(const FinCategory& c, unsigned maxdim) {
  std::size_t nobj = c.num_objects();
  std::vector<BarResult> parts;
  parts.reserve(nobj);
  Diagram pt = point_diagram(c.op(), maxdim);
  for (unsigned a = 0; a < nobj; ++a) {
    Diagram ya = hom_from(c, a, maxdim);
    parts.push_back(two_sided_bar(pt, c, ya, maxdim));
    parts.back().space.set_name("bar(*," + c.name() + ",hom(" + c.object_name(a) +
                                ",-))");
  }
  BarFamily fam{Diagram(c.op()), {}};
  fam.gens.resize(nobj);
  for (unsigned a = 0; a < nobj; ++a) {
    fam.diagram.set_at(a, parts[a].space);
    fam.gens[a] = parts[a].gens;
  }
  const FinCategory& cop = fam.diagram.shape();
  for (unsigned f = 0; f < cop.num_morphisms(); ++f) {
    if (cop.is_id(f)) continue;
    // f: a -> b in c; maps the bar space of b to the bar space of a by
    // precomposing the hom slot.
    unsigned a = c.src(f), b = c.dst(f);
    std::vector<std::vector<Simplex>> imgs(maxdim + 1);
    for (unsigned n = 0; n <= maxdim; ++n)
      for (const BarGen& bg : parts[b].gens[n]) {
        unsigned g = c.hom(b, bg.obj_a)[bg.y.gen];
        unsigned h = c.comp(g, f);
        auto homs = c.hom(a, bg.obj_a);
        unsigned pos = 0;
        while (homs[pos] != h) ++pos;
        Simplex y2{bg.y.dim, bg.y.word, pos};
        int gi = parts[a].gen_index(n, bg.obj_a, bg.tuple, bg.x, y2);
        if (gi < 0) throw std::logic_error("bar_star_cc: image generator not found");
        imgs[n].push_back(Simplex{n, {}, static_cast<unsigned>(gi)});
      }
    fam.diagram.set_arrow(f, std::move(imgs));
  }
  fam.diagram.finish();
  return fam;
}

BarFamily bar_ccc(const FinCategory& c, unsigned maxdim) {
  std::size_t nobj = c.num_objects();
  FinCategory prod = product_category(c, c.op());
  std::vector<BarResult> parts;
  parts.reserve(nobj * nobj);
  for (unsigned b = 0; b < nobj; ++b)
    for (unsigned a = 0; a < nobj; ++a) {
      Diagram xb = hom_into(c, b, maxdim);
      Diagram ya = hom_from(c, a, maxdim);
      parts.push_back(two_sided_bar(xb, c, ya, maxdim));
      parts.back().space.set_name("bar(hom(-," + c.object_name(b) + ")," + c.name() +
                                  ",hom(" + c.object_name(a) + ",-))");
    }
  BarFamily fam{Diagram(std::move(prod)), {}};
  fam.gens.resize(nobj * nobj);
  for (unsigned p = 0; p < nobj * nobj; ++p) {
    fam.diagram.set_at(p, parts[p].space);
    fam.gens[p] = parts[p].gens;
  }
  const FinCategory& shape = fam.diagram.shape();
  std::size_t nmor = c.num_morphisms();
  for (unsigned m = 0; m < shape.num_morphisms(); ++m) {
    if (shape.is_id(m)) continue;
    unsigned g = m / static_cast<unsigned>(nmor);  // morphism of c
    unsigned h = m % static_cast<unsigned>(nmor);  // morphism of c.op()
    unsigned b = c.src(g), b2 = c.dst(g);
    unsigned a = c.dst(h), a2 = c.src(h);  // op: a -> a2
    unsigned from = b * static_cast<unsigned>(nobj) + a;
    unsigned to = b2 * static_cast<unsigned>(nobj) + a2;
    std::vector<std::vector<Simplex>> imgs(maxdim + 1);
    for (unsigned n = 0; n <= maxdim; ++n)
      for (const BarGen& bg : parts[from].gens[n]) {
        // x slot: f0 in c(B, b) -> g o f0; y slot: f_{n+1} in c(a, A) -> f_{n+1} o h.
        unsigned f0 = c.hom(bg.obj_b, b)[bg.x.gen];
        unsigned f0b = c.comp(g, f0);
        auto xh = c.hom(bg.obj_b, b2);
        unsigned xpos = 0;
        while (xh[xpos] != f0b) ++xpos;
        unsigned fn1 = c.hom(a, bg.obj_a)[bg.y.gen];
        unsigned fn1b = c.comp(fn1, h);
        auto yh = c.hom(a2, bg.obj_a);
        unsigned ypos = 0;
        while (yh[ypos] != fn1b) ++ypos;
        Simplex x2{bg.x.dim, bg.x.word, xpos};
        Simplex y2{bg.y.dim, bg.y.word, ypos};
        int gi = parts[to].gen_index(n, bg.obj_a, bg.tuple, x2, y2);
        if (gi < 0) throw std::logic_error("bar_ccc: image generator not found");
        imgs[n].push_back(Simplex{n, {}, static_cast<unsigned>(gi)});
      }
    fam.diagram.set_arrow(m, std::move(imgs));
  }
  fam.diagram.finish();
  return fam;
}

DeltaFamily delta(const FinCategory& c, const BarFamily& bcc) {
  std::size_t nobj = c.num_objects();
  DeltaFamily fam;
  fam.target.resize(nobj * nobj);
  fam.map.resize(nobj * nobj);
  for (unsigned b = 0; b < nobj; ++b)
    for (unsigned a = 0; a < nobj; ++a) {
      unsigned p = b * static_cast<unsigned>(nobj) + a;
      auto homs = c.hom(a, b);
      std::vector<std::string> pts;
      for (unsigned f : homs) pts.push_back(c.mor(f).label);
      unsigned maxdim = bcc.diagram.at(p).maxdim();
      fam.target[p] = std::make_unique<SimplicialSet>(
          discrete_sset("hom(" + c.object_name(a) + "," + c.object_name(b) + ")", pts,
                        maxdim));
      std::vector<std::vector<Simplex>> imgs(maxdim + 1);
      for (unsigned n = 0; n <= maxdim; ++n)
        for (const BarGen& bg : bcc.gens[p][n]) {
          unsigned h = c.hom(bg.obj_b, b)[bg.x.gen];
          for (unsigned f : bg.tuple) h = c.comp(h, f);
          h = c.comp(h, c.hom(a, bg.obj_a)[bg.y.gen]);
          unsigned pos = 0;
          while (homs[pos] != h) ++pos;
          imgs[n].push_back(full_degeneracy(pos, n));
        }
      fam.map[p] = SimplicialMap(&bcc.diagram.at(p), fam.target[p].get(),
                                 std::move(imgs));
    }
  return fam;
}

}  // namespace barw
