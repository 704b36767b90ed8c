#include "barw/nerve.hpp"

#include <functional>
#include <map>

namespace barw {

namespace {

std::string tuple_label(const FinCategory& c, const std::vector<unsigned>& t) {
  if (t.empty()) return "[]";
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += "|";
    s += c.mor(t[i]).label;
  }
  return s + "]";
}

}  // namespace

SimplicialSet nerve(const FinCategory& c, unsigned maxdim) {
  SimplicialSet x(c.name() + "_nerve", maxdim);
  // Degree n generators: composable tuples without identity entries, indexed
  // per degree; degree 0 are the objects.
  std::vector<std::map<std::vector<unsigned>, unsigned>> index(maxdim + 1);
  std::vector<unsigned> vertex(c.num_objects());
  for (unsigned a = 0; a < c.num_objects(); ++a) {
    vertex[a] = x.add_generator(0, c.object_name(a));
    index[0][{a}] = vertex[a];  // keyed by object for degree 0
  }
  for (unsigned n = 1; n <= maxdim; ++n)
    for (const auto& t : composable_tuples(c, n)) {
      bool nondeg = true;
      for (unsigned f : t) nondeg &= !c.is_id(f);
      if (nondeg) index[n][t] = x.add_generator(n, tuple_label(c, t));
    }

  // Normal form of a tuple that may contain identity entries: an identity at
  // 0-based position p strips to s_p of the tuple with it removed.
  std::function<Simplex(std::vector<unsigned>)> to_simplex =
      [&](std::vector<unsigned> tt) -> Simplex {
    for (std::size_t p = 0; p < tt.size(); ++p)
      if (c.is_id(tt[p])) {
        unsigned obj = c.src(tt[p]);
        std::vector<unsigned> rest(tt);
        rest.erase(rest.begin() + p);
        Simplex inner =
            rest.empty() ? Simplex{0, {}, vertex[obj]} : to_simplex(std::move(rest));
        return Simplex{inner.dim + 1,
                       degeneracy_insert(inner.word, static_cast<unsigned>(p)),
                       inner.gen};
      }
    return Simplex{static_cast<unsigned>(tt.size()), {}, index[tt.size()].at(tt)};
  };

  for (unsigned n = 1; n <= maxdim; ++n)
    for (const auto& [t, g] : index[n]) {
      // Outer faces of a 1-simplex: d_0 lands at the source, d_1 at the
      // target, matching the two-sided face formulas for longer tuples.
      if (n == 1) {
        x.set_face(1, g, 0, Simplex{0, {}, vertex[c.src(t[0])]});
        x.set_face(1, g, 1, Simplex{0, {}, vertex[c.dst(t[0])]});
        continue;
      }
      {
        std::vector<unsigned> rest(t.begin() + 1, t.end());
        x.set_face(n, g, 0, to_simplex(std::move(rest)));
      }
      for (unsigned i = 1; i < n; ++i) {
        std::vector<unsigned> merged;
        merged.reserve(n - 1);
        for (unsigned p = 0; p + 1 < i; ++p) merged.push_back(t[p]);
        merged.push_back(c.comp(t[i - 1], t[i]));
        for (unsigned p = i + 1; p < n; ++p) merged.push_back(t[p]);
        x.set_face(n, g, i, to_simplex(std::move(merged)));
      }
      {
        std::vector<unsigned> rest(t.begin(), t.end() - 1);
        x.set_face(n, g, n, to_simplex(std::move(rest)));
      }
    }
  if (c.num_objects() == 1) x.set_basepoint(vertex[0]);
  return x;
}

SimplicialSet nerve(const FinMonoid& m, unsigned maxdim) {
  SimplicialSet x = nerve(as_category(m), maxdim);
  x.set_name(m.name() + "_nerve");
  return x;
}

SimplicialSet semigroup_nerve(const FinSemigroup& g, unsigned maxdim) {
  SimplicialSet x(g.name() + "_fatnerve", maxdim, /*semisimplicial=*/true);
  std::vector<std::map<std::vector<unsigned>, unsigned>> index(maxdim + 1);
  index[0][{}] = x.add_generator(0, "[]");
  std::size_t sz = g.size();
  for (unsigned n = 1; n <= maxdim; ++n) {
    std::vector<unsigned> t(n, 0);
    for (;;) {
      std::string lbl = "[";
      for (unsigned i = 0; i < n; ++i) {
        if (i) lbl += "|";
        lbl += g.elem_name(t[i]);
      }
      lbl += "]";
      index[n][t] = x.add_generator(n, lbl);
      std::size_t p = n;
      while (p > 0) {
        if (++t[p - 1] < sz) break;
        t[p - 1] = 0;
        --p;
      }
      if (p == 0) break;
    }
  }
  for (unsigned n = 1; n <= maxdim; ++n)
    for (const auto& [t, gen] : index[n]) {
      for (unsigned i = 0; i <= n; ++i) {
        std::vector<unsigned> ft;
        ft.reserve(n - 1);
        if (i == 0) {
          ft.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          ft.assign(t.begin(), t.end() - 1);
        } else {
          for (unsigned p = 0; p + 1 < i; ++p) ft.push_back(t[p]);
          ft.push_back(g.mul(t[i - 1], t[i]));
          for (unsigned p = i + 1; p < n; ++p) ft.push_back(t[p]);
        }
        x.set_face(n, gen, i, Simplex{n - 1, {}, index[n - 1].at(ft)});
      }
    }
  return x;
}

ChainComplex chains(const SimplicialSet& x) {
  std::vector<std::size_t> dims(x.maxdim() + 1);
  std::vector<std::vector<std::string>> labels(x.maxdim() + 1);
  for (unsigned n = 0; n <= x.maxdim(); ++n) {
    dims[n] = x.num_gens(n);
    for (unsigned g = 0; g < x.num_gens(n); ++g) labels[n].push_back(x.label(n, g));
  }
  std::vector<IntMatrix> bds(x.maxdim() + 1);
  for (unsigned n = 1; n <= x.maxdim(); ++n) {
    IntMatrix b(dims[n - 1], dims[n]);
    for (unsigned g = 0; g < x.num_gens(n); ++g)
      for (unsigned i = 0; i <= n; ++i) {
        const Simplex& f = x.gen_face(n, g, i);
        if (f.degenerate()) continue;
        if (i % 2 == 0)
          b.at(f.gen, g) += 1;
        else
          b.at(f.gen, g) -= 1;
      }
    bds[n] = std::move(b);
  }
  return ChainComplex(std::move(dims), std::move(bds), std::move(labels));
}

}  // namespace barw
