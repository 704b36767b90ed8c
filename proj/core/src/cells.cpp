#include "barw/cells.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace barw {

void CellTable::validate() const {
  for (unsigned n = 1; n <= maxdim; ++n)
    for (std::size_t u = 0; u < count(n); ++u)
      for (unsigned j = 1; j <= n; ++j)
        for (unsigned i = 0; i < j; ++i)
          if (face[n - 1][face[n][u][j]][i] != face[n - 1][face[n][u][i]][j - 1])
            throw std::logic_error("cell table: face identity fails at degree " +
                                   std::to_string(n) + ", item " + std::to_string(u));
  for (unsigned n = 0; n + 1 <= maxdim; ++n)
    for (std::size_t u = 0; u < count(n); ++u)
      for (unsigned j = 0; j <= n; ++j) {
        int up = degen[n][u][j];
        if (face[n + 1][up][j] != static_cast<int>(u) ||
            face[n + 1][up][j + 1] != static_cast<int>(u))
          throw std::logic_error("cell table: degeneracy section fails at degree " +
                                 std::to_string(n));
      }
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller index as representative; returns true if merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

QuotientResult quotient_table(const CellTable& t, const std::vector<ItemPair>& pairs,
                              const std::string& name) {
  std::vector<UnionFind> uf;
  uf.reserve(t.maxdim + 1);
  for (unsigned n = 0; n <= t.maxdim; ++n) uf.emplace_back(t.count(n));

  // Congruence closure: merged items merge their faces and degeneracies.
  std::deque<std::pair<unsigned, std::pair<int, int>>> work;
  for (const auto& [a, b] : pairs) {
    if (a.first != b.first)
      throw std::invalid_argument("quotient pairs must be degree-homogeneous");
    work.push_back({a.first, {a.second, b.second}});
  }
  while (!work.empty()) {
    auto [n, ab] = work.front();
    work.pop_front();
    if (!uf[n].unite(ab.first, ab.second)) continue;
    if (n >= 1)
      for (unsigned i = 0; i <= n; ++i)
        work.push_back({n - 1, {t.face[n][ab.first][i], t.face[n][ab.second][i]}});
    if (n < t.maxdim)
      for (unsigned j = 0; j <= n; ++j)
        work.push_back({n + 1, {t.degen[n][ab.first][j], t.degen[n][ab.second][j]}});
  }

  // Collect classes per degree; members kept in ascending item order.
  std::vector<std::vector<std::vector<int>>> members(t.maxdim + 1);
  std::vector<std::vector<int>> class_of(t.maxdim + 1);
  for (unsigned n = 0; n <= t.maxdim; ++n) {
    class_of[n].assign(t.count(n), -1);
    for (std::size_t u = 0; u < t.count(n); ++u) {
      int r = uf[n].find(static_cast<int>(u));
      if (class_of[n][r] == -1) {
        class_of[n][r] = static_cast<int>(members[n].size());
        members[n].push_back({});
      }
      class_of[n][u] = class_of[n][r];
      members[n][class_of[n][u]].push_back(static_cast<int>(u));
    }
  }

  // A class is degenerate iff it contains an item in the image of some s_j.
  // For such a class pick a witness (item, j), preferring the smallest item
  // and the largest j; the Eilenberg-Zilber normal form below is independent
  // of this choice.
  std::vector<std::vector<int>> strip_item(t.maxdim + 1), strip_j(t.maxdim + 1);
  std::vector<std::vector<int>> gen_index(t.maxdim + 1);
  SimplicialSet out(name, t.maxdim);
  for (unsigned n = 0; n <= t.maxdim; ++n) {
    std::size_t nc = members[n].size();
    strip_item[n].assign(nc, -1);
    strip_j[n].assign(nc, -1);
    gen_index[n].assign(nc, -1);
    for (std::size_t c = 0; c < nc; ++c) {
      if (n >= 1) {
        for (int u : members[n][c]) {
          for (int j = static_cast<int>(n) - 1; j >= 0; --j)
            if (t.strippable(n, u, static_cast<unsigned>(j))) {
              strip_item[n][c] = u;
              strip_j[n][c] = j;
              break;
            }
          if (strip_item[n][c] >= 0) break;
        }
      }
      if (strip_item[n][c] < 0)
        gen_index[n][c] =
            static_cast<int>(out.add_generator(n, t.labels[n][members[n][c][0]]));
    }
  }

  // Normal form of a class: strip degeneracy witnesses down to a generator.
  std::vector<std::vector<char>> nf_done(t.maxdim + 1);
  std::vector<std::vector<Simplex>> nf(t.maxdim + 1);
  for (unsigned n = 0; n <= t.maxdim; ++n) {
    nf_done[n].assign(members[n].size(), 0);
    nf[n].resize(members[n].size());
  }
  std::function<const Simplex&(unsigned, int)> normal_form = [&](unsigned n,
                                                                 int c) -> const Simplex& {
    if (nf_done[n][c]) return nf[n][c];
    nf_done[n][c] = 1;
    if (strip_item[n][c] < 0) {
      nf[n][c] = Simplex{n, {}, static_cast<unsigned>(gen_index[n][c])};
    } else {
      unsigned j = static_cast<unsigned>(strip_j[n][c]);
      int inner_item = t.face[n][strip_item[n][c]][j];
      const Simplex& inner = normal_form(n - 1, class_of[n - 1][inner_item]);
      nf[n][c] = Simplex{n, degeneracy_insert(inner.word, j), inner.gen};
    }
    return nf[n][c];
  };

  // Faces of generators.
  for (unsigned n = 1; n <= t.maxdim; ++n)
    for (std::size_t c = 0; c < members[n].size(); ++c) {
      if (gen_index[n][c] < 0) continue;
      int u = members[n][c][0];
      for (unsigned i = 0; i <= n; ++i) {
        int fc = class_of[n - 1][t.face[n][u][i]];
        out.set_face(n, static_cast<unsigned>(gen_index[n][c]), i,
                     normal_form(n - 1, fc));
      }
    }

  if (t.base_item) {
    int c = class_of[0][*t.base_item];
    out.set_basepoint(static_cast<unsigned>(gen_index[0][c]));
  }

  QuotientResult res;
  res.image.assign(t.maxdim + 1, {});
  for (unsigned n = 0; n <= t.maxdim; ++n) {
    res.image[n].resize(t.count(n));
    for (std::size_t u = 0; u < t.count(n); ++u)
      res.image[n][u] = normal_form(n, class_of[n][u]);
  }
  res.space = std::move(out);
  return res;
}

SsetTable table_of_sset(const SimplicialSet& x, unsigned maxdim) {
  SsetTable st;
  st.table.init(maxdim);
  st.items.resize(maxdim + 1);
  st.index_of.resize(maxdim + 1);
  for (unsigned n = 0; n <= maxdim; ++n) {
    st.items[n] = x.simplices(n);
    for (std::size_t u = 0; u < st.items[n].size(); ++u) {
      st.index_of[n][st.items[n][u]] = static_cast<int>(u);
      st.table.labels[n].push_back(st.items[n][u].degenerate()
                                       ? st.items[n][u].str()
                                       : x.label(st.items[n][u].gen_dim(),
                                                 st.items[n][u].gen));
    }
  }
  for (unsigned n = 1; n <= maxdim; ++n) {
    st.table.face[n].resize(st.items[n].size());
    for (std::size_t u = 0; u < st.items[n].size(); ++u) {
      st.table.face[n][u].resize(n + 1);
      for (unsigned i = 0; i <= n; ++i)
        st.table.face[n][u][i] = st.index_of[n - 1].at(x.face(st.items[n][u], i));
    }
  }
  for (unsigned n = 0; n < maxdim; ++n) {
    st.table.degen[n].resize(st.items[n].size());
    for (std::size_t u = 0; u < st.items[n].size(); ++u) {
      st.table.degen[n][u].resize(n + 1);
      for (unsigned j = 0; j <= n; ++j)
        st.table.degen[n][u][j] =
            st.index_of[n + 1].at(x.degenerate_simplex(st.items[n][u], j));
    }
  }
  if (x.basepoint()) st.table.base_item = st.index_of[0].at(x.basepoint_at(0));
  return st;
}

}  // namespace barw
