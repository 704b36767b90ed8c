#include "barw/wcomplex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace barw {

std::size_t BlockCell::dim() const {
  std::size_t d = 0;
  for (const auto& b : blocks) d += b.size() - 1;
  return d;
}

std::size_t BlockCell::letters() const {
  std::size_t l = 0;
  for (const auto& b : blocks) l += b.size();
  return l;
}

std::string BlockCell::str(const FinSemigroup& g) const {
  std::string s;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (j) s += "|";
    for (std::size_t i = 0; i < blocks[j].size(); ++i) {
      if (i) s += ".";
      s += g.elem_name(blocks[j][i]);
    }
  }
  return s;
}

namespace {

void enumerate_words(std::size_t alphabet, std::size_t len,
                     const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> w(len, 0);
  for (;;) {
    fn(w);
    std::size_t p = len;
    while (p > 0) {
      if (++w[p - 1] < alphabet) break;
      w[p - 1] = 0;
      --p;
    }
    if (p == 0) break;
  }
}

// All splits of a word into nonempty consecutive blocks.
void enumerate_cells_of_word(const std::vector<unsigned>& w,
                             const std::function<void(const BlockCell&)>& fn) {
  std::size_t cuts = w.size() - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cuts); ++mask) {
    BlockCell c;
    std::vector<unsigned> cur;
    for (std::size_t i = 0; i < w.size(); ++i) {
      cur.push_back(w[i]);
      if (i < cuts && (mask >> i & 1)) {
        c.blocks.push_back(cur);
        cur.clear();
      }
    }
    c.blocks.push_back(cur);
    fn(c);
  }
}

struct Faces {
  BlockCell merge, split;
};

// Faces at the k-th free slot (global, 0-based).
Faces faces_at(const FinSemigroup& g, const BlockCell& c, std::size_t k) {
  std::size_t seen = 0;
  for (std::size_t j = 0; j < c.blocks.size(); ++j) {
    std::size_t free_here = c.blocks[j].size() - 1;
    if (k >= seen + free_here) {
      seen += free_here;
      continue;
    }
    std::size_t i = k - seen;  // slot between letters i, i+1 of block j
    Faces f;
    f.merge = c;
    f.merge.blocks[j][i] = g.mul(c.blocks[j][i], c.blocks[j][i + 1]);
    f.merge.blocks[j].erase(f.merge.blocks[j].begin() + i + 1);
    f.split = c;
    std::vector<unsigned> left(c.blocks[j].begin(), c.blocks[j].begin() + i + 1);
    std::vector<unsigned> right(c.blocks[j].begin() + i + 1, c.blocks[j].end());
    f.split.blocks[j] = std::move(left);
    f.split.blocks.insert(f.split.blocks.begin() + j + 1, std::move(right));
    return f;
  }
  throw std::out_of_range("free slot index out of range");
}

}  // namespace

std::vector<std::vector<BlockCell>> wbar_cells(const FinSemigroup& g,
                                               std::size_t letters) {
  if (letters < 1) throw std::out_of_range("letter bound must be >= 1");
  std::vector<std::vector<BlockCell>> by_dim(letters);
  for (std::size_t len = 1; len <= letters; ++len)
    enumerate_words(g.size(), len, [&](const std::vector<unsigned>& w) {
      enumerate_cells_of_word(w,
                              [&](const BlockCell& c) { by_dim[c.dim()].push_back(c); });
    });
  for (auto& cells : by_dim) std::sort(cells.begin(), cells.end());
  while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
  return by_dim;
}

ChainComplex wbar_complex(const FinSemigroup& g, std::size_t letters) {
  auto by_dim = wbar_cells(g, letters);
  std::size_t maxd = by_dim.size() - 1;
  std::vector<std::map<BlockCell, unsigned>> index(by_dim.size());
  std::vector<std::size_t> dims(maxd + 1);
  std::vector<std::vector<std::string>> labels(maxd + 1);
  for (std::size_t d = 0; d <= maxd; ++d) {
    dims[d] = by_dim[d].size();
    for (std::size_t i = 0; i < by_dim[d].size(); ++i) {
      index[d][by_dim[d][i]] = static_cast<unsigned>(i);
      labels[d].push_back(by_dim[d][i].str(g));
    }
  }
  std::vector<IntMatrix> bds(maxd + 1);
  for (std::size_t d = 1; d <= maxd; ++d) {
    IntMatrix b(dims[d - 1], dims[d]);
    for (std::size_t ci = 0; ci < by_dim[d].size(); ++ci) {
      const BlockCell& c = by_dim[d][ci];
      for (std::size_t k = 0; k < d; ++k) {
        Faces f = faces_at(g, c, k);
        Int sgn = (k % 2 == 0) ? 1 : -1;
        b.at(index[d - 1].at(f.split), ci) += sgn;
        b.at(index[d - 1].at(f.merge), ci) -= sgn;
      }
    }
    bds[d] = std::move(b);
  }
  return ChainComplex(std::move(dims), std::move(bds), std::move(labels));
}

WbarComponents wbar_components(const FinSemigroup& g, std::size_t letters) {
  auto by_dim = wbar_cells(g, letters);
  WbarComponents res;
  std::map<std::vector<unsigned>, int> widx;
  for (const BlockCell& c : by_dim[0]) {
    std::vector<unsigned> w;
    for (const auto& b : c.blocks) w.push_back(b[0]);
    widx[w] = static_cast<int>(res.words.size());
    res.words.push_back(std::move(w));
  }
  std::vector<int> parent(res.words.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto word_of = [&](const BlockCell& c) {
    std::vector<unsigned> w;
    for (const auto& b : c.blocks) w.insert(w.end(), b.begin(), b.end());
    return w;
  };
  if (by_dim.size() > 1)
    for (const BlockCell& c : by_dim[1]) {
      Faces f = faces_at(g, c, 0);
      int a = find(widx.at(word_of(f.split)));
      int b = find(widx.at(word_of(f.merge)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  res.component.resize(res.words.size());
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < res.words.size(); ++i) {
    int r = find(static_cast<int>(i));
    auto [it, fresh] = relabel.try_emplace(r, static_cast<int>(relabel.size()));
    res.component[i] = it->second;
    (void)fresh;
  }
  res.num_components = relabel.size();
  return res;
}

}  // namespace barw
