#include "barw/sset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace barw {

std::string Simplex::str() const {
  std::ostringstream out;
  for (unsigned j : word) out << "s" << j << " ";
  out << "g" << gen << "@" << gen_dim();
  return out.str();
}

std::vector<unsigned> degeneracy_insert(std::vector<unsigned> w, unsigned j) {
  // s_j s_i = s_{i+1} s_j for j <= i: bump every outer letter >= j, then
  // place j; the result stays strictly decreasing.
  std::size_t p = 0;
  while (p < w.size() && w[p] >= j) {
    ++w[p];
    ++p;
  }
  w.insert(w.begin() + p, j);
  return w;
}

SimplicialSet::SimplicialSet(std::string name, unsigned maxdim, bool semisimplicial)
    : name_(std::move(name)), maxdim_(maxdim), semi_(semisimplicial) {
  gens_.resize(maxdim_ + 1);
  faces_.resize(maxdim_ + 1);
}

unsigned SimplicialSet::add_generator(unsigned n, std::string label) {
  if (n > maxdim_) throw std::out_of_range("generator degree exceeds maxdim");
  gens_[n].push_back(std::move(label));
  faces_[n].emplace_back(n == 0 ? 0 : n + 1);
  return static_cast<unsigned>(gens_[n].size() - 1);
}

void SimplicialSet::set_face(unsigned n, unsigned g, unsigned i, Simplex image) {
  faces_[n].at(g).at(i) = std::move(image);
}

void SimplicialSet::set_basepoint(unsigned gen0) {
  if (gen0 >= num_gens(0)) throw std::out_of_range("basepoint generator out of range");
  basepoint_ = gen0;
}

std::size_t SimplicialSet::total_gens() const {
  std::size_t t = 0;
  for (const auto& g : gens_) t += g.size();
  return t;
}

const Simplex& SimplicialSet::gen_face(unsigned n, unsigned g, unsigned i) const {
  return faces_[n][g][i];
}

Simplex SimplicialSet::face(const Simplex& s, unsigned i) const {
  if (i > s.dim) throw std::out_of_range("face index out of range");
  if (s.word.empty()) return gen_face(s.dim, s.gen, i);
  unsigned j = s.word[0];
  Simplex inner{s.dim - 1, std::vector<unsigned>(s.word.begin() + 1, s.word.end()),
                s.gen};
  if (i == j || i == j + 1) return inner;
  if (i < j) return degenerate_simplex(face(inner, i), j - 1);
  return degenerate_simplex(face(inner, i - 1), j);
}

Simplex SimplicialSet::degenerate_simplex(const Simplex& s, unsigned j) const {
  if (j > s.dim) throw std::out_of_range("degeneracy index out of range");
  return Simplex{s.dim + 1, degeneracy_insert(s.word, j), s.gen};
}

bool SimplicialSet::in_degeneracy_image(const Simplex& s, unsigned j) const {
  if (s.word.empty()) return false;
  return degenerate_simplex(face(s, j), j) == s;
}

std::vector<Simplex> SimplicialSet::simplices(unsigned n) const {
  std::vector<Simplex> out;
  if (semi_) {
    for (unsigned g = 0; g < num_gens(n); ++g) out.push_back(gen_simplex(n, g));
    return out;
  }
  // Words are strictly decreasing subsets of {0..n-1}; enumerate by size,
  // then by the subset in increasing lexicographic order.
  for (unsigned k = 0; k <= n; ++k) {
    unsigned gdim = n - k;
    if (num_gens(gdim) == 0) continue;
    std::vector<unsigned> comb(k);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned lo) {
      if (pos == k) {
        std::vector<unsigned> w(comb.rbegin(), comb.rend());
        for (unsigned g = 0; g < num_gens(gdim); ++g)
          out.push_back(Simplex{n, w, g});
        return;
      }
      for (unsigned v = lo; v + (k - 1 - pos) < n; ++v) {
        comb[pos] = v;
        rec(pos + 1, v + 1);
      }
    };
    if (k == 0) {
      for (unsigned g = 0; g < num_gens(gdim); ++g) out.push_back(gen_simplex(n, g));
    } else {
      rec(0, 0);
    }
  }
  return out;
}

Simplex SimplicialSet::basepoint_at(unsigned n) const {
  if (!basepoint_) throw std::logic_error("simplicial set has no basepoint");
  std::vector<unsigned> w(n);
  for (unsigned t = 0; t < n; ++t) w[t] = n - 1 - t;
  return Simplex{n, std::move(w), *basepoint_};
}

bool SimplicialSet::is_basepoint(const Simplex& s) const {
  return basepoint_ && s.gen_dim() == 0 && s.gen == *basepoint_;
}

void SimplicialSet::validate() const {
  for (unsigned n = 1; n <= maxdim_; ++n) {
    for (unsigned g = 0; g < num_gens(n); ++g) {
      if (faces_[n][g].size() != n + 1)
        throw std::logic_error(name_ + ": generator missing faces at degree " +
                               std::to_string(n));
      for (unsigned i = 0; i <= n; ++i) {
        const Simplex& f = faces_[n][g][i];
        if (f.dim != n - 1)
          throw std::logic_error(name_ + ": face has wrong degree");
        if (semi_ && f.degenerate())
          throw std::logic_error(name_ + ": degenerate face in semisimplicial mode");
        if (!std::is_sorted(f.word.begin(), f.word.end(), std::greater<>()) ||
            std::adjacent_find(f.word.begin(), f.word.end()) != f.word.end())
          throw std::logic_error(name_ + ": face word not in normal form");
        if (!f.word.empty() && f.word[0] + 1 > f.dim)
          throw std::logic_error(name_ + ": face word out of range");
        if (f.gen >= num_gens(f.gen_dim()))
          throw std::logic_error(name_ + ": face generator out of range");
      }
    }
  }
  for (unsigned n = 2; n <= maxdim_; ++n)
    for (unsigned g = 0; g < num_gens(n); ++g)
      for (unsigned j = 1; j <= n; ++j)
        for (unsigned i = 0; i < j; ++i)
          if (face(gen_face(n, g, j), i) != face(gen_face(n, g, i), j - 1))
            throw std::logic_error(name_ + ": simplicial identity d" +
                                   std::to_string(i) + " d" + std::to_string(j) +
                                   " fails on " + label(n, g));
}

bool SimplicialSet::same_presentation(const SimplicialSet& x, const SimplicialSet& y) {
  if (x.maxdim_ != y.maxdim_ || x.semi_ != y.semi_) return false;
  if (x.basepoint_ != y.basepoint_) return false;
  for (unsigned n = 0; n <= x.maxdim_; ++n) {
    if (x.num_gens(n) != y.num_gens(n)) return false;
    for (unsigned g = 0; g < x.num_gens(n); ++g)
      if (n >= 1)
        for (unsigned i = 0; i <= n; ++i)
          if (x.gen_face(n, g, i) != y.gen_face(n, g, i)) return false;
  }
  return true;
}

SimplicialMap::SimplicialMap(const SimplicialSet* src, const SimplicialSet* dst,
                             std::vector<std::vector<Simplex>> gen_images)
    : src_(src), dst_(dst), images_(std::move(gen_images)) {
  images_.resize(src_->maxdim() + 1);
  for (unsigned n = 0; n <= src_->maxdim(); ++n)
    if (images_[n].size() != src_->num_gens(n))
      throw std::invalid_argument("simplicial map: image data has wrong shape");
}

Simplex SimplicialMap::apply(const Simplex& s) const {
  Simplex img = images_[s.gen_dim()][s.gen];
  for (auto it = s.word.rbegin(); it != s.word.rend(); ++it)
    img = dst_->degenerate_simplex(img, *it);
  return img;
}

void SimplicialMap::validate() const {
  for (unsigned n = 0; n <= src_->maxdim(); ++n)
    for (unsigned g = 0; g < src_->num_gens(n); ++g) {
      const Simplex& img = images_[n][g];
      if (img.dim != n) throw std::logic_error("simplicial map is not degree-preserving");
      if (img.gen >= dst_->num_gens(img.gen_dim()))
        throw std::logic_error("simplicial map image out of range");
      if (n == 0) continue;
      for (unsigned i = 0; i <= n; ++i)
        if (apply(src_->gen_face(n, g, i)) != dst_->face(img, i))
          throw std::logic_error("simplicial map does not commute with d" +
                                 std::to_string(i) + " on " + src_->label(n, g));
    }
}

SimplicialMap SimplicialMap::identity(const SimplicialSet* x) {
  std::vector<std::vector<Simplex>> imgs(x->maxdim() + 1);
  for (unsigned n = 0; n <= x->maxdim(); ++n)
    for (unsigned g = 0; g < x->num_gens(n); ++g)
      imgs[n].push_back(x->gen_simplex(n, g));
  return SimplicialMap(x, x, std::move(imgs));
}

SimplicialSet discrete_sset(std::string name, const std::vector<std::string>& points,
                            unsigned maxdim) {
  SimplicialSet x(std::move(name), maxdim);
  for (const auto& p : points) x.add_generator(0, p);
  return x;
}

SimplicialSet point_sset(unsigned maxdim) {
  SimplicialSet x = discrete_sset("point", {"pt"}, maxdim);
  x.set_basepoint(0);
  return x;
}

SimplicialSet sphere_sset(unsigned k, unsigned maxdim) {
  if (maxdim < k) throw std::invalid_argument("sphere needs maxdim >= k");
  if (k == 0) {
    SimplicialSet x = discrete_sset("s0", {"pt", "x"}, maxdim);
    x.set_basepoint(0);
    return x;
  }
  SimplicialSet x("s" + std::to_string(k), maxdim);
  x.add_generator(0, "pt");
  x.set_basepoint(0);
  unsigned c = x.add_generator(k, "c");
  for (unsigned i = 0; i <= k; ++i) x.set_face(k, c, i, x.basepoint_at(k - 1));
  return x;
}

}  // namespace barw
