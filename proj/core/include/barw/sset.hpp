#pragma once

#include <optional>
#include <string>
#include <vector>

#include "barw/rational.hpp"

namespace barw {

// A simplex of a finitely presented simplicial set, written in Eilenberg-
// Zilber normal form: an iterated degeneracy s_{w[0]} s_{w[1]} ... s_{w[k-1]}
// of a nondegenerate generator, with w strictly decreasing.  dim is the
// geometric degree; the generator lives in degree dim - w.size().
struct Simplex {
  unsigned dim = 0;
  std::vector<unsigned> word;
  unsigned gen = 0;

  bool degenerate() const { return !word.empty(); }
  unsigned gen_dim() const { return dim - static_cast<unsigned>(word.size()); }

  bool operator==(const Simplex& o) const = default;
  bool operator<(const Simplex& o) const {
    if (dim != o.dim) return dim < o.dim;
    if (word != o.word) return word < o.word;
    return gen < o.gen;
  }
  std::string str() const;
};

// Finite-per-degree simplicial set presented by nondegenerate generators and
// their faces.  In semisimplicial mode no degeneracy words may appear in face
// images and the all-simplex enumeration lists generators only.
class SimplicialSet {
 public:
  SimplicialSet() = default;
  SimplicialSet(std::string name, unsigned maxdim, bool semisimplicial = false);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  unsigned maxdim() const { return maxdim_; }
  bool semisimplicial() const { return semi_; }

  // Builder interface.  Faces must be added for every generator of positive
  // degree before validate()/use.
  unsigned add_generator(unsigned n, std::string label);
  void set_face(unsigned n, unsigned g, unsigned i, Simplex image);
  void set_basepoint(unsigned gen0);

  std::size_t num_gens(unsigned n) const {
    return n < gens_.size() ? gens_[n].size() : 0;
  }
  std::size_t total_gens() const;
  const std::string& label(unsigned n, unsigned g) const { return gens_[n][g]; }
  const Simplex& gen_face(unsigned n, unsigned g, unsigned i) const;
  std::optional<unsigned> basepoint() const { return basepoint_; }

  // d_i of an arbitrary simplex, via the simplicial identities.
  Simplex face(const Simplex& s, unsigned i) const;
  // s_j of an arbitrary simplex.
  Simplex degenerate_simplex(const Simplex& s, unsigned j) const;
  // Whether s lies in the image of s_j.
  bool in_degeneracy_image(const Simplex& s, unsigned j) const;

  // All simplices of degree n (generators plus degeneracies), canonically
  // ordered; in semisimplicial mode just the generators.
  std::vector<Simplex> simplices(unsigned n) const;

  // The n-fold degenerate basepoint at degree n.
  Simplex basepoint_at(unsigned n) const;
  bool is_basepoint(const Simplex& s) const;

  Simplex gen_simplex(unsigned n, unsigned g) const { return Simplex{n, {}, g}; }

  // Exhaustively checks the face data: indices in range, d_i d_j = d_{j-1} d_i
  // for i < j on every generator.  Throws std::logic_error on failure.
  void validate() const;

  // Structural identity: same generator counts, labels ignored, same faces,
  // same basepoint index.
  static bool same_presentation(const SimplicialSet& x, const SimplicialSet& y);

 private:
  std::string name_;
  unsigned maxdim_ = 0;
  bool semi_ = false;
  std::vector<std::vector<std::string>> gens_;
  std::vector<std::vector<std::vector<Simplex>>> faces_;  // [n][g][i], n >= 1
  std::optional<unsigned> basepoint_;
};

// Composes a degeneracy word normal form: word of s_j applied after the
// (strictly decreasing) word w.
std::vector<unsigned> degeneracy_insert(std::vector<unsigned> w, unsigned j);

// Map of simplicial sets, given on generators; extended to all simplices by
// commuting with degeneracies.
class SimplicialMap {
 public:
  SimplicialMap() = default;
  SimplicialMap(const SimplicialSet* src, const SimplicialSet* dst,
                std::vector<std::vector<Simplex>> gen_images);

  const SimplicialSet& src() const { return *src_; }
  const SimplicialSet& dst() const { return *dst_; }
  const Simplex& gen_image(unsigned n, unsigned g) const { return images_[n][g]; }
  Simplex apply(const Simplex& s) const;

  // Checks apply(d_i g) == d_i apply(g) for every generator; throws on failure.
  void validate() const;

  static SimplicialMap identity(const SimplicialSet* x);

 private:
  const SimplicialSet* src_ = nullptr;
  const SimplicialSet* dst_ = nullptr;
  std::vector<std::vector<Simplex>> images_;  // [n][g]
};

// Discrete simplicial set on labelled points.
SimplicialSet discrete_sset(std::string name, const std::vector<std::string>& points,
                            unsigned maxdim);

// One point, based.
SimplicialSet point_sset(unsigned maxdim);

// Simplicial k-sphere: basepoint plus one generator in degree k (k >= 1 with
// all faces at the basepoint); k = 0 gives two points.
SimplicialSet sphere_sset(unsigned k, unsigned maxdim);

}  // namespace barw
