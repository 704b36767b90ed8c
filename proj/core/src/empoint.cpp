#include "barw/empoint.hpp"

#include <stdexcept>

namespace barw {

EmSimplex em_face(const FinMonoid& m, const EmSimplex& s, unsigned i) {
  std::size_t mlen = s.chain.size();
  if (i >= s.verts()) throw std::out_of_range("face index out of range");
  EmSimplex r = s;
  if (s.em_mode) {
    if (i == 0) {
      if (mlen == 0) throw std::out_of_range("vertex has no faces");
      r.lead = m.mul(s.lead, s.chain[0]);
      r.chain.erase(r.chain.begin());
    } else if (i == mlen) {
      r.chain.pop_back();
    } else {
      r.chain[i - 1] = m.mul(s.chain[i - 1], s.chain[i]);
      r.chain.erase(r.chain.begin() + i);
    }
  } else {
    if (mlen == 0) throw std::out_of_range("vertex has no faces");
    if (i == 0) {
      r.chain.erase(r.chain.begin());
    } else if (i == mlen) {
      r.chain.pop_back();
    } else {
      r.chain[i - 1] = m.mul(s.chain[i - 1], s.chain[i]);
      r.chain.erase(r.chain.begin() + i);
    }
  }
  return r;
}

EMPoint em_canonical(const FinMonoid& m, EmSimplex s, std::vector<Rat> coords) {
  if (coords.size() != s.verts())
    throw std::invalid_argument("coordinate count does not match the simplex");
  Rat sum(0);
  for (const Rat& u : coords) {
    if (u < 0) throw std::invalid_argument("negative barycentric coordinate");
    sum += u;
  }
  if (sum != 1) throw std::invalid_argument("barycentric coordinates must sum to 1");
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] == 0) {
        s = em_face(m, s, static_cast<unsigned>(i));
        coords.erase(coords.begin() + i);
        changed = true;
        break;
      }
  }
  return EMPoint{std::move(s), std::move(coords)};
}

EMPoint em_vertex(const FinMonoid& m, unsigned x) {
  (void)m;
  return EMPoint{EmSimplex{true, x, {}}, {Rat(1)}};
}

EMPoint bm_vertex() { return EMPoint{EmSimplex{false, 0, {}}, {Rat(1)}}; }

EMPoint em_act(const FinMonoid& m, unsigned z, const EMPoint& p) {
  if (!p.splx.em_mode)
    throw std::invalid_argument("translation needs a point with a leading slot");
  EMPoint r = p;
  r.splx.lead = m.mul(z, p.splx.lead);
  return r;
}

EMPoint em_project_point(const FinMonoid& m, const EMPoint& p) {
  if (!p.splx.em_mode) return p;
  EmSimplex s{false, 0, p.splx.chain};
  return em_canonical(m, std::move(s), p.coords);
}

std::string EMPoint::str(const FinMonoid& m) const {
  std::string s = "em (";
  if (splx.em_mode)
    s += m.elem_name(splx.lead);
  else
    s += "-";
  s += ";";
  for (std::size_t i = 0; i < splx.chain.size(); ++i) {
    if (i) s += ",";
    s += m.elem_name(splx.chain[i]);
  }
  s += ")@(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += rat_str(coords[i]);
  }
  return s + ")";
}

}  // namespace barw
