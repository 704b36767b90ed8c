#include "barw/whisker.hpp"

#include <algorithm>
#include <stdexcept>

namespace barw {

WhiskerElem whisker_of(const FinMonoid& m, Rat s) {
  if (s < 0 || s > 1) throw std::invalid_argument("whisker coordinate outside [0,1]");
  if (s == 1) return WhiskerElem{false, m.unit(), Rat(0)};
  return WhiskerElem{true, 0, std::move(s)};
}

WhiskerElem whisker_elem(unsigned x) { return WhiskerElem{false, x, Rat(0)}; }

WhiskerElem whisker_unit() { return WhiskerElem{true, 0, Rat(0)}; }

WhiskerElem whisker_mul(const FinMonoid& m, const WhiskerElem& u, const WhiskerElem& v) {
  if (!u.on_whisker && !v.on_whisker) return whisker_elem(m.mul(u.elem, v.elem));
  if (!u.on_whisker) return u;  // x . s = x
  if (!v.on_whisker) return v;  // s . x = x
  return whisker_of(m, std::max(u.s, v.s));
}

unsigned whisker_q(const FinMonoid& m, const WhiskerElem& u) {
  return u.on_whisker ? m.unit() : u.elem;
}

}  // namespace barw
