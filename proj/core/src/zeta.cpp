#include "barw/zeta.hpp"

#include <stdexcept>

namespace barw {

EmPath zeta(const FinMonoid& m, const WTuple& a) {
  if (a.mode != WMode::Semigroup)
    throw std::invalid_argument("zeta expects a semigroup-mode tuple");
  if (a.entries.empty()) throw std::invalid_argument("zeta on an empty tuple");
  std::size_t n = a.entries.size() - 1;
  EmSimplex ambient{true, m.unit(), a.entries};  // (e, x_0, ..., x_n)

  // t_0 = 1 and t_{n+1} = 1 by convention; u_r at the start of segment k is
  // t_r * prod_{j=r+1..k} (1 - t_j), and the segment moves mass onto vertex
  // k+1 linearly in time.
  auto t_of = [&](std::size_t r) -> Rat {
    if (r == 0 || r == n + 1) return Rat(1);
    return a.params[r - 1];
  };

  EmPath path;
  path.length = Rat(0);
  std::vector<Rat> base(n + 2, Rat(0));
  base[0] = Rat(1);  // segment 0 starts at the vertex (e)
  path.start = em_canonical(m, ambient, base);
  for (std::size_t k = 0; k <= n; ++k) {
    Rat len = t_of(k + 1);
    std::vector<Rat> c0(n + 2, Rat(0)), c1(n + 2, Rat(0));
    for (std::size_t r = 0; r <= k; ++r) {
      Rat u = t_of(r);
      for (std::size_t j = r + 1; j <= k; ++j) u *= Rat(1) - t_of(j);
      c0[r] = u;
      c1[r] = (Rat(1) - len) * u;
    }
    c1[k + 1] = len;
    path.segs.push_back({len, chart_canonical(m, EmChart{ambient, std::move(c0),
                                                         std::move(c1)})});
    path.length += len;
  }
  return path;
}

EmPath pem_unit(const FinMonoid& m) { return empath_const(em_vertex(m, m.unit())); }

bool pem_invariants_ok(const FinMonoid& m, const EmPath& p) {
  if (!(p.start == em_vertex(m, m.unit()))) return false;
  EMPoint end = empath_end(m, p);
  return end.splx.em_mode && end.splx.chain.empty();
}

unsigned pem_endpoint(const FinMonoid& m, const EmPath& p) {
  EMPoint end = empath_end(m, p);
  if (!end.splx.em_mode || !end.splx.chain.empty())
    throw std::logic_error("path does not end at a vertex");
  return end.splx.lead;
}

EmPath pem_oplus(const FinMonoid& m, const EmPath& w1, const EmPath& w2) {
  unsigned x = pem_endpoint(m, w1);
  return moore_add(m, w1, em_translate(m, x, w2));
}

}  // namespace barw
