#include "barw/grpcomp.hpp"

#include <stdexcept>

#include "barw/nerve.hpp"
#include "barw/snf.hpp"
#include "barw/tensor.hpp"

namespace barw {

CommMonoidPresentation presentation_of(const FinMonoid& m) {
  if (!m.is_commutative())
    throw std::invalid_argument("presentation needs a commutative monoid");
  std::size_t n = m.size();
  CommMonoidPresentation p;
  p.generators = n;
  p.relations = IntMatrix(n, n * n);
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) {
      std::size_t col = x * n + y;
      p.relations.at(x, col) += 1;
      p.relations.at(y, col) += 1;
      p.relations.at(m.mul(x, y), col) -= 1;
    }
  return p;
}

AbelianGroup grothendieck_group(const CommMonoidPresentation& p) {
  AbelianGroup g;
  if (p.relations.rows() == 0 || p.relations.cols() == 0) {
    g.rank = p.generators;
    return g;
  }
  auto snf = smith_normal_form(p.relations);
  auto factors = snf.invariant_factors();
  g.rank = p.generators - factors.size();
  for (const Int& d : factors)
    if (d > 1) g.torsion.push_back(d);
  g.torsion = invariant_factor_chain(g.torsion);
  return g;
}

AbelianGroup grothendieck_group(const FinMonoid& m) {
  return grothendieck_group(presentation_of(m));
}

AbelianGroup h1_of_bm(const FinMonoid& m) {
  ChainComplex c = chains(nerve(m, 3));
  return as_group(homology(c, 1));
}

Diagram span_diagram(const SimplicialSet& l, const SimplicialSet& r, unsigned maxdim) {
  if (!l.basepoint() || !r.basepoint())
    throw std::invalid_argument("span diagram needs based ends");
  Diagram d(span_category());
  d.set_at(0, l);
  d.set_at(1, point_sset(maxdim));
  d.set_at(2, r);
  {
    std::vector<std::vector<Simplex>> imgs(maxdim + 1);
    imgs[0].push_back(Simplex{0, {}, *l.basepoint()});
    d.set_arrow(3, std::move(imgs));  // middle -> left
  }
  {
    std::vector<std::vector<Simplex>> imgs(maxdim + 1);
    imgs[0].push_back(Simplex{0, {}, *r.basepoint()});
    d.set_arrow(4, std::move(imgs));  // middle -> right
  }
  d.finish();
  return d;
}

HocolimCheckReport hocolim_preservation_check(const FinMonoid& g1, const FinMonoid& g2,
                                              unsigned maxdeg) {
  unsigned maxdim = maxdeg + 1;
  SimplicialSet n1 = nerve(g1, maxdim);
  SimplicialSet n2 = nerve(g2, maxdim);
  Diagram d = span_diagram(n1, n2, maxdim);
  TensorResult h = hocolim(d, maxdim);
  ChainComplex hc = chains(h.space);
  ChainComplex c1 = chains(n1);
  ChainComplex c2 = chains(n2);

  HocolimCheckReport rep;
  for (unsigned deg = 0; deg <= maxdeg; ++deg) {
    HocolimCheckLine line;
    line.degree = deg;
    line.lhs = as_group(homology(hc, deg));
    AbelianGroup a1 = as_group(homology(c1, deg));
    AbelianGroup a2 = as_group(homology(c2, deg));
    if (deg == 0) {
      // Reduced: both sides must be a single component.
      line.rhs = AbelianGroup{1, {}};
    } else {
      line.rhs = direct_sum({a1, a2});
    }
    line.pass = line.lhs == line.rhs;
    rep.lines.push_back(line);
    rep.pass &= line.pass;
  }
  return rep;
}

}  // namespace barw
