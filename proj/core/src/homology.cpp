#include "barw/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "barw/snf.hpp"

namespace barw {

std::string HomologyResult::str() const {
  AbelianGroup g{betti, torsion};
  return g.str();
}

std::string AbelianGroup::str() const {
  if (rank == 0 && torsion.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank == 1) {
    out << "Z";
    first = false;
  } else if (rank > 1) {
    out << "Z^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  return out.str();
}

HomologyResult homology(const ChainComplex& c, std::size_t n, CoeffSystem coeffs) {
  if (n > c.maxdim()) throw std::out_of_range("homology degree out of range");
  HomologyResult h;
  h.degree = n;
  std::size_t dim_n = c.dim(n);
  const IntMatrix& d_n = c.boundary(n);
  const IntMatrix& d_np1 = c.boundary(n + 1);

  auto rank_of = [&](const IntMatrix& m) -> std::size_t {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    switch (coeffs.kind) {
      case Coeffs::Fp:
        return rank_mod_p(m, coeffs.p);
      default:
        return smith_normal_form(m).rank();
    }
  };

  std::size_t rn = (n == 0) ? 0 : rank_of(d_n);
  std::size_t rnp1 = (n + 1 > c.maxdim()) ? 0 : rank_of(d_np1);
  h.betti = dim_n - rn - rnp1;

  if (coeffs.kind == Coeffs::Z && n + 1 <= c.maxdim() && d_np1.rows() != 0 &&
      d_np1.cols() != 0) {
    for (const auto& f : smith_normal_form(d_np1).invariant_factors())
      if (f > 1) h.torsion.push_back(f);
  }
  return h;
}

std::vector<HomologyResult> homology_all(const ChainComplex& c, CoeffSystem coeffs) {
  std::vector<HomologyResult> out;
  for (std::size_t n = 0; n <= c.maxdim(); ++n) out.push_back(homology(c, n, coeffs));
  return out;
}

namespace {

std::map<Int, std::vector<std::size_t>> prime_buckets(const std::vector<Int>& orders) {
  std::map<Int, std::vector<std::size_t>> buckets;  // prime -> exponents
  for (Int x : orders) {
    if (x <= 1) continue;
    for (Int p = 2; p * p <= x; ++p) {
      if (x % p != 0) continue;
      std::size_t e = 0;
      while (x % p == 0) {
        x /= p;
        ++e;
      }
      buckets[p].push_back(e);
    }
    if (x > 1) buckets[x].push_back(1);
  }
  return buckets;
}

}  // namespace

std::vector<Int> invariant_factor_chain(std::vector<Int> orders) {
  auto buckets = prime_buckets(orders);
  std::size_t len = 0;
  for (auto& [p, es] : buckets) {
    std::sort(es.begin(), es.end(), std::greater<>());
    len = std::max(len, es.size());
  }
  // factor 0 is the largest; build descending, then reverse.
  std::vector<Int> chain(len, Int(1));
  for (auto& [p, es] : buckets)
    for (std::size_t i = 0; i < es.size(); ++i) {
      Int pw = 1;
      for (std::size_t k = 0; k < es[i]; ++k) pw *= p;
      chain[i] *= pw;
    }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

AbelianGroup as_group(const HomologyResult& h) {
  return AbelianGroup{h.betti, invariant_factor_chain(h.torsion)};
}

AbelianGroup direct_sum(const std::vector<AbelianGroup>& parts) {
  AbelianGroup g;
  std::vector<Int> orders;
  for (const auto& p : parts) {
    g.rank += p.rank;
    orders.insert(orders.end(), p.torsion.begin(), p.torsion.end());
  }
  g.torsion = invariant_factor_chain(std::move(orders));
  return g;
}

}  // namespace barw
