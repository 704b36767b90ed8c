#include "barw/snf.hpp"

#include <optional>
#include <stdexcept>

namespace barw {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Quotient minimizing |a - q*b|; ties keep the truncated quotient.
Int round_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (abs_int(r) * 2 > abs_int(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
  return q;
}

std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& d,
                                                             std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t i = k; i < d.rows(); ++i)
    for (std::size_t j = k; j < d.cols(); ++j) {
      const Int& x = d.at(i, j);
      if (x == 0) continue;
      Int a = abs_int(x);
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

void fix_signs(SnfResult& res, std::size_t upto) {
  for (std::size_t k = 0; k < upto; ++k)
    if (res.d.at(k, k) < 0) {
      res.d.negate_row(k);
      res.u.negate_row(k);
    }
}

}  // namespace

std::vector<Int> SnfResult::invariant_factors() const {
  std::vector<Int> out;
  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (d.at(i, i) != 0) out.push_back(d.at(i, i));
  return out;
}

SnfResult smith_normal_form(const IntMatrix& a) {
  SnfResult res;
  res.d = a;
  res.u = IntMatrix::identity(a.rows());
  res.v = IntMatrix::identity(a.cols());
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  std::size_t kmax = std::min(a.rows(), a.cols());
  for (std::size_t k = 0; k < kmax; ++k) {
    for (;;) {
      auto piv = min_pivot(d, k);
      if (!piv) {
        fix_signs(res, k);
        return res;
      }
      d.swap_rows(k, piv->first);
      u.swap_rows(k, piv->first);
      d.swap_cols(k, piv->second);
      v.swap_cols(k, piv->second);

      bool clean = true;
      for (std::size_t i = k + 1; i < d.rows(); ++i) {
        if (d.at(i, k) == 0) continue;
        Int q = round_div(d.at(i, k), d.at(k, k));
        d.add_row(i, k, -q);
        u.add_row(i, k, -q);
        if (d.at(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < d.cols(); ++j) {
        if (d.at(k, j) == 0) continue;
        Int q = round_div(d.at(k, j), d.at(k, k));
        d.add_col(j, k, -q);
        v.add_col(j, k, -q);
        if (d.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder exists, re-pivot

      // Divisibility chain: pull a non-multiple into row k and keep going.
      bool divides = true;
      for (std::size_t i = k + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = k + 1; j < d.cols() && divides; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            d.add_row(k, i, 1);
            u.add_row(k, i, 1);
            divides = false;
          }
      if (divides) break;
    }
  }
  fix_signs(res, kmax);
  return res;
}

std::size_t rank_mod_p(const IntMatrix& a, const Int& p) {
  if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Int>> w(m, std::vector<Int>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int r = a.at(i, j) % p;
      if (r < 0) r += p;
      w[i][j] = r;
    }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && w[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(w[rank], w[piv]);
    // Scale the pivot row by the Fermat inverse of its leading entry.
    Int inv = 1;
    {
      Int b = w[rank][col];
      Int ex = p - 2;
      while (ex > 0) {
        if ((ex & 1) != 0) inv = inv * b % p;
        b = b * b % p;
        ex >>= 1;
      }
    }
    for (std::size_t j = col; j < n; ++j) w[rank][j] = w[rank][j] * inv % p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || w[i][col] == 0) continue;
      Int c = w[i][col];
      for (std::size_t j = col; j < n; ++j) {
        w[i][j] = (w[i][j] - c * w[rank][j]) % p;
        if (w[i][j] < 0) w[i][j] += p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace barw
