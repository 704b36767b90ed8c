#include "barw/james.hpp"

#include <map>
#include <stdexcept>

#include "barw/cells.hpp"
#include "barw/nerve.hpp"
#include "barw/sset_ops.hpp"

namespace barw {

JamesTruncation james(const SimplicialSet& x, unsigned letter_bound, unsigned maxdim) {
  if (!x.basepoint()) throw std::invalid_argument("james needs a based input");
  SsetTable xt = table_of_sset(x, maxdim);
  std::vector<int> base_idx(maxdim + 1);
  for (unsigned n = 0; n <= maxdim; ++n)
    base_idx[n] = xt.index_of[n].at(x.basepoint_at(n));

  // Non-base letters per degree, in item order, with their positions.
  std::vector<std::vector<int>> letters(maxdim + 1);
  for (unsigned n = 0; n <= maxdim; ++n)
    for (std::size_t u = 0; u < xt.table.count(n); ++u)
      if (static_cast<int>(u) != base_idx[n]) letters[n].push_back(static_cast<int>(u));

  std::vector<std::map<std::vector<int>, int>> index(maxdim + 1);
  std::vector<std::vector<std::vector<int>>> words(maxdim + 1);
  for (unsigned n = 0; n <= maxdim; ++n) {
    std::vector<std::vector<int>> acc;
    acc.push_back({});
    for (unsigned len = 1; len <= letter_bound; ++len) {
      std::size_t start = 0, stop = acc.size();
      // extend every word of length len-1 (they sit at the tail of acc)
      for (std::size_t w = start; w < stop; ++w)
        if (acc[w].size() == len - 1)
          for (int l : letters[n]) {
            auto ext = acc[w];
            ext.push_back(l);
            acc.push_back(std::move(ext));
          }
    }
    for (auto& w : acc) {
      index[n][w] = static_cast<int>(words[n].size());
      words[n].push_back(std::move(w));
    }
  }

  CellTable tab;
  tab.init(maxdim);
  for (unsigned n = 0; n <= maxdim; ++n) {
    tab.labels[n].reserve(words[n].size());
    for (const auto& w : words[n]) {
      std::string lbl = "w(";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) lbl += "*";
        lbl += xt.table.labels[n][w[i]];
      }
      lbl += ")";
      tab.labels[n].push_back(std::move(lbl));
    }
  }
  for (unsigned n = 1; n <= maxdim; ++n) {
    tab.face[n].resize(words[n].size(), std::vector<int>(n + 1));
    for (std::size_t u = 0; u < words[n].size(); ++u)
      for (unsigned i = 0; i <= n; ++i) {
        std::vector<int> fw;
        fw.reserve(words[n][u].size());
        for (int l : words[n][u]) {
          int fl = xt.table.face[n][l][i];
          if (fl != base_idx[n - 1]) fw.push_back(fl);
        }
        tab.face[n][u][i] = index[n - 1].at(fw);
      }
  }
  for (unsigned n = 0; n < maxdim; ++n) {
    tab.degen[n].resize(words[n].size(), std::vector<int>(n + 1));
    for (std::size_t u = 0; u < words[n].size(); ++u)
      for (unsigned j = 0; j <= n; ++j) {
        std::vector<int> sw;
        sw.reserve(words[n][u].size());
        for (int l : words[n][u]) sw.push_back(xt.table.degen[n][l][j]);
        tab.degen[n][u][j] = index[n + 1].at(sw);
      }
  }
  tab.base_item = index[0].at({});

  auto qr = quotient_table(tab, {}, "j" + std::to_string(letter_bound) + "_" + x.name());
  JamesTruncation res;
  res.letter_bound = letter_bound;
  res.space = std::move(qr.space);
  res.words = std::move(words);
  return res;
}

std::vector<HomologyResult> smash_power_oracle(const SimplicialSet& x, unsigned k,
                                               unsigned maxdim) {
  if (!x.basepoint()) throw std::invalid_argument("smash power needs a based input");
  if (k == 0) throw std::invalid_argument("smash power needs k >= 1");
  SimplicialSet power = x;
  for (unsigned i = 1; i < k; ++i) power = smash(power, x, maxdim);
  ChainComplex c = chains(power);
  return homology_all(c);
}

}  // namespace barw
