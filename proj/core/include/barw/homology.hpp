#pragma once

#include <string>
#include <vector>

#include "barw/chain.hpp"

namespace barw {

enum class Coeffs { Z, Q, Fp };

struct CoeffSystem {
  Coeffs kind = Coeffs::Z;
  Int p = 0;  // prime, used when kind == Fp

  static CoeffSystem integers() { return {Coeffs::Z, 0}; }
  static CoeffSystem rationals() { return {Coeffs::Q, 0}; }
  static CoeffSystem mod(Int prime) { return {Coeffs::Fp, std::move(prime)}; }
};

struct HomologyResult {
  std::size_t degree = 0;
  std::size_t betti = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each dividing the next

  bool trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyResult& o) const = default;
  std::string str() const;  // e.g. "Z^2 + Z/2 + Z/4", "0"
};

// H_n of the complex; degree out of range throws std::out_of_range.
HomologyResult homology(const ChainComplex& c, std::size_t n,
                        CoeffSystem coeffs = CoeffSystem::integers());

// All degrees 0..maxdim.
std::vector<HomologyResult> homology_all(const ChainComplex& c,
                                         CoeffSystem coeffs = CoeffSystem::integers());

// Canonical invariant-factor chain of a finite abelian group given by any
// multiset of cyclic orders, e.g. {2,3} -> {6}.  Used to compare direct sums.
std::vector<Int> invariant_factor_chain(std::vector<Int> orders);

// (rank, canonical torsion) of a direct sum of homology groups.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Int> torsion;
  bool operator==(const AbelianGroup& o) const = default;
  std::string str() const;
};
AbelianGroup direct_sum(const std::vector<AbelianGroup>& parts);
AbelianGroup as_group(const HomologyResult& h);

}  // namespace barw
