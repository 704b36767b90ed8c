#pragma once

#include <random>
#include <string>
#include <vector>

#include "barw/rational.hpp"
#include "barw/table.hpp"

namespace barw {

enum class WMode { Semigroup, Monoid };

// Point of the interval-word resolution of a semigroup or monoid: entries
// x_0..x_n with parameters t_1..t_n strictly between the entries.  Normal
// form: no parameter is 0 (adjacent entries multiplied out), and in monoid
// mode no entry is the unit.  In monoid mode the empty tuple represents the
// unit element.
struct WTuple {
  WMode mode = WMode::Semigroup;
  std::vector<unsigned> entries;
  std::vector<Rat> params;  // size entries.size() - 1 (0 when empty)

  bool operator==(const WTuple& o) const = default;
  std::size_t letters() const { return entries.size(); }
  std::string str(const FinSemigroup& g) const;
};

// Rewrites to normal form, leftmost applicable rule first.  Parameters must
// lie in [0, 1]; entries must be valid element indices.
WTuple normalize(const FinSemigroup& g, WMode mode, std::vector<unsigned> entries,
                 std::vector<Rat> params, int unit = -1);
WTuple normalize(const FinMonoid& m, WMode mode, std::vector<unsigned> entries,
                 std::vector<Rat> params);

// Same rewrite system with the applicable rule chosen at random each step;
// used to confirm confluence.
WTuple normalize_random_order(const FinSemigroup& g, WMode mode,
                              std::vector<unsigned> entries, std::vector<Rat> params,
                              std::mt19937_64& rng, int unit = -1);

// Concatenation with parameter 1 between the factors, then normal form.
WTuple wmul(const FinSemigroup& g, const WTuple& a, const WTuple& b, int unit = -1);
WTuple wmul(const FinMonoid& m, const WTuple& a, const WTuple& b);

// One-letter tuple (the section of epsilon); in monoid mode iota(unit) is the
// empty tuple.
WTuple iota(const FinSemigroup& g, WMode mode, unsigned x, int unit = -1);
WTuple iota(const FinMonoid& m, WMode mode, unsigned x);

// Product of all entries; the unit for the empty tuple.
unsigned epsilon(const FinSemigroup& g, const WTuple& a, int unit = -1);
unsigned epsilon(const FinMonoid& m, const WTuple& a);

// Scales every parameter by s in [0, 1] and renormalizes.
WTuple shrink(const FinSemigroup& g, const WTuple& a, const Rat& s, int unit = -1);
WTuple shrink(const FinMonoid& m, const WTuple& a, const Rat& s);

// Reinterprets a semigroup-mode tuple over a monoid in monoid mode (imposing
// the unit relations).
WTuple eps_prime(const FinMonoid& m, const WTuple& a);

// Applies a homomorphism entrywise and renormalizes.  The table is validated:
// multiplicative, and unit-preserving in monoid mode.
WTuple map_w(const FinSemigroup& src, const FinSemigroup& dst, const HomTable& f,
             const WTuple& a, int src_unit = -1, int dst_unit = -1);
WTuple map_w(const FinMonoid& src, const FinMonoid& dst, const HomTable& f,
             const WTuple& a);

// Serializes as "(x0 t1 x1 ... )" with rationals "p/q"; empty monoid-mode
// tuple prints as the unit's name.
std::string wtuple_str(const FinSemigroup& g, const WTuple& a, int unit = -1);

}  // namespace barw
