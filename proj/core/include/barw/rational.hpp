#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace barw {

// Arbitrary-precision integers and rationals used throughout.  Rationals are
// kept in lowest terms with positive denominator by the backend, so equality
// is structural and never needs a tolerance.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline std::string int_str(const Int& n) { return n.str(); }

// Serializes as "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

// Parses "p" or "p/q" with optional sign; q must be nonzero.
Rat parse_rat(const std::string& s);

inline Int parse_int(const std::string& s) { return Int(s); }

}  // namespace barw
