#pragma once

#include <vector>

#include "barw/empoint.hpp"
#include "barw/rational.hpp"

namespace barw {

// ---- Piecewise-linear Moore paths in Q^d ----

struct QVec {
  std::vector<Rat> xs;
  bool operator==(const QVec& o) const = default;
};

QVec lerp(const QVec& a, const QVec& b, const Rat& lambda);

// Breakpoint list with strictly increasing times, first at 0, last at the
// length; values beyond the length stay at the final value.  A length-zero
// path is a single breakpoint.
struct QPath {
  Rat length;
  std::vector<std::pair<Rat, QVec>> bps;
  bool operator==(const QPath& o) const = default;
};

QPath qpath_const(QVec v);
QPath make_qpath(std::vector<std::pair<Rat, QVec>> bps);  // validates shape
QVec qpath_at(const QPath& p, const Rat& t);
const QVec& qpath_end(const QPath& p);

// Strictly associative, strictly unital path addition; the end value of p
// must equal the start value of q exactly.
QPath moore_add(const QPath& p, const QPath& q);

// ---- Piecewise-linear Moore paths in the bar realizations ----

// One linear segment inside a closed simplex; canonical form drops every
// coordinate that vanishes at both ends (crossing into a face happens only at
// segment boundaries).
struct EmChart {
  EmSimplex splx;
  std::vector<Rat> c0, c1;
  bool operator==(const EmChart& o) const = default;
};
EmChart chart_canonical(const FinMonoid& m, EmChart ch);

struct EmPath {
  Rat length;
  EMPoint start;
  std::vector<std::pair<Rat, EmChart>> segs;  // positive lengths
  bool operator==(const EmPath& o) const = default;
};

EmPath empath_const(EMPoint v);
EMPoint empath_at(const FinMonoid& m, const EmPath& p, const Rat& t);
EMPoint empath_end(const FinMonoid& m, const EmPath& p);
EmPath moore_add(const FinMonoid& m, const EmPath& p, const EmPath& q);

// Left translation of a path with leading slots.
EmPath em_translate(const FinMonoid& m, unsigned x, const EmPath& p);

// Collapse of the leading slot on every chart; turns paths from the
// resolution into loops of the classifying model.
EmPath empath_project(const FinMonoid& m, const EmPath& p);

// ---- The evaluation map ----

// (w_1+...+w_n)(sum_i t_i * (l_1+...+l_i)); coordinates sum to 1 and are
// nonnegative.  Loops must share the common base value at both ends.
QVec ev(const std::vector<QPath>& loops, const std::vector<Rat>& coords);
EMPoint ev(const FinMonoid& m, const std::vector<EmPath>& loops,
           const std::vector<Rat>& coords);

// With coords[i] == 0 (precondition), compares the evaluation against the
// evaluation of the i-th face datum at the reduced coordinates.
bool ev_face_coherence(const std::vector<QPath>& loops, const std::vector<Rat>& coords,
                       std::size_t i);
bool ev_face_coherence(const FinMonoid& m, const std::vector<EmPath>& loops,
                       const std::vector<Rat>& coords, std::size_t i);

}  // namespace barw
