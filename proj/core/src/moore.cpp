#include "barw/moore.hpp"

#include <stdexcept>

namespace barw {

QVec lerp(const QVec& a, const QVec& b, const Rat& lambda) {
  if (a.xs.size() != b.xs.size()) throw std::invalid_argument("lerp dimension mismatch");
  QVec r;
  r.xs.reserve(a.xs.size());
  for (std::size_t i = 0; i < a.xs.size(); ++i)
    r.xs.push_back(a.xs[i] + lambda * (b.xs[i] - a.xs[i]));
  return r;
}

QPath qpath_const(QVec v) { return QPath{Rat(0), {{Rat(0), std::move(v)}}}; }

QPath make_qpath(std::vector<std::pair<Rat, QVec>> bps) {
  if (bps.empty()) throw std::invalid_argument("path needs at least one breakpoint");
  if (bps.front().first != 0) throw std::invalid_argument("first breakpoint not at 0");
  for (std::size_t i = 1; i < bps.size(); ++i)
    if (!(bps[i - 1].first < bps[i].first))
      throw std::invalid_argument("breakpoint times must increase strictly");
  QPath p;
  p.length = bps.back().first;
  p.bps = std::move(bps);
  return p;
}

QVec qpath_at(const QPath& p, const Rat& t) {
  if (t <= 0) return p.bps.front().second;
  if (t >= p.length) return p.bps.back().second;
  for (std::size_t i = 1; i < p.bps.size(); ++i)
    if (t <= p.bps[i].first) {
      const auto& [t0, v0] = p.bps[i - 1];
      const auto& [t1, v1] = p.bps[i];
      return lerp(v0, v1, (t - t0) / (t1 - t0));
    }
  return p.bps.back().second;
}

const QVec& qpath_end(const QPath& p) { return p.bps.back().second; }

QPath moore_add(const QPath& p, const QPath& q) {
  if (qpath_end(p) != q.bps.front().second)
    throw std::invalid_argument("path addition endpoint mismatch");
  QPath r;
  r.length = p.length + q.length;
  r.bps = p.bps;
  for (std::size_t i = 1; i < q.bps.size(); ++i)
    r.bps.push_back({q.bps[i].first + p.length, q.bps[i].second});
  return r;
}

EmChart chart_canonical(const FinMonoid& m, EmChart ch) {
  if (ch.c0.size() != ch.splx.verts() || ch.c1.size() != ch.splx.verts())
    throw std::invalid_argument("chart coordinate count mismatch");
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < ch.c0.size(); ++i)
      if (ch.c0[i] == 0 && ch.c1[i] == 0) {
        ch.splx = em_face(m, ch.splx, static_cast<unsigned>(i));
        ch.c0.erase(ch.c0.begin() + i);
        ch.c1.erase(ch.c1.begin() + i);
        changed = true;
        break;
      }
  }
  return ch;
}

EmPath empath_const(EMPoint v) { return EmPath{Rat(0), std::move(v), {}}; }

namespace {

std::vector<Rat> lerp_coords(const std::vector<Rat>& a, const std::vector<Rat>& b,
                             const Rat& lambda) {
  std::vector<Rat> r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r.push_back(a[i] + lambda * (b[i] - a[i]));
  return r;
}

}  // namespace

EMPoint empath_at(const FinMonoid& m, const EmPath& p, const Rat& t) {
  if (p.segs.empty() || t <= 0) return p.start;
  Rat acc(0);
  for (const auto& [len, ch] : p.segs) {
    if (t <= acc + len)
      return em_canonical(m, ch.splx, lerp_coords(ch.c0, ch.c1, (t - acc) / len));
    acc += len;
  }
  const EmChart& last = p.segs.back().second;
  return em_canonical(m, last.splx, last.c1);
}

EMPoint empath_end(const FinMonoid& m, const EmPath& p) {
  if (p.segs.empty()) return p.start;
  const EmChart& last = p.segs.back().second;
  return em_canonical(m, last.splx, last.c1);
}

EmPath moore_add(const FinMonoid& m, const EmPath& p, const EmPath& q) {
  if (!(empath_end(m, p) == q.start))
    throw std::invalid_argument("path addition endpoint mismatch");
  EmPath r;
  r.length = p.length + q.length;
  r.start = p.start;
  r.segs = p.segs;
  r.segs.insert(r.segs.end(), q.segs.begin(), q.segs.end());
  return r;
}

EmPath em_translate(const FinMonoid& m, unsigned x, const EmPath& p) {
  EmPath r = p;
  r.start = em_act(m, x, p.start);
  for (auto& [len, ch] : r.segs) {
    if (!ch.splx.em_mode)
      throw std::invalid_argument("translation needs leading slots");
    ch.splx.lead = m.mul(x, ch.splx.lead);
  }
  return r;
}

EmPath empath_project(const FinMonoid& m, const EmPath& p) {
  EmPath r;
  r.length = p.length;
  r.start = em_project_point(m, p.start);
  r.segs.reserve(p.segs.size());
  for (const auto& [len, ch] : p.segs) {
    EmChart c{EmSimplex{false, 0, ch.splx.chain}, ch.c0, ch.c1};
    r.segs.push_back({len, chart_canonical(m, std::move(c))});
  }
  return r;
}

namespace {

void check_coords(std::size_t nloops, const std::vector<Rat>& coords) {
  if (coords.size() != nloops + 1)
    throw std::invalid_argument("evaluation needs one more coordinate than loops");
  Rat sum(0);
  for (const Rat& t : coords) {
    if (t < 0) throw std::invalid_argument("negative simplex coordinate");
    sum += t;
  }
  if (sum != 1) throw std::invalid_argument("simplex coordinates must sum to 1");
}

template <class Path, class Add, class At>
auto ev_impl(const std::vector<Path>& loops, const std::vector<Rat>& coords,
             const Add& add, const At& at) {
  check_coords(loops.size(), coords);
  Path total = loops.at(0);
  std::vector<Rat> partial{loops[0].length};
  for (std::size_t i = 1; i < loops.size(); ++i) {
    total = add(total, loops[i]);
    partial.push_back(partial.back() + loops[i].length);
  }
  Rat time(0);
  for (std::size_t i = 1; i <= loops.size(); ++i) time += coords[i] * partial[i - 1];
  return at(total, time);
}

template <class Path, class Add>
std::vector<Path> face_datum(const std::vector<Path>& loops, std::size_t i,
                             const Add& add) {
  std::size_t n = loops.size();
  std::vector<Path> out;
  if (i == 0) {
    out.assign(loops.begin() + 1, loops.end());
  } else if (i == n) {
    out.assign(loops.begin(), loops.end() - 1);
  } else {
    out.assign(loops.begin(), loops.begin() + i - 1);
    out.push_back(add(loops[i - 1], loops[i]));
    out.insert(out.end(), loops.begin() + i + 1, loops.end());
  }
  return out;
}

}  // namespace

QVec ev(const std::vector<QPath>& loops, const std::vector<Rat>& coords) {
  return ev_impl(loops, coords,
                 [](const QPath& a, const QPath& b) { return moore_add(a, b); },
                 [](const QPath& p, const Rat& t) { return qpath_at(p, t); });
}

EMPoint ev(const FinMonoid& m, const std::vector<EmPath>& loops,
           const std::vector<Rat>& coords) {
  return ev_impl(loops, coords,
                 [&](const EmPath& a, const EmPath& b) { return moore_add(m, a, b); },
                 [&](const EmPath& p, const Rat& t) { return empath_at(m, p, t); });
}

bool ev_face_coherence(const std::vector<QPath>& loops, const std::vector<Rat>& coords,
                       std::size_t i) {
  check_coords(loops.size(), coords);
  if (coords.at(i) != 0)
    throw std::invalid_argument("face coherence needs the tested coordinate to be 0");
  if (loops.size() == 1) {
    // The face datum is an empty loop list; both evaluations sit at the base.
    const QVec& base = loops[0].bps.front().second;
    return ev(loops, coords) == base;
  }
  auto add = [](const QPath& a, const QPath& b) { return moore_add(a, b); };
  std::vector<QPath> datum = face_datum(loops, i, add);
  std::vector<Rat> reduced(coords);
  reduced.erase(reduced.begin() + i);
  return ev(loops, coords) == ev(datum, reduced);
}

bool ev_face_coherence(const FinMonoid& m, const std::vector<EmPath>& loops,
                       const std::vector<Rat>& coords, std::size_t i) {
  check_coords(loops.size(), coords);
  if (coords.at(i) != 0)
    throw std::invalid_argument("face coherence needs the tested coordinate to be 0");
  if (loops.size() == 1) {
    EMPoint base = loops[0].start;
    return ev(m, loops, coords) == base;
  }
  auto add = [&](const EmPath& a, const EmPath& b) { return moore_add(m, a, b); };
  std::vector<EmPath> datum = face_datum(loops, i, add);
  std::vector<Rat> reduced(coords);
  reduced.erase(reduced.begin() + i);
  return ev(m, loops, coords) == ev(m, datum, reduced);
}

}  // namespace barw
