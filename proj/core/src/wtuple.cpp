#include "barw/wtuple.hpp"

#include <algorithm>
#include <stdexcept>

namespace barw {

namespace {

struct Rule {
  // kind 0: parameter at index p is 0 -> merge entries p, p+1.
  // kind 1: unit entry at index p -> drop/merge per position.
  int kind;
  std::size_t pos;
};

// Scans entry/parameter positions left to right and returns the first
// applicable rewrite.
std::vector<Rule> applicable_rules(const std::vector<unsigned>& entries,
                                   const std::vector<Rat>& params, WMode mode,
                                   int unit) {
  std::vector<Rule> out;
  for (std::size_t p = 0; p < entries.size(); ++p) {
    if (mode == WMode::Monoid && static_cast<int>(entries[p]) == unit)
      out.push_back(Rule{1, p});
    if (p < params.size() && params[p] == 0) out.push_back(Rule{0, p});
  }
  return out;
}

void apply_rule(const FinSemigroup& g, std::vector<unsigned>& entries,
                std::vector<Rat>& params, const Rule& r) {
  if (r.kind == 0) {
    entries[r.pos] = g.mul(entries[r.pos], entries[r.pos + 1]);
    entries.erase(entries.begin() + r.pos + 1);
    params.erase(params.begin() + r.pos);
    return;
  }
  std::size_t p = r.pos, n = entries.size() - 1;
  if (entries.size() == 1) {
    entries.clear();
    return;
  }
  if (p == 0) {
    entries.erase(entries.begin());
    params.erase(params.begin());
  } else if (p == n) {
    entries.pop_back();
    params.pop_back();
  } else {
    params[p - 1] = std::max(params[p - 1], params[p]);
    params.erase(params.begin() + p);
    entries.erase(entries.begin() + p);
  }
}

WTuple normalize_impl(const FinSemigroup& g, WMode mode, std::vector<unsigned> entries,
                      std::vector<Rat> params, int unit, std::mt19937_64* rng) {
  if (mode == WMode::Monoid && unit < 0)
    throw std::invalid_argument("monoid mode needs a unit");
  if (entries.empty() && mode == WMode::Semigroup)
    throw std::invalid_argument("semigroup-mode tuple cannot be empty");
  if (!entries.empty() && params.size() != entries.size() - 1)
    throw std::invalid_argument("tuple has mismatched parameter count");
  for (unsigned e : entries)
    if (e >= g.size()) throw std::invalid_argument("tuple entry out of range");
  for (const Rat& t : params)
    if (t < 0 || t > 1) throw std::invalid_argument("tuple parameter outside [0,1]");

  for (;;) {
    auto rules = applicable_rules(entries, params, mode, unit);
    if (rules.empty()) break;
    std::size_t pick = 0;
    if (rng) pick = (*rng)() % rules.size();
    apply_rule(g, entries, params, rules[pick]);
  }
  WTuple w;
  w.mode = mode;
  w.entries = std::move(entries);
  w.params = std::move(params);
  return w;
}

}  // namespace

std::string WTuple::str(const FinSemigroup& g) const {
  return wtuple_str(g, *this);
}

WTuple normalize(const FinSemigroup& g, WMode mode, std::vector<unsigned> entries,
                 std::vector<Rat> params, int unit) {
  return normalize_impl(g, mode, std::move(entries), std::move(params), unit, nullptr);
}

WTuple normalize(const FinMonoid& m, WMode mode, std::vector<unsigned> entries,
                 std::vector<Rat> params) {
  return normalize_impl(m.as_semigroup(), mode, std::move(entries), std::move(params),
                        static_cast<int>(m.unit()), nullptr);
}

WTuple normalize_random_order(const FinSemigroup& g, WMode mode,
                              std::vector<unsigned> entries, std::vector<Rat> params,
                              std::mt19937_64& rng, int unit) {
  return normalize_impl(g, mode, std::move(entries), std::move(params), unit, &rng);
}

WTuple wmul(const FinSemigroup& g, const WTuple& a, const WTuple& b, int unit) {
  if (a.mode != b.mode) throw std::invalid_argument("wmul: mode mismatch");
  if (a.entries.empty()) return b;
  if (b.entries.empty()) return a;
  std::vector<unsigned> entries(a.entries);
  std::vector<Rat> params(a.params);
  params.push_back(Rat(1));
  entries.insert(entries.end(), b.entries.begin(), b.entries.end());
  params.insert(params.end(), b.params.begin(), b.params.end());
  return normalize_impl(g, a.mode, std::move(entries), std::move(params), unit, nullptr);
}

WTuple wmul(const FinMonoid& m, const WTuple& a, const WTuple& b) {
  return wmul(m.as_semigroup(), a, b, static_cast<int>(m.unit()));
}

WTuple iota(const FinSemigroup& g, WMode mode, unsigned x, int unit) {
  return normalize_impl(g, mode, {x}, {}, unit, nullptr);
}

WTuple iota(const FinMonoid& m, WMode mode, unsigned x) {
  return iota(m.as_semigroup(), mode, x, static_cast<int>(m.unit()));
}

unsigned epsilon(const FinSemigroup& g, const WTuple& a, int unit) {
  if (a.entries.empty()) {
    if (unit < 0) throw std::invalid_argument("epsilon of empty tuple needs a unit");
    return static_cast<unsigned>(unit);
  }
  unsigned p = a.entries[0];
  for (std::size_t i = 1; i < a.entries.size(); ++i) p = g.mul(p, a.entries[i]);
  return p;
}

unsigned epsilon(const FinMonoid& m, const WTuple& a) {
  return epsilon(m.as_semigroup(), a, static_cast<int>(m.unit()));
}

WTuple shrink(const FinSemigroup& g, const WTuple& a, const Rat& s, int unit) {
  if (s < 0 || s > 1) throw std::invalid_argument("shrink parameter outside [0,1]");
  std::vector<Rat> params(a.params);
  for (Rat& t : params) t *= s;
  return normalize_impl(g, a.mode, a.entries, std::move(params), unit, nullptr);
}

WTuple shrink(const FinMonoid& m, const WTuple& a, const Rat& s) {
  return shrink(m.as_semigroup(), a, s, static_cast<int>(m.unit()));
}

WTuple eps_prime(const FinMonoid& m, const WTuple& a) {
  if (a.mode != WMode::Semigroup)
    throw std::invalid_argument("eps_prime expects a semigroup-mode tuple");
  return normalize_impl(m.as_semigroup(), WMode::Monoid, a.entries, a.params,
                        static_cast<int>(m.unit()), nullptr);
}

WTuple map_w(const FinSemigroup& src, const FinSemigroup& dst, const HomTable& f,
             const WTuple& a, int src_unit, int dst_unit) {
  if (!f.is_semigroup_hom(src, dst))
    throw std::invalid_argument("map_w: table is not a homomorphism");
  if (a.mode == WMode::Monoid) {
    if (src_unit < 0 || dst_unit < 0 ||
        f.image[static_cast<unsigned>(src_unit)] != static_cast<unsigned>(dst_unit))
      throw std::invalid_argument("map_w: table does not preserve the unit");
  }
  std::vector<unsigned> entries;
  entries.reserve(a.entries.size());
  for (unsigned e : a.entries) entries.push_back(f.image[e]);
  return normalize_impl(dst, a.mode, std::move(entries), a.params, dst_unit, nullptr);
}

WTuple map_w(const FinMonoid& src, const FinMonoid& dst, const HomTable& f,
             const WTuple& a) {
  return map_w(src.as_semigroup(), dst.as_semigroup(), f, a,
               static_cast<int>(src.unit()), static_cast<int>(dst.unit()));
}

std::string wtuple_str(const FinSemigroup& g, const WTuple& a, int unit) {
  if (a.entries.empty()) {
    if (unit >= 0) return "(" + g.elem_name(static_cast<unsigned>(unit)) + ")";
    return "()";
  }
  std::string s = "(";
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (i) s += " " + rat_str(a.params[i - 1]) + " ";
    s += g.elem_name(a.entries[i]);
  }
  return s + ")";
}

}  // namespace barw
