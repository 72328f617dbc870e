// Independent oracles used by the unit and acceptance suites. Nothing here
// reuses the closed-form code paths it is checking: the interval model is a
// plain bitmap over a window, the symbolic oracle expands elements into
// explicit atom sets and applies the atom-pair product rules literally, and
// the concrete oracles evaluate the quantifier definitions directly.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "relalg/concrete.hpp"
#include "relalg/intervals.hpp"
#include "relalg/sugihara.hpp"

namespace oracle {

// ---- bitmap model of integer interval sets ----------------------------------

constexpr std::int64_t kWindow = 64;  // covers [-64, 64]

struct WindowSet {
  std::vector<bool> bits = std::vector<bool>(2 * kWindow + 1, false);
  bool below = false;  // membership of everything left of the window
  bool above = false;

  static WindowSet of(const relalg::IntervalSet& s) {
    WindowSet w;
    for (std::int64_t n = -kWindow; n <= kWindow; ++n)
      w.bits[static_cast<std::size_t>(n + kWindow)] = s.contains(n);
    w.below = s.unbounded_below();
    w.above = s.unbounded_above();
    return w;
  }

  bool at(std::int64_t n) const { return bits[static_cast<std::size_t>(n + kWindow)]; }
  void set(std::int64_t n, bool v) { bits[static_cast<std::size_t>(n + kWindow)] = v; }

  friend bool operator==(const WindowSet&, const WindowSet&) = default;
};

inline WindowSet w_union(const WindowSet& a, const WindowSet& b) {
  WindowSet out;
  for (std::int64_t n = -kWindow; n <= kWindow; ++n) out.set(n, a.at(n) || b.at(n));
  out.below = a.below || b.below;
  out.above = a.above || b.above;
  return out;
}

inline WindowSet w_intersect(const WindowSet& a, const WindowSet& b) {
  WindowSet out;
  for (std::int64_t n = -kWindow; n <= kWindow; ++n) out.set(n, a.at(n) && b.at(n));
  out.below = a.below && b.below;
  out.above = a.above && b.above;
  return out;
}

inline WindowSet w_complement(const WindowSet& a) {
  WindowSet out;
  for (std::int64_t n = -kWindow; n <= kWindow; ++n) out.set(n, !a.at(n));
  out.below = !a.below;
  out.above = !a.above;
  return out;
}

// brute-force pairwise max over the window (valid for window-bounded inputs)
inline WindowSet w_max_combine(const WindowSet& a, const WindowSet& b) {
  WindowSet out;
  for (std::int64_t x = -kWindow; x <= kWindow; ++x)
    for (std::int64_t y = -kWindow; y <= kWindow; ++y)
      if (a.at(x) && b.at(y)) out.set(std::max(x, y), true);
  return out;
}

// random interval set with endpoints in [-16, 16], occasionally unbounded
inline relalg::IntervalSet random_interval_set(std::mt19937_64& rng) {
  using relalg::Bound;
  using relalg::IntervalSet;
  std::uniform_int_distribution<int> count(0, 3), endpoint(-16, 16), tail(0, 9);
  std::vector<IntervalSet::Interval> parts;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    int a = endpoint(rng), b = endpoint(rng);
    if (a > b) std::swap(a, b);
    Bound lo = Bound::finite(a), hi = Bound::finite(b);
    if (tail(rng) == 0) lo = Bound::neg_inf();
    if (tail(rng) == 0) hi = Bound::pos_inf();
    parts.push_back({lo, hi});
  }
  return IntervalSet::make(std::move(parts));
}

// ---- literal atom-expansion model of the symbolic algebra -------------------

// An element over a finite index set, as explicit atom sets.
struct AtomSetElem {
  bool id = false;
  std::set<std::int64_t> l, r;
  friend bool operator==(const AtomSetElem&, const AtomSetElem&) = default;
};

inline AtomSetElem expand(const relalg::SymElement& e, const std::vector<std::int64_t>& members) {
  AtomSetElem out;
  out.id = e.has_id();
  for (std::int64_t n : members) {
    if (e.lset().contains(n)) out.l.insert(n);
    if (e.rset().contains(n)) out.r.insert(n);
  }
  return out;
}

struct Atom {
  int kind;  // 0 = Id, 1 = L, 2 = R
  std::int64_t n;
};

inline std::vector<Atom> atoms_of(const AtomSetElem& e) {
  std::vector<Atom> out;
  if (e.id) out.push_back({0, 0});
  for (auto n : e.l) out.push_back({1, n});
  for (auto n : e.r) out.push_back({2, n});
  return out;
}

inline void add_atom(AtomSetElem& acc, const Atom& a) {
  if (a.kind == 0) acc.id = true;
  else if (a.kind == 1) acc.l.insert(a.n);
  else acc.r.insert(a.n);
}

// the atom-pair product rules, applied verbatim
inline AtomSetElem atom_product(const Atom& x, const Atom& y,
                                const std::vector<std::int64_t>& members) {
  AtomSetElem out;
  if (x.kind == 0) {  // identity is a unit
    add_atom(out, y);
    return out;
  }
  if (y.kind == 0) {
    add_atom(out, x);
    return out;
  }
  if (x.n == y.n) {
    if (x.kind == y.kind) {  // idempotent
      add_atom(out, x);
      return out;
    }
    // converse pair: identity plus every diversity atom of index <= n
    out.id = true;
    for (std::int64_t k : members)
      if (k <= x.n) {
        out.l.insert(k);
        out.r.insert(k);
      }
    return out;
  }
  // distinct indices: the atom with the larger index wins
  add_atom(out, x.n > y.n ? x : y);
  return out;
}

inline AtomSetElem oracle_compose(const AtomSetElem& a, const AtomSetElem& b,
                                  const std::vector<std::int64_t>& members) {
  AtomSetElem out;
  for (const Atom& x : atoms_of(a))
    for (const Atom& y : atoms_of(b)) {
      AtomSetElem part = atom_product(x, y, members);
      out.id = out.id || part.id;
      out.l.insert(part.l.begin(), part.l.end());
      out.r.insert(part.r.begin(), part.r.end());
    }
  return out;
}

inline AtomSetElem oracle_converse(const AtomSetElem& a) {
  return {a.id, a.r, a.l};
}

inline AtomSetElem oracle_complement(const AtomSetElem& a,
                                     const std::vector<std::int64_t>& members) {
  AtomSetElem out;
  out.id = !a.id;
  for (std::int64_t n : members) {
    if (!a.l.count(n)) out.l.insert(n);
    if (!a.r.count(n)) out.r.insert(n);
  }
  return out;
}

inline AtomSetElem oracle_residual(const AtomSetElem& a, const AtomSetElem& b,
                                   const std::vector<std::int64_t>& members) {
  return oracle_complement(
      oracle_compose(oracle_converse(a), oracle_complement(b, members), members), members);
}

// ---- direct quantifier evaluation of the concrete operations ----------------

inline relalg::ConcreteRelation direct_residual(const relalg::ConcreteRelation& a,
                                                const relalg::ConcreteRelation& b) {
  relalg::ConcreteRelation out(a.base_size());
  for (int x = 0; x < a.base_size(); ++x)
    for (int y = 0; y < a.base_size(); ++y) {
      bool hold = true;
      for (int z = 0; z < a.base_size() && hold; ++z)
        if (a.at(z, x) && !b.at(z, y)) hold = false;
      out.set(x, y, hold);
    }
  return out;
}

inline relalg::ConcreteRelation direct_conv_complement(const relalg::ConcreteRelation& a) {
  relalg::ConcreteRelation out(a.base_size());
  for (int x = 0; x < a.base_size(); ++x)
    for (int y = 0; y < a.base_size(); ++y) out.set(x, y, !a.at(y, x));
  return out;
}

inline relalg::ConcreteRelation direct_compose(const relalg::ConcreteRelation& a,
                                               const relalg::ConcreteRelation& b) {
  relalg::ConcreteRelation out(a.base_size());
  for (int x = 0; x < a.base_size(); ++x)
    for (int y = 0; y < a.base_size(); ++y) {
      bool hold = false;
      for (int z = 0; z < a.base_size() && !hold; ++z)
        if (a.at(x, z) && b.at(z, y)) hold = true;
      out.set(x, y, hold);
    }
  return out;
}

inline relalg::ConcreteRelation direct_rel_compose(const relalg::ConcreteRelation& a,
                                                   const relalg::ConcreteRelation& b) {
  relalg::ConcreteRelation out(a.base_size());
  for (int x = 0; x < a.base_size(); ++x)
    for (int y = 0; y < a.base_size(); ++y) {
      if (x == y) continue;
      bool hold = false;
      for (int z = 0; z < a.base_size() && !hold; ++z)
        if (x != z && z != y && a.at(x, z) && b.at(z, y)) hold = true;
      out.set(x, y, hold);
    }
  return out;
}

inline relalg::ConcreteRelation direct_rel_residual(const relalg::ConcreteRelation& a,
                                                    const relalg::ConcreteRelation& b) {
  relalg::ConcreteRelation out(a.base_size());
  for (int x = 0; x < a.base_size(); ++x)
    for (int y = 0; y < a.base_size(); ++y) {
      if (x == y) continue;
      bool hold = true;
      for (int z = 0; z < a.base_size() && hold; ++z)
        if (x != z && z != y && a.at(z, x) && !b.at(z, y)) hold = false;
      out.set(x, y, hold);
    }
  return out;
}

inline relalg::ConcreteRelation direct_rel_conv_complement(const relalg::ConcreteRelation& a) {
  relalg::ConcreteRelation out(a.base_size());
  for (int x = 0; x < a.base_size(); ++x)
    for (int y = 0; y < a.base_size(); ++y) out.set(x, y, x != y && !a.at(y, x));
  return out;
}

inline relalg::ConcreteRelation random_concrete(int base, std::mt19937_64& rng) {
  relalg::ConcreteRelation out(base);
  std::uniform_int_distribution<std::uint64_t> bits;
  for (int i = 0; i < base; ++i) out.set_row(i, bits(rng));
  return out;
}

// random eventually-zero rational sequence supported inside `span`
inline relalg::RationalSeq random_seq(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<int> size(0, 4), num(-8, 8), den(1, 4);
  std::uniform_int_distribution<std::int64_t> pos(lo, hi);
  std::map<std::int64_t, relalg::Rational> values;
  const int k = size(rng);
  for (int i = 0; i < k; ++i)
    values[pos(rng)] = relalg::Rational(num(rng), den(rng));
  return relalg::RationalSeq::make(std::move(values));
}

}  // namespace oracle
