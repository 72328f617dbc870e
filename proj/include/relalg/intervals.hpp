#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relalg {

// Endpoint of an integer interval. -inf and +inf are first class so that
// index sets like Z and Z+ are representable exactly.
class Bound {
 public:
  enum class Kind { NegInf = 0, Finite = 1, PosInf = 2 };

  static Bound neg_inf() { return Bound(Kind::NegInf, 0); }
  static Bound finite(std::int64_t v) { return Bound(Kind::Finite, v); }
  static Bound pos_inf() { return Bound(Kind::PosInf, 0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  std::int64_t value() const {
    if (!is_finite()) throw std::logic_error("Bound::value on infinite bound");
    return value_;
  }

  // finite(v) -> finite(v+1); infinities are fixed points
  Bound succ() const { return is_finite() ? finite(value_ + 1) : *this; }
  Bound pred() const { return is_finite() ? finite(value_ - 1) : *this; }

  friend bool operator==(const Bound&, const Bound&) = default;
  // NegInf < Finite(a) < Finite(b) < PosInf for a < b; infinities store 0
  friend auto operator<=>(const Bound&, const Bound&) = default;

 private:
  Bound(Kind k, std::int64_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::int64_t value_;
};

std::string to_string(const Bound& b);

// Canonical finite union of integer intervals. Invariants: each interval
// nonempty, intervals sorted, pairwise disjoint and non-adjacent (a gap of
// at least one integer between consecutive intervals), so equality of sets
// is structural equality.
class IntervalSet {
 public:
  struct Interval {
    Bound lo;
    Bound hi;
    friend bool operator==(const Interval&, const Interval&) = default;
  };

  IntervalSet() = default;  // empty set

  // Canonicalizes arbitrary (possibly overlapping) input. Throws
  // std::invalid_argument on an interval with lo > hi or with an endpoint
  // on the wrong side (lo = +inf or hi = -inf).
  static IntervalSet make(std::vector<Interval> intervals);

  static IntervalSet empty_set() { return IntervalSet(); }
  static IntervalSet all() { return span(Bound::neg_inf(), Bound::pos_inf()); }
  static IntervalSet singleton(std::int64_t n) { return range(n, n); }
  static IntervalSet range(std::int64_t lo, std::int64_t hi);
  static IntervalSet at_most(std::int64_t n) { return span(Bound::neg_inf(), Bound::finite(n)); }
  static IntervalSet at_least(std::int64_t n) { return span(Bound::finite(n), Bound::pos_inf()); }
  static IntervalSet span(Bound lo, Bound hi);

  bool empty() const { return intervals_.empty(); }
  bool contains(std::int64_t n) const;
  const std::vector<Interval>& intervals() const { return intervals_; }
  bool unbounded_below() const { return !empty() && intervals_.front().lo.is_neg_inf(); }
  bool unbounded_above() const { return !empty() && intervals_.back().hi.is_pos_inf(); }
  bool finite() const { return empty() || (!unbounded_below() && !unbounded_above()); }
  // number of integers in the set; throws if not finite
  std::int64_t size() const;
  // ascending list of members; throws if not finite
  std::vector<std::int64_t> members() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
// complement within the integers Z
IntervalSet set_complement(const IntervalSet& a);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);
bool is_subset(const IntervalSet& a, const IntervalSet& b);

// {max(k, l) : k in a, l in b}; empty when either input is empty
IntervalSet max_combine(const IntervalSet& a, const IntervalSet& b);

// neg_inf if unbounded below, pos_inf if empty (documented convention),
// otherwise the finite least member
Bound min_element(const IntervalSet& a);
// mirror convention: pos_inf if unbounded above, neg_inf if empty
Bound max_element(const IntervalSet& a);

// Rendering: "(-inf,3] u [5,7] u [9,inf)"; the empty set renders as "{}".
std::string to_string(const IntervalSet& s);

// Accepts the rendered form plus the CLI shorthands: "Z", "Z+", "{}",
// "{0,1,-3}", "[a,b]", "(-inf,b]", "[a,inf)", "(-inf,inf)", joined by "u".
// Throws std::invalid_argument with a position-bearing message.
IntervalSet parse_interval_set(std::string_view text);

}  // namespace relalg
