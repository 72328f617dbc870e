#include "relalg/intervals.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace relalg {

std::string to_string(const Bound& b) {
  switch (b.kind()) {
    case Bound::Kind::NegInf: return "-inf";
    case Bound::Kind::PosInf: return "inf";
    default: return std::to_string(b.value());
  }
}

namespace {

void check_interval(const IntervalSet::Interval& iv) {
  if (iv.lo.is_pos_inf() || iv.hi.is_neg_inf() || iv.lo > iv.hi) {
    throw std::invalid_argument("malformed interval [" + to_string(iv.lo) + "," +
                                to_string(iv.hi) + "]");
  }
}

}  // namespace

IntervalSet IntervalSet::make(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) check_interval(iv);
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
            });
  IntervalSet out;
  for (const auto& iv : intervals) {
    if (!out.intervals_.empty()) {
      Interval& last = out.intervals_.back();
      // merge overlapping and adjacent runs (hi+1 == next lo)
      if (iv.lo <= last.hi.succ()) {
        last.hi = std::max(last.hi, iv.hi);
        continue;
      }
    }
    out.intervals_.push_back(iv);
  }
  return out;
}

IntervalSet IntervalSet::range(std::int64_t lo, std::int64_t hi) {
  return span(Bound::finite(lo), Bound::finite(hi));
}

IntervalSet IntervalSet::span(Bound lo, Bound hi) {
  return make({Interval{lo, hi}});
}

bool IntervalSet::contains(std::int64_t n) const {
  const Bound b = Bound::finite(n);
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), b,
                             [](const Bound& x, const Interval& iv) { return x < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return b <= it->hi;
}

std::int64_t IntervalSet::size() const {
  if (!finite()) throw std::logic_error("size of infinite interval set");
  std::int64_t total = 0;
  for (const auto& iv : intervals_) total += iv.hi.value() - iv.lo.value() + 1;
  return total;
}

std::vector<std::int64_t> IntervalSet::members() const {
  if (!finite()) throw std::logic_error("members of infinite interval set");
  std::vector<std::int64_t> out;
  for (const auto& iv : intervals_)
    for (std::int64_t n = iv.lo.value(); n <= iv.hi.value(); ++n) out.push_back(n);
  return out;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<IntervalSet::Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet::make(std::move(all));
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<IntervalSet::Interval> out;
  auto ia = a.intervals().begin(), ea = a.intervals().end();
  auto ib = b.intervals().begin(), eb = b.intervals().end();
  while (ia != ea && ib != eb) {
    Bound lo = std::max(ia->lo, ib->lo);
    Bound hi = std::min(ia->hi, ib->hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (ia->hi < ib->hi) ++ia; else ++ib;
  }
  return IntervalSet::make(std::move(out));
}

IntervalSet set_complement(const IntervalSet& a) {
  std::vector<IntervalSet::Interval> out;
  Bound cursor = Bound::neg_inf();
  bool open = true;  // the region [cursor, ...) is still uncovered
  for (const auto& iv : a.intervals()) {
    if (iv.lo.is_neg_inf()) {
      cursor = iv.hi.succ();
      open = !iv.hi.is_pos_inf();
      continue;
    }
    out.push_back({cursor, iv.lo.pred()});
    cursor = iv.hi.succ();
    open = !iv.hi.is_pos_inf();
  }
  if (open) out.push_back({cursor, Bound::pos_inf()});
  return IntervalSet::make(std::move(out));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
  return set_intersect(a, set_complement(b));
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
  return set_intersect(a, b) == a;
}

IntervalSet max_combine(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty() || b.empty()) return IntervalSet::empty_set();
  // max(k,l) ranges over members of a that are >= min(b) plus members of b
  // that are >= min(a)
  auto from = [](const Bound& m) {
    return m.is_neg_inf() ? IntervalSet::all()
                          : IntervalSet::span(m, Bound::pos_inf());
  };
  return set_union(set_intersect(a, from(min_element(b))),
                   set_intersect(b, from(min_element(a))));
}

Bound min_element(const IntervalSet& a) {
  if (a.empty()) return Bound::pos_inf();
  return a.intervals().front().lo;
}

Bound max_element(const IntervalSet& a) {
  if (a.empty()) return Bound::neg_inf();
  return a.intervals().back().hi;
}

std::string to_string(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& iv : s.intervals()) {
    if (!out.empty()) out += " u ";
    out += iv.lo.is_neg_inf() ? "(-inf," : "[" + std::to_string(iv.lo.value()) + ",";
    out += iv.hi.is_pos_inf() ? "inf)" : std::to_string(iv.hi.value()) + "]";
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) { pos += w.size(); return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("interval set: " + what + " at position " +
                                std::to_string(pos));
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected integer");
    return std::stoll(std::string(text.substr(start, pos - start)));
  }
};

IntervalSet parse_term(Cursor& c) {
  if (c.eat_word("Z+")) return IntervalSet::at_least(1);
  if (c.eat_word("Z")) return IntervalSet::all();
  if (c.eat('{')) {
    std::vector<IntervalSet::Interval> points;
    if (!c.eat('}')) {
      do {
        std::int64_t n = c.integer();
        points.push_back({Bound::finite(n), Bound::finite(n)});
      } while (c.eat(','));
      if (!c.eat('}')) c.fail("expected '}'");
    }
    return IntervalSet::make(std::move(points));
  }
  Bound lo = Bound::neg_inf(), hi = Bound::pos_inf();
  if (c.eat('(')) {
    if (!c.eat_word("-inf")) c.fail("expected -inf after '('");
  } else if (c.eat('[')) {
    lo = Bound::finite(c.integer());
  } else {
    c.fail("expected interval");
  }
  if (!c.eat(',')) c.fail("expected ','");
  if (c.eat_word("inf")) {
    if (!c.eat(')')) c.fail("expected ')'");
  } else {
    hi = Bound::finite(c.integer());
    if (!c.eat(']')) c.fail("expected ']'");
  }
  return IntervalSet::span(lo, hi);
}

}  // namespace

IntervalSet parse_interval_set(std::string_view text) {
  Cursor c{text};
  IntervalSet out = parse_term(c);
  while (!c.eof()) {
    if (!c.eat('u')) c.fail("expected 'u' between intervals");
    out = set_union(out, parse_term(c));
  }
  return out;
}

}  // namespace relalg
