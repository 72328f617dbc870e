#include "relalg/sugihara.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace relalg {

SymElement SymElement::make(const IndexSet& index, bool has_id, IntervalSet lset, IntervalSet rset) {
  return SymElement(index, has_id, set_intersect(lset, index.set()),
                    set_intersect(rset, index.set()));
}

SymElement SymElement::empty(const IndexSet& index) {
  return SymElement(index, false, {}, {});
}

SymElement SymElement::identity(const IndexSet& index) {
  return SymElement(index, true, {}, {});
}

SymElement SymElement::diversity(const IndexSet& index) {
  return SymElement(index, false, index.set(), index.set());
}

SymElement SymElement::universal(const IndexSet& index) {
  return SymElement(index, true, index.set(), index.set());
}

SymElement SymElement::atom_l(const IndexSet& index, std::int64_t n) {
  if (!index.contains(n))
    throw std::invalid_argument("atom index " + std::to_string(n) + " not in index set");
  return SymElement(index, false, IntervalSet::singleton(n), {});
}

SymElement SymElement::atom_r(const IndexSet& index, std::int64_t n) {
  if (!index.contains(n))
    throw std::invalid_argument("atom index " + std::to_string(n) + " not in index set");
  return SymElement(index, false, {}, IntervalSet::singleton(n));
}

namespace {

const IndexSet& same_index(const SymElement& a, const SymElement& b) {
  if (!(a.index() == b.index()))
    throw std::invalid_argument("operands over different index sets");
  return a.index();
}

// indices strictly above the least member; everything when unbounded below
IntervalSet strictly_above_min(const IntervalSet& s) {
  if (s.empty()) return IntervalSet::empty_set();
  Bound m = min_element(s);
  if (m.is_neg_inf()) return IntervalSet::all();
  return IntervalSet::at_least(m.value() + 1);
}

IntervalSet up_to(const Bound& b) {
  if (b.is_pos_inf()) return IntervalSet::all();
  if (b.is_neg_inf()) return IntervalSet::empty_set();
  return IntervalSet::at_most(b.value());
}

}  // namespace

SymElement join(const SymElement& a, const SymElement& b) {
  const IndexSet& index = same_index(a, b);
  return SymElement::make(index, a.has_id() || b.has_id(),
                          set_union(a.lset(), b.lset()), set_union(a.rset(), b.rset()));
}

SymElement meet(const SymElement& a, const SymElement& b) {
  const IndexSet& index = same_index(a, b);
  return SymElement::make(index, a.has_id() && b.has_id(),
                          set_intersect(a.lset(), b.lset()), set_intersect(a.rset(), b.rset()));
}

SymElement complement(const SymElement& a) {
  return SymElement::make(a.index(), !a.has_id(),
                          set_difference(a.index().set(), a.lset()),
                          set_difference(a.index().set(), a.rset()));
}

SymElement difference(const SymElement& a, const SymElement& b) {
  return meet(a, complement(b));
}

bool is_subset(const SymElement& a, const SymElement& b) {
  same_index(a, b);
  return (!a.has_id() || b.has_id()) && is_subset(a.lset(), b.lset()) &&
         is_subset(a.rset(), b.rset());
}

SymElement converse(const SymElement& a) {
  return SymElement::make(a.index(), a.has_id(), a.rset(), a.lset());
}

SymElement compose(const SymElement& a, const SymElement& b) {
  const IndexSet& index = same_index(a, b);
  const IntervalSet& la = a.lset();
  const IntervalSet& ra = a.rset();
  const IntervalSet& lb = b.lset();
  const IntervalSet& rb = b.rset();
  const IntervalSet div_a = set_union(la, ra);
  const IntervalSet div_b = set_union(lb, rb);

  // Products of two diversity atoms with distinct indices keep the atom
  // with the larger index; equal indices of the same letter are idempotent.
  IntervalSet lres = set_union(set_intersect(la, strictly_above_min(div_b)),
                               set_intersect(lb, strictly_above_min(div_a)));
  lres = set_union(lres, set_intersect(la, lb));
  IntervalSet rres = set_union(set_intersect(ra, strictly_above_min(div_b)),
                               set_intersect(rb, strictly_above_min(div_a)));
  rres = set_union(rres, set_intersect(ra, rb));

  bool id = a.has_id() && b.has_id();
  if (a.has_id()) {
    lres = set_union(lres, lb);
    rres = set_union(rres, rb);
  }
  if (b.has_id()) {
    lres = set_union(lres, la);
    rres = set_union(rres, ra);
  }

  // A diversity atom meeting its converse yields the identity plus every
  // diversity atom of equal or smaller index; only the supremum of the
  // meeting indices matters since the contribution is monotone in it.
  IntervalSet meetings = set_union(set_intersect(la, rb), set_intersect(ra, lb));
  if (!meetings.empty()) {
    id = true;
    IntervalSet tail = set_intersect(up_to(max_element(meetings)), index.set());
    lres = set_union(lres, tail);
    rres = set_union(rres, tail);
  }

  return SymElement::make(index, id, std::move(lres), std::move(rres));
}

SymElement residual(const SymElement& a, const SymElement& b) {
  return complement(compose(converse(a), complement(b)));
}

SymElement conv_complement(const SymElement& a) {
  return complement(converse(a));
}

SymElement rel_compose(const SymElement& a, const SymElement& b) {
  const SymElement di = SymElement::diversity(same_index(a, b));
  return meet(compose(meet(a, di), meet(b, di)), di);
}

SymElement rel_residual(const SymElement& a, const SymElement& b) {
  const SymElement di = SymElement::diversity(same_index(a, b));
  return meet(di, complement(compose(meet(converse(a), di), meet(complement(b), di))));
}

SymElement rel_conv_complement(const SymElement& a) {
  return meet(conv_complement(a), SymElement::diversity(a.index()));
}

namespace {

std::string interval_token(const IntervalSet::Interval& iv) {
  std::string out = iv.lo.is_neg_inf() ? "(-inf," : "[" + std::to_string(iv.lo.value()) + ",";
  out += iv.hi.is_pos_inf() ? "inf)" : std::to_string(iv.hi.value()) + "]";
  return out;
}

}  // namespace

std::string to_string(const SymElement& e) {
  std::vector<std::string> terms;
  if (e.has_id()) terms.push_back("Id");
  for (const auto& iv : e.lset().intervals()) terms.push_back("L" + interval_token(iv));
  for (const auto& iv : e.rset().intervals()) terms.push_back("R" + interval_token(iv));
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += t;
  }
  return out;
}

SymElement parse_sym_element(const IndexSet& index, std::string_view text) {
  bool has_id = false;
  IntervalSet lset, rset;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("sym element: " + what + " at position " + std::to_string(pos));
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool expect_term = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (expect_term) fail("expected term");
      break;
    }
    if (!expect_term) {
      if (text[pos] != '+') fail("expected '+'");
      ++pos;
      expect_term = true;
      continue;
    }
    if (text[pos] == '0') {
      ++pos;
      expect_term = false;
      continue;
    }
    if (text.substr(pos, 2) == "Id") {
      pos += 2;
      has_id = true;
      expect_term = false;
      continue;
    }
    if (text[pos] == 'L' || text[pos] == 'R') {
      const bool lower = text[pos] == 'L';
      ++pos;
      skip_ws();
      std::size_t end = pos;
      if (end < text.size() && (text[end] == '[' || text[end] == '(')) {
        int depth = 0;
        while (end < text.size()) {
          if (text[end] == '[' || text[end] == '(') ++depth;
          if (text[end] == ']' || text[end] == ')') {
            --depth;
            if (depth == 0) { ++end; break; }
          }
          ++end;
        }
        if (depth != 0) fail("unterminated interval");
      } else {
        if (end < text.size() && (text[end] == '-' || text[end] == '+')) ++end;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos) fail("expected interval or integer");
      }
      std::string token(text.substr(pos, end - pos));
      IntervalSet part = (token[0] == '[' || token[0] == '(')
                             ? parse_interval_set(token)
                             : IntervalSet::singleton(std::stoll(token));
      if (lower) lset = set_union(lset, part);
      else rset = set_union(rset, part);
      pos = end;
      expect_term = false;
      continue;
    }
    fail("unexpected character");
  }
  return SymElement::make(index, has_id, std::move(lset), std::move(rset));
}

SymElement chain_element(ChainKind kind, std::int64_t n, const IndexSet& index) {
  switch (kind) {
    case ChainKind::S:
      return SymElement::make(index, false, {}, IntervalSet::at_least(-n));
    case ChainKind::T:
      return SymElement::make(index, true, IntervalSet::at_most(n - 1), index.set());
    default:
      return SymElement::make(index, false, IntervalSet::at_most(n - 1), index.set());
  }
}

std::vector<SymElement> enumerate_chain(const IndexSet& index, bool primed,
                                        std::int64_t win_lo, std::int64_t win_hi,
                                        bool extended) {
  if (win_lo > win_hi) throw std::invalid_argument("empty chain window");
  std::vector<SymElement> out;
  auto push = [&](SymElement e) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
  };
  if (extended) push(SymElement::empty(index));
  // S_n needs -n in I; T_n / That_n need n in I
  for (std::int64_t n = win_lo; n <= win_hi; ++n)
    if (index.contains(-n)) push(chain_element(ChainKind::S, n, index));
  for (std::int64_t n = win_lo; n <= win_hi; ++n)
    if (index.contains(n))
      push(chain_element(primed ? ChainKind::That : ChainKind::T, n, index));
  if (extended)
    push(primed ? SymElement::diversity(index) : SymElement::universal(index));
  return out;
}

namespace {

bool in_chain_or_ends(const SymElement& x, bool primed) {
  const IndexSet& index = x.index();
  if (x == SymElement::empty(index)) return true;
  if (x == (primed ? SymElement::diversity(index) : SymElement::universal(index))) return true;
  if (primed && x.has_id()) return false;
  const IntervalSet& I = index.set();
  if (!x.has_id() && x.lset().empty() && !x.rset().empty()) {
    // S-shape: an upward-closed tail of upper atoms starting at a member
    Bound m = min_element(x.rset());
    return m.is_finite() && x.rset() == set_intersect(I, IntervalSet::at_least(m.value()));
  }
  const bool t_shape = primed ? !x.has_id() : x.has_id();
  if (t_shape && x.rset() == I) {
    if (x.lset().empty()) return min_element(I).is_finite();  // T at the least index
    Bound m = max_element(x.lset());
    if (!m.is_finite()) return false;
    if (!(x.lset() == set_intersect(I, up_to(m)))) return false;
    // some chain index must sit strictly above the lset cut
    return !set_intersect(I, IntervalSet::at_least(m.value() + 1)).empty();
  }
  return false;
}

}  // namespace

SymElement sugihara_arrow(const SymElement& a, const SymElement& b, bool primed) {
  same_index(a, b);
  if (!in_chain_or_ends(a, primed) || !in_chain_or_ends(b, primed))
    throw std::invalid_argument("sugihara_arrow: operand not in the chain");
  const SymElement na = primed ? rel_conv_complement(a) : conv_complement(a);
  return is_subset(a, b) ? join(na, b) : meet(na, b);
}

RationalSeq RationalSeq::make(std::map<std::int64_t, Rational> values) {
  RationalSeq q;
  for (auto& [k, v] : values)
    if (v != 0) q.values_.emplace(k, std::move(v));
  return q;
}

Rational RationalSeq::at(std::int64_t n) const {
  auto it = values_.find(n);
  return it == values_.end() ? Rational(0) : it->second;
}

RationalSeq RationalSeq::with(std::int64_t n, Rational v) const {
  RationalSeq out = *this;
  if (v == 0) out.values_.erase(n);
  else out.values_[n] = std::move(v);
  return out;
}

std::string to_string(const RationalSeq& q) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [k, v] : q.support()) {
    if (!first) out << ", ";
    first = false;
    out << k << ": " << v;
  }
  out << "}";
  return out.str();
}

RationalSeq parse_rational_seq(std::string_view text) {
  std::map<std::int64_t, Rational> values;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("rational sequence: " + what + " at position " +
                                std::to_string(pos));
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '{') fail("expected '{'");
  ++pos;
  skip_ws();
  if (pos < text.size() && text[pos] == '}') return RationalSeq::make({});
  while (true) {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected index");
    std::int64_t key = std::stoll(std::string(text.substr(start, pos - start)));
    skip_ws();
    if (pos >= text.size() || text[pos] != ':') fail("expected ':'");
    ++pos;
    skip_ws();
    start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != '}') ++pos;
    std::string num(text.substr(start, pos - start));
    while (!num.empty() && std::isspace(static_cast<unsigned char>(num.back()))) num.pop_back();
    if (num.empty()) fail("expected rational");
    values[key] = Rational(num);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
    if (pos < text.size() && text[pos] == '}') break;
    fail("expected ',' or '}'");
  }
  return RationalSeq::make(std::move(values));
}

std::string to_string(const AtomDesc& a) {
  switch (a.kind) {
    case AtomDesc::Kind::Id: return "Id";
    case AtomDesc::Kind::L: return "L(" + std::to_string(a.index) + ")";
    default: return "R(" + std::to_string(a.index) + ")";
  }
}

AtomDesc classify(const RationalSeq& q, const RationalSeq& r) {
  bool found = false;
  std::int64_t best = 0;
  auto consider = [&](std::int64_t n) {
    if (q.at(n) != r.at(n) && (!found || n > best)) {
      found = true;
      best = n;
    }
  };
  for (const auto& [k, v] : q.support()) consider(k);
  for (const auto& [k, v] : r.support()) consider(k);
  if (!found) return AtomDesc::id_atom();
  return q.at(best) < r.at(best) ? AtomDesc::l(best) : AtomDesc::r(best);
}

namespace {

// s keeps the values of `base` strictly above `cut`, takes `value` at
// `cut`, and is zero below; entries below the cut are unconstrained, so
// zero keeps the construction deterministic.
RationalSeq splice(const RationalSeq& base, std::int64_t cut, Rational value) {
  std::map<std::int64_t, Rational> values;
  for (const auto& [k, v] : base.support())
    if (k > cut) values.emplace(k, v);
  values[cut] = std::move(value);
  return RationalSeq::make(std::move(values));
}

[[noreturn]] void reject(const AtomDesc& x, const AtomDesc& y, const AtomDesc& actual) {
  throw std::invalid_argument("witness: pair lies in " + to_string(actual) +
                              ", not in the product " + to_string(x) + "|" + to_string(y));
}

}  // namespace

RationalSeq witness(const AtomDesc& first, const AtomDesc& second,
                    const RationalSeq& q, const RationalSeq& r) {
  using Kind = AtomDesc::Kind;
  const AtomDesc actual = classify(q, r);
  if (first.kind == Kind::Id) {
    if (!(actual == second)) reject(first, second, actual);
    return q;
  }
  if (second.kind == Kind::Id) {
    if (!(actual == first)) reject(first, second, actual);
    return r;
  }
  const std::int64_t m = first.index, n = second.index;
  if (m == n) {
    if (first.kind == second.kind) {
      // L_n|L_n = L_n and R_n|R_n = R_n; the witness is the average
      if (!(actual == first)) reject(first, second, actual);
      return splice(q, n, (q.at(n) + r.at(n)) / 2);
    }
    // opposite letters meet: identity plus all atoms of index <= n
    if (!(actual.kind == Kind::Id || actual.index <= n)) reject(first, second, actual);
    const Rational qa = q.at(n), ra = r.at(n);
    Rational v = first.kind == Kind::R ? Rational((qa < ra ? qa : ra) - 1)
                                       : Rational((qa > ra ? qa : ra) + 1);
    return splice(q, n, std::move(v));
  }
  if (m < n) {
    // the larger index wins: product is the second atom
    if (!(actual == second)) reject(first, second, actual);
    Rational v = first.kind == Kind::L ? Rational(q.at(m) + 1) : Rational(q.at(m) - 1);
    return splice(q, m, std::move(v));
  }
  if (!(actual == first)) reject(first, second, actual);
  Rational v = second.kind == Kind::L ? Rational(r.at(n) - 1) : Rational(r.at(n) + 1);
  return splice(r, n, std::move(v));
}

AlgebraPtr finite_restrict(const IndexSet& index) {
  if (!index.finite()) throw std::invalid_argument("finite_restrict needs a finite index set");
  const std::vector<std::int64_t> members = index.set().members();
  const int n = 1 + 2 * static_cast<int>(members.size());
  std::vector<std::string> names{"Id"};
  std::vector<int> conv{0};
  std::string set_name = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    names.push_back("L" + std::to_string(members[k]));
    names.push_back("R" + std::to_string(members[k]));
    conv.push_back(2 + 2 * static_cast<int>(k));
    conv.push_back(1 + 2 * static_cast<int>(k));
    if (k) set_name += ",";
    set_name += std::to_string(members[k]);
  }
  set_name += "}";

  auto atom_elem = [&](int i) -> SymElement {
    if (i == 0) return SymElement::identity(index);
    std::int64_t idx = members[(i - 1) / 2];
    return (i - 1) % 2 == 0 ? SymElement::atom_l(index, idx) : SymElement::atom_r(index, idx);
  };
  std::vector<std::uint32_t> table(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i * n + j] = sym_atom_bits(index, compose(atom_elem(i), atom_elem(j)));

  return std::make_shared<AtomStructure>("S" + set_name, std::move(names), std::move(conv),
                                         std::vector<int>{0}, std::move(table));
}

std::uint32_t sym_atom_bits(const IndexSet& index, const SymElement& e) {
  if (!(e.index() == index)) throw std::invalid_argument("element over different index set");
  const std::vector<std::int64_t> members = index.set().members();
  std::uint32_t bits = e.has_id() ? 1u : 0u;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (e.lset().contains(members[k])) bits |= 1u << (1 + 2 * k);
    if (e.rset().contains(members[k])) bits |= 1u << (2 + 2 * k);
  }
  return bits;
}

SymElement sym_from_atom_bits(const IndexSet& index, std::uint32_t bits) {
  const std::vector<std::int64_t> members = index.set().members();
  IntervalSet lset, rset;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if ((bits >> (1 + 2 * k)) & 1u) lset = set_union(lset, IntervalSet::singleton(members[k]));
    if ((bits >> (2 + 2 * k)) & 1u) rset = set_union(rset, IntervalSet::singleton(members[k]));
  }
  return SymElement::make(index, bits & 1u, std::move(lset), std::move(rset));
}

}  // namespace relalg
