#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/atom_structure.hpp"
#include "relalg/intervals.hpp"

namespace relalg {

// Index set I of the symbolic algebra over eventually-zero rational
// sequences supported on I. Empty is allowed (the base is then a singleton).
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(IntervalSet s) : set_(std::move(s)) {}

  const IntervalSet& set() const { return set_; }
  bool contains(std::int64_t n) const { return set_.contains(n); }
  bool finite() const { return set_.finite(); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  IntervalSet set_;
};

// Element of the symbolic algebra over index set I: the union of the
// identity relation (optional) with lower atoms L_n (n in lset) and upper
// atoms R_n (n in rset). lset and rset are intersected with I at
// construction, so every representable element is a union of actual atoms.
class SymElement {
 public:
  static SymElement make(const IndexSet& index, bool has_id, IntervalSet lset, IntervalSet rset);
  static SymElement empty(const IndexSet& index);
  static SymElement identity(const IndexSet& index);
  static SymElement diversity(const IndexSet& index);
  static SymElement universal(const IndexSet& index);
  static SymElement atom_l(const IndexSet& index, std::int64_t n);  // throws if n not in I
  static SymElement atom_r(const IndexSet& index, std::int64_t n);

  const IndexSet& index() const { return index_; }
  bool has_id() const { return has_id_; }
  const IntervalSet& lset() const { return lset_; }
  const IntervalSet& rset() const { return rset_; }

  friend bool operator==(const SymElement&, const SymElement&) = default;

 private:
  SymElement(IndexSet index, bool has_id, IntervalSet l, IntervalSet r)
      : index_(std::move(index)), has_id_(has_id), lset_(std::move(l)), rset_(std::move(r)) {}
  IndexSet index_;
  bool has_id_;
  IntervalSet lset_;
  IntervalSet rset_;
};

SymElement join(const SymElement& a, const SymElement& b);
SymElement meet(const SymElement& a, const SymElement& b);
SymElement complement(const SymElement& a);  // within the square of the base
SymElement difference(const SymElement& a, const SymElement& b);
bool is_subset(const SymElement& a, const SymElement& b);
SymElement converse(const SymElement& a);
// Closed-form relative product over interval sets; agrees with the literal
// atom-pair rules on every finite index set (see the oracle tests).
SymElement compose(const SymElement& a, const SymElement& b);
SymElement residual(const SymElement& a, const SymElement& b);
SymElement conv_complement(const SymElement& a);
SymElement rel_compose(const SymElement& a, const SymElement& b);
SymElement rel_residual(const SymElement& a, const SymElement& b);
SymElement rel_conv_complement(const SymElement& a);

// "Id + L(-inf,3] + R[0,0] + R[5,inf)"; the empty element renders as "0"
std::string to_string(const SymElement& e);
// Accepts the rendered form; also singleton shorthands "L3", "R-2".
SymElement parse_sym_element(const IndexSet& index, std::string_view text);

// ---- Sugihara chains -------------------------------------------------------

enum class ChainKind { S, T, That };

// S_n = R[-n,inf); T_n = R(-inf,inf) u Id u L(-inf,n-1]; That_n drops Id.
// Interval sets are intersected with I; the constructor is total.
SymElement chain_element(ChainKind kind, std::int64_t n, const IndexSet& index);

// Chain members with index in [win_lo, win_hi], sorted by inclusion and
// deduplicated (when I has a least element m, S_{-m} and That_m coincide).
// `extended` additionally places the empty relation at the bottom and the
// universal (unprimed) or diversity (primed) relation at the top.
std::vector<SymElement> enumerate_chain(const IndexSet& index, bool primed,
                                        std::int64_t win_lo, std::int64_t win_hi,
                                        bool extended = false);

// Order-theoretic implication of a Sugihara lattice: ~a v b when a <= b,
// otherwise ~a & b, with ~ read as (relativized) converse-complement.
// Operands must belong to the chain over their index set (extended by the
// empty relation and the top); otherwise throws std::invalid_argument.
SymElement sugihara_arrow(const SymElement& a, const SymElement& b, bool primed);

// ---- Concrete sequences ----------------------------------------------------

using Rational = boost::multiprecision::cpp_rational;

// Eventually-zero rational sequence: finite support map, nonzero values.
class RationalSeq {
 public:
  RationalSeq() = default;
  static RationalSeq make(std::map<std::int64_t, Rational> values);  // drops zeros

  const std::map<std::int64_t, Rational>& support() const { return values_; }
  Rational at(std::int64_t n) const;
  RationalSeq with(std::int64_t n, Rational v) const;

  friend bool operator==(const RationalSeq&, const RationalSeq&) = default;

 private:
  std::map<std::int64_t, Rational> values_;
};

// "{1: 3/2, 4: -7}"; empty support renders as "{}"
std::string to_string(const RationalSeq& q);
RationalSeq parse_rational_seq(std::string_view text);

struct AtomDesc {
  enum class Kind { Id, L, R } kind;
  std::int64_t index = 0;  // ignored for Id

  static AtomDesc id_atom() { return {Kind::Id, 0}; }
  static AtomDesc l(std::int64_t n) { return {Kind::L, n}; }
  static AtomDesc r(std::int64_t n) { return {Kind::R, n}; }
  friend bool operator==(const AtomDesc& a, const AtomDesc& b) {
    return a.kind == b.kind && (a.kind == Kind::Id || a.index == b.index);
  }
};

std::string to_string(const AtomDesc& a);

// The unique atom containing the pair (q, r): Id when equal, otherwise
// L(n)/R(n) at the largest index n where they differ.
AtomDesc classify(const RationalSeq& q, const RationalSeq& r);

// Produces s with classify(q,s) == first and classify(s,r) == second,
// assuming (q,r) lies in the product of the two atoms (else throws).
// Deterministic: free entries are set to zero, the density witness is the
// average, the below-both witness is min - 1.
RationalSeq witness(const AtomDesc& first, const AtomDesc& second,
                    const RationalSeq& q, const RationalSeq& r);

// ---- Finite restriction ----------------------------------------------------

// The finite atomic relation algebra of a finite index set, atoms ordered
// Id, L n, R n for ascending n, with the table computed by compose().
AlgebraPtr finite_restrict(const IndexSet& index);

// Bitset of a symbolic element in the atom order of finite_restrict.
std::uint32_t sym_atom_bits(const IndexSet& index, const SymElement& e);
SymElement sym_from_atom_bits(const IndexSet& index, std::uint32_t bits);

}  // namespace relalg
