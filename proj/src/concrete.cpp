#include "relalg/concrete.hpp"

#include <bit>
#include <stdexcept>

namespace relalg {

namespace {

void check_same_base(const ConcreteRelation& a, const ConcreteRelation& b) {
  if (a.base_size() != b.base_size())
    throw std::invalid_argument("concrete relations over different bases");
}

}  // namespace

ConcreteRelation::ConcreteRelation(int base_size) : n_(base_size) {
  if (base_size < 1 || base_size > 64)
    throw std::invalid_argument("base size must be in [1,64]");
  mask_ = base_size == 64 ? ~0ull : (1ull << base_size) - 1;
  rows_.assign(n_, 0);
}

ConcreteRelation ConcreteRelation::identity(int n) {
  ConcreteRelation r(n);
  for (int i = 0; i < n; ++i) r.set(i, i, true);
  return r;
}

ConcreteRelation ConcreteRelation::diversity(int n) {
  return complement(identity(n));
}

ConcreteRelation ConcreteRelation::universal(int n) {
  ConcreteRelation r(n);
  for (int i = 0; i < n; ++i) r.rows_[i] = r.mask_;
  return r;
}

ConcreteRelation ConcreteRelation::from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
  ConcreteRelation r(n);
  for (auto [a, b] : pairs) r.set(a, b, true);
  return r;
}

void ConcreteRelation::set(int r, int c, bool v) {
  if (r < 0 || r >= n_ || c < 0 || c >= n_)
    throw std::out_of_range("relation index out of range");
  if (v) rows_[r] |= 1ull << c;
  else rows_[r] &= ~(1ull << c);
}

bool ConcreteRelation::empty_relation() const {
  for (auto row : rows_) if (row) return false;
  return true;
}

int ConcreteRelation::pair_count() const {
  int total = 0;
  for (auto row : rows_) total += std::popcount(row);
  return total;
}

ConcreteRelation join(const ConcreteRelation& a, const ConcreteRelation& b) {
  check_same_base(a, b);
  ConcreteRelation out(a.base_size());
  for (int i = 0; i < a.base_size(); ++i) out.set_row(i, a.row(i) | b.row(i));
  return out;
}

ConcreteRelation meet(const ConcreteRelation& a, const ConcreteRelation& b) {
  check_same_base(a, b);
  ConcreteRelation out(a.base_size());
  for (int i = 0; i < a.base_size(); ++i) out.set_row(i, a.row(i) & b.row(i));
  return out;
}

ConcreteRelation complement(const ConcreteRelation& a) {
  ConcreteRelation out(a.base_size());
  for (int i = 0; i < a.base_size(); ++i) out.set_row(i, ~a.row(i));
  return out;
}

ConcreteRelation difference(const ConcreteRelation& a, const ConcreteRelation& b) {
  return meet(a, complement(b));
}

bool is_subset(const ConcreteRelation& a, const ConcreteRelation& b) {
  check_same_base(a, b);
  for (int i = 0; i < a.base_size(); ++i)
    if (a.row(i) & ~b.row(i)) return false;
  return true;
}

ConcreteRelation converse(const ConcreteRelation& a) {
  ConcreteRelation out(a.base_size());
  for (int i = 0; i < a.base_size(); ++i)
    for (int j = 0; j < a.base_size(); ++j)
      if (a.at(i, j)) out.set(j, i, true);
  return out;
}

ConcreteRelation compose(const ConcreteRelation& a, const ConcreteRelation& b) {
  check_same_base(a, b);
  ConcreteRelation out(a.base_size());
  for (int i = 0; i < a.base_size(); ++i) {
    std::uint64_t acc = 0, row = a.row(i);
    while (row) {
      int k = std::countr_zero(row);
      row &= row - 1;
      acc |= b.row(k);
    }
    out.set_row(i, acc);
  }
  return out;
}

ConcreteRelation residual(const ConcreteRelation& a, const ConcreteRelation& b) {
  return complement(compose(converse(a), complement(b)));
}

ConcreteRelation conv_complement(const ConcreteRelation& a) {
  return complement(converse(a));
}

ConcreteRelation rel_compose(const ConcreteRelation& a, const ConcreteRelation& b) {
  const ConcreteRelation di = ConcreteRelation::diversity(a.base_size());
  return meet(compose(meet(a, di), meet(b, di)), di);
}

ConcreteRelation rel_residual(const ConcreteRelation& a, const ConcreteRelation& b) {
  const ConcreteRelation di = ConcreteRelation::diversity(a.base_size());
  return meet(di, complement(compose(meet(converse(a), di), meet(complement(b), di))));
}

ConcreteRelation rel_conv_complement(const ConcreteRelation& a) {
  return meet(conv_complement(a), ConcreteRelation::diversity(a.base_size()));
}

std::string to_string(const ConcreteRelation& a) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < a.base_size(); ++i)
    for (int j = 0; j < a.base_size(); ++j)
      if (a.at(i, j)) {
        if (!first) out += ", ";
        first = false;
        out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
  return out + "}";
}

}  // namespace relalg
