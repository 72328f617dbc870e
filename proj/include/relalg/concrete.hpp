#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace relalg {

// Binary relation on a finite base {0, ..., n-1}, one uint64 row mask per
// point. Ground-truth oracle for the Church / RM84 / random-sampling work.
class ConcreteRelation {
 public:
  explicit ConcreteRelation(int base_size);

  static ConcreteRelation empty(int n) { return ConcreteRelation(n); }
  static ConcreteRelation identity(int n);
  static ConcreteRelation diversity(int n);
  static ConcreteRelation universal(int n);
  static ConcreteRelation from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs);

  int base_size() const { return n_; }
  bool at(int r, int c) const { return (rows_[r] >> c) & 1u; }
  void set(int r, int c, bool v);
  std::uint64_t row(int r) const { return rows_[r]; }
  void set_row(int r, std::uint64_t bits) { rows_[r] = bits & mask_; }
  std::uint64_t mask() const { return mask_; }
  bool empty_relation() const;
  int pair_count() const;

  friend bool operator==(const ConcreteRelation&, const ConcreteRelation&) = default;

 private:
  int n_;
  std::uint64_t mask_;
  std::vector<std::uint64_t> rows_;
};

ConcreteRelation join(const ConcreteRelation& a, const ConcreteRelation& b);
ConcreteRelation meet(const ConcreteRelation& a, const ConcreteRelation& b);
ConcreteRelation complement(const ConcreteRelation& a);
ConcreteRelation difference(const ConcreteRelation& a, const ConcreteRelation& b);
bool is_subset(const ConcreteRelation& a, const ConcreteRelation& b);

ConcreteRelation converse(const ConcreteRelation& a);  // transpose
ConcreteRelation compose(const ConcreteRelation& a, const ConcreteRelation& b);
// A->B = -(conv(A) | -B)
ConcreteRelation residual(const ConcreteRelation& a, const ConcreteRelation& b);
// ~A = -conv(A)
ConcreteRelation conv_complement(const ConcreteRelation& a);
// relativized forms, computed within the diversity relation
ConcreteRelation rel_compose(const ConcreteRelation& a, const ConcreteRelation& b);
ConcreteRelation rel_residual(const ConcreteRelation& a, const ConcreteRelation& b);
ConcreteRelation rel_conv_complement(const ConcreteRelation& a);

// "{(0,1), (2,2)}"
std::string to_string(const ConcreteRelation& a);

}  // namespace relalg
