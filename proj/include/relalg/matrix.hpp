#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace relalg {

// A finite logical matrix: a carrier with join/meet/arrow/negation tables
// and a designated subset. Elements are referred to by index; the carrier's
// construction order is the enumeration order everywhere.
class Matrix {
 public:
  Matrix() = default;  // empty carrier
  Matrix(std::string title, std::vector<std::string> names,
         std::vector<std::uint8_t> join, std::vector<std::uint8_t> meet,
         std::vector<std::uint8_t> arrow, std::vector<std::uint8_t> neg,
         std::vector<bool> designated);

  const std::string& title() const { return title_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 when absent

  int join(int i, int j) const { return join_[i * size() + j]; }
  int meet(int i, int j) const { return meet_[i * size() + j]; }
  int arrow(int i, int j) const { return arrow_[i * size() + j]; }
  int neg(int i) const { return neg_[i]; }
  bool designated(int i) const { return designated_[i]; }
  bool leq(int i, int j) const { return meet(i, j) == i; }

  // Builds the tables from a concrete carrier and operation callables,
  // checking that every operation lands back in the carrier. Throws
  // std::invalid_argument naming the escaping operation otherwise.
  template <class E, class Join, class Meet, class Arrow, class Neg, class Desig>
  static Matrix build(std::string title, std::vector<std::string> names,
                      const std::vector<E>& carrier, Join op_join, Meet op_meet,
                      Arrow op_arrow, Neg op_neg, Desig designated) {
    const int n = static_cast<int>(carrier.size());
    if (static_cast<int>(names.size()) != n)
      throw std::invalid_argument("matrix: one name per element required");
    auto locate = [&](const E& value, const std::string& what) -> std::uint8_t {
      for (int k = 0; k < n; ++k)
        if (carrier[k] == value) return static_cast<std::uint8_t>(k);
      throw std::invalid_argument("matrix '" + title + "': carrier not closed under " + what);
    };
    std::vector<std::uint8_t> join_t(n * n), meet_t(n * n), arrow_t(n * n), neg_t(n);
    std::vector<bool> desig(n);
    for (int i = 0; i < n; ++i) {
      neg_t[i] = locate(op_neg(carrier[i]), "~ at " + names[i]);
      desig[i] = designated(carrier[i]);
      for (int j = 0; j < n; ++j) {
        join_t[i * n + j] = locate(op_join(carrier[i], carrier[j]),
                                   "join at (" + names[i] + "," + names[j] + ")");
        meet_t[i * n + j] = locate(op_meet(carrier[i], carrier[j]),
                                   "meet at (" + names[i] + "," + names[j] + ")");
        arrow_t[i * n + j] = locate(op_arrow(carrier[i], carrier[j]),
                                    "arrow at (" + names[i] + "," + names[j] + ")");
      }
    }
    return Matrix(std::move(title), std::move(names), std::move(join_t), std::move(meet_t),
                  std::move(arrow_t), std::move(neg_t), std::move(desig));
  }

 private:
  std::string title_;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> join_, meet_, arrow_, neg_;
  std::vector<bool> designated_;
};

struct SugiharaCheck {
  bool ok = true;
  std::string detail;  // first violation when !ok
};

// Verifies the matrix is a Sugihara lattice: a chain under meet/join whose
// negation is an order-reversing involution and whose arrow is ~a v b when
// a <= b and ~a & b otherwise, with the designated set {a : ~a <= a}
// matching the stored one.
SugiharaCheck check_sugihara_lattice(const Matrix& m);

}  // namespace relalg
