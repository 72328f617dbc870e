#include "relalg/matrix.hpp"

namespace relalg {

Matrix::Matrix(std::string title, std::vector<std::string> names,
               std::vector<std::uint8_t> join, std::vector<std::uint8_t> meet,
               std::vector<std::uint8_t> arrow, std::vector<std::uint8_t> neg,
               std::vector<bool> designated)
    : title_(std::move(title)),
      names_(std::move(names)),
      join_(std::move(join)),
      meet_(std::move(meet)),
      arrow_(std::move(arrow)),
      neg_(std::move(neg)),
      designated_(std::move(designated)) {
  const std::size_t n = names_.size();
  if (n > 255) throw std::invalid_argument("matrix too large");
  if (join_.size() != n * n || meet_.size() != n * n || arrow_.size() != n * n ||
      neg_.size() != n || designated_.size() != n)
    throw std::invalid_argument("matrix table size mismatch");
}

int Matrix::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

SugiharaCheck check_sugihara_lattice(const Matrix& m) {
  auto fail = [](std::string why) { return SugiharaCheck{false, std::move(why)}; };
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int mt = m.meet(i, j);
      int jn = m.join(i, j);
      if ((mt != i && mt != j) || (jn != i && jn != j))
        return fail("not a chain at (" + m.name(i) + "," + m.name(j) + ")");
      if (mt == i ? jn != j : jn != i)
        return fail("meet/join disagree at (" + m.name(i) + "," + m.name(j) + ")");
      if (m.meet(j, i) != mt || m.join(j, i) != jn)
        return fail("meet/join not commutative at (" + m.name(i) + "," + m.name(j) + ")");
    }
  for (int i = 0; i < n; ++i)
    if (m.neg(m.neg(i)) != i)
      return fail("negation not an involution at " + m.name(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.leq(i, j) != m.leq(m.neg(j), m.neg(i)))
        return fail("negation not order-reversing at (" + m.name(i) + "," + m.name(j) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int expect = m.leq(i, j) ? m.join(m.neg(i), j) : m.meet(m.neg(i), j);
      if (m.arrow(i, j) != expect)
        return fail("arrow violates the Sugihara law at (" + m.name(i) + "," + m.name(j) + ")");
    }
  for (int i = 0; i < n; ++i)
    if (m.designated(i) != m.leq(m.neg(i), i))
      return fail("designated set is not {a : ~a <= a} at " + m.name(i));
  return {};
}

}  // namespace relalg
