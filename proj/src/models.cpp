#include "relalg/models.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace relalg {

namespace {

Matrix first_method_matrix(std::string title, const std::vector<std::string>& names,
                           const std::vector<RaElement>& carrier) {
  return Matrix::build(std::move(title), names, carrier,
                       [](const RaElement& a, const RaElement& b) { return join(a, b); },
                       [](const RaElement& a, const RaElement& b) { return meet(a, b); },
                       [](const RaElement& a, const RaElement& b) { return residual(a, b); },
                       [](const RaElement& a) { return conv_complement(a); },
                       [](const RaElement& a) {
                         return (a.bits() & a.algebra()->identity_bits()) ==
                                a.algebra()->identity_bits();
                       });
}

}  // namespace

PointModel point_algebra() {
  const IndexSet index{IntervalSet::singleton(0)};
  AlgebraPtr derived = finite_restrict(index);
  // relabel Id, L0, R0 as =, <, > per the order-relation reading
  std::vector<std::string> atom_names{"=", "<", ">"};
  std::vector<int> conv{0, 2, 1};
  std::vector<std::uint32_t> table(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) table[i * 3 + j] = derived->compose_atoms(i, j);
  auto algebra = std::make_shared<AtomStructure>("point", std::move(atom_names), std::move(conv),
                                                 std::vector<int>{0}, std::move(table));

  PointModel model{algebra, {}, {}, {}};
  // unions of subsets of {=, <, >}: bit0 is =, bit1 is <, bit2 is >
  const std::vector<std::pair<std::string, std::uint32_t>> universe = {
      {"0", 0u},  {"<", 2u},  {">", 4u},  {"=", 1u},
      {"!=", 6u}, {"<=", 3u}, {">=", 5u}, {"Q2", 7u}};
  for (const auto& [label, bits] : universe) {
    model.labels.push_back(label);
    model.elements.push_back(element(algebra, bits));
  }
  model.matrix = first_method_matrix("M0", model.labels, model.elements);
  return model;
}

CrystalModel crystal_lattice() {
  const IndexSet index{parse_interval_set("{0,1}")};
  auto L0 = SymElement::atom_l(index, 0), R0 = SymElement::atom_r(index, 0);
  auto L1 = SymElement::atom_l(index, 1);
  CrystalModel model{index, {}, {}, {}, finite_restrict(index)};
  model.elements = {SymElement::diversity(index), join(join(L0, R0), L1), join(L0, L1),
                    join(R0, L1), L1, SymElement::empty(index)};
  model.labels = {"Di", "L0R0L1", "L0L1", "R0L1", "L1", "0"};
  model.matrix = Matrix::build(
      "crystal", model.labels, model.elements,
      [](const SymElement& a, const SymElement& b) { return join(a, b); },
      [](const SymElement& a, const SymElement& b) { return meet(a, b); },
      [](const SymElement& a, const SymElement& b) { return rel_residual(a, b); },
      [](const SymElement& a) { return rel_conv_complement(a); },
      // designation by the Sugihara criterion: ~'a is below a
      [](const SymElement& a) { return is_subset(rel_conv_complement(a), a); });
  return model;
}

ChurchModel church_algebra() {
  const int base = 9;  // three pairwise disjoint columns {3i, 3i+1, 3i+2}
  ConcreteRelation id = ConcreteRelation::identity(base);
  ConcreteRelation a(base), b(base);
  for (int x = 0; x < base; ++x)
    for (int y = 0; y < base; ++y) {
      if (x == y) continue;
      if (x / 3 == y / 3) a.set(x, y, true);
      else b.set(x, y, true);
    }
  AlgebraPtr algebra = algebra_from_partition(base, {{"Id", id}, {"A", a}, {"B", b}}, "church");

  ChurchModel model{base, id, a, b, algebra, {}, {}, {}};
  model.diamond = {element(algebra, 0b110), element(algebra, 0b010), element(algebra, 0b100),
                   element(algebra, 0b000)};
  model.labels = {"AB", "A", "B", "0"};
  const RaElement ab = model.diamond[0], justa = model.diamond[1];
  model.matrix = Matrix::build(
      "church", model.labels, model.diamond,
      [](const RaElement& x, const RaElement& y) { return join(x, y); },
      [](const RaElement& x, const RaElement& y) { return meet(x, y); },
      [](const RaElement& x, const RaElement& y) { return rel_residual(x, y); },
      [](const RaElement& x) { return rel_conv_complement(x); },
      [ab, justa](const RaElement& x) { return x == ab || x == justa; });
  return model;
}

namespace {

ConcreteRelation rm84_rho(const std::vector<int>& xs) {
  ConcreteRelation rel(7);
  for (int z = 0; z < 7; ++z)
    for (int x : xs) rel.set((z + x) % 7, z, true);
  return rel;
}

}  // namespace

Rm84Model rm84_algebra() {
  const std::vector<int> atom0{0}, atom124{1, 2, 4}, atom356{3, 5, 6};
  Rm84Model model{nullptr, {}, {}, {}, {}};
  model.atom_relations = {rm84_rho(atom0), rm84_rho(atom124), rm84_rho(atom356)};
  model.algebra = algebra_from_partition(7,
                                         {{"{0}", model.atom_relations[0]},
                                          {"{1,2,4}", model.atom_relations[1]},
                                          {"{3,5,6}", model.atom_relations[2]}},
                                         "rm84");
  // Hasse-diagram order of the eight index sets, left branch first
  const std::vector<std::pair<std::string, std::uint32_t>> universe = {
      {"0", 0b000},         {"{1,2,4}", 0b010},    {"{3,5,6}", 0b100}, {"D", 0b110},
      {"{0}", 0b001},       {"{0,1,2,4}", 0b011},  {"{0,3,5,6}", 0b101}, {"U", 0b111}};
  for (const auto& [label, bits] : universe) {
    model.labels.push_back(label);
    model.elements.push_back(element(model.algebra, bits));
  }
  model.matrix = first_method_matrix("rm84", model.labels, model.elements);
  return model;
}

std::vector<Matrix> m0_chain_examples() {
  PointModel point = point_algebra();
  auto pick = [&](const std::vector<std::string>& labels) {
    std::vector<RaElement> out;
    for (const auto& want : labels) {
      auto it = std::find(point.labels.begin(), point.labels.end(), want);
      out.push_back(point.elements[it - point.labels.begin()]);
    }
    return out;
  };
  auto second_method = [](std::string title, const std::vector<std::string>& names,
                          const std::vector<RaElement>& carrier) {
    return Matrix::build(std::move(title), names, carrier,
                         [](const RaElement& a, const RaElement& b) { return join(a, b); },
                         [](const RaElement& a, const RaElement& b) { return meet(a, b); },
                         [](const RaElement& a, const RaElement& b) { return rel_residual(a, b); },
                         [](const RaElement& a) { return rel_conv_complement(a); },
                         [](const RaElement& a) { return is_subset(rel_conv_complement(a), a); });
  };
  auto first_method = [](std::string title, const std::vector<std::string>& names,
                         const std::vector<RaElement>& carrier) {
    // Definition-1 designation; for these chains it coincides with
    // "contains the identity"
    return Matrix::build(std::move(title), names, carrier,
                         [](const RaElement& a, const RaElement& b) { return join(a, b); },
                         [](const RaElement& a, const RaElement& b) { return meet(a, b); },
                         [](const RaElement& a, const RaElement& b) { return residual(a, b); },
                         [](const RaElement& a) { return conv_complement(a); },
                         [](const RaElement& a) { return is_subset(conv_complement(a), a); });
  };

  std::vector<Matrix> out;
  const std::vector<std::vector<std::string>> first_universes = {
      {"<", "<="}, {">", ">="}, {"0", "Q2"}, {"0", "<", "<=", "Q2"}, {"0", ">", ">=", "Q2"}};
  const std::vector<std::vector<std::string>> second_universes = {
      {"<"}, {">"}, {"0", "!="}, {"0", "<", "!="}, {"0", ">", "!="}};
  int k = 0;
  for (const auto& labels : first_universes) {
    Matrix m = first_method("M0 chain " + std::to_string(++k), labels, pick(labels));
    if (auto check = check_sugihara_lattice(m); !check.ok)
      throw std::logic_error("chain example " + m.title() + ": " + check.detail);
    out.push_back(std::move(m));
  }
  for (const auto& labels : second_universes) {
    Matrix m = second_method("M0 chain " + std::to_string(++k), labels, pick(labels));
    if (auto check = check_sugihara_lattice(m); !check.ok)
      throw std::logic_error("chain example " + m.title() + ": " + check.detail);
    out.push_back(std::move(m));
  }
  return out;
}

VarShareReport variable_sharing_demo(const Formula& f, const Formula& g, VarShareStyle style) {
  if (style == VarShareStyle::Belnap) {
    PointModel point = point_algebra();
    const Matrix& m = point.matrix;
    const int le = m.index_of("<="), ge = m.index_of(">=");
    const int lt = m.index_of("<"), gt = m.index_of(">");
    return var_share_check(f, g, m, le, {lt, le}, ge, {gt, ge});
  }
  CrystalModel crystal = crystal_lattice();
  const Matrix& m = crystal.matrix;
  const int fe = m.index_of("L0L1"), gelem = m.index_of("R0L1");
  return var_share_check(f, g, m, fe, {fe}, gelem, {gelem});
}

RaElement ModelHandle::parse_element(const std::string& text) const {
  for (const auto& [label, bits] : named_elements)
    if (label == text) return element(algebra, bits);
  std::uint32_t bits = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    std::string atom = text.substr(start, plus == std::string::npos ? plus : plus - start);
    while (!atom.empty() && std::isspace(static_cast<unsigned char>(atom.front()))) atom.erase(atom.begin());
    while (!atom.empty() && std::isspace(static_cast<unsigned char>(atom.back()))) atom.pop_back();
    if (!atom.empty() && atom != "0") bits |= 1u << algebra->atom_index(atom);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return element(algebra, bits);
}

std::string ModelHandle::element_label(const RaElement& e) const {
  for (const auto& [label, bits] : named_elements)
    if (bits == e.bits()) return label;
  return to_string(e);
}

ModelHandle get_model(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (key == "point" || key == "m0" || key == "belnap") {
    PointModel p = point_algebra();
    ModelHandle h{"point", p.matrix, p.algebra, {}, {}};
    for (std::size_t i = 0; i < p.labels.size(); ++i)
      h.named_elements.emplace_back(p.labels[i], p.elements[i].bits());
    return h;
  }
  if (key == "crystal") {
    CrystalModel c = crystal_lattice();
    ModelHandle h{"crystal", c.matrix, c.ambient, {}, {}};
    for (std::size_t i = 0; i < c.labels.size(); ++i)
      h.named_elements.emplace_back(c.labels[i], sym_atom_bits(c.index, c.elements[i]));
    return h;
  }
  if (key == "church") {
    ChurchModel c = church_algebra();
    ModelHandle h{"church", c.matrix, c.algebra, {}, {}};
    for (std::size_t i = 0; i < c.labels.size(); ++i)
      h.named_elements.emplace_back(c.labels[i], c.diamond[i].bits());
    h.blocks = {{"Id", c.id}, {"A", c.a}, {"B", c.b}};
    return h;
  }
  if (key == "rm84") {
    Rm84Model r = rm84_algebra();
    ModelHandle h{"rm84", r.matrix, r.algebra, {}, {}};
    for (std::size_t i = 0; i < r.labels.size(); ++i)
      h.named_elements.emplace_back(r.labels[i], r.elements[i].bits());
    h.blocks = {{"{0}", r.atom_relations[0]},
                {"{1,2,4}", r.atom_relations[1]},
                {"{3,5,6}", r.atom_relations[2]}};
    return h;
  }
  throw std::invalid_argument("unknown model '" + name + "' (point, crystal, church, rm84)");
}

std::vector<std::string> model_names() { return {"point", "crystal", "church", "rm84"}; }

}  // namespace relalg
