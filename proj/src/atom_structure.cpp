#include "relalg/atom_structure.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace relalg {

AtomStructure::AtomStructure(std::string name, std::vector<std::string> atom_names,
                             std::vector<int> converse, std::vector<int> identity_atoms,
                             std::vector<std::uint32_t> table)
    : name_(std::move(name)),
      atom_names_(std::move(atom_names)),
      converse_(std::move(converse)) {
  const int n = static_cast<int>(atom_names_.size());
  if (n < 1 || n > 31) throw std::invalid_argument("atom count must be in [1,31]");
  if (static_cast<int>(converse_.size()) != n || static_cast<int>(table.size()) != n * n)
    throw std::invalid_argument("converse/table size mismatch");
  all_bits_ = (1u << n) - 1;
  identity_bits_ = 0;
  for (int i : identity_atoms) {
    if (i < 0 || i >= n) throw std::invalid_argument("identity atom out of range");
    identity_bits_ |= 1u << i;
  }
  for (int i = 0; i < n; ++i)
    if (converse_[i] < 0 || converse_[i] >= n)
      throw std::invalid_argument("converse image out of range");
  for (auto bits : table)
    if (bits & ~all_bits_) throw std::invalid_argument("table entry out of range");
  table_ = std::move(table);
}

int AtomStructure::atom_index(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (atom_names_[i] == name) return i;
  throw std::invalid_argument("unknown atom '" + std::string(name) + "' in algebra " + name_);
}

std::uint32_t AtomStructure::converse_bits(std::uint32_t x) const {
  std::uint32_t out = 0;
  while (x) {
    int i = std::countr_zero(x);
    x &= x - 1;
    out |= 1u << converse_[i];
  }
  return out;
}

std::uint32_t AtomStructure::compose_bits(std::uint32_t x, std::uint32_t y) const {
  std::uint32_t out = 0;
  for (std::uint32_t xs = x; xs;) {
    int i = std::countr_zero(xs);
    xs &= xs - 1;
    for (std::uint32_t ys = y; ys;) {
      int j = std::countr_zero(ys);
      ys &= ys - 1;
      out |= compose_atoms(i, j);
    }
  }
  return out;
}

RaElement::RaElement(AlgebraPtr algebra, std::uint32_t bits)
    : alg_(std::move(algebra)), bits_(bits) {
  if (!alg_) throw std::invalid_argument("null algebra");
  if (bits_ & ~alg_->universe_bits()) throw std::invalid_argument("bits outside atom set");
}

RaElement element(AlgebraPtr algebra, std::uint32_t bits) {
  return RaElement(std::move(algebra), bits);
}

RaElement element_from_names(AlgebraPtr algebra, const std::vector<std::string>& atoms) {
  std::uint32_t bits = 0;
  for (const auto& a : atoms) bits |= 1u << algebra->atom_index(a);
  return RaElement(std::move(algebra), bits);
}

namespace {

const AlgebraPtr& same_algebra(const RaElement& a, const RaElement& b) {
  if (a.algebra().get() != b.algebra().get())
    throw std::invalid_argument("operands from different algebras");
  return a.algebra();
}

}  // namespace

RaElement join(const RaElement& a, const RaElement& b) {
  return {same_algebra(a, b), a.bits() | b.bits()};
}

RaElement meet(const RaElement& a, const RaElement& b) {
  return {same_algebra(a, b), a.bits() & b.bits()};
}

RaElement complement(const RaElement& a) {
  return {a.algebra(), ~a.bits() & a.algebra()->universe_bits()};
}

RaElement difference(const RaElement& a, const RaElement& b) {
  return {same_algebra(a, b), a.bits() & ~b.bits()};
}

bool is_subset(const RaElement& a, const RaElement& b) {
  same_algebra(a, b);
  return (a.bits() & ~b.bits()) == 0;
}

RaElement converse(const RaElement& a) {
  return {a.algebra(), a.algebra()->converse_bits(a.bits())};
}

RaElement compose(const RaElement& a, const RaElement& b) {
  return {same_algebra(a, b), a.algebra()->compose_bits(a.bits(), b.bits())};
}

RaElement residual(const RaElement& a, const RaElement& b) {
  return complement(compose(converse(a), complement(b)));
}

RaElement conv_complement(const RaElement& a) {
  return complement(converse(a));
}

RaElement rel_compose(const RaElement& a, const RaElement& b) {
  RaElement di = complement(RaElement(same_algebra(a, b), a.algebra()->identity_bits()));
  return meet(compose(meet(a, di), meet(b, di)), di);
}

RaElement rel_residual(const RaElement& a, const RaElement& b) {
  RaElement di = complement(RaElement(same_algebra(a, b), a.algebra()->identity_bits()));
  return meet(di, complement(compose(meet(converse(a), di), meet(complement(b), di))));
}

RaElement rel_conv_complement(const RaElement& a) {
  RaElement di = complement(RaElement(a.algebra(), a.algebra()->identity_bits()));
  return meet(conv_complement(a), di);
}

std::string to_string(const RaElement& a) {
  if (a.bits() == 0) return "0";
  std::string out;
  for (int i = 0; i < a.algebra()->size(); ++i)
    if (a.contains_atom(i)) {
      if (!out.empty()) out += "+";
      out += a.algebra()->atom_name(i);
    }
  return out;
}

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& c : checks) {
    out += (c.pass ? "pass  " : "FAIL  ") + c.axiom;
    if (!c.witness.empty()) out += "  [" + c.witness + "]";
    out += "\n";
  }
  return out;
}

namespace {

std::string bits_names(const AtomStructure& s, std::uint32_t bits) {
  if (!bits) return "0";
  std::string out;
  for (int i = 0; i < s.size(); ++i)
    if ((bits >> i) & 1u) {
      if (!out.empty()) out += "+";
      out += s.atom_name(i);
    }
  return out;
}

}  // namespace

ValidationReport validate_algebra(const AtomStructure& s) {
  ValidationReport report;
  const int n = s.size();
  auto add = [&](std::string axiom, bool pass, std::string witness = "") {
    report.checks.push_back({std::move(axiom), pass, std::move(witness)});
  };
  if (n > 12) {
    add("atom-count guard (<= 12)", false, std::to_string(n) + " atoms");
    return report;
  }

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      if (s.converse_atom(s.converse_atom(i)) != i) {
        ok = false;
        w = s.atom_name(i);
      }
    add("converse involution", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    const std::uint32_t e = s.identity_bits();
    for (int i = 0; i < n && ok; ++i) {
      std::uint32_t x = 1u << i;
      if (s.compose_bits(x, e) != x || s.compose_bits(e, x) != x) {
        ok = false;
        w = s.atom_name(i);
      }
    }
    add("identity is a two-sided unit", ok, w);
  }
  {
    // z in x;y  iff  y in conv(x);z  iff  x in z;conv(y)
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z) {
          bool a = (s.compose_atoms(x, y) >> z) & 1u;
          bool b = (s.compose_atoms(s.converse_atom(x), z) >> y) & 1u;
          bool c = (s.compose_atoms(z, s.converse_atom(y)) >> x) & 1u;
          if (a != b || b != c) {
            ok = false;
            w = s.atom_name(x) + ";" + s.atom_name(y) + " vs " + s.atom_name(z);
          }
        }
    add("Peircean triangle law", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z) {
          std::uint32_t left = s.compose_bits(s.compose_atoms(x, y), 1u << z);
          std::uint32_t right = s.compose_bits(1u << x, s.compose_atoms(y, z));
          if (left != right) {
            ok = false;
            w = "(" + s.atom_name(x) + ";" + s.atom_name(y) + ");" + s.atom_name(z) +
                " = " + bits_names(s, left) + " != " + bits_names(s, right);
          }
        }
    add("associativity (atom triples, element level)", ok, w);
  }
  {
    // distributivity over union; all element pairs for small algebras,
    // a fixed pseudo-random sample otherwise
    bool ok = true;
    std::string w;
    auto check_pair = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
      if (s.compose_bits(a | b, c) != (s.compose_bits(a, c) | s.compose_bits(b, c))) {
        ok = false;
        w = "(" + bits_names(s, a) + " u " + bits_names(s, b) + ");" + bits_names(s, c);
      }
      if (s.compose_bits(c, a | b) != (s.compose_bits(c, a) | s.compose_bits(c, b))) {
        ok = false;
        w = bits_names(s, c) + ";(" + bits_names(s, a) + " u " + bits_names(s, b) + ")";
      }
    };
    if (n <= 4) {
      const std::uint32_t top = s.universe_bits();
      for (std::uint32_t a = 0; a <= top && ok; ++a)
        for (std::uint32_t b = 0; b <= top && ok; ++b)
          for (int c = 0; c < n && ok; ++c) check_pair(a, b, 1u << c);
    } else {
      std::uint64_t state = 0x9e3779b97f4a7c15ull;
      auto next = [&] {
        state ^= state << 13; state ^= state >> 7; state ^= state << 17;
        return static_cast<std::uint32_t>(state) & s.universe_bits();
      };
      for (int k = 0; k < 2000 && ok; ++k) check_pair(next(), next(), next());
    }
    add("distributivity of ; over union", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        std::uint32_t left = s.converse_bits(s.compose_atoms(x, y));
        std::uint32_t right = s.compose_bits(1u << s.converse_atom(y), 1u << s.converse_atom(x));
        if (left != right) {
          ok = false;
          w = "conv(" + s.atom_name(x) + ";" + s.atom_name(y) + ") = " + bits_names(s, left) +
              " != " + bits_names(s, right);
        }
      }
    add("(r6) conv(x;y) = conv(y);conv(x)", ok, w);
  }
  return report;
}

AlgebraPtr algebra_from_partition(int base_size,
                                  const std::vector<std::pair<std::string, ConcreteRelation>>& blocks,
                                  std::string name) {
  const int n = static_cast<int>(blocks.size());
  if (n == 0) throw std::invalid_argument("no blocks given");
  for (const auto& [name, rel] : blocks)
    if (rel.base_size() != base_size)
      throw std::invalid_argument("block " + name + " has wrong base size");

  ConcreteRelation seen(base_size);
  for (const auto& [name, rel] : blocks) {
    if (rel.empty_relation())
      throw std::invalid_argument("not a partition: block " + name + " is empty");
    if (!meet(seen, rel).empty_relation()) {
      for (const auto& [other, rel2] : blocks) {
        if (&rel2 == &rel) break;
        if (!meet(rel2, rel).empty_relation())
          throw std::invalid_argument("not a partition: blocks " + other + " and " + name + " overlap");
      }
    }
    seen = join(seen, rel);
  }
  if (!(seen == ConcreteRelation::universal(base_size)))
    throw std::invalid_argument("not a partition: blocks do not cover the square of the base");

  auto block_of = [&](const ConcreteRelation& r) -> int {
    for (int i = 0; i < n; ++i)
      if (blocks[i].second == r) return i;
    return -1;
  };

  std::vector<int> conv(n), identity;
  for (int i = 0; i < n; ++i) {
    int j = block_of(converse(blocks[i].second));
    if (j < 0)
      throw std::invalid_argument("not converse-closed: converse of block " + blocks[i].first +
                                  " is not a block");
    conv[i] = j;
  }
  const ConcreteRelation id = ConcreteRelation::identity(base_size);
  for (int i = 0; i < n; ++i) {
    const ConcreteRelation& b = blocks[i].second;
    if (is_subset(b, id)) identity.push_back(i);
    else if (!meet(b, id).empty_relation())
      throw std::invalid_argument("not a partition refining identity/diversity: block " +
                                  blocks[i].first);
  }

  std::vector<std::uint32_t> table(n * n, 0);
  std::vector<std::string> names;
  for (const auto& [name, rel] : blocks) names.push_back(name);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ConcreteRelation prod = compose(blocks[i].second, blocks[j].second);
      std::uint32_t bits = 0;
      for (int k = 0; k < n; ++k) {
        ConcreteRelation overlap = meet(prod, blocks[k].second);
        if (overlap.empty_relation()) continue;
        if (!(overlap == blocks[k].second))
          throw std::invalid_argument("composition of blocks " + blocks[i].first + " and " +
                                      blocks[j].first + " is not a union of blocks (cuts " +
                                      blocks[k].first + ")");
        bits |= 1u << k;
      }
      table[i * n + j] = bits;
    }

  if (name.empty()) name = "partition" + std::to_string(base_size);
  return std::make_shared<AtomStructure>(std::move(name), std::move(names), std::move(conv),
                                         std::move(identity), std::move(table));
}

std::string write_algebra(const AtomStructure& s,
                          const std::vector<std::pair<std::string, ConcreteRelation>>* blocks) {
  std::ostringstream out;
  out << "algebra " << s.name() << "\n";
  out << "atoms";
  for (int i = 0; i < s.size(); ++i) out << " " << s.atom_name(i);
  out << "\nconverse";
  for (int i = 0; i < s.size(); ++i) out << " " << s.atom_name(s.converse_atom(i));
  out << "\nidentity";
  for (int i = 0; i < s.size(); ++i)
    if ((s.identity_bits() >> i) & 1u) out << " " << s.atom_name(i);
  out << "\ntable\n";
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) {
      out << s.atom_name(i) << " ; " << s.atom_name(j) << " =";
      std::uint32_t bits = s.compose_atoms(i, j);
      for (int k = 0; k < s.size(); ++k)
        if ((bits >> k) & 1u) out << " " << s.atom_name(k);
      out << "\n";
    }
  out << "end\n";
  if (blocks && !blocks->empty()) {
    out << "base " << (*blocks)[0].second.base_size() << "\n";
    for (const auto& [name, rel] : *blocks) {
      out << "block " << name << " =";
      for (int r = 0; r < rel.base_size(); ++r)
        for (int c = 0; c < rel.base_size(); ++c)
          if (rel.at(r, c)) out << " (" << r << "," << c << ")";
      out << "\n";
    }
  }
  return out.str();
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

AlgebraFile read_algebra(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line))
      if (!tokens_of(line).empty()) return true;
    return false;
  };

  if (!next_line()) throw std::invalid_argument("algebra file: empty input");
  auto header = tokens_of(line);
  if (header.size() != 2 || header[0] != "algebra")
    throw std::invalid_argument("algebra file: expected 'algebra <name>'");
  const std::string name = header[1];

  if (!next_line()) throw std::invalid_argument("algebra file: missing atoms");
  auto atoms_line = tokens_of(line);
  if (atoms_line.empty() || atoms_line[0] != "atoms")
    throw std::invalid_argument("algebra file: expected 'atoms ...'");
  std::vector<std::string> atoms(atoms_line.begin() + 1, atoms_line.end());
  const int n = static_cast<int>(atoms.size());
  auto index_of = [&](const std::string& a) -> int {
    for (int i = 0; i < n; ++i)
      if (atoms[i] == a) return i;
    throw std::invalid_argument("algebra file: unknown atom '" + a + "'");
  };

  if (!next_line()) throw std::invalid_argument("algebra file: missing converse");
  auto conv_line = tokens_of(line);
  if (conv_line.empty() || conv_line[0] != "converse" ||
      static_cast<int>(conv_line.size()) != n + 1)
    throw std::invalid_argument("algebra file: expected 'converse' with one image per atom");
  std::vector<int> conv;
  for (int i = 0; i < n; ++i) conv.push_back(index_of(conv_line[i + 1]));

  if (!next_line()) throw std::invalid_argument("algebra file: missing identity");
  auto id_line = tokens_of(line);
  if (id_line.empty() || id_line[0] != "identity")
    throw std::invalid_argument("algebra file: expected 'identity ...'");
  std::vector<int> identity;
  for (std::size_t i = 1; i < id_line.size(); ++i) identity.push_back(index_of(id_line[i]));

  if (!next_line() || tokens_of(line) != std::vector<std::string>{"table"})
    throw std::invalid_argument("algebra file: expected 'table'");
  std::vector<std::uint32_t> table(n * n, 0);
  std::vector<bool> filled(n * n, false);
  while (true) {
    if (!next_line()) throw std::invalid_argument("algebra file: missing 'end'");
    auto toks = tokens_of(line);
    if (toks.size() == 1 && toks[0] == "end") break;
    if (toks.size() < 4 || toks[1] != ";" || toks[3] != "=")
      throw std::invalid_argument("algebra file: bad table line '" + line + "'");
    int i = index_of(toks[0]), j = index_of(toks[2]);
    std::uint32_t bits = 0;
    for (std::size_t k = 4; k < toks.size(); ++k) bits |= 1u << index_of(toks[k]);
    table[i * n + j] = bits;
    filled[i * n + j] = true;
  }
  for (bool f : filled)
    if (!f) throw std::invalid_argument("algebra file: incomplete table");

  AlgebraFile out;
  out.algebra = std::make_shared<AtomStructure>(name, atoms, std::move(conv),
                                                std::move(identity), std::move(table));

  if (next_line()) {
    auto toks = tokens_of(line);
    if (toks.size() != 2 || toks[0] != "base")
      throw std::invalid_argument("algebra file: expected 'base <n>'");
    int base = std::stoi(toks[1]);
    out.base_size = base;
    while (next_line()) {
      auto bt = tokens_of(line);
      if (bt.size() < 3 || bt[0] != "block" || bt[2] != "=")
        throw std::invalid_argument("algebra file: bad block line '" + line + "'");
      ConcreteRelation rel(base);
      for (std::size_t k = 3; k < bt.size(); ++k) {
        const std::string& p = bt[k];
        auto comma = p.find(',');
        if (p.size() < 5 || p.front() != '(' || p.back() != ')' || comma == std::string::npos)
          throw std::invalid_argument("algebra file: bad pair '" + p + "'");
        int r = std::stoi(p.substr(1, comma - 1));
        int c = std::stoi(p.substr(comma + 1, p.size() - comma - 2));
        rel.set(r, c, true);
      }
      out.blocks.emplace_back(bt[1], std::move(rel));
    }
  }
  return out;
}

}  // namespace relalg
