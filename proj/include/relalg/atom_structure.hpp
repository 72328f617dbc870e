#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/concrete.hpp"

namespace relalg {

// A finite atomic relation algebra given by its atoms: names, the converse
// permutation, the set of identity atoms, and the atom composition table.
// Elements are atom bitsets; element operations lift the table by union.
class AtomStructure {
 public:
  // converse[i] = index of the converse atom; identity_atoms = indices;
  // table[i*n+j] = bitset of atoms below atom_i ; atom_j.
  AtomStructure(std::string name, std::vector<std::string> atom_names,
                std::vector<int> converse, std::vector<int> identity_atoms,
                std::vector<std::uint32_t> table);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(atom_names_.size()); }
  const std::string& atom_name(int i) const { return atom_names_[i]; }
  const std::vector<std::string>& atom_names() const { return atom_names_; }
  int atom_index(std::string_view name) const;  // throws on unknown name
  int converse_atom(int i) const { return converse_[i]; }
  std::uint32_t identity_bits() const { return identity_bits_; }
  std::uint32_t universe_bits() const { return all_bits_; }
  std::uint32_t compose_atoms(int i, int j) const { return table_[i * size() + j]; }

  std::uint32_t converse_bits(std::uint32_t x) const;
  std::uint32_t compose_bits(std::uint32_t x, std::uint32_t y) const;

 private:
  std::string name_;
  std::vector<std::string> atom_names_;
  std::vector<int> converse_;
  std::uint32_t identity_bits_;
  std::uint32_t all_bits_;
  std::vector<std::uint32_t> table_;
};

using AlgebraPtr = std::shared_ptr<const AtomStructure>;

// Element of a finite atomic relation algebra: a set of atoms.
class RaElement {
 public:
  RaElement(AlgebraPtr algebra, std::uint32_t bits);

  const AlgebraPtr& algebra() const { return alg_; }
  std::uint32_t bits() const { return bits_; }
  bool contains_atom(int i) const { return (bits_ >> i) & 1u; }

  friend bool operator==(const RaElement& a, const RaElement& b) {
    return a.alg_.get() == b.alg_.get() && a.bits_ == b.bits_;
  }

 private:
  AlgebraPtr alg_;
  std::uint32_t bits_;
};

RaElement element(AlgebraPtr algebra, std::uint32_t bits);
RaElement element_from_names(AlgebraPtr algebra, const std::vector<std::string>& atoms);

RaElement join(const RaElement& a, const RaElement& b);
RaElement meet(const RaElement& a, const RaElement& b);
RaElement complement(const RaElement& a);
RaElement difference(const RaElement& a, const RaElement& b);
bool is_subset(const RaElement& a, const RaElement& b);
RaElement converse(const RaElement& a);
RaElement compose(const RaElement& a, const RaElement& b);
RaElement residual(const RaElement& a, const RaElement& b);
RaElement conv_complement(const RaElement& a);
RaElement rel_compose(const RaElement& a, const RaElement& b);
RaElement rel_residual(const RaElement& a, const RaElement& b);
RaElement rel_conv_complement(const RaElement& a);

// atom names joined by '+'; the empty element renders as "0"
std::string to_string(const RaElement& a);

struct AxiomCheck {
  std::string axiom;
  bool pass;
  std::string witness;  // empty when pass
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  std::string summary() const;
};

// Relation-algebra audit: converse involution, identity atoms acting as a
// two-sided unit, the Peircean triangle law on atoms, associativity over all
// atom triples lifted to elements, distributivity of ; over union, and (r6)
// conv(x;y) = conv(y);conv(x). Failures are reported with witnesses, not
// thrown. Guarded at <= 12 atoms (triple enumeration is cubic).
ValidationReport validate_algebra(const AtomStructure& s);

// Finite RA whose atoms are the blocks of a partition of base^2. Throws
// std::invalid_argument naming the offending blocks when the input is not a
// partition, not converse-closed, or some composition is not a block union.
AlgebraPtr algebra_from_partition(int base_size,
                                  const std::vector<std::pair<std::string, ConcreteRelation>>& blocks,
                                  std::string name = "");

// Text file format (round-trips bit-exact):
//   algebra <name>
//   atoms <a1> <a2> ...
//   converse <conv-of-a1> <conv-of-a2> ...
//   identity <names...>
//   table
//   <x> ; <y> = <atoms...>
//   end
//   base <n>              (optional concrete section)
//   block <name> = (r,c) (r,c) ...
struct AlgebraFile {
  AlgebraPtr algebra;
  std::optional<int> base_size;
  std::vector<std::pair<std::string, ConcreteRelation>> blocks;
};

std::string write_algebra(const AtomStructure& s,
                          const std::vector<std::pair<std::string, ConcreteRelation>>* blocks = nullptr);
AlgebraFile read_algebra(std::string_view text);

}  // namespace relalg
