#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/atom_structure.hpp"

namespace relalg {

// Routley-Meyer model structure harvested from an atom structure: points
// are atoms, the ternary relation is product inclusion, the star is
// converse, and zero is a distinguished point.
struct ModelStructure {
  std::string name;
  std::vector<std::string> points;
  std::vector<std::array<int, 3>> triples;  // sorted lexicographically by point name
  std::vector<int> star;                     // involution on points
  int zero = 0;

  int point_index(std::string_view p) const;  // -1 when absent
  friend bool operator==(const ModelStructure&, const ModelStructure&) = default;
};

// Unrelativized: points are all atoms, the triples are (x, y, z) with
// z below x;y, and zero is the (unique) identity atom unless named.
// Relativized: points are the diversity atoms, triples use the relativized
// product, and the zero point must be named by the caller (the crystal
// convention is zero = L1). Throws when a relativized export has no
// diversity atoms or when zero cannot be determined.
ModelStructure export_rms(const AtomStructure& s, bool relativized,
                          std::optional<std::string> zero_name = std::nullopt);

int triple_count(const ModelStructure& ms);

// Header line "rms <name>", then "points:", "star:", "zero:", "triples:"
// sections, one item per line.
std::string serialize(const ModelStructure& ms);
ModelStructure parse_model_structure(std::string_view text);

// Implication table recovered from the structure by the semantic clause:
// x is in S -> T when no triple (y, x, z) has y in S and z outside T.
// S and T are point subsets given as membership vectors.
std::vector<bool> clause_arrow(const ModelStructure& ms, const std::vector<bool>& s,
                               const std::vector<bool>& t);

}  // namespace relalg
