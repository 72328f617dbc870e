#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relalg/atom_structure.hpp"
#include "relalg/matrix.hpp"
#include "relalg/sugihara.hpp"
#include "relalg/validity.hpp"

namespace relalg {

// Belnap's eight-relation algebra of order relations, built as the finite
// restriction of the symbolic algebra over {0} and relabeled <, >, =.
struct PointModel {
  AlgebraPtr algebra;                 // atoms =, <, >
  std::vector<RaElement> elements;    // 0, <, >, =, !=, <=, >=, Q2
  std::vector<std::string> labels;
  Matrix matrix;                      // union, intersection, residual, conv-complement
};
PointModel point_algebra();

// The six-element crystal lattice inside the symbolic algebra over {0,1},
// with the relativized (second-method) operations.
struct CrystalModel {
  IndexSet index;                     // {0,1}
  std::vector<SymElement> elements;   // Di, L0R0L1, L0L1, R0L1, L1, 0
  std::vector<std::string> labels;
  Matrix matrix;
  AlgebraPtr ambient;                 // 5-atom finite restriction of the ambient algebra
};
CrystalModel crystal_lattice();

// Church's diamond from the nine-point concrete model: three columns of
// three, A = within-column diversity, B = cross-column.
struct ChurchModel {
  int base = 9;
  ConcreteRelation id, a, b;
  AlgebraPtr algebra;                 // atoms Id, A, B from the partition
  std::vector<RaElement> diamond;     // AB, A, B, 0
  std::vector<std::string> labels;
  Matrix matrix;                      // relativized operations, designated {AB, A}
};
ChurchModel church_algebra();

// Meyer's RM84 over the cyclic group of order 7; rho(X) relates y to z when
// z + x = y (mod 7) for some x in X.
struct Rm84Model {
  AlgebraPtr algebra;                 // atoms {0}, {1,2,4}, {3,5,6}
  std::vector<ConcreteRelation> atom_relations;
  std::vector<RaElement> elements;    // the eight index sets
  std::vector<std::string> labels;
  Matrix matrix;                      // first-method operations, designated = contains 0
};
Rm84Model rm84_algebra();

// The ten Sugihara sublattices of Belnap's algebra, each construction
// checked against the Sugihara-lattice laws.
std::vector<Matrix> m0_chain_examples();

// ---- variable-sharing demonstrations ---------------------------------------

enum class VarShareStyle { Belnap, Crystal };

// Belnap: vars(f) -> <=, vars(g) -> >= in the point matrix (closed sets
// {<, <=} and {>, >=}); crystal: the singleton fixed points L0L1 and R0L1.
VarShareReport variable_sharing_demo(const Formula& f, const Formula& g, VarShareStyle style);

// ---- CLI plumbing ------------------------------------------------------------

// Uniform handle for the CLI: the logical matrix plus the ambient atom
// algebra for element-level compose/residual/converse.
struct ModelHandle {
  std::string name;
  Matrix matrix;
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, std::uint32_t>> named_elements;  // label -> atom bits
  std::vector<std::pair<std::string, ConcreteRelation>> blocks;        // concrete part, if any

  RaElement parse_element(const std::string& text) const;  // label or 'a+b+c' atom sum
  std::string element_label(const RaElement& e) const;     // label when named, else atom sum
};

// point (aliases m0, belnap), crystal, church, rm84
ModelHandle get_model(const std::string& name);
std::vector<std::string> model_names();

}  // namespace relalg
