#include "doctest.h"
#include "relalg/models.hpp"
#include "relalg/rm_export.hpp"

using namespace relalg;

TEST_CASE("crystal relativized export: 24 triples, star is converse") {
  CrystalModel crystal = crystal_lattice();
  ModelStructure ms = export_rms(*crystal.ambient, true, "L1");
  CHECK(triple_count(ms) == 24);
  CHECK(ms.points == std::vector<std::string>{"L0", "R0", "L1", "R1"});
  CHECK(ms.points[ms.zero] == "L1");
  for (std::size_t i = 0; i < ms.points.size(); ++i) {
    CHECK(ms.star[ms.star[i]] == static_cast<int>(i));
    // converse atoms map to converse points
    int atom = crystal.ambient->atom_index(ms.points[i]);
    CHECK(ms.points[ms.star[i]] == crystal.ambient->atom_name(crystal.ambient->converse_atom(atom)));
  }
}

TEST_CASE("crystal export regenerates the arrow table through the clause") {
  CrystalModel crystal = crystal_lattice();
  ModelStructure ms = export_rms(*crystal.ambient, true, "L1");
  const Matrix& m = crystal.matrix;
  auto as_points = [&](const SymElement& e) {
    std::vector<bool> s(ms.points.size(), false);
    for (std::size_t p = 0; p < ms.points.size(); ++p) {
      const std::string& name = ms.points[p];
      std::int64_t n = name[1] - '0';
      s[p] = name[0] == 'L' ? e.lset().contains(n) : e.rset().contains(n);
    }
    return s;
  };
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      std::vector<bool> lhs = clause_arrow(ms, as_points(crystal.elements[i]),
                                           as_points(crystal.elements[j]));
      CHECK(lhs == as_points(crystal.elements[m.arrow(i, j)]));
    }
}

TEST_CASE("point algebra export: 13 triples around the identity") {
  PointModel p = point_algebra();
  ModelStructure ms = export_rms(*p.algebra, false);
  CHECK(triple_count(ms) == 13);
  CHECK(ms.points[ms.zero] == "=");
  // star swaps < and >
  CHECK(ms.points[ms.star[ms.point_index("<")]] == ">");
}

TEST_CASE("one-atom identity algebra exports a single triple") {
  auto alg = std::make_shared<AtomStructure>("trivial", std::vector<std::string>{"Id"},
                                             std::vector<int>{0}, std::vector<int>{0},
                                             std::vector<std::uint32_t>{1});
  ModelStructure ms = export_rms(*alg, false);
  CHECK(triple_count(ms) == 1);
  CHECK(ms.triples[0] == std::array<int, 3>{0, 0, 0});
  CHECK_THROWS_AS(export_rms(*alg, true), std::invalid_argument);
}

TEST_CASE("sugihara restrictions export through the product-inclusion relation") {
  const IndexSet zero{IntervalSet::singleton(0)};
  ModelStructure ms = export_rms(*finite_restrict(zero), false);
  CHECK(triple_count(ms) == 13);  // isomorphic to the point-algebra structure
}

TEST_CASE("serialization round-trips and is sorted") {
  CrystalModel crystal = crystal_lattice();
  ModelStructure ms = export_rms(*crystal.ambient, true, "L1");
  std::string text = serialize(ms);
  ModelStructure back = parse_model_structure(text);
  CHECK(back == ms);
  CHECK(serialize(back) == text);
  // lexicographic triple order
  for (std::size_t k = 0; k + 1 < ms.triples.size(); ++k) {
    std::array<std::string, 3> a, b;
    for (int i = 0; i < 3; ++i) {
      a[i] = ms.points[ms.triples[k][i]];
      b[i] = ms.points[ms.triples[k + 1][i]];
    }
    CHECK(a <= b);
  }
}

TEST_CASE("zero-point validation") {
  Rm84Model rm = rm84_algebra();
  CHECK_THROWS_AS(export_rms(*rm.algebra, true), std::invalid_argument);  // zero unnamed
  ModelStructure ms = export_rms(*rm.algebra, true, "{1,2,4}");
  CHECK(ms.points == std::vector<std::string>{"{1,2,4}", "{3,5,6}"});
  CHECK_THROWS_AS(export_rms(*rm.algebra, false, "nope"), std::invalid_argument);
}
