// Differential tests between the OpenMP valuation-search kernel and the
// serial tree-walking reference.
#include "doctest.h"
#include "relalg/models.hpp"
#include "relalg/validity.hpp"

#include <functional>
#include <random>

using namespace relalg;

namespace {

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
  std::uniform_int_distribution<int> pick(0, 5);
  if (depth == 0 || pick(rng) == 0) return Formula::var(vars[rng() % vars.size()]);
  switch (pick(rng)) {
    case 1: return Formula::neg(random_formula(rng, vars, depth - 1));
    case 2:
      return Formula::conj(random_formula(rng, vars, depth - 1),
                           random_formula(rng, vars, depth - 1));
    case 3:
      return Formula::disj(random_formula(rng, vars, depth - 1),
                           random_formula(rng, vars, depth - 1));
    case 4:
      return Formula::fusion(random_formula(rng, vars, depth - 1),
                             random_formula(rng, vars, depth - 1));
    default:
      return Formula::implies(random_formula(rng, vars, depth - 1),
                              random_formula(rng, vars, depth - 1));
  }
}

}  // namespace

TEST_CASE("kernel and reference agree on random formulas over the named models") {
  std::mt19937_64 rng(321);
  const std::vector<Matrix> matrices = {point_algebra().matrix, rm84_algebra().matrix,
                                        church_algebra().matrix, crystal_lattice().matrix};
  const std::vector<std::string> vars = {"a", "b", "c"};
  for (const Matrix& m : matrices) {
    for (int trial = 0; trial < 300; ++trial) {
      Formula f = random_formula(rng, vars, 4);
      Verdict fast = is_valid(f, m);
      Verdict slow = is_valid_serial(f, m);
      CHECK(fast.valid == slow.valid);
      if (!fast.valid) {
        CHECK(fast.countermodel == slow.countermodel);
        CHECK(fast.value == slow.value);
      }
    }
  }
}

TEST_CASE("kernel output does not depend on the job count") {
  Rm84Model rm = rm84_algebra();
  std::mt19937_64 rng(7777);
  const std::vector<std::string> vars = {"a", "b", "c", "d", "e"};
  for (int trial = 0; trial < 40; ++trial) {
    Formula f = random_formula(rng, vars, 5);
    ValidityOptions serial;
    serial.jobs = 1;
    ValidityOptions wide;
    wide.jobs = 4;
    Verdict a = is_valid(f, rm.matrix, serial);
    Verdict b = is_valid(f, rm.matrix, wide);
    Verdict c = is_valid(f, rm.matrix);  // default thread count
    CHECK(a.valid == b.valid);
    CHECK(b.valid == c.valid);
    if (!a.valid) {
      CHECK(a.countermodel == b.countermodel);
      CHECK(b.countermodel == c.countermodel);
    }
  }
}

TEST_CASE("a five-variable search still returns the first countermodel") {
  // carrier^vars = 18^5 is about 1.9 million valuations, enough to exercise
  // the chunked parallel scan
  Matrix m = chain_matrix(IndexSet{IntervalSet::all()}, 4);
  REQUIRE(m.size() == 18);
  Formula f = parse_formula("a -> (b -> (c -> (d -> e)))");
  Verdict fast = is_valid(f, m);
  Verdict slow = is_valid_serial(f, m);
  REQUIRE(!fast.valid);
  CHECK(fast.countermodel == slow.countermodel);
  CHECK(fast.value == slow.value);
}
