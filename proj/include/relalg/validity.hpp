#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relalg/formula.hpp"
#include "relalg/matrix.hpp"
#include "relalg/sugihara.hpp"

namespace relalg {

// variable name -> element index in the matrix carrier
using Valuation = std::map<std::string, int>;

// Structural recursion; fusion a o b evaluates as ~(b -> ~a), the relative
// product under the relational readings. Throws on a missing binding.
int evaluate(const Formula& f, const Matrix& m, const Valuation& v);

struct Verdict {
  bool valid = true;
  Valuation countermodel;  // lexicographically first failing valuation
  int value = -1;          // element the formula took there
  std::string describe(const Matrix& m) const;
};

struct ValidityOptions {
  int jobs = 0;                                   // 0 = all OpenMP threads, 1 = single
  std::uint64_t max_valuations = 100'000'000ull;  // explosion guard
};

struct ValuationBoundError : std::runtime_error {
  explicit ValuationBoundError(std::uint64_t bound)
      : std::runtime_error("validity search exceeds the valuation bound of " +
                           std::to_string(bound) + "; refusing to truncate"),
        bound(bound) {}
  std::uint64_t bound;
};

// Exhaustive search over |carrier|^|vars| valuations in lexicographic order
// (variables sorted, carrier in construction order). OpenMP kernel; the
// countermodel, when one exists, is the minimum failing index regardless of
// thread count.
Verdict is_valid(const Formula& f, const Matrix& m, const ValidityOptions& options = {});

// Straightforward tree-walking reference implementation, kept independent
// of the compiled kernel for differential testing.
Verdict is_valid_serial(const Formula& f, const Matrix& m,
                        std::uint64_t max_valuations = 100'000'000ull);

enum class Suite { R, RM, KR };

// (R1)-(R13); RM adds mingle (R14); KR adds ex falso a & ~a -> b.
std::vector<std::pair<std::string, Formula>> axiom_suite(Suite suite);

// ---- variable-sharing engine ----------------------------------------------

struct TraceLine {
  std::string subformula;
  std::string value;
  bool inside;  // value still inside the assigned closed set
};

struct VarShareReport {
  Valuation valuation;
  std::string f_value, g_value, implication_value;
  bool implication_designated = false;
  std::vector<TraceLine> trace;
  std::string describe() const;
};

// Sends vars(f) to f_elem and vars(g) to g_elem, evaluates both sides and
// f -> g, and traces every subformula of f and of g against its closed set.
// Throws std::invalid_argument when the variable sets intersect.
VarShareReport var_share_check(const Formula& f, const Formula& g, const Matrix& m,
                               int f_elem, const std::vector<int>& f_closed,
                               int g_elem, const std::vector<int>& g_closed);

// ---- Sugihara-chain validity ------------------------------------------------

// First-Method matrix over the chain of I clipped to [-window, window];
// designated elements are the ones containing the identity.
Matrix chain_matrix(const IndexSet& index, std::int64_t window, bool primed = false);

struct KrmResult {
  std::int64_t window = 0;
  int chain_size = 0;
  Verdict verdict;
  // A countermodel is a genuine non-theorem certificate; a pass is evidence
  // at this window only.
  bool certificate() const { return !verdict.valid; }
};

KrmResult check_krm_validity(const Formula& f, const IndexSet& index, std::int64_t window,
                             const ValidityOptions& options = {});

}  // namespace relalg
