#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "relalg/concrete.hpp"
#include "relalg/matrix.hpp"
#include "relalg/validity.hpp"

namespace relalg {

// Shared surface of RaElement, SymElement, and ConcreteRelation.
template <class E>
concept RelationElement = requires(const E& a, const E& b) {
  { join(a, b) } -> std::same_as<E>;
  { meet(a, b) } -> std::same_as<E>;
  { compose(a, b) } -> std::same_as<E>;
  { residual(a, b) } -> std::same_as<E>;
  { conv_complement(a) } -> std::same_as<E>;
  { is_subset(a, b) } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

template <RelationElement E>
bool is_dense(const E& a) {
  return is_subset(a, compose(a, a));
}

template <RelationElement E>
bool is_transitive(const E& a) {
  return is_subset(compose(a, a), a);
}

template <RelationElement E>
bool commute(const E& a, const E& b) {
  return compose(a, b) == compose(b, a);
}

struct KrmReport {
  bool member = true;
  std::vector<std::string> failures;
  std::string summary() const;
};

// Membership in the class of dense, transitive, pairwise-commuting relation
// sets closed under union, intersection, residual, converse-complement, and
// relative product. The empty list is vacuously a member.
template <RelationElement E>
KrmReport krm_membership(const std::vector<E>& elements) {
  KrmReport report;
  auto in_set = [&](const E& x) {
    for (const auto& e : elements)
      if (e == x) return true;
    return false;
  };
  auto require = [&](const E& x, const std::string& what) {
    if (!in_set(x)) {
      report.member = false;
      report.failures.push_back("not closed under " + what + ": " + to_string(x));
    }
  };
  for (const auto& a : elements) {
    require(conv_complement(a), "~ at " + to_string(a));
    if (!(compose(a, a) == a)) {
      report.member = false;
      report.failures.push_back(
          (is_dense(a) ? "not transitive: " : "not dense: ") + to_string(a) +
          " (a|a = " + to_string(compose(a, a)) + ")");
    }
    for (const auto& b : elements) {
      require(join(a, b), "union at (" + to_string(a) + ", " + to_string(b) + ")");
      require(meet(a, b), "intersection at (" + to_string(a) + ", " + to_string(b) + ")");
      require(residual(a, b), "residual at (" + to_string(a) + ", " + to_string(b) + ")");
      require(compose(a, b), "product at (" + to_string(a) + ", " + to_string(b) + ")");
      if (!commute(a, b)) {
        report.member = false;
        report.failures.push_back("not commutative: " + to_string(a) + " | " + to_string(b));
      }
    }
  }
  return report;
}

// ---- Theorem-"meanings" equivalence checks ----------------------------------

struct EquivItem {
  std::string name;
  long checked = 0;
  long hypothesis_hits = 0;  // only meaningful for the one-directional items
  long violations = 0;
  std::string first_violation;
};

struct EquivReport {
  int base = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;  // base-2 sweep was included
  EquivItem r12_iff;   // A -> ~B <= B -> ~A  iff  A|B <= B|A
  EquivItem r14_iff;   // transitive(A)  iff  A <= A -> A
  EquivItem r4_iff;    // dense(A)  iff  Id <= (A -> ~A) -> ~A
  EquivItem r4_impl;   // dense(A)  implies  A -> (A -> B) <= A -> B
  EquivItem r2_impl;   // commuting hypothesis implies the (R2) inclusion
  EquivItem r3_impl;   // commuting hypothesis implies the (R3) inclusion
  std::string r2_witness;  // conclusion holds, hypothesis fails (C = U^2 family)
  std::string r3_witness;  // same with B = U^2
  bool all_ok() const;
  std::string summary() const;
};

// Randomized (and, on base 2, exhaustive) verification of the relational
// meanings of (R2), (R3), (R4), (R12), (R14) over concrete relations.
EquivReport equivalence_checks(int base_size, int samples, std::uint64_t seed);

// ---- axiom classification over a matrix -------------------------------------

struct MeaningsRow {
  std::string axiom;
  std::string classification;  // valid-unconditionally | valid-here | invalid-here
  Verdict verdict;
};

struct MeaningsReport {
  std::vector<MeaningsRow> rows;
  bool carrier_dense = true, carrier_transitive = true, carrier_commutative = true;
  bool r4_matches = true, r12_matches = true, r14_matches = true;
  std::string summary(const Matrix& m) const;
};

template <RelationElement E>
MeaningsReport theorem_meanings_summary(const Matrix& m, const std::vector<E>& carrier) {
  static const std::vector<std::string> unconditional = {"R1", "R5", "R6", "R7", "R8",
                                                         "R9", "R10", "R11", "R13"};
  MeaningsReport report;
  for (const auto& [label, formula] : axiom_suite(Suite::RM)) {
    MeaningsRow row{label, "", is_valid(formula, m)};
    bool uncond = std::find(unconditional.begin(), unconditional.end(), label) !=
                  unconditional.end();
    row.classification = uncond ? "valid-unconditionally"
                                : (row.verdict.valid ? "valid-here" : "invalid-here");
    if (uncond && !row.verdict.valid) row.classification = "invalid-here (UNEXPECTED)";
    report.rows.push_back(std::move(row));
  }
  for (const auto& a : carrier) {
    if (!is_dense(a)) report.carrier_dense = false;
    if (!is_transitive(a)) report.carrier_transitive = false;
    for (const auto& b : carrier)
      if (!commute(a, b)) report.carrier_commutative = false;
  }
  auto verdict_of = [&](const std::string& label) {
    for (const auto& row : report.rows)
      if (row.axiom == label) return row.verdict.valid;
    return false;
  };
  report.r4_matches = verdict_of("R4") == report.carrier_dense;
  report.r12_matches = verdict_of("R12") == report.carrier_commutative;
  report.r14_matches = verdict_of("R14") == report.carrier_transitive;
  return report;
}

}  // namespace relalg
