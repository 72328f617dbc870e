#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relalg {

// Immutable relevance-logic formula tree. Fusion is a connective of the
// language; its semantics are derived (see evaluate).
class Formula {
 public:
  enum class Kind { Var, Neg, And, Or, Implies, Fusion };

  static Formula var(std::string name);
  static Formula neg(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula fusion(Formula l, Formula r);

  Kind kind() const;
  const std::string& var_name() const;
  Formula child() const;  // Neg
  Formula left() const;
  Formula right() const;

  // sorted, deduplicated
  std::vector<std::string> variables() const;
  // minimal-parenthesis rendering; parse(to_string(f)) == f
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaParseError : std::runtime_error {
  FormulaParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

// Grammar: variables [a-z][a-zA-Z0-9_]* (the words "v" and "o" are the
// connectives, so they are not usable as variables); '~' binds tightest,
// then 'o', '&', 'v', and right-associative '->'; parentheses; whitespace
// insensitive.
Formula parse_formula(std::string_view text);

}  // namespace relalg
