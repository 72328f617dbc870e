#include "relalg/formula.hpp"

#include <algorithm>
#include <cctype>

namespace relalg {

struct Formula::Node {
  Kind kind;
  std::string name;          // Var
  std::shared_ptr<const Node> left, right;
};

Formula::Kind Formula::kind() const { return node_->kind; }

Formula Formula::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return Formula(std::make_shared<Node>(Node{Kind::Var, std::move(name), nullptr, nullptr}));
}

Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<Node>(Node{Kind::Neg, "", std::move(f.node_), nullptr}));
}

Formula Formula::conj(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Kind::And, "", std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::disj(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Kind::Or, "", std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::implies(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Kind::Implies, "", std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::fusion(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Kind::Fusion, "", std::move(l.node_), std::move(r.node_)}));
}

const std::string& Formula::var_name() const {
  if (kind() != Kind::Var) throw std::logic_error("var_name on non-variable");
  return node_->name;
}

Formula Formula::child() const {
  if (kind() != Kind::Neg) throw std::logic_error("child on non-negation");
  return Formula(node_->left);
}

Formula Formula::left() const { return Formula(node_->left); }

Formula Formula::right() const { return Formula(node_->right); }

namespace {

void collect_vars(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      out.push_back(f.var_name());
      return;
    case Formula::Kind::Neg:
      collect_vars(f.child(), out);
      return;
    default:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
      return;
  }
}

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Fusion: return 4;
    case Formula::Kind::Neg: return 5;
    default: return 6;
  }
}

const char* op_text(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies: return " -> ";
    case Formula::Kind::Or: return " v ";
    case Formula::Kind::And: return " & ";
    case Formula::Kind::Fusion: return " o ";
    default: return "";
  }
}

void render(const Formula& f, int parent_prec, bool right_side, std::string& out) {
  const int prec = precedence(f.kind());
  switch (f.kind()) {
    case Formula::Kind::Var:
      out += f.var_name();
      return;
    case Formula::Kind::Neg:
      out += "~";
      render(f.child(), prec, false, out);
      return;
    default: {
      // -> is right associative; the other binaries are rendered
      // left-associatively
      bool need_parens = prec < parent_prec ||
                         (prec == parent_prec &&
                          (f.kind() == Formula::Kind::Implies ? !right_side : right_side));
      if (need_parens) out += "(";
      render(f.left(), prec, false, out);
      out += op_text(f.kind());
      render(f.right(), prec, true, out);
      if (need_parens) out += ")";
      return;
    }
  }
}

}  // namespace

std::vector<std::string> Formula::variables() const {
  std::vector<std::string> vars;
  collect_vars(*this, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::string Formula::to_string() const {
  std::string out;
  render(*this, 0, false, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_.get() == b.node_.get()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Var: return a.var_name() == b.var_name();
    case Formula::Kind::Neg: return a.child() == b.child();
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) { throw FormulaParseError(pos, what); }

  // identifier starting with a lowercase letter; "" when next token is not one
  std::string peek_ident() {
    skip_ws();
    if (pos >= text.size() || !std::islower(static_cast<unsigned char>(text[pos]))) return "";
    std::size_t end = pos;
    while (end < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
      ++end;
    return std::string(text.substr(pos, end - pos));
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      return Formula::implies(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (peek_ident() == "v") {
      pos += 1;
      lhs = Formula::disj(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_fusion();
    while (peek() == '&') {
      ++pos;
      lhs = Formula::conj(std::move(lhs), parse_fusion());
    }
    return lhs;
  }

  Formula parse_fusion() {
    Formula lhs = parse_unary();
    while (peek_ident() == "o") {
      pos += 1;
      lhs = Formula::fusion(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    if (peek() == '~') {
      ++pos;
      return Formula::neg(parse_unary());
    }
    if (peek() == '(') {
      ++pos;
      Formula inner = parse_implies();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    std::string ident = peek_ident();
    if (ident.empty()) fail("expected a variable, '~', or '('");
    if (ident == "v" || ident == "o") fail("'" + ident + "' is a connective, not a variable");
    pos += ident.size();
    return Formula::var(std::move(ident));
  }
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p{text};
  Formula f = p.parse_implies();
  if (!p.at_end()) p.fail("trailing input");
  return f;
}

}  // namespace relalg
