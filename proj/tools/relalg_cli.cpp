// Command-line workbench over the relation-algebra library: named models,
// element-level operations, symbolic expression evaluation, chains, matrix
// validity, axiom suites, variable-sharing demos, meanings checks, and
// Routley-Meyer exports.
//
// Exit codes: 0 = requested checks pass / value computed, 1 = a countermodel
// or property failure was found (still a successful run), 2 = usage or
// parse error.
#include <cctype>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "relalg/models.hpp"
#include "relalg/properties.hpp"
#include "relalg/rm_export.hpp"
#include "relalg/validity.hpp"

using namespace relalg;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCountermodel = 1;
constexpr int kExitUsage = 2;

// ---- symbolic expression evaluator -------------------------------------------
// Grammar, loosest to tightest: -> (right associative), +, &, |, ~; the
// primed forms ->' |' ~' are accepted alongside. Primaries: Id, Di, U, 0,
// L<interval-or-integer>, R<...>, parentheses.
struct SymEval {
  const IndexSet& index;
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("sym expression: " + what + " at position " +
                                std::to_string(pos));
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool take(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) == token) {
      pos += token.size();
      return true;
    }
    return false;
  }

  SymElement parse() {
    SymElement out = arrow();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return out;
  }

  SymElement arrow() {
    SymElement lhs = sum();
    skip_ws();
    if (take("->'")) return rel_residual(lhs, arrow());
    if (take("->")) return residual(lhs, arrow());
    return lhs;
  }

  SymElement sum() {
    SymElement lhs = isect();
    while (take("+")) lhs = join(lhs, isect());
    return lhs;
  }

  SymElement isect() {
    SymElement lhs = prod();
    while (take("&")) lhs = meet(lhs, prod());
    return lhs;
  }

  SymElement prod() {
    SymElement lhs = unary();
    while (true) {
      if (take("|'")) lhs = rel_compose(lhs, unary());
      else if (take("|")) lhs = compose(lhs, unary());
      else return lhs;
    }
  }

  SymElement unary() {
    if (take("~'")) return rel_conv_complement(unary());
    if (take("~")) return conv_complement(unary());
    return primary();
  }

  SymElement primary() {
    skip_ws();
    if (take("(")) {
      SymElement inner = arrow();
      if (!take(")")) fail("expected ')'");
      return inner;
    }
    if (take("Id")) return SymElement::identity(index);
    if (take("Di")) return SymElement::diversity(index);
    if (take("U")) return SymElement::universal(index);
    if (take("0")) return SymElement::empty(index);
    if (pos < text.size() && (text[pos] == 'L' || text[pos] == 'R')) {
      bool lower = text[pos] == 'L';
      ++pos;
      skip_ws();
      std::size_t end = pos;
      if (end < text.size() && (text[end] == '[' || text[end] == '(')) {
        int depth = 0;
        while (end < text.size()) {
          if (text[end] == '[' || text[end] == '(') ++depth;
          if (text[end] == ']' || text[end] == ')') {
            if (--depth == 0) { ++end; break; }
          }
          ++end;
        }
        if (depth != 0) fail("unterminated interval");
      } else {
        if (end < text.size() && (text[end] == '-' || text[end] == '+')) ++end;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos) fail("expected interval or integer after L/R");
      }
      std::string token(text.substr(pos, end - pos));
      pos = end;
      IntervalSet part = (token[0] == '[' || token[0] == '(')
                             ? parse_interval_set(token)
                             : IntervalSet::singleton(std::stoll(token));
      return SymElement::make(index, false, lower ? part : IntervalSet{},
                              lower ? IntervalSet{} : part);
    }
    fail("expected an element");
  }
};

struct Output {
  bool as_json = false;
  json payload;

  void line(const std::string& text) {
    if (!as_json) std::cout << text << "\n";
  }
  void finish() {
    if (as_json) std::cout << payload.dump(2) << "\n";
  }
};

void print_matrix(const ModelHandle& model, Output& out) {
  const Matrix& m = model.matrix;
  if (out.as_json) {
    json tables;
    tables["name"] = model.name;
    tables["elements"] = m.names();
    json arrow = json::array(), joins = json::array(), meets = json::array();
    json negs = json::array(), desig = json::array();
    for (int i = 0; i < m.size(); ++i) {
      json row = json::array(), jrow = json::array(), mrow = json::array();
      for (int j = 0; j < m.size(); ++j) {
        row.push_back(m.name(m.arrow(i, j)));
        jrow.push_back(m.name(m.join(i, j)));
        mrow.push_back(m.name(m.meet(i, j)));
      }
      arrow.push_back(row);
      joins.push_back(jrow);
      meets.push_back(mrow);
      negs.push_back(m.name(m.neg(i)));
      if (m.designated(i)) desig.push_back(m.name(i));
    }
    tables["arrow"] = arrow;
    tables["join"] = joins;
    tables["meet"] = meets;
    tables["neg"] = negs;
    tables["designated"] = desig;
    json atom_table = json::array();
    for (int i = 0; i < model.algebra->size(); ++i) {
      json row = json::array();
      for (int j = 0; j < model.algebra->size(); ++j)
        row.push_back(to_string(element(model.algebra, model.algebra->compose_atoms(i, j))));
      atom_table.push_back(row);
    }
    tables["atoms"] = model.algebra->atom_names();
    tables["atom_products"] = atom_table;
    out.payload = tables;
    return;
  }
  std::size_t width = 2;
  for (const auto& n : m.names()) width = std::max(width, n.size());
  auto cell = [&](const std::string& s) {
    std::printf(" %-*s", static_cast<int>(width), s.c_str());
  };
  std::printf("model %s: %d elements\n", model.name.c_str(), m.size());
  std::printf("\narrow table (row -> column):\n");
  cell("->");
  for (int j = 0; j < m.size(); ++j) cell(m.name(j));
  std::printf("\n");
  for (int i = 0; i < m.size(); ++i) {
    cell(m.name(i));
    for (int j = 0; j < m.size(); ++j) cell(m.name(m.arrow(i, j)));
    std::printf("\n");
  }
  std::printf("\nnegation:");
  for (int i = 0; i < m.size(); ++i)
    std::printf("  ~%s = %s", m.name(i).c_str(), m.name(m.neg(i)).c_str());
  std::printf("\ndesignated:");
  for (int i = 0; i < m.size(); ++i)
    if (m.designated(i)) std::printf(" %s", m.name(i).c_str());
  std::printf("\n\natom products (%s):\n", model.algebra->name().c_str());
  const AtomStructure& alg = *model.algebra;
  cell(";");
  for (int j = 0; j < alg.size(); ++j) cell(alg.atom_name(j));
  std::printf("\n");
  for (int i = 0; i < alg.size(); ++i) {
    cell(alg.atom_name(i));
    for (int j = 0; j < alg.size(); ++j)
      cell(to_string(element(model.algebra, alg.compose_atoms(i, j))));
    std::printf("\n");
  }
}

json verdict_json(const Verdict& v, const Matrix& m) {
  json out;
  out["valid"] = v.valid;
  if (!v.valid) {
    json cm;
    for (const auto& [var, idx] : v.countermodel) cm[var] = m.name(idx);
    out["countermodel"] = cm;
    out["value"] = m.name(v.value);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relation-algebra workbench for Sugihara chains, Belnap's algebra, "
               "the crystal lattice, Church's diamond, and RM84"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  // model show | export
  auto* model_cmd = app.add_subcommand("model", "inspect a named model");
  model_cmd->require_subcommand(1);
  std::string model_name;
  auto* show_cmd = model_cmd->add_subcommand("show", "print the operation tables");
  show_cmd->add_option("name", model_name, "point|crystal|church|rm84")->required();
  auto* export_cmd = model_cmd->add_subcommand("export", "print the algebra file");
  export_cmd->add_option("name", model_name, "point|crystal|church|rm84")->required();

  // element-level operations
  std::string op_model, elem_a, elem_b;
  auto* compose_cmd = app.add_subcommand("compose", "relative product of two elements");
  compose_cmd->add_option("--model", op_model)->required();
  compose_cmd->add_option("a", elem_a)->required();
  compose_cmd->add_option("b", elem_b)->required();
  auto* residual_cmd = app.add_subcommand("residual", "residual of two elements");
  residual_cmd->add_option("--model", op_model)->required();
  residual_cmd->add_option("a", elem_a)->required();
  residual_cmd->add_option("b", elem_b)->required();
  auto* conv_cmd = app.add_subcommand("conv", "converse of an element");
  conv_cmd->add_option("--model", op_model)->required();
  conv_cmd->add_option("a", elem_a)->required();

  // sym eval
  auto* sym_cmd = app.add_subcommand("sym", "symbolic algebra over an index set");
  sym_cmd->require_subcommand(1);
  auto* sym_eval = sym_cmd->add_subcommand("eval", "evaluate an expression (~ | & + ->, primed forms allowed)");
  std::string index_text = "Z", sym_expr;
  sym_eval->add_option("--index-set", index_text, "Z, Z+, {0,1}, [-3,3], unions with u");
  sym_eval->add_option("expr", sym_expr)->required();

  // chain
  auto* chain_cmd = app.add_subcommand("chain", "enumerate a Sugihara chain");
  std::string chain_window = "-4..4";
  bool chain_primed = false, chain_extended = false;
  chain_cmd->add_option("--index-set", index_text);
  chain_cmd->add_option("--window", chain_window, "a..b");
  chain_cmd->add_flag("--primed", chain_primed);
  chain_cmd->add_flag("--extended", chain_extended, "append the empty and top elements");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "exhaustive validity check in a model");
  std::string formula_text;
  int jobs = 0;
  validate_cmd->add_option("--model", op_model)->required();
  validate_cmd->add_option("--jobs", jobs, "thread count (0 = all)");
  validate_cmd->add_option("formula", formula_text)->required();

  // axioms
  auto* axioms_cmd = app.add_subcommand("axioms", "run an axiom suite against a model");
  std::string suite_name = "RM";
  axioms_cmd->add_option("--model", op_model)->required();
  axioms_cmd->add_option("--suite", suite_name)->check(CLI::IsMember({"R", "RM", "KR"}));
  axioms_cmd->add_option("--jobs", jobs);

  // varshare
  auto* varshare_cmd = app.add_subcommand("varshare", "variable-sharing countermodel demo");
  std::string style_name = "belnap", f_text, g_text;
  varshare_cmd->add_option("--style", style_name)->check(CLI::IsMember({"belnap", "crystal"}));
  varshare_cmd->add_option("f", f_text)->required();
  varshare_cmd->add_option("g", g_text)->required();

  // check meanings
  auto* check_cmd = app.add_subcommand("check", "property checks");
  check_cmd->require_subcommand(1);
  auto* meanings_cmd = check_cmd->add_subcommand("meanings", "relational meanings of the axioms");
  int base = 3, samples = 500;
  std::uint64_t seed = 0;
  meanings_cmd->add_option("--base", base)->check(CLI::Range(2, 6));
  meanings_cmd->add_option("--samples", samples);
  meanings_cmd->add_option("--seed", seed);

  // krm
  auto* krm_cmd = app.add_subcommand("krm", "validity over a windowed Sugihara chain");
  std::int64_t krm_window = 4;
  krm_cmd->add_option("--index-set", index_text);
  krm_cmd->add_option("--window", krm_window);
  krm_cmd->add_option("--jobs", jobs);
  krm_cmd->add_option("formula", formula_text)->required();

  // export rms
  auto* exp_cmd = app.add_subcommand("export", "exports");
  exp_cmd->require_subcommand(1);
  auto* rms_cmd = exp_cmd->add_subcommand("rms", "Routley-Meyer model structure");
  bool relativized = false;
  std::string zero_name, rms_index;
  rms_cmd->add_option("--model", op_model);
  rms_cmd->add_option("--index-set", rms_index, "finite index set instead of a model");
  rms_cmd->add_flag("--relativized", relativized);
  rms_cmd->add_option("--zero", zero_name, "zero point for relativized exports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output out;
  out.as_json = format == "json";
  try {
    if (show_cmd->parsed()) {
      ModelHandle model = get_model(model_name);
      print_matrix(model, out);
      out.finish();
      return kExitOk;
    }
    if (export_cmd->parsed()) {
      ModelHandle model = get_model(model_name);
      std::cout << write_algebra(*model.algebra, model.blocks.empty() ? nullptr : &model.blocks);
      return kExitOk;
    }
    if (compose_cmd->parsed() || residual_cmd->parsed() || conv_cmd->parsed()) {
      ModelHandle model = get_model(op_model);
      RaElement a = model.parse_element(elem_a);
      RaElement result = conv_cmd->parsed()
                             ? converse(a)
                             : (compose_cmd->parsed()
                                    ? compose(a, model.parse_element(elem_b))
                                    : residual(a, model.parse_element(elem_b)));
      if (out.as_json) {
        out.payload["result"] = model.element_label(result);
        out.payload["atoms"] = to_string(result);
      } else {
        std::cout << model.element_label(result) << "\n";
      }
      out.finish();
      return kExitOk;
    }
    if (sym_eval->parsed()) {
      IndexSet index{parse_interval_set(index_text)};
      SymEval eval{index, sym_expr};
      SymElement result = eval.parse();
      if (out.as_json) {
        out.payload["index_set"] = to_string(index.set());
        out.payload["result"] = to_string(result);
      } else {
        std::cout << to_string(result) << "\n";
      }
      out.finish();
      return kExitOk;
    }
    if (chain_cmd->parsed()) {
      IndexSet index{parse_interval_set(index_text)};
      auto dots = chain_window.find("..");
      if (dots == std::string::npos)
        throw std::invalid_argument("window must be of the form a..b");
      std::int64_t lo = std::stoll(chain_window.substr(0, dots));
      std::int64_t hi = std::stoll(chain_window.substr(dots + 2));
      auto chain = enumerate_chain(index, chain_primed, lo, hi, chain_extended);
      if (out.as_json) {
        json items = json::array();
        for (const auto& e : chain) items.push_back(to_string(e));
        out.payload["index_set"] = to_string(index.set());
        out.payload["primed"] = chain_primed;
        out.payload["chain"] = items;
      } else {
        for (const auto& e : chain) std::cout << to_string(e) << "\n";
      }
      out.finish();
      return kExitOk;
    }
    if (validate_cmd->parsed()) {
      ModelHandle model = get_model(op_model);
      Formula f = parse_formula(formula_text);
      ValidityOptions options;
      options.jobs = jobs;
      Verdict v = is_valid(f, model.matrix, options);
      if (out.as_json) out.payload = verdict_json(v, model.matrix);
      else std::cout << v.describe(model.matrix) << "\n";
      out.finish();
      return v.valid ? kExitOk : kExitCountermodel;
    }
    if (axioms_cmd->parsed()) {
      ModelHandle model = get_model(op_model);
      Suite suite = suite_name == "R" ? Suite::R : (suite_name == "RM" ? Suite::RM : Suite::KR);
      ValidityOptions options;
      options.jobs = jobs;
      bool all_valid = true;
      json rows = json::array();
      for (const auto& [label, f] : axiom_suite(suite)) {
        Verdict v = is_valid(f, model.matrix, options);
        all_valid &= v.valid;
        if (out.as_json) {
          json row = verdict_json(v, model.matrix);
          row["axiom"] = label;
          row["formula"] = f.to_string();
          rows.push_back(row);
        } else {
          std::printf("%-4s %-45s %s\n", label.c_str(), f.to_string().c_str(),
                      v.describe(model.matrix).c_str());
        }
      }
      if (out.as_json) out.payload = rows;
      out.finish();
      return all_valid ? kExitOk : kExitCountermodel;
    }
    if (varshare_cmd->parsed()) {
      Formula f = parse_formula(f_text);
      Formula g = parse_formula(g_text);
      VarShareStyle style =
          style_name == "belnap" ? VarShareStyle::Belnap : VarShareStyle::Crystal;
      VarShareReport report = variable_sharing_demo(f, g, style);
      if (out.as_json) {
        out.payload["f"] = report.f_value;
        out.payload["g"] = report.g_value;
        out.payload["implication"] = report.implication_value;
        out.payload["designated"] = report.implication_designated;
        json trace = json::array();
        for (const auto& line : report.trace)
          trace.push_back({{"subformula", line.subformula},
                           {"value", line.value},
                           {"inside", line.inside}});
        out.payload["trace"] = trace;
      } else {
        std::cout << report.describe();
      }
      out.finish();
      return report.implication_designated ? kExitCountermodel : kExitOk;
    }
    if (meanings_cmd->parsed()) {
      EquivReport report = equivalence_checks(base, samples, seed);
      if (out.as_json) {
        out.payload["base"] = report.base;
        out.payload["samples"] = report.samples;
        out.payload["seed"] = report.seed;
        out.payload["exhaustive"] = report.exhaustive;
        out.payload["ok"] = report.all_ok();
        out.payload["summary"] = report.summary();
      } else {
        std::cout << report.summary();
      }
      out.finish();
      return report.all_ok() ? kExitOk : kExitCountermodel;
    }
    if (krm_cmd->parsed()) {
      IndexSet index{parse_interval_set(index_text)};
      Formula f = parse_formula(formula_text);
      ValidityOptions options;
      options.jobs = jobs;
      KrmResult res = check_krm_validity(f, index, krm_window, options);
      Matrix m = chain_matrix(index, krm_window);
      if (out.as_json) {
        out.payload = verdict_json(res.verdict, m);
        out.payload["window"] = res.window;
        out.payload["chain_size"] = res.chain_size;
        out.payload["note"] = res.certificate()
                                  ? "countermodel certifies a non-theorem"
                                  : "pass is evidence at this window only";
      } else {
        std::cout << res.verdict.describe(m) << "\n"
                  << (res.certificate() ? "countermodel certifies a non-theorem\n"
                                        : "pass is evidence at this window only\n");
      }
      out.finish();
      return res.certificate() ? kExitCountermodel : kExitOk;
    }
    if (rms_cmd->parsed()) {
      ModelStructure ms;
      if (!rms_index.empty()) {
        IndexSet index{parse_interval_set(rms_index)};
        ms = export_rms(*finite_restrict(index), relativized,
                        zero_name.empty() ? std::nullopt : std::optional<std::string>(zero_name));
      } else {
        if (op_model.empty()) throw std::invalid_argument("name a --model or an --index-set");
        ModelHandle model = get_model(op_model);
        std::optional<std::string> zero;
        if (!zero_name.empty()) zero = zero_name;
        else if (model.name == "crystal" && relativized) zero = "L1";  // crystal convention
        ms = export_rms(*model.algebra, relativized, zero);
      }
      std::cout << serialize(ms);
      return kExitOk;
    }
  } catch (const FormulaParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
