#include "relalg/validity.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relalg {

int evaluate(const Formula& f, const Matrix& m, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      auto it = v.find(f.var_name());
      if (it == v.end())
        throw std::invalid_argument("no binding for variable '" + f.var_name() + "'");
      if (it->second < 0 || it->second >= m.size())
        throw std::invalid_argument("binding for '" + f.var_name() + "' out of range");
      return it->second;
    }
    case Formula::Kind::Neg:
      return m.neg(evaluate(f.child(), m, v));
    case Formula::Kind::And:
      return m.meet(evaluate(f.left(), m, v), evaluate(f.right(), m, v));
    case Formula::Kind::Or:
      return m.join(evaluate(f.left(), m, v), evaluate(f.right(), m, v));
    case Formula::Kind::Implies:
      return m.arrow(evaluate(f.left(), m, v), evaluate(f.right(), m, v));
    default: {
      // a o b = ~(b -> ~a)
      int a = evaluate(f.left(), m, v);
      int b = evaluate(f.right(), m, v);
      return m.neg(m.arrow(b, m.neg(a)));
    }
  }
}

std::string Verdict::describe(const Matrix& m) const {
  if (valid) return "VALID";
  std::ostringstream out;
  out << "COUNTERMODEL v:";
  bool first = true;
  for (const auto& [var, idx] : countermodel) {
    out << (first ? " " : ", ") << var << "=" << m.name(idx);
    first = false;
  }
  out << "; value=" << (value >= 0 ? m.name(value) : "?") << "; designated set=";
  first = true;
  out << "{";
  for (int i = 0; i < m.size(); ++i)
    if (m.designated(i)) {
      if (!first) out << ", ";
      out << m.name(i);
      first = false;
    }
  out << "}";
  return out.str();
}

namespace {

// Postfix program compiled from a formula; evaluation per valuation is a
// flat loop over opcodes with a small value stack.
struct Program {
  enum Op : std::uint8_t { PushVar, Neg, And, Or, Imp, Fuse };
  std::vector<std::pair<Op, std::uint8_t>> code;  // arg = variable slot for PushVar
  std::vector<std::string> vars;                  // sorted

  static Program compile(const Formula& f) {
    Program p;
    p.vars = f.variables();
    if (p.vars.size() > 16) throw std::invalid_argument("too many variables (max 16)");
    p.emit(f);
    return p;
  }

  void emit(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Var: {
        auto it = std::lower_bound(vars.begin(), vars.end(), f.var_name());
        code.emplace_back(PushVar, static_cast<std::uint8_t>(it - vars.begin()));
        return;
      }
      case Formula::Kind::Neg:
        emit(f.child());
        code.emplace_back(Neg, 0);
        return;
      case Formula::Kind::And:
        emit(f.left()); emit(f.right()); code.emplace_back(And, 0); return;
      case Formula::Kind::Or:
        emit(f.left()); emit(f.right()); code.emplace_back(Or, 0); return;
      case Formula::Kind::Implies:
        emit(f.left()); emit(f.right()); code.emplace_back(Imp, 0); return;
      default:
        emit(f.left()); emit(f.right()); code.emplace_back(Fuse, 0); return;
    }
  }

  int run(const Matrix& m, const int* assignment) const {
    int stack[64];
    int top = -1;
    for (const auto& [op, arg] : code) {
      switch (op) {
        case PushVar: stack[++top] = assignment[arg]; break;
        case Neg: stack[top] = m.neg(stack[top]); break;
        case And: --top; stack[top] = m.meet(stack[top], stack[top + 1]); break;
        case Or: --top; stack[top] = m.join(stack[top], stack[top + 1]); break;
        case Imp: --top; stack[top] = m.arrow(stack[top], stack[top + 1]); break;
        case Fuse: --top; stack[top] = m.neg(m.arrow(stack[top + 1], m.neg(stack[top]))); break;
      }
    }
    return stack[0];
  }
};

// first variable (alphabetically) is the most significant digit
void decode(std::uint64_t k, int n, int nvars, int* out) {
  for (int i = nvars - 1; i >= 0; --i) {
    out[i] = static_cast<int>(k % n);
    k /= n;
  }
}

std::uint64_t valuation_count(int carrier, int nvars, std::uint64_t bound) {
  std::uint64_t total = 1;
  for (int i = 0; i < nvars; ++i) {
    if (total > bound / static_cast<std::uint64_t>(carrier)) return bound + 1;
    total *= static_cast<std::uint64_t>(carrier);
  }
  return total;
}

Verdict verdict_from_index(const Program& prog, const Matrix& m, std::uint64_t k) {
  Verdict out;
  out.valid = false;
  const int nvars = static_cast<int>(prog.vars.size());
  int digits[16] = {0};
  decode(k, m.size(), nvars, digits);
  for (int i = 0; i < nvars; ++i) out.countermodel[prog.vars[i]] = digits[i];
  out.value = prog.run(m, digits);
  return out;
}

constexpr std::uint64_t kNotFound = ~0ull;

std::uint64_t scan_serial(const Program& prog, const Matrix& m, std::uint64_t total) {
  const int nvars = static_cast<int>(prog.vars.size());
  int digits[16] = {0};
  for (std::uint64_t k = 0; k < total; ++k) {
    decode(k, m.size(), nvars, digits);
    if (!m.designated(prog.run(m, digits))) return k;
  }
  return kNotFound;
}

std::uint64_t scan_parallel(const Program& prog, const Matrix& m, std::uint64_t total) {
  std::atomic<std::uint64_t> best{kNotFound};
  constexpr std::uint64_t chunk = 1u << 12;
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  const int nvars = static_cast<int>(prog.vars.size());
#pragma omp parallel
  {
#ifdef _OPENMP
    const std::uint64_t nthreads = static_cast<std::uint64_t>(omp_get_num_threads());
    const std::uint64_t tid = static_cast<std::uint64_t>(omp_get_thread_num());
#else
    const std::uint64_t nthreads = 1, tid = 0;
#endif
    int digits[16] = {0};
    // chunks are claimed in ascending order, so skipping past the current
    // best never discards a smaller failing index
    for (std::uint64_t c = tid; c < chunks; c += nthreads) {
      const std::uint64_t start = c * chunk;
      if (start >= best.load(std::memory_order_relaxed)) break;
      const std::uint64_t stop = std::min(total, start + chunk);
      for (std::uint64_t k = start; k < stop; ++k) {
        decode(k, m.size(), nvars, digits);
        if (!m.designated(prog.run(m, digits))) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (k < cur && !best.compare_exchange_weak(cur, k)) {
          }
          break;
        }
      }
    }
  }
  return best.load();
}

}  // namespace

Verdict is_valid(const Formula& f, const Matrix& m, const ValidityOptions& options) {
  const Program prog = Program::compile(f);
  if (m.size() == 0) return {};
  const std::uint64_t total =
      valuation_count(m.size(), static_cast<int>(prog.vars.size()), options.max_valuations);
  if (total > options.max_valuations)
    throw ValuationBoundError(options.max_valuations);

#ifdef _OPENMP
  int previous = omp_get_max_threads();
  if (options.jobs > 0) omp_set_num_threads(options.jobs);
  const bool parallel = options.jobs != 1 && total >= (1u << 14);
  const std::uint64_t hit = parallel ? scan_parallel(prog, m, total) : scan_serial(prog, m, total);
  if (options.jobs > 0) omp_set_num_threads(previous);
#else
  const std::uint64_t hit = scan_serial(prog, m, total);
#endif
  if (hit == kNotFound) return {};
  return verdict_from_index(prog, m, hit);
}

Verdict is_valid_serial(const Formula& f, const Matrix& m, std::uint64_t max_valuations) {
  if (m.size() == 0) return {};
  const std::vector<std::string> vars = f.variables();
  const std::uint64_t total =
      valuation_count(m.size(), static_cast<int>(vars.size()), max_valuations);
  if (total > max_valuations) throw ValuationBoundError(max_valuations);
  Valuation v;
  for (const auto& name : vars) v[name] = 0;
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t rest = k;
    for (int i = static_cast<int>(vars.size()) - 1; i >= 0; --i) {
      v[vars[i]] = static_cast<int>(rest % m.size());
      rest /= m.size();
    }
    int value = evaluate(f, m, v);
    if (!m.designated(value)) {
      Verdict out;
      out.valid = false;
      out.countermodel = v;
      out.value = value;
      return out;
    }
  }
  return {};
}

std::vector<std::pair<std::string, Formula>> axiom_suite(Suite suite) {
  static const std::vector<std::pair<std::string, std::string>> base = {
      {"R1", "a -> a"},
      {"R2", "(a -> b) -> ((b -> c) -> (a -> c))"},
      {"R3", "a -> ((a -> b) -> b)"},
      {"R4", "(a -> (a -> b)) -> (a -> b)"},
      {"R5", "a & b -> a"},
      {"R6", "a & b -> b"},
      {"R7", "(a -> b) & (a -> c) -> (a -> b & c)"},
      {"R8", "a -> a v b"},
      {"R9", "b -> a v b"},
      {"R10", "(a -> c) & (b -> c) -> (a v b -> c)"},
      {"R11", "a & (b v c) -> (a & b) v c"},
      {"R12", "(a -> ~b) -> (b -> ~a)"},
      {"R13", "~~a -> a"},
  };
  std::vector<std::pair<std::string, Formula>> out;
  for (const auto& [label, text] : base) out.emplace_back(label, parse_formula(text));
  if (suite == Suite::RM) out.emplace_back("R14", parse_formula("a -> (a -> a)"));
  if (suite == Suite::KR) out.emplace_back("KR", parse_formula("a & ~a -> b"));
  return out;
}

namespace {

void trace_formula(const Formula& f, const Matrix& m, const Valuation& v,
                   const std::vector<int>& closed, std::vector<TraceLine>& out) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      break;
    case Formula::Kind::Neg:
      trace_formula(f.child(), m, v, closed, out);
      break;
    default:
      trace_formula(f.left(), m, v, closed, out);
      trace_formula(f.right(), m, v, closed, out);
      break;
  }
  const int value = evaluate(f, m, v);
  const bool inside = std::find(closed.begin(), closed.end(), value) != closed.end();
  out.push_back({f.to_string(), m.name(value), inside});
}

}  // namespace

std::string VarShareReport::describe() const {
  std::ostringstream out;
  out << "f evaluates to " << f_value << ", g evaluates to " << g_value
      << ", f -> g evaluates to " << implication_value
      << (implication_designated ? " (designated)" : " (not designated)") << "\n";
  for (const auto& line : trace)
    out << (line.inside ? "  in-set " : "  ESCAPED ") << line.subformula << " = " << line.value
        << "\n";
  return out.str();
}

VarShareReport var_share_check(const Formula& f, const Formula& g, const Matrix& m,
                               int f_elem, const std::vector<int>& f_closed,
                               int g_elem, const std::vector<int>& g_closed) {
  const auto fv = f.variables();
  const auto gv = g.variables();
  for (const auto& name : fv)
    if (std::find(gv.begin(), gv.end(), name) != gv.end())
      throw std::invalid_argument("formulas share the variable '" + name + "'");

  VarShareReport report;
  for (const auto& name : fv) report.valuation[name] = f_elem;
  for (const auto& name : gv) report.valuation[name] = g_elem;

  trace_formula(f, m, report.valuation, f_closed, report.trace);
  trace_formula(g, m, report.valuation, g_closed, report.trace);

  const int fval = evaluate(f, m, report.valuation);
  const int gval = evaluate(g, m, report.valuation);
  const int impl = m.arrow(fval, gval);
  report.f_value = m.name(fval);
  report.g_value = m.name(gval);
  report.implication_value = m.name(impl);
  report.implication_designated = m.designated(impl);
  return report;
}

Matrix chain_matrix(const IndexSet& index, std::int64_t window, bool primed) {
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
  // mirror enumerate_chain, keeping chain-style names aligned with the
  // deduplicated carrier
  std::vector<SymElement> carrier;
  std::vector<std::string> names;
  auto push = [&](SymElement e, std::string label) {
    if (std::find(carrier.begin(), carrier.end(), e) == carrier.end()) {
      carrier.push_back(std::move(e));
      names.push_back(std::move(label));
    }
  };
  for (std::int64_t n = -window; n <= window; ++n)
    if (index.contains(-n))
      push(chain_element(ChainKind::S, n, index), "S(" + std::to_string(n) + ")");
  for (std::int64_t n = -window; n <= window; ++n)
    if (index.contains(n))
      push(chain_element(primed ? ChainKind::That : ChainKind::T, n, index),
           (primed ? "That(" : "T(") + std::to_string(n) + ")");
  auto arrow = [primed](const SymElement& a, const SymElement& b) {
    return primed ? rel_residual(a, b) : residual(a, b);
  };
  auto neg = [primed](const SymElement& a) {
    return primed ? rel_conv_complement(a) : conv_complement(a);
  };
  auto designated = [primed](const SymElement& a) {
    if (!primed) return a.has_id();
    return is_subset(rel_conv_complement(a), a);
  };
  return Matrix::build((primed ? "C'" : "C") + std::string("_I[") + to_string(index.set()) +
                           "] window " + std::to_string(window),
                       std::move(names), carrier,
                       [](const SymElement& a, const SymElement& b) { return join(a, b); },
                       [](const SymElement& a, const SymElement& b) { return meet(a, b); },
                       arrow, neg, designated);
}

KrmResult check_krm_validity(const Formula& f, const IndexSet& index, std::int64_t window,
                             const ValidityOptions& options) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  Matrix m = chain_matrix(index, window, false);
  KrmResult out;
  out.window = window;
  out.chain_size = m.size();
  out.verdict = m.size() == 0 ? Verdict{} : is_valid(f, m, options);
  return out;
}

}  // namespace relalg
