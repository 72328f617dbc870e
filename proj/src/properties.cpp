#include "relalg/properties.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace relalg {

std::string KrmReport::summary() const {
  if (member) return "member of K_RM\n";
  std::string out = "NOT a member of K_RM\n";
  for (const auto& f : failures) out += "  " + f + "\n";
  return out;
}

bool EquivReport::all_ok() const {
  return r12_iff.violations == 0 && r14_iff.violations == 0 && r4_iff.violations == 0 &&
         r4_impl.violations == 0 && r2_impl.violations == 0 && r3_impl.violations == 0 &&
         !r2_witness.empty() && !r3_witness.empty();
}

std::string EquivReport::summary() const {
  std::ostringstream out;
  out << "equivalence checks: base " << base << ", " << samples << " samples, seed " << seed
      << (exhaustive ? ", plus exhaustive base-2 sweep" : "") << "\n";
  auto line = [&](const EquivItem& item) {
    out << "  " << item.name << ": " << item.checked << " checked";
    if (item.hypothesis_hits) out << " (" << item.hypothesis_hits << " with true hypothesis)";
    out << ", " << item.violations << " violations";
    if (item.violations) out << "  first: " << item.first_violation;
    out << "\n";
  };
  line(r12_iff);
  line(r14_iff);
  line(r4_iff);
  line(r4_impl);
  line(r2_impl);
  line(r3_impl);
  out << "  (R2) non-converse witness: "
      << (r2_witness.empty() ? "NOT FOUND" : r2_witness) << "\n";
  out << "  (R3) non-converse witness: "
      << (r3_witness.empty() ? "NOT FOUND" : r3_witness) << "\n";
  return out.str();
}

namespace {

ConcreteRelation random_relation(int base, std::mt19937_64& rng) {
  ConcreteRelation r(base);
  std::uniform_int_distribution<std::uint64_t> bits;
  for (int i = 0; i < base; ++i) r.set_row(i, bits(rng));
  return r;
}

struct Violation {
  long order;
  std::string text;
};

void record(EquivItem& item, std::vector<Violation>& sink, long order, bool ok,
            const std::string& text) {
  ++item.checked;
  if (!ok) {
    ++item.violations;
    sink.push_back({order, text});
  }
}

struct TripleChecks {
  EquivReport* report;
  std::vector<Violation> v12, v14, v4iff, v4impl, v2, v3;

  void run(long order, const ConcreteRelation& a, const ConcreteRelation& b,
           const ConcreteRelation& c) {
    const ConcreteRelation id = ConcreteRelation::identity(a.base_size());

    // (R12): A -> ~B <= B -> ~A  iff  A|B <= B|A
    {
      bool lhs = is_subset(residual(a, conv_complement(b)), residual(b, conv_complement(a)));
      bool rhs = is_subset(compose(a, b), compose(b, a));
      record(report->r12_iff, v12, order, lhs == rhs,
             "A=" + to_string(a) + " B=" + to_string(b));
    }
    // (R14): transitivity of A  iff  A <= A -> A
    {
      bool lhs = is_transitive(a);
      bool rhs = is_subset(a, residual(a, a));
      record(report->r14_iff, v14, order, lhs == rhs, "A=" + to_string(a));
    }
    // (R4), B = ~Id instance: dense(A)  iff  Id <= (A -> ~A) -> ~A
    {
      const ConcreteRelation na = conv_complement(a);
      bool lhs = is_dense(a);
      bool rhs = is_subset(id, residual(residual(a, na), na));
      record(report->r4_iff, v4iff, order, lhs == rhs, "A=" + to_string(a));
    }
    // (R4): density of A implies A -> (A -> B) <= A -> B
    if (is_dense(a)) {
      bool ok = is_subset(residual(a, residual(a, b)), residual(a, b));
      record(report->r4_impl, v4impl, order, ok, "A=" + to_string(a) + " B=" + to_string(b));
    }
    // Lemma for (R2)
    {
      const ConcreteRelation ab = residual(a, b), bc = residual(b, c);
      ++report->r2_impl.checked;
      if (is_subset(compose(bc, ab), compose(ab, bc))) {
        ++report->r2_impl.hypothesis_hits;
        bool ok = is_subset(ab, residual(bc, residual(a, c)));
        if (!ok) {
          ++report->r2_impl.violations;
          v2.push_back({order, "A=" + to_string(a) + " B=" + to_string(b) + " C=" + to_string(c)});
        }
      }
    }
    // Lemma for (R3)
    {
      const ConcreteRelation ab = residual(a, b);
      ++report->r3_impl.checked;
      if (is_subset(compose(ab, a), compose(a, ab))) {
        ++report->r3_impl.hypothesis_hits;
        bool ok = is_subset(a, residual(ab, b));
        if (!ok) {
          ++report->r3_impl.violations;
          v3.push_back({order, "A=" + to_string(a) + " B=" + to_string(b)});
        }
      }
    }
  }

  void finish() {
    auto first = [](EquivItem& item, std::vector<Violation>& sink) {
      if (sink.empty()) return;
      auto it = std::min_element(sink.begin(), sink.end(),
                                 [](const Violation& x, const Violation& y) {
                                   return x.order < y.order;
                                 });
      item.first_violation = it->text;
    };
    first(report->r12_iff, v12);
    first(report->r14_iff, v14);
    first(report->r4_iff, v4iff);
    first(report->r4_impl, v4impl);
    first(report->r2_impl, v2);
    first(report->r3_impl, v3);
  }
};

// every relation on the 2-point base
std::vector<ConcreteRelation> base2_universe() {
  std::vector<ConcreteRelation> out;
  for (int bits = 0; bits < 16; ++bits) {
    ConcreteRelation r(2);
    r.set_row(0, bits & 3);
    r.set_row(1, (bits >> 2) & 3);
    out.push_back(r);
  }
  return out;
}

}  // namespace

EquivReport equivalence_checks(int base_size, int samples, std::uint64_t seed) {
  if (base_size < 2 || base_size > 6)
    throw std::invalid_argument("base size must be in [2,6]");
  EquivReport report;
  report.base = base_size;
  report.samples = samples;
  report.seed = seed;
  report.r12_iff.name = "(R12) contraposition iff commuting inclusion";
  report.r14_iff.name = "(R14) mingle iff transitivity";
  report.r4_iff.name = "(R4) B=~Id instance iff density";
  report.r4_impl.name = "(R4) density implies contraction inclusion";
  report.r2_impl.name = "(R2) suffixing from the commuting hypothesis";
  report.r3_impl.name = "(R3) assertion from the commuting hypothesis";

  TripleChecks checks{&report, {}, {}, {}, {}, {}, {}};
  long order = 0;

  if (base_size == 2) {
    report.exhaustive = true;
    const auto universe = base2_universe();
    for (const auto& a : universe)
      for (const auto& b : universe)
        for (const auto& c : universe) checks.run(order++, a, b, c);
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    ConcreteRelation a = random_relation(base_size, rng);
    ConcreteRelation b = random_relation(base_size, rng);
    ConcreteRelation c = random_relation(base_size, rng);
    checks.run(order++, a, b, c);
  }
  checks.finish();

  // Non-converse witnesses on base 2. For (R2): with C = U^2 the conclusion
  // holds outright, while the hypothesis fails once A -> B is nonempty with
  // a partial domain.
  {
    const auto universe = base2_universe();
    const ConcreteRelation top = ConcreteRelation::universal(2);
    for (const auto& a : universe) {
      if (!report.r2_witness.empty()) break;
      for (const auto& b : universe) {
        const ConcreteRelation ab = residual(a, b);
        if (!(ab == ConcreteRelation::from_pairs(2, {{0, 0}}))) continue;
        const ConcreteRelation bc = residual(b, top);
        bool conclusion = is_subset(ab, residual(bc, residual(a, top)));
        bool hypothesis = is_subset(compose(bc, ab), compose(ab, bc));
        if (conclusion && !hypothesis) {
          report.r2_witness =
              "A=" + to_string(a) + " B=" + to_string(b) + " C=U^2 (A->B=" + to_string(ab) + ")";
          break;
        }
      }
    }
    for (const auto& a : universe) {
      const ConcreteRelation ab = residual(a, top);  // = U^2
      bool conclusion = is_subset(a, residual(ab, top));
      bool hypothesis = is_subset(compose(ab, a), compose(a, ab));
      if (conclusion && !hypothesis) {
        report.r3_witness = "A=" + to_string(a) + " B=U^2";
        break;
      }
    }
  }
  return report;
}

std::string MeaningsReport::summary(const Matrix& m) const {
  std::ostringstream out;
  out << "theorem-meanings summary for " << m.title() << "\n";
  for (const auto& row : rows) {
    out << "  " << row.axiom << ": " << row.classification;
    if (!row.verdict.valid) out << "  " << row.verdict.describe(m);
    out << "\n";
  }
  out << "  carrier: " << (carrier_dense ? "all dense" : "not all dense") << ", "
      << (carrier_transitive ? "all transitive" : "not all transitive") << ", "
      << (carrier_commutative ? "commutative" : "not commutative") << "\n";
  out << "  cross-checks: R4 " << (r4_matches ? "matches" : "MISMATCH") << ", R12 "
      << (r12_matches ? "matches" : "MISMATCH") << ", R14 "
      << (r14_matches ? "matches" : "MISMATCH") << "\n";
  return out.str();
}

}  // namespace relalg
