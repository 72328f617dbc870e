// Benchmark: OpenMP valuation-search kernel against the single-threaded
// kernel and the tree-walking reference, on matrices and formulas large
// enough for the chunked scan to matter.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "relalg/models.hpp"
#include "relalg/validity.hpp"

using namespace relalg;

namespace {

double seconds_of(const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Case {
  std::string name;
  Matrix matrix;
  Formula formula;
};

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; kernel runs single-threaded\n");
#endif

  std::vector<Case> cases;
  cases.push_back({"rm84, 8 variables, valid R7-style nest",
                   rm84_algebra().matrix,
                   parse_formula("(a -> b) & (a -> c) & (a -> d) & (a -> e) & (a -> f) & "
                                 "(a -> g) -> (a -> b & c & d & e & f & g)")});
  cases.push_back({"chain window 6 (26 elements), 5 variables, valid",
                   chain_matrix(IndexSet{IntervalSet::all()}, 6),
                   parse_formula("a & b & c & d & e -> a")});
  cases.push_back({"chain window 6, 5 variables, countermodel near the end",
                   chain_matrix(IndexSet{IntervalSet::all()}, 6),
                   parse_formula("a -> (b -> (c -> (d -> (e -> ~e))))")});

  std::printf("%-55s %12s %12s %12s %9s\n", "case", "reference(s)", "kernel x1(s)",
              "kernel omp(s)", "speedup");
  for (const auto& c : cases) {
    Verdict ref, one, omp;
    double t_ref = seconds_of([&] { ref = is_valid_serial(c.formula, c.matrix, 1ull << 40); });
    ValidityOptions serial;
    serial.jobs = 1;
    serial.max_valuations = 1ull << 40;
    double t_one = seconds_of([&] { one = is_valid(c.formula, c.matrix, serial); });
    ValidityOptions wide;
    wide.max_valuations = 1ull << 40;
    double t_omp = seconds_of([&] { omp = is_valid(c.formula, c.matrix, wide); });
    bool agree = ref.valid == one.valid && one.valid == omp.valid &&
                 ref.countermodel == one.countermodel && one.countermodel == omp.countermodel;
    std::printf("%-55s %12.3f %12.3f %12.3f %8.2fx %s\n", c.name.c_str(), t_ref, t_one, t_omp,
                t_one / (t_omp > 0 ? t_omp : 1e-9), agree ? "" : "DISAGREE");
    if (!agree) return 1;
  }
  return 0;
}
