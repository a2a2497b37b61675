// Serial against OpenMP timings for the parallel kernels. Each pair of runs
// is also compared for identical output.
#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include "lierigid/fubini.hpp"
#include "lierigid/kernel.hpp"
#include "lierigid/rigidity.hpp"

using namespace lierigid;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void report(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(40) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(9) << std::setprecision(2) << serial / parallel << "x"
            << (same ? "" : "  OUTPUT DIFFERS") << '\n';
}

IrrepRealization build(const char* type, const char* weight) {
  const RootSystem rs = root_system(type);
  return build_irrep(rs, parse_weight(rs, weight));
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::cout << "threads: " << omp_get_max_threads() << ", best of " << reps << "\n";
  std::cout << std::left << std::setw(40) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "parallel" << std::setw(10) << "speedup" << '\n';
  bool all_same = true;

  for (const auto& [t, w] : {std::pair{"B3", "0,1,0"}, std::pair{"A3", "1,0,1"}, std::pair{"G2", "0,1"}}) {
    const IrrepRealization rep = build(t, w);
    KernelReport s, p;
    const double ts = best_of(reps, [&] { s = compute_kernel(rep, 0, Exec::Serial); });
    const double tp = best_of(reps, [&] { p = compute_kernel(rep, 0, Exec::Parallel); });
    const bool same = s.kernel_basis == p.kernel_basis;
    all_same = all_same && same;
    report(std::string("kernel assembly ") + t + " [" + w + "]", ts, tp, same);
  }

  for (const auto& [t, w] : {std::pair{"B3", "0,1,0"}, std::pair{"G2", "0,1"}, std::pair{"A3", "1,0,1"}}) {
    const FramedModule fm = framed(build(t, w));
    FubiniFormTable s, p;
    double ts = best_of(reps, [&] { s = fubini_recurse(fm, 4, Exec::Serial); });
    double tp = best_of(reps, [&] { p = fubini_recurse(fm, 4, Exec::Parallel); });
    bool same = s.same_coefficients(p);
    all_same = all_same && same;
    report(std::string("Fubini tensor route ") + t + " [" + w + "]", ts, tp, same);

    ts = best_of(reps, [&] { s = fubini_coeff_recursion(fm, 4, SignConvention::Invariant, Exec::Serial).table; });
    tp = best_of(reps, [&] { p = fubini_coeff_recursion(fm, 4, SignConvention::Invariant, Exec::Parallel).table; });
    same = s.same_coefficients(p);
    all_same = all_same && same;
    report(std::string("Fubini coefficients ") + t + " [" + w + "]", ts, tp, same);
  }

  {
    QTable s, p;
    const double ts = best_of(reps, [&] { s = table1_generate(Exec::Serial); });
    const double tp = best_of(reps, [&] { p = table1_generate(Exec::Parallel); });
    const bool same = s.render(false, false) == p.render(false, false);
    all_same = all_same && same;
    report("table of q, fundamental weights", ts, tp, same);
  }
  return all_same ? 0 : 1;
}
