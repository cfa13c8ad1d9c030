// Times the OpenMP kernels against their serial references.
#include "capelli/bsat.hpp"
#include "capelli/catalog.hpp"
#include "capelli/multipoly.hpp"
#include "capelli/weyl.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace capelli;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-34s serial %9.4f s   parallel %9.4f s   speedup %5.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());

  const CaseInstance det4 = instantiate(8, 4);
  const MultiPoly f2 = poly_pow(det4.f, 2);
  const MultiPoly f3 = poly_pow(det4.f, 3);
  report("poly_mul det4^2 * det4^3", seconds([&] { poly_mul_serial(f2, f3); }, 3),
         seconds([&] { poly_mul(f2, f3); }, 3));

  const MultiPoly f4 = poly_pow(det4.f, 4);
  report("weyl_apply det(d) on det4^4", seconds([&] { weyl_apply_serial(det4.delta, f4); }, 3),
         seconds([&] { weyl_apply(det4.delta, f4); }, 3));

  const TwistedElement fs1 = TwistedElement::power_of_f(det4.f, 1);
  report("twisted_apply det(d) f^(s+1)", seconds([&] { twisted_apply_serial(det4.delta, fs1, det4.f); }, 1),
         seconds([&] { twisted_apply(det4.delta, fs1, det4.f); }, 1));

  report("verify_all (min sizes)", seconds([] { verify_all_serial(SizeSet::Min); }, 1),
         seconds([] { verify_all(SizeSet::Min); }, 1));
  return 0;
}
