#include <doctest.h>

#include "capelli/bsat.hpp"
#include "capelli/catalog.hpp"
#include "capelli/weyl.hpp"

#include <omp.h>

using namespace capelli;

namespace {

// Runs fn with a fixed thread count so the parallel branch is taken even on one core.
template <class Fn>
auto with_threads(int n, Fn fn) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(n);
  auto out = fn();
  omp_set_num_threads(saved);
  return out;
}

}  // namespace

TEST_CASE("parallel product matches the serial reference") {
  const auto det3 = instantiate(4, 3).f;
  const auto a = poly_pow(det3, 3), b = poly_pow(det3, 2);
  const auto serial = poly_mul_serial(a, b);
  for (int n : {1, 2, 4}) CHECK(with_threads(n, [&] { return poly_mul(a, b); }) == serial);
}

TEST_CASE("parallel operator application matches the serial reference") {
  const auto inst = instantiate(8, 4);
  const auto p = poly_pow(inst.f, 2);
  const auto serial = weyl_apply_serial(inst.delta, p);
  for (int n : {2, 4}) CHECK(with_threads(n, [&] { return weyl_apply(inst.delta, p); }) == serial);
}

TEST_CASE("parallel twisted application matches the serial reference") {
  const auto inst = instantiate(4, 3);
  const auto e = TwistedElement::power_of_f(inst.f, 1);
  const auto serial = twisted_apply_serial(inst.delta, e, inst.f);
  for (int n : {2, 3}) CHECK(with_threads(n, [&] { return twisted_apply(inst.delta, e, inst.f); }) == serial);
}

TEST_CASE("verify_all is deterministic across thread counts") {
  const auto serial = verify_all_serial(SizeSet::Min);
  const auto par = with_threads(4, [] { return verify_all(SizeSet::Min); });
  CHECK(par.targets == serial.targets);
  CHECK(par.certificates == serial.certificates);
  CHECK(par.errors == serial.errors);
}
