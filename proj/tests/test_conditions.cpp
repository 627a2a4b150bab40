#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mgl/conditions.hpp"

using namespace mgl;

namespace {
const GridSpec kGrid{-10.0, 10.0, 512};
}

TEST_CASE("convex second derivative check") {
  CHECK(check_convex_second_derivative(quartic(), kGrid).holds);
  CHECK(check_convex_second_derivative(square(), kGrid).holds);
  CHECK(check_convex_second_derivative(cosh_minus_one(), kGrid).holds);
  // |y|^2.5 has f'' = 3.75 |y|^0.5, concave on each half-line
  CHECK_FALSE(check_convex_second_derivative(abs_pow(2.5), kGrid).holds);
  // |y|^1.5: f'' blows up at 0; pairs straddling the kink expose it
  auto v = check_convex_second_derivative(abs_pow(1.5), kGrid);
  CHECK_FALSE(v.holds);
  CHECK(v.worst_violation > 1.0);
}

TEST_CASE("power-function classification under the condition checks") {
  for (double rho : {1.2, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0}) {
    bool convex_ok = check_convex_second_derivative(abs_pow(rho), kGrid).holds;
    CHECK(convex_ok == (rho == 2.0 || rho >= 3.0));
    bool sqrt_ok = check_sqrt_convex(abs_pow(rho), {0.0, 100.0, 512}).holds;
    CHECK(sqrt_ok == (rho >= 2.0));
  }
  for (double rho : {1.2, 1.5})
    CHECK(check_symmetric_sum_nondecreasing(neg_abs_pow(rho), 10.0).holds);
}

TEST_CASE("symmetric sum nondecreasing") {
  CHECK(check_symmetric_sum_nondecreasing(abs_pow(3.0), 10.0).holds);  // g(t) = 12 t
  CHECK(check_symmetric_sum_nondecreasing(neg_abs_pow(1.5), 10.0).holds);
  auto v = check_symmetric_sum_nondecreasing(abs_pow(1.5), 10.0);
  CHECK_FALSE(v.holds);  // g(t) = 3.75 / sqrt(t) decreasing
  CHECK_THROWS_AS(check_symmetric_sum_nondecreasing(square(), -1.0), std::invalid_argument);
}

TEST_CASE("cross condition") {
  // convex f'' implies the cross condition
  CHECK(check_cross_condition(quartic(), 10.0, 10.0).holds);
  CHECK(check_cross_condition(cubic(), 10.0, 10.0).holds);
  CHECK(check_cross_condition(cosh_minus_one(), 10.0, 10.0).holds);
  // the floor example: f'' = floor(y^2) is not convex but satisfies it
  CHECK(check_cross_condition(floor_convex(), 10.0, 10.0).holds);
  // the piecewise sawtooth example
  CHECK(check_cross_condition(sawtooth_example(), 10.0, 10.0).holds);
  // |y|^1.5 and |y|^2.5 must fail (their sharp-constant regimes dip below 1)
  CHECK_FALSE(check_cross_condition(abs_pow(1.5), 10.0, 10.0).holds);
  CHECK_FALSE(check_cross_condition(abs_pow(2.5), 10.0, 10.0).holds);
  CHECK_FALSE(check_cross_condition(neg_abs_pow(1.5), 10.0, 10.0).holds);
}

TEST_CASE("class inclusion: convex f'' passes the cross condition") {
  for (const FunctionSpec& f : builtin_library()) {
    if (check_convex_second_derivative(f, kGrid).holds)
      CHECK_MESSAGE(check_cross_condition(f, 10.0, 10.0).holds, f.label);
  }
}

TEST_CASE("taylor remainder identity") {
  // f = y^3, x = 1, y = 2: both sides equal 20
  CHECK(taylor_remainder_gap(cubic(), 1.0, 2.0) <= 1e-9);
  for (double x : {-2.0, 0.3, 1.7})
    for (double y : {-1.5, 0.4, 2.0})
      CHECK(taylor_remainder_gap(square(), x, y) <= 1e-12);
  CHECK(taylor_remainder_gap(quartic(), 0.5, 0.0) == 0.0);
}

TEST_CASE("declared derivatives agree with finite differences") {
  for (const FunctionSpec& f : builtin_smooth())
    CHECK(derivative_spot_check(f, -5.0, 5.0, 11) <= 1e-3);
  CHECK(derivative_spot_check(abs_pow(2.5), -5.0, 5.0, 11) <= 1e-3);
}

TEST_CASE("verdict bookkeeping") {
  auto v = check_cross_condition(quartic(), 10.0, 10.0);
  CHECK(v.sample_size == 20000);
  CHECK(v.range.has_value());
  CHECK(v.range->first == -10.0);
  // kinked functions report skipped samples rather than failing silently
  auto k = check_convex_second_derivative(abs_pow(1.5), {-1.0, 1.0, 128});
  CHECK(k.skipped + k.sample_size > 0);
}
