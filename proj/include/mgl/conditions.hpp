#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mgl/function_spec.hpp"

namespace mgl {

enum class ConditionTag {
  ConvexSecondDeriv,        // f'' exists and is convex
  SymmetricSumNondecreasing,  // t -> f''(t) + f''(-t) nondecreasing on t > 0
  CrossCondition,           // f''(-a) + f''(b) >= f''(-a+g) + f''(b-g)
  SqrtConvex                // f even, y -> f(sqrt(y)) convex on y >= 0
};

std::string to_string(ConditionTag t);

struct ConditionVerdict {
  ConditionTag condition;
  bool holds = false;
  double worst_violation = 0.0;
  std::vector<double> witness;  // point(s) achieving worst_violation
  std::optional<std::pair<double, double>> range;  // [-B, C] restriction
  int sample_size = 0;
  int skipped = 0;
  // grid points where the evaluator failed or returned non-finite values;
  // excluded from the verdict but never hidden
  std::vector<double> undefined_points;
};

struct GridSpec {
  double lo;
  double hi;
  int n = 512;  // capped at 512
};

/// Midpoint-convexity of f'' over all grid pairs:
/// f''((x+y)/2) <= (f''(x)+f''(y))/2 + 1e-7.
ConditionVerdict check_convex_second_derivative(const FunctionSpec& f, GridSpec grid);

/// g(t) = f''(t) + f''(-t) sampled at 512 points of (0, t_max]; holds iff no
/// adjacent decrease exceeds 1e-7.
ConditionVerdict check_symmetric_sum_nondecreasing(const FunctionSpec& f, double t_max);

/// f''(-a) + f''(b) >= f''(-a+g) + f''(b-g) over a quasi-random sample of
/// admissible triples (a, b, g) with a, b > 0, 0 < g < a+b and all four
/// evaluation points inside (-B, C). Declared kink neighborhoods skipped.
ConditionVerdict check_cross_condition(const FunctionSpec& f, double B, double C,
                                       int samples = 20000);

/// Evenness of f plus midpoint convexity of y -> f(sqrt(y)) on the
/// nonnegative grid.
ConditionVerdict check_sqrt_convex(const FunctionSpec& f, GridSpec grid);

/// | f(x+y) - f(x) - f'(x) y - y^2 * Q |, Q the adaptive quadrature of
/// int_0^1 (1-z) f''(x + z y) dz to absolute tolerance 1e-10.
double taylor_remainder_gap(const FunctionSpec& f, double x, double y);

}  // namespace mgl
