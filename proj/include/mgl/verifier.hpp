#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mgl/constants.hpp"
#include "mgl/decompose.hpp"
#include "mgl/distribution.hpp"
#include "mgl/function_spec.hpp"

namespace mgl {

struct GapResult {
  double gap;  // E f(xi+eta) - E f(xi) - E f(eta), by exact convolution sums
  std::optional<double> ratio;  // E|xi+eta|^rho / (E|xi|^rho + E|eta|^rho)
};

GapResult gap(const FunctionSpec& f, const FiniteDistribution& d1, const FiniteDistribution& d2);

/// Moment ratio at exponent rho; nullopt when both laws are a.s. zero.
std::optional<double> moment_ratio(double rho, const FiniteDistribution& d1,
                                   const FiniteDistribution& d2);

struct PhiFour {
  double a, b, c, d;
  double value;  // = (a+b)(c+d) * gap for the centered two-point pair
};

struct PhiTwo {
  double a, b;
  double value;  // = 4 * gap for the symmetric two-point pair
};

/// phi(r,s,t,u) with (r,s,t,u) = (a,b,c,d):
///   su(f(-r-t)-f(-r)-f(-t)) + st(f(-r+u)-f(-r)-f(u))
/// + ru(f(s-t)-f(s)-f(-t))   + rt(f(s+u)-f(s)-f(u)).
/// Zero arguments are allowed; phi vanishes when any of them is 0.
PhiFour phi_four(double a, double b, double c, double d, const FunctionSpec& f);

/// phi(r,s) with (r,s) = (a,b):
///   (f(-r-s)-f(-r)-f(-s)) + (f(-r+s)-f(-r)-f(s))
/// + (f(r-s)-f(r)-f(-s))   + (f(r+s)-f(r)-f(s)).
PhiTwo phi_two(double a, double b, const FunctionSpec& f);

/// | phi(a,b,c,d) - integral over [0,a]x[0,b]x[0,c]x[0,d] of
/// f''(-r-t)+f''(s+u)-f''(-r+u)-f''(s-t) |, the integral taken by adaptive
/// quadrature. Expected <= 1e-6 for smooth f; throws QuadratureError when
/// the budget is exhausted first.
double mixed_derivative_identity_check(double a, double b, double c, double d,
                                       const FunctionSpec& f);

struct RatioViolation {
  double ratio;
  FiniteDistribution d1;
  FiniteDistribution d2;
};

struct FuzzReport {
  double rho;
  VarClass var_class;
  int trials = 0;
  std::uint64_t seed = 0;
  double lower = 0.0, upper = 0.0;  // the envelope under test
  double min_ratio = 0.0, max_ratio = 0.0;
  std::optional<RatioViolation> argmin, argmax;
  std::vector<RatioViolation> violations;
};

/// Random pairs (half two-point, half multi-atom with <= 12 atoms) checked
/// against the sharp envelope at tolerance 1e-9. Violations are report
/// content, not errors.
FuzzReport fuzz_inequality(double rho, VarClass var_class, int trials, std::uint64_t seed);

struct SharpnessResult {
  double ratio;        // best ratio found
  double target;       // the sharp constant
  bool attained;       // |ratio - target| <= 1e-6
  FiniteDistribution d1, d2;
};

/// Nelder-Mead over two-point families in log parameters, 20 restarts
/// (including the 1-D psi argopt seed and the Rademacher seed).
SharpnessResult ratio_extremize(double rho, VarClass var_class, ExtremumSide which,
                                std::uint64_t seed = 12345, int restarts = 20);

struct HCheckResult {
  double worst_violation;  // max(0, -min h) over the grid
  double h_at_one;
  double worst_decrease;   // max adjacent decrease (monotonicity probe)
};

/// h(z) = (1+z)^rho + (z-1)^rho - 2^{rho-1} - 2^{rho-1} z^rho on a 10^4
/// point grid of [1, z_max]; 0 < rho < 1.
HCheckResult h_nonneg_check(double rho, double z_max);

}  // namespace mgl
