#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "mgl/distribution.hpp"

namespace mgl {

enum class VarClass { Centered, Symmetric };
enum class BoundSide { Lower, Upper };
enum class ExtremumSide { Min, Max };

/// Which expression produced a sharp constant.
enum class Regime { PowerTwoRhoMinus2, One, PsiMin, PsiMax };

std::string to_string(VarClass c);
std::string to_string(Regime r);

struct PsiPoint {
  double rho;
  double z;
  double value;
};

/// psi(rho, z) = (2^{rho-1}(z + z^{rho-1}) + (1-z)^rho) / ((1+z)(1+z^{rho-1}))
/// for z in [0, 1], rho >= 1. At z = 0 the factor z^{rho-1} is 1 when
/// rho = 1 and 0 when rho > 1 (the rho = 1 specialization is 1/(1+z)).
double psi(double rho, double z);

/// Global extremum of psi(rho, .) over [0, 1], located by a 1001-point grid
/// scan plus golden-section refinement of the best bracket (psi is not
/// assumed unimodal). z accurate to 1e-10.
PsiPoint psi_extremum(double rho, ExtremumSide which);

struct BoundsReport {
  double rho;
  VarClass var_class;
  double lower;
  double upper;
  Regime lower_regime;
  Regime upper_regime;
  std::optional<double> psi_argopt;
};

/// Sharp constants for E|xi+eta|^rho against E|xi|^rho + E|eta|^rho.
/// Centered: rho in [1,2] -> (2^{rho-2}, max psi); [2,3] -> (min psi,
/// 2^{rho-2}); >= 3 -> (1, 2^{rho-2}). Symmetric: (0,2] -> (2^{rho-2}, 1);
/// >= 2 -> (1, 2^{rho-2}). Centered rho < 1 is only served with
/// allow_trivial = true, returning the trivial (0, 1).
BoundsReport sharp_bounds(double rho, VarClass var_class, bool allow_trivial = false);

/// Raised when a sharp constant cannot be matched within tolerance by the
/// ratio optimizer.
struct SharpnessNotAttained : std::runtime_error {
  SharpnessNotAttained(double target_, double best_)
      : std::runtime_error("sharpness not attained: best ratio " + std::to_string(best_) +
                           " vs sharp constant " + std::to_string(target_)),
        target(target_),
        best(best_) {}
  double target;
  double best;
};

/// A pair of laws whose moment ratio attains the requested sharp constant
/// within 1e-6. The 2^{rho-2} regimes return the i.i.d. Rademacher pair
/// analytically; the others are found by the ratio optimizer.
/// Throws SharpnessNotAttained when the optimizer cannot close the gap.
std::pair<FiniteDistribution, FiniteDistribution> equality_witness(double rho, VarClass var_class,
                                                                   BoundSide side,
                                                                   std::uint64_t seed = 12345);

}  // namespace mgl
