#include "mgl/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "mgl/optim.hpp"

namespace mgl {

namespace {

constexpr double kMaxRho = 64.0;  // 2^{rho-2} overflow guard

double pow2(double e) { return std::pow(2.0, e); }

}  // namespace

std::string to_string(VarClass c) {
  return c == VarClass::Centered ? "centered" : "symmetric";
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::PowerTwoRhoMinus2: return "2^(rho-2)";
    case Regime::One: return "1";
    case Regime::PsiMin: return "psi_min";
    case Regime::PsiMax: return "psi_max";
  }
  return "?";
}

double psi(double rho, double z) {
  if (!(rho >= 1.0)) throw std::invalid_argument("psi: rho >= 1 required");
  if (!(z >= 0.0 && z <= 1.0)) throw std::invalid_argument("psi: z in [0,1] required");
  double zr;  // z^{rho-1}, with the z = 0 limit split at rho = 1
  if (z == 0.0)
    zr = (rho == 1.0) ? 1.0 : 0.0;
  else
    zr = std::pow(z, rho - 1.0);
  double num = pow2(rho - 1.0) * (z + zr) + std::pow(1.0 - z, rho);
  double den = (1.0 + z) * (1.0 + zr);
  return num / den;
}

PsiPoint psi_extremum(double rho, ExtremumSide which) {
  const int n = 1001;
  double sign = which == ExtremumSide::Max ? -1.0 : 1.0;
  auto obj = [&](double z) { return sign * psi(rho, z); };
  int best = 0;
  double best_v = obj(0.0);
  for (int i = 1; i < n; ++i) {
    double z = static_cast<double>(i) / (n - 1);
    double v = obj(z);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  double lo = static_cast<double>(best > 0 ? best - 1 : 0) / (n - 1);
  double hi = static_cast<double>(best < n - 1 ? best + 1 : n - 1) / (n - 1);
  auto [z, v] = golden_section_min(obj, lo, hi, 1e-11);
  // keep grid endpoints competitive: golden section may not beat an exact
  // boundary extremum
  if (obj(lo) < v) {
    z = lo;
    v = obj(lo);
  }
  if (obj(hi) < v) {
    z = hi;
    v = obj(hi);
  }
  return {rho, z, sign * v};
}

BoundsReport sharp_bounds(double rho, VarClass var_class, bool allow_trivial) {
  if (!(rho > 0.0)) throw std::invalid_argument("sharp_bounds: rho must be > 0");
  if (rho > kMaxRho) throw std::out_of_range("sharp_bounds: rho > 64 not supported");
  BoundsReport r{rho, var_class, 0.0, 0.0, Regime::One, Regime::One, std::nullopt};
  if (var_class == VarClass::Centered) {
    if (rho < 1.0) {
      if (!allow_trivial)
        throw std::invalid_argument(
            "sharp_bounds: centered class requires rho >= 1 (trivial bounds on request)");
      r.lower = 0.0;
      r.upper = 1.0;
      r.lower_regime = r.upper_regime = Regime::One;
      return r;
    }
    if (rho <= 2.0) {
      PsiPoint p = psi_extremum(rho, ExtremumSide::Max);
      r.lower = pow2(rho - 2.0);
      r.upper = p.value;
      r.lower_regime = Regime::PowerTwoRhoMinus2;
      r.upper_regime = Regime::PsiMax;
      r.psi_argopt = p.z;
    } else if (rho <= 3.0) {
      PsiPoint p = psi_extremum(rho, ExtremumSide::Min);
      r.lower = p.value;
      r.upper = pow2(rho - 2.0);
      r.lower_regime = Regime::PsiMin;
      r.upper_regime = Regime::PowerTwoRhoMinus2;
      r.psi_argopt = p.z;
    } else {
      r.lower = 1.0;
      r.upper = pow2(rho - 2.0);
      r.lower_regime = Regime::One;
      r.upper_regime = Regime::PowerTwoRhoMinus2;
    }
  } else {
    if (rho <= 2.0) {
      r.lower = pow2(rho - 2.0);
      r.upper = 1.0;
      r.lower_regime = Regime::PowerTwoRhoMinus2;
      r.upper_regime = Regime::One;
    } else {
      r.lower = 1.0;
      r.upper = pow2(rho - 2.0);
      r.lower_regime = Regime::One;
      r.upper_regime = Regime::PowerTwoRhoMinus2;
    }
  }
  return r;
}

// equality_witness is defined in verifier.cpp; it rides on ratio_extremize.

}  // namespace mgl
