#include "mgl/verifier.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "mgl/optim.hpp"
#include "mgl/quadrature.hpp"

namespace mgl {

namespace {

constexpr double kEnvelopeTol = 1e-9;
constexpr double kSharpnessTol = 1e-6;

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double apow(double x, double rho) { return x == 0.0 ? 0.0 : std::pow(std::abs(x), rho); }

// exact 4-outcome enumeration for a pair of centered two-point laws
double ratio_centered_pair(double rho, double a, double b, double c, double d) {
  double pa = b / (a + b), pb = a / (a + b), pc = d / (c + d), pd = c / (c + d);
  double num = pa * pc * apow(-a - c, rho) + pa * pd * apow(-a + d, rho) +
               pb * pc * apow(b - c, rho) + pb * pd * apow(b + d, rho);
  double den = pa * apow(a, rho) + pb * apow(b, rho) + pc * apow(c, rho) + pd * apow(d, rho);
  return num / den;
}

double ratio_symmetric_pair(double rho, double a, double b) {
  double num = 0.5 * (apow(a + b, rho) + apow(a - b, rho));
  double den = apow(a, rho) + apow(b, rho);
  return num / den;
}

}  // namespace

GapResult gap(const FunctionSpec& f, const FiniteDistribution& d1, const FiniteDistribution& d2) {
  FiniteDistribution sum = convolve(d1, d2);
  double g = expectation(sum, f.f) - expectation(d1, f.f) - expectation(d2, f.f);
  return {g, std::nullopt};
}

std::optional<double> moment_ratio(double rho, const FiniteDistribution& d1,
                                   const FiniteDistribution& d2) {
  double den = abs_moment(d1, rho) + abs_moment(d2, rho);
  if (den == 0.0) return std::nullopt;
  return abs_moment(convolve(d1, d2), rho) / den;
}

PhiFour phi_four(double a, double b, double c, double d, const FunctionSpec& f) {
  if (a < 0.0 || b < 0.0 || c < 0.0 || d < 0.0)
    throw std::invalid_argument("phi_four: arguments must be >= 0");
  const double r = a, s = b, t = c, u = d;
  auto F = f.f;
  double v = s * u * (F(-r - t) - F(-r) - F(-t)) + s * t * (F(-r + u) - F(-r) - F(u)) +
             r * u * (F(s - t) - F(s) - F(-t)) + r * t * (F(s + u) - F(s) - F(u));
  return {a, b, c, d, v};
}

PhiTwo phi_two(double a, double b, const FunctionSpec& f) {
  if (a < 0.0 || b < 0.0) throw std::invalid_argument("phi_two: arguments must be >= 0");
  const double r = a, s = b;
  auto F = f.f;
  double v = (F(-r - s) - F(-r) - F(-s)) + (F(-r + s) - F(-r) - F(s)) +
             (F(r - s) - F(r) - F(-s)) + (F(r + s) - F(r) - F(s));
  return {a, b, v};
}

double mixed_derivative_identity_check(double a, double b, double c, double d,
                                       const FunctionSpec& f) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0 && d > 0.0))
    throw std::invalid_argument("mixed_derivative_identity_check: arguments must be > 0");
  const double tol = 2e-7;
  // the integrand splits into four terms, each constant in two of the four
  // directions, so each reduces to a 2-D quadrature times a box area
  double t1 = b * d * adaptive_simpson_2d([&](double r, double t) { return f.deriv2(-r - t); },
                                          0.0, a, 0.0, c, tol);
  double t2 = a * c * adaptive_simpson_2d([&](double s, double u) { return f.deriv2(s + u); },
                                          0.0, b, 0.0, d, tol);
  double t3 = -b * c * adaptive_simpson_2d([&](double r, double u) { return f.deriv2(-r + u); },
                                           0.0, a, 0.0, d, tol);
  double t4 = -a * d * adaptive_simpson_2d([&](double s, double t) { return f.deriv2(s - t); },
                                           0.0, b, 0.0, c, tol);
  return std::abs(t1 + t2 + t3 + t4 - phi_four(a, b, c, d, f).value);
}

FuzzReport fuzz_inequality(double rho, VarClass var_class, int trials, std::uint64_t seed) {
  BoundsReport bounds = sharp_bounds(rho, var_class);
  FuzzReport rep;
  rep.rho = rho;
  rep.var_class = var_class;
  rep.trials = trials;
  rep.seed = seed;
  rep.lower = bounds.lower;
  rep.upper = bounds.upper;
  rep.min_ratio = 1e300;
  rep.max_ratio = -1e300;

  std::uint64_t state = seed ^ 0x6a09e667f3bcc909ULL;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logmag(std::log(1e-2), std::log(1e2));
  std::uniform_int_distribution<int> natoms(3, 12);

  for (int t = 0; t < trials; ++t) {
    bool two_point = (t % 2) == 0;  // 50/50 mix
    FiniteDistribution d1 = point_mass(), d2 = point_mass();
    if (var_class == VarClass::Centered) {
      if (two_point) {
        d1 = make_two_point_centered(std::exp(logmag(rng)), std::exp(logmag(rng)));
        d2 = make_two_point_centered(std::exp(logmag(rng)), std::exp(logmag(rng)));
      } else {
        d1 = random_centered(splitmix(state), natoms(rng));
        d2 = random_centered(splitmix(state), natoms(rng));
      }
    } else {
      if (two_point) {
        d1 = make_two_point_symmetric(std::exp(logmag(rng)));
        d2 = make_two_point_symmetric(std::exp(logmag(rng)));
      } else {
        d1 = random_symmetric(splitmix(state), natoms(rng));
        d2 = random_symmetric(splitmix(state), natoms(rng));
      }
    }
    auto ratio = moment_ratio(rho, d1, d2);
    if (!ratio) continue;
    if (*ratio < rep.min_ratio) {
      rep.min_ratio = *ratio;
      rep.argmin = RatioViolation{*ratio, d1, d2};
    }
    if (*ratio > rep.max_ratio) {
      rep.max_ratio = *ratio;
      rep.argmax = RatioViolation{*ratio, d1, d2};
    }
    if (*ratio < bounds.lower - kEnvelopeTol || *ratio > bounds.upper + kEnvelopeTol)
      rep.violations.push_back({*ratio, d1, d2});
  }
  return rep;
}

SharpnessResult ratio_extremize(double rho, VarClass var_class, ExtremumSide which,
                                std::uint64_t seed, int restarts) {
  BoundsReport bounds = sharp_bounds(rho, var_class);
  double target = which == ExtremumSide::Min ? bounds.lower : bounds.upper;
  double sign = which == ExtremumSide::Min ? 1.0 : -1.0;
  bool centered = var_class == VarClass::Centered;
  std::size_t dim = centered ? 4 : 2;

  auto objective = [&](const std::vector<double>& x) {
    if (centered)
      return sign * ratio_centered_pair(rho, std::exp(x[0]), std::exp(x[1]), std::exp(x[2]),
                                        std::exp(x[3]));
    return sign * ratio_symmetric_pair(rho, std::exp(x[0]), std::exp(x[1]));
  };

  std::vector<std::vector<double>> seeds;
  seeds.push_back(std::vector<double>(dim, 0.0));  // i.i.d. Rademacher
  if (centered) {
    // the 1-D psi argopt maps to the i.i.d. pair (1, z*)
    double z = psi_extremum(rho, which).z;
    double lz = std::log(std::max(z, 1e-12));
    seeds.push_back({0.0, lz, 0.0, lz});
  } else {
    seeds.push_back({0.0, -60.0});  // one variable nearly degenerate
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-9.0, 9.0);
  while (static_cast<int>(seeds.size()) < restarts) {
    std::vector<double> x(dim);
    for (double& xi : x) xi = u(rng);
    seeds.push_back(std::move(x));
  }

  std::vector<double> best_x(dim, 0.0);
  double best = 1e300;
  for (const auto& s : seeds) {
    NelderMeadResult r = nelder_mead(objective, s, 0.5, 1e-15, 1e-13, 6000);
    if (r.fmin < best) {
      best = r.fmin;
      best_x = r.x;
    }
  }
  for (double step : {0.05, 0.005}) {
    NelderMeadResult r = nelder_mead(objective, best_x, step, 1e-16, 1e-14, 6000);
    if (r.fmin < best) {
      best = r.fmin;
      best_x = r.x;
    }
  }

  double ratio = sign * best;
  SharpnessResult out{ratio, target, std::abs(ratio - target) <= kSharpnessTol, point_mass(),
                      point_mass()};
  if (centered) {
    out.d1 = make_two_point_centered(std::exp(best_x[0]), std::exp(best_x[1]));
    out.d2 = make_two_point_centered(std::exp(best_x[2]), std::exp(best_x[3]));
  } else {
    out.d1 = make_two_point_symmetric(std::exp(best_x[0]));
    out.d2 = make_two_point_symmetric(std::exp(best_x[1]));
  }
  return out;
}

HCheckResult h_nonneg_check(double rho, double z_max) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("h_nonneg_check: rho in (0,1)");
  if (!(z_max > 1.0)) throw std::invalid_argument("h_nonneg_check: z_max > 1 required");
  auto h = [rho](double z) {
    return std::pow(1.0 + z, rho) + apow(z - 1.0, rho) - std::pow(2.0, rho - 1.0) -
           std::pow(2.0, rho - 1.0) * std::pow(z, rho);
  };
  const int n = 10000;
  HCheckResult res{0.0, h(1.0), 0.0};
  double prev = 0.0;
  for (int i = 0; i < n; ++i) {
    double z = 1.0 + (z_max - 1.0) * i / (n - 1);
    double v = h(z);
    if (-v > res.worst_violation) res.worst_violation = -v;
    if (i > 0 && prev - v > res.worst_decrease) res.worst_decrease = prev - v;
    prev = v;
  }
  return res;
}

std::pair<FiniteDistribution, FiniteDistribution> equality_witness(double rho, VarClass var_class,
                                                                   BoundSide side,
                                                                   std::uint64_t seed) {
  BoundsReport bounds = sharp_bounds(rho, var_class);
  double constant = side == BoundSide::Lower ? bounds.lower : bounds.upper;
  // every 2^{rho-2} regime (which includes the whole rho = 2 boundary) is
  // attained by the i.i.d. symmetric two-point pair
  if (std::abs(constant - std::pow(2.0, rho - 2.0)) <= 1e-12)
    return {rademacher(), rademacher()};
  SharpnessResult r = ratio_extremize(
      rho, var_class, side == BoundSide::Lower ? ExtremumSide::Min : ExtremumSide::Max, seed);
  if (!r.attained) throw SharpnessNotAttained(r.target, r.ratio);
  return {r.d1, r.d2};
}

}  // namespace mgl
