#include "mgl/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mgl/quadrature.hpp"

namespace mgl {

namespace {

constexpr double kViolationTol = 1e-7;
constexpr double kKinkEps = 1e-6;
constexpr int kMaxGrid = 512;

// d2 evaluation shared by the grid checks: kink neighborhoods are skipped,
// failures and non-finite values are recorded, never silently dropped.
struct D2Probe {
  const FunctionSpec& f;
  ConditionVerdict& verdict;

  std::optional<double> operator()(double y) const {
    if (f.near_kink(y, kKinkEps)) {
      ++verdict.skipped;
      return std::nullopt;
    }
    double v;
    try {
      v = f.deriv2(y);
    } catch (const std::exception&) {
      verdict.undefined_points.push_back(y);
      return std::nullopt;
    }
    if (!std::isfinite(v)) {
      verdict.undefined_points.push_back(y);
      return std::nullopt;
    }
    return v;
  }
};

std::vector<double> make_grid(const GridSpec& g) {
  int n = std::min(std::max(g.n, 2), kMaxGrid);
  if (!(g.hi > g.lo)) throw std::invalid_argument("grid: hi must exceed lo");
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    xs[static_cast<std::size_t>(i)] = g.lo + (g.hi - g.lo) * i / (n - 1);
  return xs;
}

// Halton low-discrepancy point, base b
double halton(int index, int base) {
  double r = 0.0, f = 1.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

void note_violation(ConditionVerdict& v, double violation, std::vector<double> witness) {
  if (violation > v.worst_violation) {
    v.worst_violation = violation;
    v.witness = std::move(witness);
  }
}

}  // namespace

std::string to_string(ConditionTag t) {
  switch (t) {
    case ConditionTag::ConvexSecondDeriv: return "convex_second_derivative";
    case ConditionTag::SymmetricSumNondecreasing: return "symmetric_sum_nondecreasing";
    case ConditionTag::CrossCondition: return "cross_condition";
    case ConditionTag::SqrtConvex: return "sqrt_convex";
  }
  return "?";
}

ConditionVerdict check_convex_second_derivative(const FunctionSpec& f, GridSpec grid) {
  ConditionVerdict v;
  v.condition = ConditionTag::ConvexSecondDeriv;
  D2Probe probe{f, v};
  std::vector<double> xs = make_grid(grid);
  std::vector<std::optional<double>> d2(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) d2[i] = probe(xs[i]);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!d2[i]) continue;
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!d2[j]) continue;
      double mid = 0.5 * (xs[i] + xs[j]);
      auto dm = probe(mid);
      if (!dm) continue;
      ++v.sample_size;
      note_violation(v, *dm - 0.5 * (*d2[i] + *d2[j]), {xs[i], xs[j]});
    }
  }
  v.holds = v.worst_violation <= kViolationTol;
  return v;
}

ConditionVerdict check_symmetric_sum_nondecreasing(const FunctionSpec& f, double t_max) {
  if (!(t_max > 0.0))
    throw std::invalid_argument("check_symmetric_sum_nondecreasing: t_max must be > 0");
  ConditionVerdict v;
  v.condition = ConditionTag::SymmetricSumNondecreasing;
  D2Probe probe{f, v};
  double prev_t = 0.0;
  std::optional<double> prev;
  for (int k = 1; k <= kMaxGrid; ++k) {
    double t = t_max * k / kMaxGrid;
    auto a = probe(t);
    auto b = probe(-t);
    if (!a || !b) continue;
    double g = *a + *b;
    ++v.sample_size;
    if (prev) note_violation(v, *prev - g, {prev_t, t});
    prev = g;
    prev_t = t;
  }
  v.holds = v.worst_violation <= kViolationTol;
  return v;
}

ConditionVerdict check_cross_condition(const FunctionSpec& f, double B, double C, int samples) {
  if (!(B > 0.0) || !(C > 0.0))
    throw std::invalid_argument("check_cross_condition: B and C must be > 0");
  ConditionVerdict v;
  v.condition = ConditionTag::CrossCondition;
  v.range = {{-B, C}};
  D2Probe probe{f, v};
  const double alpha_lo = std::log(std::min(1e-4, 0.5 * B));
  const double alpha_hi = std::log(B * (1.0 - 1e-9));
  const double beta_lo = std::log(std::min(1e-4, 0.5 * C));
  const double beta_hi = std::log(C * (1.0 - 1e-9));
  auto inside = [&](double y) { return y > -B && y < C; };
  int attempts = 0;
  const int max_attempts = 40 * samples;
  for (int idx = 1; v.sample_size < samples && attempts < max_attempts; ++idx, ++attempts) {
    double alpha = std::exp(alpha_lo + halton(idx, 2) * (alpha_hi - alpha_lo));
    double beta = std::exp(beta_lo + halton(idx, 3) * (beta_hi - beta_lo));
    double gamma = halton(idx, 5) * (alpha + beta);
    if (!(gamma > 0.0)) continue;
    double p1 = -alpha, p2 = beta, p3 = -alpha + gamma, p4 = beta - gamma;
    if (!inside(p1) || !inside(p2) || !inside(p3) || !inside(p4)) continue;
    auto a = probe(p1), b = probe(p2), c = probe(p3), d = probe(p4);
    if (!a || !b || !c || !d) continue;
    ++v.sample_size;
    note_violation(v, (*c + *d) - (*a + *b), {alpha, beta, gamma});
  }
  v.holds = v.worst_violation <= kViolationTol;
  return v;
}

ConditionVerdict check_sqrt_convex(const FunctionSpec& f, GridSpec grid) {
  ConditionVerdict v;
  v.condition = ConditionTag::SqrtConvex;
  if (grid.lo < 0.0) grid.lo = 0.0;
  std::vector<double> us = make_grid(grid);
  // evenness of f itself
  for (double u : us) {
    double y = std::sqrt(u);
    double diff = std::abs(f.value(y) - f.value(-y));
    if (diff > 1e-9) note_violation(v, diff, {y, -y});
  }
  // midpoint convexity of u -> f(sqrt(u))
  std::vector<double> g(us.size());
  for (std::size_t i = 0; i < us.size(); ++i) g[i] = f.value(std::sqrt(us[i]));
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      double gm = f.value(std::sqrt(0.5 * (us[i] + us[j])));
      ++v.sample_size;
      note_violation(v, gm - 0.5 * (g[i] + g[j]), {us[i], us[j]});
    }
  v.holds = v.worst_violation <= kViolationTol;
  return v;
}

double taylor_remainder_gap(const FunctionSpec& f, double x, double y) {
  if (y == 0.0) return 0.0;
  auto integrand = [&](double z) { return (1.0 - z) * f.deriv2(x + z * y); };
  // split at declared kinks crossed by the segment
  std::vector<double> cuts{0.0, 1.0};
  for (double k : f.kinks) {
    double z = (k - x) / y;
    if (z > 0.0 && z < 1.0) cuts.push_back(z);
  }
  std::sort(cuts.begin(), cuts.end());
  double q = 0.0;
  const double margin = 1e-12;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    q += adaptive_simpson(integrand, cuts[i] + (i > 0 ? margin : 0.0),
                          cuts[i + 1] - (i + 2 < cuts.size() ? margin : 0.0),
                          1e-10 / static_cast<double>(cuts.size() - 1));
  return std::abs(f.value(x + y) - f.value(x) - f.deriv1(x) * y - y * y * q);
}

}  // namespace mgl
