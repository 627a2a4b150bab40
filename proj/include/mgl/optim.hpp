#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace mgl {

/// Golden-section minimization of f on [a, b] to |x - x*| <= xtol.
/// Assumes a single minimum inside the bracket.
inline std::pair<double, double> golden_section_min(const std::function<double(double)>& f,
                                                    double a, double b, double xtol = 1e-10) {
  static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

struct NelderMeadResult {
  std::vector<double> x;
  double fmin = 0.0;
  int evaluations = 0;
};

/// Standard Nelder-Mead simplex minimization (reflection 1, expansion 2,
/// contraction 0.5, shrink 0.5) with a size-based stopping rule.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    std::vector<double> x0, double step = 1.0,
                                    double ftol = 1e-14, double xtol = 1e-12,
                                    int max_iter = 4000) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
  std::vector<double> fv(n + 1);
  int evals = 0;
  for (std::size_t i = 0; i <= n; ++i) fv[i] = f(pts[i]), ++evals;

  auto order = [&] {
    std::vector<std::size_t> idx(n + 1);
    for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> p2(n + 1);
    std::vector<double> f2(n + 1);
    for (std::size_t i = 0; i <= n; ++i) p2[i] = pts[idx[i]], f2[i] = fv[idx[i]];
    pts.swap(p2);
    fv.swap(f2);
  };

  for (int it = 0; it < max_iter; ++it) {
    order();
    double fspread = std::abs(fv[n] - fv[0]);
    double xspread = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      xspread = std::max(xspread, std::abs(pts[n][i] - pts[0][i]));
    if (fspread <= ftol * (1.0 + std::abs(fv[0])) && xspread <= xtol) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t k = 0; k < n; ++k) p[k] = centroid[k] + t * (centroid[k] - pts[n][k]);
      return p;
    };

    std::vector<double> xr = blend(1.0);
    double fr = f(xr);
    ++evals;
    if (fr < fv[0]) {
      std::vector<double> xe = blend(2.0);
      double fe = f(xe);
      ++evals;
      if (fe < fr) {
        pts[n] = xe;
        fv[n] = fe;
      } else {
        pts[n] = xr;
        fv[n] = fr;
      }
    } else if (fr < fv[n - 1]) {
      pts[n] = xr;
      fv[n] = fr;
    } else {
      std::vector<double> xc = blend(fr < fv[n] ? 0.5 : -0.5);
      double fc = f(xc);
      ++evals;
      if (fc < std::min(fr, fv[n])) {
        pts[n] = xc;
        fv[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[0][k] + 0.5 * (pts[i][k] - pts[0][k]);
          fv[i] = f(pts[i]);
          ++evals;
        }
      }
    }
  }
  order();
  return {pts[0], fv[0], evals};
}

}  // namespace mgl
