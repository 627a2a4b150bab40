#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace mgl {

struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
        achieved_error(achieved) {}
  double achieved_error;
};

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double fa, double m,
                      double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double fa,
                                   double b, double fb, double m, double fm, double whole,
                                   double tol, int depth, double* worst) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(f, a, fa, lm, flm, m, fm);
  double right = simpson(f, m, fm, rm, frm, b, fb);
  double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol || depth <= 0) {
    if (depth <= 0 && std::abs(err) > *worst) *worst = std::abs(err);
    return left + right + err;
  }
  return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, worst) +
         adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, worst);
}

}  // namespace detail

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
/// Throws QuadratureError when the recursion budget is exhausted before the
/// local error estimate falls under tol.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-10, int max_depth = 40) {
  if (a == b) return 0.0;
  double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
  double whole = detail::simpson(f, a, fa, m, fm, b, fb);
  double worst = 0.0;
  double v = detail::adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth, &worst);
  if (worst > tol)
    throw QuadratureError("adaptive_simpson: recursion budget exhausted", worst);
  return v;
}

/// Iterated 2-D adaptive Simpson over [ax,bx] x [ay,by].
inline double adaptive_simpson_2d(const std::function<double(double, double)>& f, double ax,
                                  double bx, double ay, double by, double tol = 1e-9,
                                  int max_depth = 24) {
  auto outer = [&](double x) {
    return adaptive_simpson([&](double y) { return f(x, y); }, ay, by,
                            tol / (2.0 * std::max(1.0, std::abs(bx - ax))), max_depth);
  };
  return adaptive_simpson(outer, ax, bx, 0.5 * tol, max_depth);
}

}  // namespace mgl
