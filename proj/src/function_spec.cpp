#include "mgl/function_spec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>

namespace mgl {

double FunctionSpec::step(double y) const {
  if (fd_step) return fd_step(y);
  return 1e-4 * std::max(1.0, std::abs(y));
}

double FunctionSpec::deriv1(double y) const {
  if (d1) return d1(y);
  double h = step(y);
  return (f(y + h) - f(y - h)) / (2.0 * h);
}

double FunctionSpec::deriv2(double y) const {
  if (d2) return d2(y);
  double h = step(y);
  return (f(y + h) - 2.0 * f(y) + f(y - h)) / (h * h);
}

bool FunctionSpec::near_kink(double y, double eps) const {
  for (double k : kinks)
    if (std::abs(y - k) <= eps) return true;
  return false;
}

namespace {

double sgn(double y) { return y > 0.0 ? 1.0 : (y < 0.0 ? -1.0 : 0.0); }

double abs_pow_val(double y, double rho) {
  return y == 0.0 ? 0.0 : std::pow(std::abs(y), rho);
}

// f'' piecewise linear on [xs[k], xs[k+1]): d2(y) = c0[k] + c1[k]*(y - xs[k]).
// f' and f are the exact cumulative integrals, pinned to f(0) = f'(0) = 0.
class PiecewiseD2 {
 public:
  PiecewiseD2(std::vector<double> xs, std::vector<double> c0, std::vector<double> c1)
      : xs_(std::move(xs)), c0_(std::move(c0)), c1_(std::move(c1)) {
    std::size_t n = c0_.size();
    d1_at_.assign(n + 1, 0.0);
    f_at_.assign(n + 1, 0.0);
    // integrate outward from the breakpoint nearest 0; anchoring at an end
    // of the domain makes every value near 0 a difference of huge cumulative
    // sums and costs ~8 digits
    std::size_t a = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (std::abs(xs_[k]) < std::abs(xs_[a])) a = k;
    for (std::size_t k = a; k < n; ++k) {
      double h = xs_[k + 1] - xs_[k];
      d1_at_[k + 1] = d1_at_[k] + c0_[k] * h + 0.5 * c1_[k] * h * h;
      f_at_[k + 1] =
          f_at_[k] + d1_at_[k] * h + 0.5 * c0_[k] * h * h + c1_[k] * h * h * h / 6.0;
    }
    for (std::size_t k = a; k-- > 0;) {
      double h = xs_[k + 1] - xs_[k];
      d1_at_[k] = d1_at_[k + 1] - c0_[k] * h - 0.5 * c1_[k] * h * h;
      f_at_[k] =
          f_at_[k + 1] - d1_at_[k] * h - 0.5 * c0_[k] * h * h - c1_[k] * h * h * h / 6.0;
    }
    // affine correction so that f(0) = 0 and f'(0) = 0
    double f0 = f_raw(0.0), d10 = d1_raw(0.0);
    for (std::size_t k = 0; k <= n; ++k) {
      f_at_[k] -= f0 + d10 * xs_[k];
      d1_at_[k] -= d10;
    }
  }

  double lo() const { return xs_.front(); }
  double hi() const { return xs_.back(); }

  double d2(double y) const {
    std::size_t k = seg(y);
    return c0_[k] + c1_[k] * (y - xs_[k]);
  }
  double d1(double y) const { return d1_raw(y); }
  double f(double y) const { return f_raw(y); }

 private:
  std::size_t seg(double y) const {
    if (y < xs_.front() || y > xs_.back())
      throw std::domain_error("piecewise function evaluated outside [" +
                              std::to_string(xs_.front()) + ", " + std::to_string(xs_.back()) +
                              "] at y = " + std::to_string(y));
    auto it = std::upper_bound(xs_.begin(), xs_.end(), y);
    std::size_t k = static_cast<std::size_t>(it - xs_.begin());
    if (k > 0) --k;
    if (k >= c0_.size()) k = c0_.size() - 1;
    return k;
  }
  double d1_raw(double y) const {
    std::size_t k = seg(y);
    double t = y - xs_[k];
    return d1_at_[k] + c0_[k] * t + 0.5 * c1_[k] * t * t;
  }
  double f_raw(double y) const {
    std::size_t k = seg(y);
    double t = y - xs_[k];
    return f_at_[k] + d1_at_[k] * t + 0.5 * c0_[k] * t * t + c1_[k] * t * t * t / 6.0;
  }

  std::vector<double> xs_, c0_, c1_, d1_at_, f_at_;
};

FunctionSpec from_piecewise(std::shared_ptr<const PiecewiseD2> pw, std::string label,
                            std::vector<double> kinks = {}) {
  FunctionSpec s;
  s.label = std::move(label);
  s.f = [pw](double y) { return pw->f(y); };
  s.d1 = [pw](double y) { return pw->d1(y); };
  s.d2 = [pw](double y) { return pw->d2(y); };
  s.kinks = std::move(kinks);
  return s;
}

constexpr double kPiecewiseRange = 512.0;

}  // namespace

FunctionSpec abs_pow(double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("abs_pow: rho must be > 0");
  FunctionSpec s;
  s.label = "abs_pow:" + std::to_string(rho);
  s.f = [rho](double y) { return abs_pow_val(y, rho); };
  s.d1 = [rho](double y) {
    if (y == 0.0) return rho > 1.0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    return rho * sgn(y) * std::pow(std::abs(y), rho - 1.0);
  };
  s.d2 = [rho](double y) {
    if (y == 0.0) {
      if (rho > 2.0) return 0.0;
      if (rho == 2.0) return 2.0;
      return std::numeric_limits<double>::quiet_NaN();
    }
    return rho * (rho - 1.0) * std::pow(std::abs(y), rho - 2.0);
  };
  if (rho < 2.0) s.kinks = {0.0};
  return s;
}

FunctionSpec neg_abs_pow(double rho) {
  FunctionSpec s = abs_pow(rho);
  s.label = "neg_abs_pow:" + std::to_string(rho);
  auto f = s.f, d1 = s.d1, d2 = s.d2;
  s.f = [f](double y) { return -f(y); };
  s.d1 = [d1](double y) { return -d1(y); };
  s.d2 = [d2](double y) { return -d2(y); };
  return s;
}

FunctionSpec polynomial(std::vector<double> coeffs, std::string label) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  auto horner = [](const std::vector<double>& c, double y) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * y + *it;
    return v;
  };
  std::vector<double> dc, ddc;
  for (std::size_t i = 1; i < coeffs.size(); ++i) dc.push_back(coeffs[i] * static_cast<double>(i));
  for (std::size_t i = 1; i < dc.size(); ++i) ddc.push_back(dc[i] * static_cast<double>(i));
  if (dc.empty()) dc.push_back(0.0);
  if (ddc.empty()) ddc.push_back(0.0);
  FunctionSpec s;
  s.label = label.empty() ? "poly" : std::move(label);
  s.f = [coeffs, horner](double y) { return horner(coeffs, y); };
  s.d1 = [dc, horner](double y) { return horner(dc, y); };
  s.d2 = [ddc, horner](double y) { return horner(ddc, y); };
  return s;
}

FunctionSpec square() { return polynomial({0, 0, 1}, "square"); }
FunctionSpec cubic() { return polynomial({0, 0, 0, 1}, "cubic"); }
FunctionSpec quartic() { return polynomial({0, 0, 0, 0, 1}, "quartic"); }

FunctionSpec cosh_minus_one() {
  FunctionSpec s;
  s.label = "cosh";
  s.f = [](double y) { return std::cosh(y) - 1.0; };
  s.d1 = [](double y) { return std::sinh(y); };
  s.d2 = [](double y) { return std::cosh(y); };
  return s;
}

FunctionSpec floor_convex() {
  static const std::shared_ptr<const PiecewiseD2> pw = [] {
    // f''(y) = floor(y^2): constant k on sqrt(k) <= |y| < sqrt(k+1)
    const double R = kPiecewiseRange;
    const long kmax = static_cast<long>(R * R);
    std::vector<double> pos{0.0};
    for (long k = 1; k <= kmax; ++k) {
      double r = std::sqrt(static_cast<double>(k));
      if (r >= R) break;
      pos.push_back(r);
    }
    pos.push_back(R);
    std::vector<double> xs, c0, c1;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) xs.push_back(-*it);
    for (std::size_t i = 1; i < pos.size(); ++i) xs.push_back(pos[i]);
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      double mid = 0.5 * (xs[k] + xs[k + 1]);
      c0.push_back(std::floor(mid * mid));
      c1.push_back(0.0);
    }
    return std::make_shared<const PiecewiseD2>(std::move(xs), std::move(c0), std::move(c1));
  }();
  return from_piecewise(pw, "floor_convex");
}

FunctionSpec sawtooth_example() {
  static const std::shared_ptr<const PiecewiseD2> pw = [] {
    // f''(y) = -y for y < 1, floor(y) - (y - floor(y)) for y >= 1
    const double R = kPiecewiseRange;
    // d2 = -y on [-R, 1), split at integers to keep the local expansions
    // short (one long segment loses ~8 digits to cancellation near 0)
    std::vector<double> xs, c0, c1;
    for (long m = -static_cast<long>(R); m < 1; ++m) {
      xs.push_back(static_cast<double>(m));
      c0.push_back(static_cast<double>(-m));
      c1.push_back(-1.0);
    }
    xs.push_back(1.0);
    for (long m = 1; m < static_cast<long>(R); ++m) {
      // on [m, m+1): d2 = 2m - y
      c0.push_back(static_cast<double>(m));
      c1.push_back(-1.0);
      xs.push_back(static_cast<double>(m + 1));
    }
    return std::make_shared<const PiecewiseD2>(std::move(xs), std::move(c0), std::move(c1));
  }();
  return from_piecewise(pw, "sawtooth");
}

FunctionSpec from_table(std::vector<std::pair<double, double>> points, std::string label) {
  if (points.size() < 2) throw std::invalid_argument("from_table: need at least 2 points");
  std::sort(points.begin(), points.end());
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].first <= points[i - 1].first)
      throw std::invalid_argument("from_table: duplicate abscissa");
  FunctionSpec s;
  s.label = std::move(label);
  s.f = [pts = std::move(points)](double y) {
    auto it = std::lower_bound(pts.begin(), pts.end(), std::make_pair(y, -1e300));
    std::size_t k = static_cast<std::size_t>(it - pts.begin());
    if (k == 0) k = 1;
    if (k == pts.size()) k = pts.size() - 1;
    const auto& [x0, f0] = pts[k - 1];
    const auto& [x1, f1] = pts[k];
    return f0 + (f1 - f0) * (y - x0) / (x1 - x0);
  };
  return s;
}

std::vector<FunctionSpec> builtin_library() {
  return {square(),       cubic(),          quartic(),        cosh_minus_one(),
          abs_pow(1.2),   abs_pow(1.5),     abs_pow(2.0),     abs_pow(2.5),
          abs_pow(3.0),   abs_pow(3.5),     abs_pow(4.0),     neg_abs_pow(1.2),
          neg_abs_pow(1.5), floor_convex(), sawtooth_example()};
}

std::vector<FunctionSpec> builtin_smooth() {
  return {square(), cubic(), quartic(), cosh_minus_one()};
}

FunctionSpec lookup_builtin(const std::string& name) {
  std::string base = name;
  std::string param;
  if (auto pos = name.find(':'); pos != std::string::npos) {
    base = name.substr(0, pos);
    param = name.substr(pos + 1);
  }
  auto need_param = [&]() -> double {
    if (param.empty()) throw std::invalid_argument("function '" + base + "' needs a parameter");
    return std::stod(param);
  };
  if (base == "abs_pow") return abs_pow(need_param());
  if (base == "neg_abs_pow") return neg_abs_pow(need_param());
  if (base == "square") return square();
  if (base == "cubic") return cubic();
  if (base == "quartic") return quartic();
  if (base == "cosh") return cosh_minus_one();
  if (base == "floor_convex") return floor_convex();
  if (base == "sawtooth") return sawtooth_example();
  if (base == "poly") {
    std::vector<double> coeffs;
    std::size_t start = 0;
    while (start <= param.size() && !param.empty()) {
      auto comma = param.find(',', start);
      coeffs.push_back(std::stod(param.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return polynomial(std::move(coeffs));
  }
  throw std::invalid_argument("unknown function '" + name + "'");
}

double derivative_spot_check(const FunctionSpec& spec, double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xd6e8feb86659fd93ULL);
  std::uniform_real_distribution<double> u(lo, hi);
  double worst = 0.0;
  int checked = 0;
  while (checked < 32) {
    double y = u(rng);
    if (spec.near_kink(y, 1e-3)) continue;
    ++checked;
    double h = spec.step(y);
    if (spec.d1) {
      double fd = (spec.f(y + h) - spec.f(y - h)) / (2.0 * h);
      double an = spec.d1(y);
      worst = std::max(worst, std::abs(an - fd) / std::max(1.0, std::abs(an)));
    }
    if (spec.d2) {
      double fd = (spec.f(y + h) - 2.0 * spec.f(y) + spec.f(y - h)) / (h * h);
      double an = spec.d2(y);
      worst = std::max(worst, std::abs(an - fd) / std::max(1.0, std::abs(an)));
    }
  }
  return worst;
}

}  // namespace mgl
