#include "mgl/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace mgl {

namespace {

constexpr double kMergeRelTol = 1e-12;
constexpr double kMassTol = 1e-12;

bool mergeable(double a, double b) {
  return std::abs(a - b) <= kMergeRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

FiniteDistribution FiniteDistribution::from_atoms(std::vector<Atom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("FiniteDistribution: no atoms");
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.x)) throw std::invalid_argument("FiniteDistribution: non-finite atom value");
    if (!(a.p > 0.0)) throw std::invalid_argument("FiniteDistribution: atom probability must be > 0");
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& l, const Atom& r) { return l.x < r.x; });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const Atom& a : atoms) {
    if (!merged.empty() && mergeable(merged.back().x, a.x)) {
      // weight-averaged position keeps the merged atom stable
      double p = merged.back().p + a.p;
      merged.back().x = (merged.back().x * merged.back().p + a.x * a.p) / p;
      merged.back().p = p;
    } else {
      merged.push_back(a);
    }
  }
  double mass = 0.0;
  for (const Atom& a : merged) mass += a.p;
  if (std::abs(mass - 1.0) > kMassTol)
    throw std::invalid_argument("FiniteDistribution: total mass " + std::to_string(mass) +
                                " differs from 1 beyond 1e-12");
  return FiniteDistribution(std::move(merged));
}

double FiniteDistribution::max_abs() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m = std::max(m, std::abs(a.x));
  return m;
}

FiniteDistribution point_mass(double x) { return FiniteDistribution::from_atoms({{x, 1.0}}); }

FiniteDistribution rademacher(double a) { return make_two_point_symmetric(a); }

FiniteDistribution make_two_point_centered(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("make_two_point_centered: a and b must be > 0");
  double s = a + b;
  return FiniteDistribution::from_atoms({{-a, b / s}, {b, a / s}});
}

FiniteDistribution make_two_point_symmetric(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("make_two_point_symmetric: a must be > 0");
  return FiniteDistribution::from_atoms({{-a, 0.5}, {a, 0.5}});
}

double mean(const FiniteDistribution& d) {
  double m = 0.0;
  for (const Atom& a : d.atoms()) m += a.x * a.p;
  return m;
}

double abs_moment(const FiniteDistribution& d, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("abs_moment: rho must be > 0");
  double m = 0.0;
  for (const Atom& a : d.atoms()) {
    if (a.x != 0.0) m += std::pow(std::abs(a.x), rho) * a.p;  // |0|^rho = 0
  }
  return m;
}

double expectation(const FiniteDistribution& d, const std::function<double(double)>& f) {
  double m = 0.0;
  for (const Atom& a : d.atoms()) m += f(a.x) * a.p;
  return m;
}

FiniteDistribution convolve(const FiniteDistribution& d1, const FiniteDistribution& d2) {
  std::vector<Atom> out;
  out.reserve(d1.size() * d2.size());
  for (const Atom& a : d1.atoms())
    for (const Atom& b : d2.atoms()) out.push_back({a.x + b.x, a.p * b.p});
  return FiniteDistribution::from_atoms(std::move(out));
}

double total_variation(const FiniteDistribution& d1, const FiniteDistribution& d2) {
  const auto& a = d1.atoms();
  const auto& b = d2.atoms();
  double tv = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && mergeable(a[i].x, b[j].x)) {
      tv += std::abs(a[i].p - b[j].p);
      ++i;
      ++j;
    } else if (j == b.size() || (i < a.size() && a[i].x < b[j].x)) {
      tv += a[i].p;
      ++i;
    } else {
      tv += b[j].p;
      ++j;
    }
  }
  return 0.5 * tv;
}

bool is_centered(const FiniteDistribution& d) {
  return std::abs(mean(d)) <= 1e-9 * (1.0 + d.max_abs());
}

bool is_symmetric(const FiniteDistribution& d, double tol) {
  const auto& a = d.atoms();
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Atom& lo = a[i];
    const Atom& hi = a[n - 1 - i];
    if (std::abs(lo.x + hi.x) > kMergeRelTol * std::max(1.0, std::abs(hi.x))) return false;
    if (std::abs(lo.p - hi.p) > tol) return false;
  }
  return true;
}

namespace {

// log-uniform magnitude in [1e-2, 1e2]
double draw_magnitude(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(std::log(1e-2), std::log(1e2));
  return std::exp(u(rng));
}

}  // namespace

FiniteDistribution random_centered(std::uint64_t seed, int n_atoms) {
  if (n_atoms < 2) throw std::invalid_argument("random_centered: n_atoms >= 2 required");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  std::exponential_distribution<double> ex(1.0);
  std::bernoulli_distribution coin(0.5);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Atom> atoms(static_cast<std::size_t>(n_atoms));
    double wsum = 0.0;
    for (Atom& a : atoms) {
      a.x = draw_magnitude(rng) * (coin(rng) ? 1.0 : -1.0);
      a.p = ex(rng) + 1e-3;
      wsum += a.p;
    }
    for (Atom& a : atoms) a.p /= wsum;
    // two shift passes squeeze the mean below 1e-12
    for (int pass = 0; pass < 2; ++pass) {
      double m = 0.0;
      for (const Atom& a : atoms) m += a.x * a.p;
      for (Atom& a : atoms) a.x -= m;
    }
    try {
      FiniteDistribution d = FiniteDistribution::from_atoms(atoms);
      if (d.size() >= 2 && std::abs(mean(d)) <= 1e-12 * (1.0 + d.max_abs())) return d;
    } catch (const std::invalid_argument&) {
      // merge collapsed the support; redraw
    }
  }
  throw std::runtime_error("random_centered: failed to generate a valid law");
}

FiniteDistribution random_symmetric(std::uint64_t seed, int n_atoms) {
  if (n_atoms < 2) throw std::invalid_argument("random_symmetric: n_atoms >= 2 required");
  std::mt19937_64 rng(seed * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL);
  std::exponential_distribution<double> ex(1.0);
  int half = std::max(1, n_atoms / 2);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Atom> atoms;
    atoms.reserve(2 * static_cast<std::size_t>(half));
    double wsum = 0.0;
    std::vector<double> xs, ws;
    for (int i = 0; i < half; ++i) {
      xs.push_back(draw_magnitude(rng));
      ws.push_back(ex(rng) + 1e-3);
      wsum += ws.back();
    }
    for (int i = 0; i < half; ++i) {
      double p = 0.5 * ws[static_cast<std::size_t>(i)] / wsum;
      atoms.push_back({xs[static_cast<std::size_t>(i)], p});
      atoms.push_back({-xs[static_cast<std::size_t>(i)], p});
    }
    try {
      FiniteDistribution d = FiniteDistribution::from_atoms(atoms);
      if (is_symmetric(d)) return d;
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::runtime_error("random_symmetric: failed to generate a valid law");
}

}  // namespace mgl
