#include "mgl/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mgl {

namespace {

constexpr double kZeroAtomTol = 1e-12;
constexpr double kResidualMassTol = 1e-9;

bool is_zero_atom(double x, double scale) {
  return std::abs(x) <= kZeroAtomTol * std::max(1.0, scale);
}

}  // namespace

FiniteDistribution component_distribution(const ComponentKind& kind) {
  if (std::holds_alternative<ZeroMass>(kind)) return point_mass(0.0);
  if (const auto* c = std::get_if<TwoPointCentered>(&kind))
    return make_two_point_centered(c->a, c->b);
  const auto& s = std::get<TwoPointSymmetric>(kind);
  return make_two_point_symmetric(s.a);
}

MixtureDecomposition decompose_centered(const FiniteDistribution& d) {
  double m = mean(d);
  double scale = d.max_abs();
  if (std::abs(m) > 1e-9 * (1.0 + scale))
    throw std::invalid_argument("decompose_centered: input not centered, mean = " +
                                std::to_string(m));

  MixtureDecomposition out;
  // negative atoms by ascending magnitude; positive likewise
  struct Slot {
    double mag;
    double mass;
  };
  std::vector<Slot> neg, pos;
  double zero_mass = 0.0;
  for (const Atom& a : d.atoms()) {
    if (is_zero_atom(a.x, scale))
      zero_mass += a.p;
    else if (a.x < 0.0)
      neg.push_back({-a.x, a.p});
    else
      pos.push_back({a.x, a.p});
  }
  std::sort(neg.begin(), neg.end(), [](const Slot& l, const Slot& r) { return l.mag < r.mag; });
  std::sort(pos.begin(), pos.end(), [](const Slot& l, const Slot& r) { return l.mag < r.mag; });

  if (zero_mass > 0.0) out.components.push_back({zero_mass, ZeroMass{}});

  std::size_t i = 0, j = 0;
  while (i < neg.size() && j < pos.size()) {
    double a = neg[i].mag;
    double b = pos[j].mag;
    // component puts mass b/(a+b) at -a and a/(a+b) at b
    double w_from_neg = neg[i].mass * (a + b) / b;
    double w_from_pos = pos[j].mass * (a + b) / a;
    double w = std::min(w_from_neg, w_from_pos);
    out.components.push_back({w, TwoPointCentered{a, b}});
    if (w_from_neg <= w_from_pos) {
      pos[j].mass -= w * a / (a + b);
      neg[i].mass = 0.0;
      ++i;
      if (w_from_neg == w_from_pos) pos[j].mass = 0.0;
    } else {
      neg[i].mass -= w * b / (a + b);
      pos[j].mass = 0.0;
      ++j;
    }
    // rounding can leave dust or drive a slot slightly negative
    if (j < pos.size() && pos[j].mass <= 0.0) ++j;
    if (i < neg.size() && neg[i].mass <= 0.0) ++i;
  }
  // residual mass is float dust bounded by the centering tolerance
  double residual = 0.0;
  for (; i < neg.size(); ++i) residual += std::abs(neg[i].mass);
  for (; j < pos.size(); ++j) residual += std::abs(pos[j].mass);
  if (residual > kResidualMassTol)
    throw std::runtime_error("decompose_centered: unpaired mass " + std::to_string(residual));

  if (out.components.empty())
    throw std::invalid_argument("decompose_centered: empty decomposition");

  double wsum = 0.0;
  for (const Component& c : out.components) wsum += c.weight;
  for (Component& c : out.components) c.weight /= wsum;
  return out;
}

MixtureDecomposition decompose_symmetric(const FiniteDistribution& d) {
  double scale = d.max_abs();
  const auto& atoms = d.atoms();
  std::size_t n = atoms.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Atom& lo = atoms[k];
    const Atom& hi = atoms[n - 1 - k];
    if (std::abs(lo.x + hi.x) > 1e-12 * std::max(1.0, std::abs(hi.x)) ||
        std::abs(lo.p - hi.p) > 1e-12)
      throw std::invalid_argument("decompose_symmetric: input not symmetric at atom x = " +
                                  std::to_string(lo.x));
  }
  MixtureDecomposition out;
  for (const Atom& a : atoms) {
    if (is_zero_atom(a.x, scale))
      out.components.push_back({a.p, ZeroMass{}});
    else if (a.x > 0.0)
      out.components.push_back({2.0 * a.p, TwoPointSymmetric{a.x}});
  }
  // order: ZeroMass (if any) first, then ascending atom
  std::stable_sort(out.components.begin(), out.components.end(),
                   [](const Component& l, const Component& r) {
                     bool lz = std::holds_alternative<ZeroMass>(l.kind);
                     bool rz = std::holds_alternative<ZeroMass>(r.kind);
                     if (lz != rz) return lz;
                     if (lz) return false;
                     return std::get<TwoPointSymmetric>(l.kind).a <
                            std::get<TwoPointSymmetric>(r.kind).a;
                   });
  return out;
}

FiniteDistribution recompose(const MixtureDecomposition& m) {
  if (m.components.empty()) throw std::invalid_argument("recompose: empty mixture");
  std::vector<Atom> atoms;
  for (const Component& c : m.components) {
    if (!(c.weight > 0.0)) throw std::invalid_argument("recompose: nonpositive weight");
    FiniteDistribution part = component_distribution(c.kind);
    for (const Atom& a : part.atoms()) atoms.push_back({a.x, a.p * c.weight});
  }
  return FiniteDistribution::from_atoms(std::move(atoms));
}

}  // namespace mgl
