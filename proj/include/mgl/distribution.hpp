#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgl {

/// One support point of a finite-support law.
struct Atom {
  double x;  // value
  double p;  // probability, > 0
};

/// Finite-support probability distribution. Atoms are kept sorted ascending
/// by value; values closer than 1e-12 * max(1,|x|) are merged on
/// construction. Total mass must be 1 within 1e-12.
class FiniteDistribution {
 public:
  static FiniteDistribution from_atoms(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  double max_abs() const;

 private:
  explicit FiniteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  std::vector<Atom> atoms_;
};

// constructors for the standard laws
FiniteDistribution point_mass(double x = 0.0);
FiniteDistribution rademacher(double a = 1.0);

/// Centered two-point law on {-a, b}: P(-a) = b/(a+b), P(b) = a/(a+b).
FiniteDistribution make_two_point_centered(double a, double b);

/// Symmetric two-point law P(+-a) = 1/2.
FiniteDistribution make_two_point_symmetric(double a);

double mean(const FiniteDistribution& d);
double abs_moment(const FiniteDistribution& d, double rho);
double expectation(const FiniteDistribution& d, const std::function<double(double)>& f);

/// Law of the sum of two independent variables with the given laws.
FiniteDistribution convolve(const FiniteDistribution& d1, const FiniteDistribution& d2);

/// Half the summed absolute probability differences, matching atoms with the
/// same merge tolerance used by from_atoms.
double total_variation(const FiniteDistribution& d1, const FiniteDistribution& d2);

/// |mean| <= 1e-9 * (1 + max|x|).
bool is_centered(const FiniteDistribution& d);
bool is_symmetric(const FiniteDistribution& d, double tol = 1e-12);

/// Random centered law: n_atoms magnitudes drawn log-uniform in [1e-2, 1e2]
/// with exponential weights, then shifted to mean zero. Deterministic in seed.
FiniteDistribution random_centered(std::uint64_t seed, int n_atoms);

/// Random symmetric law: n_atoms positive atoms drawn then mirrored with
/// equal weights.
FiniteDistribution random_symmetric(std::uint64_t seed, int n_atoms);

}  // namespace mgl
