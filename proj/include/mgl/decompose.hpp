#pragma once

#include <variant>
#include <vector>

#include "mgl/distribution.hpp"

namespace mgl {

struct ZeroMass {};

/// Parameters of a centered two-point law on {-a, b}.
struct TwoPointCentered {
  double a;
  double b;
};

/// Parameters of a symmetric two-point law on {-a, a}.
struct TwoPointSymmetric {
  double a;
};

using ComponentKind = std::variant<ZeroMass, TwoPointCentered, TwoPointSymmetric>;

struct Component {
  double weight;
  ComponentKind kind;
};

struct MixtureDecomposition {
  std::vector<Component> components;
};

FiniteDistribution component_distribution(const ComponentKind& kind);

/// Split a centered law into a ZeroMass component plus centered two-point
/// components, by greedy quantile pairing: negative and positive atoms are
/// consumed from smallest magnitude upward, each step emitting a component
/// whose first moments balance and exhausting one side.
/// Component count <= (#neg + #pos - 1) + (1 if an atom at 0).
MixtureDecomposition decompose_centered(const FiniteDistribution& d);

/// Split a symmetric law into TwoPointSymmetric(x) with weight 2*P(x) per
/// positive atom x, plus ZeroMass with weight P(0).
MixtureDecomposition decompose_symmetric(const FiniteDistribution& d);

FiniteDistribution recompose(const MixtureDecomposition& m);

}  // namespace mgl
