#include "mgl/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace mgl::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json to_json(const FiniteDistribution& d) {
  json atoms = json::array();
  for (const Atom& a : d.atoms()) atoms.push_back({{"x", a.x}, {"p", a.p}});
  return {{"atoms", atoms}};
}

FiniteDistribution distribution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("atoms"))
    throw std::invalid_argument("distribution json: missing field 'atoms'");
  const json& arr = j["atoms"];
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument("distribution json: 'atoms' must be a non-empty array");
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& e = arr[i];
    if (!e.is_object() || !e.contains("x") || !e.contains("p"))
      throw std::invalid_argument("distribution json: atoms[" + std::to_string(i) +
                                  "] needs fields 'x' and 'p'");
    if (!e["x"].is_number() || !e["p"].is_number())
      throw std::invalid_argument("distribution json: atoms[" + std::to_string(i) +
                                  "]: 'x' and 'p' must be numbers");
    atoms.push_back({e["x"].get<double>(), e["p"].get<double>()});
  }
  return FiniteDistribution::from_atoms(std::move(atoms));
}

FiniteDistribution load_distribution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open distribution file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return distribution_from_json(j);
}

json to_json(const MixtureDecomposition& m) {
  json comps = json::array();
  for (const Component& c : m.components) {
    json e{{"weight", c.weight}};
    if (std::holds_alternative<ZeroMass>(c.kind)) {
      e["kind"] = "zero";
    } else if (const auto* tc = std::get_if<TwoPointCentered>(&c.kind)) {
      e["kind"] = "two_point_centered";
      e["a"] = tc->a;
      e["b"] = tc->b;
    } else {
      e["kind"] = "two_point_symmetric";
      e["a"] = std::get<TwoPointSymmetric>(c.kind).a;
    }
    comps.push_back(std::move(e));
  }
  return {{"components", comps}};
}

json to_json(const BoundsReport& r) {
  json j{{"rho", r.rho},
         {"class", to_string(r.var_class)},
         {"lower", r.lower},
         {"upper", r.upper},
         {"lower_regime", to_string(r.lower_regime)},
         {"upper_regime", to_string(r.upper_regime)}};
  if (r.psi_argopt) j["z_argopt"] = *r.psi_argopt;
  return j;
}

json to_json(const ConditionVerdict& v) {
  json j{{"condition", to_string(v.condition)},
         {"holds", v.holds},
         {"worst_violation", v.worst_violation},
         {"witness", v.witness},
         {"sample_size", v.sample_size},
         {"skipped", v.skipped},
         {"undefined_points", v.undefined_points}};
  if (v.range) j["range"] = {v.range->first, v.range->second};
  return j;
}

json to_json(const FuzzReport& r) {
  json j{{"rho", r.rho},
         {"class", to_string(r.var_class)},
         {"trials", r.trials},
         {"seed", r.seed},
         {"lower", r.lower},
         {"upper", r.upper},
         {"min_ratio", r.min_ratio},
         {"max_ratio", r.max_ratio},
         {"violations", json::array()}};
  if (r.argmin) {
    j["argmin"] = {{"ratio", r.argmin->ratio},
                   {"d1", to_json(r.argmin->d1)},
                   {"d2", to_json(r.argmin->d2)}};
  }
  if (r.argmax) {
    j["argmax"] = {{"ratio", r.argmax->ratio},
                   {"d1", to_json(r.argmax->d1)},
                   {"d2", to_json(r.argmax->d2)}};
  }
  for (const RatioViolation& v : r.violations)
    j["violations"].push_back(
        {{"ratio", v.ratio}, {"d1", to_json(v.d1)}, {"d2", to_json(v.d2)}});
  return j;
}

json to_json(const SharpnessResult& r) {
  return {{"ratio", r.ratio},
          {"target", r.target},
          {"attained", r.attained},
          {"d1", to_json(r.d1)},
          {"d2", to_json(r.d2)}};
}

}  // namespace mgl::io
