#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mgl/conditions.hpp"
#include "mgl/constants.hpp"
#include "mgl/decompose.hpp"
#include "mgl/json_io.hpp"
#include "mgl/verifier.hpp"

namespace py = pybind11;
using namespace mgl;

namespace {

VarClass class_from_string(const std::string& s) {
  if (s == "centered") return VarClass::Centered;
  if (s == "symmetric") return VarClass::Symmetric;
  throw std::invalid_argument("var_class must be 'centered' or 'symmetric'");
}

ExtremumSide side_from_string(const std::string& s) {
  if (s == "min") return ExtremumSide::Min;
  if (s == "max") return ExtremumSide::Max;
  throw std::invalid_argument("side must be 'min' or 'max'");
}

py::list components_as_list(const MixtureDecomposition& m) {
  py::list out;
  for (const Component& c : m.components) {
    py::dict e;
    e["weight"] = c.weight;
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
    out.append(std::move(e));
  }
  return out;
}

MixtureDecomposition components_from_list(const py::list& comps) {
  MixtureDecomposition m;
  for (const auto& item : comps) {
    py::dict e = item.cast<py::dict>();
    double w = e["weight"].cast<double>();
    std::string kind = e["kind"].cast<std::string>();
    if (kind == "zero")
      m.components.push_back({w, ZeroMass{}});
    else if (kind == "two_point_centered")
      m.components.push_back(
          {w, TwoPointCentered{e["a"].cast<double>(), e["b"].cast<double>()}});
    else if (kind == "two_point_symmetric")
      m.components.push_back({w, TwoPointSymmetric{e["a"].cast<double>()}});
    else
      throw std::invalid_argument("unknown component kind: " + kind);
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_mgl, mod) {
  mod.doc() = "moment inequality toolkit for sums of independent variables";

  py::register_exception<SharpnessNotAttained>(mod, "SharpnessNotAttained");

  py::class_<Atom>(mod, "Atom")
      .def(py::init<double, double>(), py::arg("x"), py::arg("p"))
      .def_readwrite("x", &Atom::x)
      .def_readwrite("p", &Atom::p)
      .def("__repr__", [](const Atom& a) {
        return "Atom(x=" + io::format_double(a.x) + ", p=" + io::format_double(a.p) + ")";
      });

  py::class_<FiniteDistribution>(mod, "FiniteDistribution")
      .def_static(
          "from_atoms",
          [](const std::vector<std::pair<double, double>>& pts) {
            std::vector<Atom> atoms;
            for (auto [x, p] : pts) atoms.push_back({x, p});
            return FiniteDistribution::from_atoms(std::move(atoms));
          },
          py::arg("atoms"), "Build from a list of (x, p) pairs.")
      .def_property_readonly("atoms", &FiniteDistribution::atoms)
      .def("__len__", &FiniteDistribution::size)
      .def("__repr__", [](const FiniteDistribution& d) {
        return io::to_json(d).dump();
      });

  mod.def("point_mass", &point_mass, py::arg("x") = 0.0);
  mod.def("rademacher", &rademacher, py::arg("a") = 1.0);
  mod.def("make_two_point_centered", &make_two_point_centered, py::arg("a"), py::arg("b"));
  mod.def("make_two_point_symmetric", &make_two_point_symmetric, py::arg("a"));
  mod.def("mean", &mean);
  mod.def("abs_moment", &abs_moment, py::arg("d"), py::arg("rho"));
  mod.def("convolve", &convolve);
  mod.def("total_variation", &total_variation);
  mod.def("random_centered", &random_centered, py::arg("seed"), py::arg("n_atoms"));
  mod.def("random_symmetric", &random_symmetric, py::arg("seed"), py::arg("n_atoms"));

  mod.def("psi", &psi, py::arg("rho"), py::arg("z"));
  mod.def(
      "psi_extremum",
      [](double rho, const std::string& side) {
        PsiPoint p = psi_extremum(rho, side_from_string(side));
        return py::make_tuple(p.z, p.value);
      },
      py::arg("rho"), py::arg("side"), "Returns (z, psi(rho, z)) at the extremum.");
  mod.def(
      "sharp_bounds",
      [](double rho, const std::string& cls, bool allow_trivial) {
        BoundsReport r = sharp_bounds(rho, class_from_string(cls), allow_trivial);
        py::dict d;
        d["rho"] = r.rho;
        d["var_class"] = to_string(r.var_class);
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["lower_regime"] = to_string(r.lower_regime);
        d["upper_regime"] = to_string(r.upper_regime);
        if (r.psi_argopt) d["z_argopt"] = *r.psi_argopt;
        return d;
      },
      py::arg("rho"), py::arg("var_class") = "centered", py::arg("allow_trivial") = false);

  mod.def(
      "decompose",
      [](const FiniteDistribution& d, const std::string& cls) {
        return components_as_list(cls == "symmetric" ? decompose_symmetric(d)
                                                     : decompose_centered(d));
      },
      py::arg("d"), py::arg("var_class") = "centered",
      "Two-point mixture decomposition as a list of component dicts.");
  mod.def(
      "recompose",
      [](const py::list& comps) { return recompose(components_from_list(comps)); },
      py::arg("components"));

  mod.def(
      "gap",
      [](const std::string& fn, const FiniteDistribution& d1, const FiniteDistribution& d2) {
        return gap(lookup_builtin(fn), d1, d2).gap;
      },
      py::arg("fn"), py::arg("d1"), py::arg("d2"),
      "E f(xi+eta) - E f(xi) - E f(eta) for a builtin function name.");
  mod.def(
      "gap_callable",
      [](const std::function<double(double)>& f, const FiniteDistribution& d1,
         const FiniteDistribution& d2) {
        FunctionSpec spec;
        spec.label = "callable";
        spec.f = f;
        return gap(spec, d1, d2).gap;
      },
      py::arg("f"), py::arg("d1"), py::arg("d2"));
  mod.def(
      "moment_ratio",
      [](double rho, const FiniteDistribution& d1, const FiniteDistribution& d2) {
        return moment_ratio(rho, d1, d2);
      },
      py::arg("rho"), py::arg("d1"), py::arg("d2"));

  mod.def(
      "phi_four",
      [](double a, double b, double c, double d, const std::string& fn) {
        return phi_four(a, b, c, d, lookup_builtin(fn)).value;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("fn"));
  mod.def(
      "phi_two",
      [](double a, double b, const std::string& fn) {
        return phi_two(a, b, lookup_builtin(fn)).value;
      },
      py::arg("a"), py::arg("b"), py::arg("fn"));

  mod.def(
      "fuzz",
      [](double rho, const std::string& cls, int trials, std::uint64_t seed) {
        FuzzReport r = fuzz_inequality(rho, class_from_string(cls), trials, seed);
        py::dict d;
        d["rho"] = r.rho;
        d["trials"] = r.trials;
        d["seed"] = r.seed;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["min_ratio"] = r.min_ratio;
        d["max_ratio"] = r.max_ratio;
        d["violations"] = r.violations.size();
        return d;
      },
      py::arg("rho"), py::arg("var_class") = "centered", py::arg("trials") = 1000,
      py::arg("seed") = 12345);

  mod.def(
      "ratio_extremize",
      [](double rho, const std::string& cls, const std::string& side, std::uint64_t seed) {
        SharpnessResult r =
            ratio_extremize(rho, class_from_string(cls), side_from_string(side), seed);
        py::dict d;
        d["ratio"] = r.ratio;
        d["target"] = r.target;
        d["attained"] = r.attained;
        d["d1"] = r.d1;
        d["d2"] = r.d2;
        return d;
      },
      py::arg("rho"), py::arg("var_class"), py::arg("side"), py::arg("seed") = 12345);

  mod.def(
      "check_condition",
      [](const std::string& fn, const std::string& cond, double lo, double hi) {
        FunctionSpec spec = lookup_builtin(fn);
        ConditionVerdict v;
        if (cond == "convex2")
          v = check_convex_second_derivative(spec, {lo, hi});
        else if (cond == "symsum")
          v = check_symmetric_sum_nondecreasing(spec, hi);
        else if (cond == "cross")
          v = check_cross_condition(spec, -lo, hi);
        else if (cond == "sqrt")
          v = check_sqrt_convex(spec, {std::max(0.0, lo), hi});
        else
          throw std::invalid_argument("unknown condition: " + cond);
        py::dict d;
        d["condition"] = to_string(v.condition);
        d["holds"] = v.holds;
        d["worst_violation"] = v.worst_violation;
        d["witness"] = v.witness;
        d["sample_size"] = v.sample_size;
        d["skipped"] = v.skipped;
        return d;
      },
      py::arg("fn"), py::arg("cond"), py::arg("lo") = -10.0, py::arg("hi") = 10.0);

  mod.def("builtin_names", []() {
    std::vector<std::string> names;
    for (const FunctionSpec& f : builtin_library()) names.push_back(f.label);
    return names;
  });
}
