#include "mgl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "mgl/conditions.hpp"
#include "mgl/constants.hpp"
#include "mgl/decompose.hpp"
#include "mgl/json_io.hpp"
#include "mgl/verifier.hpp"

namespace mgl::cli {

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MGL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("MGL_SEED is not a valid integer: " + std::string(env));
    }
  }
  return 12345;
}

VarClass parse_class(const std::string& s) {
  if (s == "centered") return VarClass::Centered;
  if (s == "symmetric") return VarClass::Symmetric;
  throw CLI::ValidationError("--class", "must be 'centered' or 'symmetric'");
}

std::pair<double, double> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--range expects LO:HI, got '" + s + "'");
  double lo = std::stod(s.substr(0, colon));
  double hi = std::stod(s.substr(colon + 1));
  if (!(hi > lo)) throw std::invalid_argument("--range: HI must exceed LO");
  return {lo, hi};
}

FunctionSpec resolve_function(const std::string& fn, const std::string& table_path) {
  if (!table_path.empty()) {
    std::ifstream in(table_path);
    if (!in) throw std::invalid_argument("cannot open table file: " + table_path);
    io::json j;
    in >> j;
    if (!j.is_array()) throw std::invalid_argument("table file must be a JSON array of [y, f]");
    std::vector<std::pair<double, double>> pts;
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("table entries must be [y, f(y)] pairs");
      pts.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return from_table(std::move(pts));
  }
  return lookup_builtin(fn);
}

struct CsvRow {
  BoundsReport r;
};

void write_table_row(std::ostream& os, const BoundsReport& r) {
  os << io::format_double(r.rho) << ',' << to_string(r.var_class) << ','
     << io::format_double(r.lower) << ',' << io::format_double(r.upper) << ','
     << to_string(r.lower_regime) << ',' << to_string(r.upper_regime) << ','
     << (r.psi_argopt ? io::format_double(*r.psi_argopt) : "") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"moment inequality toolkit for sums of independent centered variables"};
  app.require_subcommand(1);

  // constants
  auto* c_cmd = app.add_subcommand("constants", "sharp lower/upper constants for one rho");
  double c_rho = 0.0;
  std::string c_class = "centered";
  bool c_json = false, c_trivial = false;
  c_cmd->add_option("--rho", c_rho, "moment exponent")->required();
  c_cmd->add_option("--class", c_class, "centered|symmetric");
  c_cmd->add_flag("--json", c_json, "emit JSON");
  c_cmd->add_flag("--trivial", c_trivial, "allow the trivial centered bounds for rho < 1");

  // table
  auto* t_cmd = app.add_subcommand("table", "CSV table of constants over a rho range");
  double t_from = 0.0, t_to = 0.0, t_step = 0.0;
  std::string t_class = "centered", t_out;
  t_cmd->add_option("--rho-from", t_from)->required();
  t_cmd->add_option("--rho-to", t_to)->required();
  t_cmd->add_option("--step", t_step)->required();
  t_cmd->add_option("--class", t_class, "centered|symmetric|both");
  t_cmd->add_option("--out", t_out, "output path (default stdout)");

  // check-fn
  auto* k_cmd = app.add_subcommand("check-fn", "check a function against a condition class");
  std::string k_fn, k_table, k_cond, k_range = "-10:10";
  double k_tmax = 10.0;
  bool k_json = false;
  k_cmd->add_option("--fn", k_fn, "builtin name, e.g. abs_pow:2.5");
  k_cmd->add_option("--table", k_table, "JSON table of [y, f(y)] pairs");
  k_cmd->add_option("--cond", k_cond, "convex2|symsum|cross|sqrt")->required();
  k_cmd->add_option("--range", k_range, "LO:HI grid/range");
  k_cmd->add_option("--tmax", k_tmax, "t_max for symsum");
  k_cmd->add_flag("--json", k_json);

  // fuzz
  auto* f_cmd = app.add_subcommand("fuzz", "random-pair inequality fuzzing");
  double f_rho = 0.0;
  std::string f_class = "centered";
  int f_trials = 1000;
  std::optional<std::uint64_t> f_seed;
  bool f_json = false;
  f_cmd->add_option("--rho", f_rho)->required();
  f_cmd->add_option("--class", f_class);
  f_cmd->add_option("--trials", f_trials);
  f_cmd->add_option("--seed", f_seed);
  f_cmd->add_flag("--json", f_json);

  // sharpness
  auto* s_cmd = app.add_subcommand("sharpness", "search for a sharpness witness");
  double s_rho = 0.0;
  std::string s_class = "centered", s_side;
  std::optional<std::uint64_t> s_seed;
  bool s_json = false;
  s_cmd->add_option("--rho", s_rho)->required();
  s_cmd->add_option("--class", s_class);
  s_cmd->add_option("--side", s_side, "min|max")->required();
  s_cmd->add_option("--seed", s_seed);
  s_cmd->add_flag("--json", s_json);

  // gap
  auto* g_cmd = app.add_subcommand("gap", "E f(xi+eta) - E f(xi) - E f(eta) on given laws");
  std::string g_fn, g_d1, g_d2;
  bool g_json = false;
  g_cmd->add_option("--fn", g_fn)->required();
  g_cmd->add_option("--d1", g_d1, "JSON distribution file")->required();
  g_cmd->add_option("--d2", g_d2, "JSON distribution file")->required();
  g_cmd->add_flag("--json", g_json);

  // decompose
  auto* d_cmd = app.add_subcommand("decompose", "two-point mixture decomposition");
  std::string d_input;
  bool d_symmetric = false;
  d_cmd->add_option("--input", d_input, "JSON distribution file")->required();
  d_cmd->add_flag("--symmetric", d_symmetric, "use the symmetric decomposition");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*c_cmd) {
      BoundsReport r = sharp_bounds(c_rho, parse_class(c_class), c_trivial);
      if (c_json)
        out << io::to_json(r).dump(2) << '\n';
      else
        out << "rho=" << io::format_double(r.rho) << " class=" << to_string(r.var_class)
            << " lower=" << io::format_double(r.lower) << " upper=" << io::format_double(r.upper)
            << " lower_regime=" << to_string(r.lower_regime)
            << " upper_regime=" << to_string(r.upper_regime) << '\n';
      return 0;
    }

    if (*t_cmd) {
      if (!(t_step > 0.0) || !(t_to >= t_from))
        throw std::invalid_argument("table: need rho-to >= rho-from and step > 0");
      std::vector<VarClass> classes;
      if (t_class == "both")
        classes = {VarClass::Centered, VarClass::Symmetric};
      else
        classes = {parse_class(t_class)};
      std::ofstream file;
      std::ostream* os = &out;
      if (!t_out.empty()) {
        file.open(t_out);
        if (!file) throw std::invalid_argument("cannot open output file: " + t_out);
        os = &file;
      }
      *os << "rho,class,lower,upper,lower_regime,upper_regime,z_argopt\n";
      // integer step count avoids drift across the row grid
      int rows = static_cast<int>(std::floor((t_to - t_from) / t_step + 1e-9)) + 1;
      for (int i = 0; i < rows; ++i) {
        double rho = t_from + i * t_step;
        for (VarClass cls : classes) write_table_row(*os, sharp_bounds(rho, cls));
      }
      return 0;
    }

    if (*k_cmd) {
      if (k_fn.empty() && k_table.empty())
        throw std::invalid_argument("check-fn: need --fn or --table");
      FunctionSpec spec = resolve_function(k_fn, k_table);
      auto [lo, hi] = parse_range(k_range);
      ConditionVerdict v;
      if (k_cond == "convex2")
        v = check_convex_second_derivative(spec, {lo, hi});
      else if (k_cond == "symsum")
        v = check_symmetric_sum_nondecreasing(spec, k_tmax);
      else if (k_cond == "cross")
        v = check_cross_condition(spec, -lo, hi);
      else if (k_cond == "sqrt")
        v = check_sqrt_convex(spec, {std::max(0.0, lo), hi});
      else
        throw std::invalid_argument("check-fn: unknown condition '" + k_cond + "'");
      if (k_json)
        out << io::to_json(v).dump(2) << '\n';
      else
        out << spec.label << ' ' << to_string(v.condition) << ": "
            << (v.holds ? "holds" : "violated") << " worst_violation="
            << io::format_double(v.worst_violation) << " samples=" << v.sample_size << '\n';
      return 0;
    }

    if (*f_cmd) {
      FuzzReport r = fuzz_inequality(f_rho, parse_class(f_class), f_trials,
                                     f_seed ? *f_seed : default_seed());
      if (f_json)
        out << io::to_json(r).dump(2) << '\n';
      else
        out << "rho=" << io::format_double(r.rho) << " class=" << to_string(r.var_class)
            << " trials=" << r.trials << " ratio_range=[" << io::format_double(r.min_ratio)
            << ", " << io::format_double(r.max_ratio) << "] envelope=["
            << io::format_double(r.lower) << ", " << io::format_double(r.upper)
            << "] violations=" << r.violations.size() << '\n';
      return r.violations.empty() ? 0 : 1;
    }

    if (*s_cmd) {
      ExtremumSide side;
      if (s_side == "min")
        side = ExtremumSide::Min;
      else if (s_side == "max")
        side = ExtremumSide::Max;
      else
        throw std::invalid_argument("sharpness: --side must be min or max");
      SharpnessResult r =
          ratio_extremize(s_rho, parse_class(s_class), side, s_seed ? *s_seed : default_seed());
      if (s_json)
        out << io::to_json(r).dump(2) << '\n';
      else
        out << "ratio=" << io::format_double(r.ratio) << " target=" << io::format_double(r.target)
            << " attained=" << (r.attained ? "yes" : "no") << '\n';
      return r.attained ? 0 : 1;
    }

    if (*g_cmd) {
      FunctionSpec spec = lookup_builtin(g_fn);
      FiniteDistribution d1 = io::load_distribution(g_d1);
      FiniteDistribution d2 = io::load_distribution(g_d2);
      GapResult r = gap(spec, d1, d2);
      // power functions also get the moment ratio
      if (g_fn.rfind("abs_pow:", 0) == 0)
        r.ratio = moment_ratio(std::stod(g_fn.substr(8)), d1, d2);
      if (g_json) {
        io::json j{{"fn", spec.label}, {"gap", r.gap}};
        if (r.ratio) j["ratio"] = *r.ratio;
        out << j.dump(2) << '\n';
      } else {
        out << "gap=" << io::format_double(r.gap);
        if (r.ratio) out << " ratio=" << io::format_double(*r.ratio);
        out << '\n';
      }
      return 0;
    }

    if (*d_cmd) {
      FiniteDistribution d = io::load_distribution(d_input);
      MixtureDecomposition m = d_symmetric ? decompose_symmetric(d) : decompose_centered(d);
      out << io::to_json(m).dump(2) << '\n';
      return 0;
    }
  } catch (const SharpnessNotAttained& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace mgl::cli
