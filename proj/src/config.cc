// Copyright 2026 The ballcap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ballcap/config.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ballcap/energy.h"
#include "ballcap/errors.h"

namespace ballcap {

namespace {

using Json = nlohmann::ordered_json;

// Validating view of one JSON object.
class Node {
 public:
  Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) Fail(path_, "expected an object");
  }

  void Allow(std::initializer_list<const char*> keys) const {
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& item : j_.items()) {
      if (!allowed.count(item.key())) Fail(Key(item.key()), "unknown key");
    }
  }

  const Json* Find(const char* key) const {
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }
  std::string Key(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  void Read(const char* key, double& out) const {
    if (const Json* v = Find(key)) out = Double(*v, Key(key));
  }
  void Read(const char* key, int& out) const {
    if (const Json* v = Find(key)) out = static_cast<int>(Integer(*v, Key(key)));
  }
  void Read(const char* key, long& out) const {
    if (const Json* v = Find(key)) out = static_cast<long>(Integer(*v, Key(key)));
  }
  void Read(const char* key, std::string& out) const {
    if (const Json* v = Find(key)) out = String(*v, Key(key));
  }
  void Read(const char* key, std::vector<double>& out) const {
    if (const Json* v = Find(key)) {
      out.clear();
      const std::string p = Key(key);
      for (std::size_t i = 0; i < Array(*v, p).size(); ++i) {
        out.push_back(Double((*v)[i], Index(p, i)));
      }
    }
  }
  void Read(const char* key, std::vector<int>& out) const {
    if (const Json* v = Find(key)) {
      out.clear();
      const std::string p = Key(key);
      for (std::size_t i = 0; i < Array(*v, p).size(); ++i) {
        out.push_back(static_cast<int>(Integer((*v)[i], Index(p, i))));
      }
    }
  }
  void Read(const char* key, std::vector<std::string>& out) const {
    if (const Json* v = Find(key)) {
      out.clear();
      const std::string p = Key(key);
      for (std::size_t i = 0; i < Array(*v, p).size(); ++i) {
        out.push_back(String((*v)[i], Index(p, i)));
      }
    }
  }

  [[noreturn]] static void Fail(const std::string& path, const std::string& message) {
    throw ConfigError(path, message);
  }
  static std::string Index(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
  }
  static double Double(const Json& v, const std::string& path) {
    if (!v.is_number()) Fail(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) Fail(path, "expected a finite number");
    return x;
  }
  static long long Integer(const Json& v, const std::string& path) {
    if (!v.is_number_integer()) Fail(path, "expected an integer");
    return v.get<long long>();
  }
  static std::string String(const Json& v, const std::string& path) {
    if (!v.is_string()) Fail(path, "expected a string");
    return v.get<std::string>();
  }
  static const Json& Array(const Json& v, const std::string& path) {
    if (!v.is_array()) Fail(path, "expected an array");
    return v;
  }

 private:
  const Json& j_;
  std::string path_;
};

void Require(bool ok, const std::string& path, const std::string& message) {
  if (!ok) Node::Fail(path, message);
}

void RequireAll(const std::vector<double>& values, const std::string& path, bool (*ok)(double),
                const std::string& message) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    Require(ok(values[i]), Node::Index(path, i), message);
  }
}

void ParseKernel(const Node& n, KernelConfig& k) {
  n.Allow({"family", "variant", "dimension", "parameter", "coefficient_file", "truncation",
           "series_tolerance"});
  n.Read("family", k.family);
  n.Read("variant", k.variant);
  n.Read("dimension", k.dimension);
  n.Read("parameter", k.parameter);
  n.Read("coefficient_file", k.coefficient_file);
  n.Read("truncation", k.truncation);
  n.Read("series_tolerance", k.series_tolerance);
  try {
    ParseFamily(k.family);
  } catch (const Error& e) {
    Node::Fail(n.Key("family"), e.what());
  }
  try {
    ParseVariant(k.variant);
  } catch (const Error& e) {
    Node::Fail(n.Key("variant"), e.what());
  }
  Require(k.dimension >= 1 && k.dimension <= 16, n.Key("dimension"), "must lie in [1, 16]");
  Require(k.truncation >= 1, n.Key("truncation"), "must be positive");
  Require(k.series_tolerance > 0.0, n.Key("series_tolerance"), "must be positive");
  if (k.family == "custom") {
    Require(!k.coefficient_file.empty(), n.Key("coefficient_file"),
            "required for the custom family");
  }
  if (k.family == "weighted-dirichlet") {
    Require(k.parameter > 0.0, n.Key("parameter"), "weighted-dirichlet needs a > 0");
  }
  if (k.family == "bounded") {
    Require(k.parameter > 0.0 && k.parameter < 1.0, n.Key("parameter"),
            "bounded needs 0 < q < 1");
  }
}

void ParseSet(const Node& n, SetConfig& s) {
  n.Allow({"kind", "dimension", "points", "weights", "direction", "t0", "t1", "base_angles",
           "frequencies", "resolution", "orbit_resolution", "polynomial"});
  n.Read("kind", s.kind);
  n.Read("dimension", s.dimension);
  n.Read("weights", s.weights);
  n.Read("direction", s.direction);
  n.Read("t0", s.t0);
  n.Read("t1", s.t1);
  n.Read("base_angles", s.base_angles);
  n.Read("frequencies", s.frequencies);
  n.Read("resolution", s.resolution);
  n.Read("orbit_resolution", s.orbit_resolution);
  n.Read("polynomial", s.polynomial);
  try {
    ParseSetKind(s.kind);
  } catch (const Error& e) {
    Node::Fail(n.Key("kind"), e.what());
  }
  Require(s.dimension >= 1 && s.dimension <= 16, n.Key("dimension"), "must lie in [1, 16]");
  if (const Json* pts = n.Find("points")) {
    const std::string path = n.Key("points");
    s.points.clear();
    for (std::size_t i = 0; i < Node::Array(*pts, path).size(); ++i) {
      const std::string pi = Node::Index(path, i);
      const Json& row = Node::Array((*pts)[i], pi);
      Require(static_cast<int>(row.size()) == 2 * s.dimension, pi,
              "expected 2*dimension real coordinates");
      std::vector<double> p;
      double n2 = 0.0;
      for (std::size_t c = 0; c < row.size(); ++c) {
        p.push_back(Node::Double(row[c], Node::Index(pi, c)));
        n2 += p.back() * p.back();
      }
      Require(std::sqrt(n2) <= 1.0 + kBallSlack, pi, "point lies outside the closed ball");
      s.points.push_back(std::move(p));
    }
  }
  if (!s.weights.empty()) {
    Require(s.weights.size() == s.points.size(), n.Key("weights"),
            "needs one weight per point");
    RequireAll(s.weights, n.Key("weights"), [](double w) { return w >= 0.0; },
               "weights must be nonnegative");
  }
  if (!s.direction.empty()) {
    Require(static_cast<int>(s.direction.size()) == 2 * s.dimension, n.Key("direction"),
            "expected 2*dimension real coordinates");
    double n2 = 0.0;
    for (double x : s.direction) n2 += x * x;
    Require(std::abs(std::sqrt(n2) - 1.0) <= 1e-9, n.Key("direction"), "must be a unit vector");
  }
  Require(s.t1 >= s.t0, n.Key("t1"), "must be at least t0");
  Require(s.resolution >= 1, n.Key("resolution"), "must be positive");
  Require(s.orbit_resolution >= 1, n.Key("orbit_resolution"), "must be positive");
  if (!s.frequencies.empty()) {
    Require(static_cast<int>(s.frequencies.size()) == s.dimension, n.Key("frequencies"),
            "needs one frequency per coordinate");
  }
  if (s.kind == "tangential-circle" || s.kind == "product-lift") {
    Require(s.dimension == 2, n.Key("dimension"), "must be 2 for " + s.kind);
  }
  if (s.kind == "points" || s.kind == "orbit-union") {
    Require(!s.points.empty() || !s.polynomial.empty(), n.Key("points"),
            "at least one point is required");
  }
  if (s.kind == "orbit-union") {
    Require(!s.frequencies.empty(), n.Key("frequencies"), "required for orbit-union");
  }
  if (!s.polynomial.empty()) {
    try {
      Polynomial::Parse(s.polynomial, s.dimension);
    } catch (const Error& e) {
      Node::Fail(n.Key("polynomial"), e.what());
    }
  }
}

void ParseSchedule(const Node& n, ScheduleConfig& s) {
  n.Allow({"k_min", "k_max", "radii"});
  n.Read("k_min", s.k_min);
  n.Read("k_max", s.k_max);
  n.Read("radii", s.radii);
  Require(s.k_min >= 1, n.Key("k_min"), "must be at least 1");
  Require(s.k_max >= s.k_min && s.k_max <= 52, n.Key("k_max"), "must lie in [k_min, 52]");
  RequireAll(s.radii, n.Key("radii"), [](double r) { return r >= 0.0 && r < 1.0; },
             "radii must lie in [0, 1)");
  for (std::size_t i = 1; i < s.radii.size(); ++i) {
    Require(s.radii[i] > s.radii[i - 1], Node::Index(n.Key("radii"), i),
            "radii must increase");
  }
}

void ParseSolver(const Node& n, SolverConfig& s) {
  n.Allow({"relative_tolerance", "absolute_tolerance", "max_iterations",
           "sweep_relative_tolerance", "sweep_absolute_tolerance"});
  n.Read("relative_tolerance", s.relative_tolerance);
  n.Read("absolute_tolerance", s.absolute_tolerance);
  n.Read("max_iterations", s.max_iterations);
  n.Read("sweep_relative_tolerance", s.sweep_relative_tolerance);
  n.Read("sweep_absolute_tolerance", s.sweep_absolute_tolerance);
  Require(s.relative_tolerance > 0.0, n.Key("relative_tolerance"), "must be positive");
  Require(s.absolute_tolerance > 0.0, n.Key("absolute_tolerance"), "must be positive");
  Require(s.sweep_relative_tolerance > 0.0, n.Key("sweep_relative_tolerance"),
          "must be positive");
  Require(s.sweep_absolute_tolerance > 0.0, n.Key("sweep_absolute_tolerance"),
          "must be positive");
  Require(s.max_iterations >= 1, n.Key("max_iterations"), "must be positive");
}

void ParseMaximal(const Node& n, MaximalConfig& m) {
  n.Allow({"alphas", "t_fractions", "t_values", "grid_levels", "radial", "angular",
           "tangential", "r_max", "kappa", "kernel_radii", "potential_lengths",
           "potential_resolution", "potential_radius"});
  n.Read("alphas", m.alphas);
  n.Read("t_fractions", m.t_fractions);
  n.Read("t_values", m.t_values);
  n.Read("radial", m.radial);
  n.Read("angular", m.angular);
  n.Read("tangential", m.tangential);
  n.Read("r_max", m.r_max);
  n.Read("kappa", m.kappa);
  n.Read("kernel_radii", m.kernel_radii);
  n.Read("potential_lengths", m.potential_lengths);
  n.Read("potential_resolution", m.potential_resolution);
  n.Read("potential_radius", m.potential_radius);
  if (const Json* levels = n.Find("grid_levels")) {
    const std::string path = n.Key("grid_levels");
    m.grid_levels.clear();
    for (std::size_t i = 0; i < Node::Array(*levels, path).size(); ++i) {
      const std::string pi = Node::Index(path, i);
      const Json& pair = Node::Array((*levels)[i], pi);
      Require(pair.size() == 2, pi, "expected [n_u, n_phi]");
      const int nu = static_cast<int>(Node::Integer(pair[0], Node::Index(pi, 0)));
      const int nphi = static_cast<int>(Node::Integer(pair[1], Node::Index(pi, 1)));
      Require(nu >= 1 && nphi >= 1, pi, "grid sizes must be positive");
      m.grid_levels.emplace_back(nu, nphi);
    }
  }
  Require(!m.alphas.empty(), n.Key("alphas"), "must not be empty");
  RequireAll(m.alphas, n.Key("alphas"), [](double a) { return a > 1.0; },
             "apertures must exceed 1");
  RequireAll(m.t_fractions, n.Key("t_fractions"), [](double t) { return t > 0.0 && t <= 1.0; },
             "fractions must lie in (0, 1]");
  RequireAll(m.t_values, n.Key("t_values"), [](double t) { return t >= 0.0; },
             "thresholds must be nonnegative");
  Require(m.radial >= 2, n.Key("radial"), "must be at least 2");
  Require(m.angular >= 1, n.Key("angular"), "must be positive");
  Require(m.tangential >= 1, n.Key("tangential"), "must be positive");
  Require(m.r_max > 0.0 && m.r_max < 1.0, n.Key("r_max"), "must lie in (0, 1)");
  Require(m.kappa > 0.0, n.Key("kappa"), "must be positive");
  RequireAll(m.kernel_radii, n.Key("kernel_radii"), [](double r) { return r >= 0.0 && r < 1.0; },
             "radii must lie in [0, 1)");
  RequireAll(m.potential_lengths, n.Key("potential_lengths"),
             [](double l) { return l > 0.0 && l <= 1.0; }, "lengths must lie in (0, 1]");
  Require(m.potential_resolution >= 2, n.Key("potential_resolution"), "must be at least 2");
  Require(m.potential_radius > 0.0 && m.potential_radius < 1.0, n.Key("potential_radius"),
          "must lie in (0, 1)");
}

void ParseUnbounded(const Node& n, UnboundedConfig& u) {
  n.Allow({"terms", "base", "resolution"});
  n.Read("terms", u.terms);
  n.Read("base", u.base);
  n.Read("resolution", u.resolution);
  Require(u.terms >= 1, n.Key("terms"), "must be positive");
  Require(u.base > 1.0, n.Key("base"), "must exceed 1");
  Require(u.resolution >= 1, n.Key("resolution"), "must be positive");
}

void ParseTolerances(const Node& n, Tolerances& t) {
  n.Allow({"hardy_length_relative", "hardy_uniform_relative", "full_circle_absolute",
           "flat_energy_absolute", "modulus_energy_relative", "log_fit_r_squared",
           "zero_threshold", "zero_window", "zero_k_max", "pushforward_relative",
           "single_atom_absolute", "duality_relative", "variational_floor", "axiom_absolute",
           "series_relative", "weak_type_growth", "unbounded_relative", "norm_budget_slack",
           "monotonicity_slack", "resolved_relative"});
  const std::pair<const char*, double*> reals[] = {
      {"hardy_length_relative", &t.hardy_length_relative},
      {"hardy_uniform_relative", &t.hardy_uniform_relative},
      {"full_circle_absolute", &t.full_circle_absolute},
      {"flat_energy_absolute", &t.flat_energy_absolute},
      {"modulus_energy_relative", &t.modulus_energy_relative},
      {"log_fit_r_squared", &t.log_fit_r_squared},
      {"zero_threshold", &t.zero_threshold},
      {"pushforward_relative", &t.pushforward_relative},
      {"single_atom_absolute", &t.single_atom_absolute},
      {"duality_relative", &t.duality_relative},
      {"variational_floor", &t.variational_floor},
      {"axiom_absolute", &t.axiom_absolute},
      {"series_relative", &t.series_relative},
      {"weak_type_growth", &t.weak_type_growth},
      {"unbounded_relative", &t.unbounded_relative},
      {"norm_budget_slack", &t.norm_budget_slack},
      {"monotonicity_slack", &t.monotonicity_slack},
      {"resolved_relative", &t.resolved_relative},
  };
  for (const auto& [key, ptr] : reals) {
    n.Read(key, *ptr);
    Require(*ptr > 0.0, n.Key(key), "must be positive");
  }
  n.Read("zero_window", t.zero_window);
  n.Read("zero_k_max", t.zero_k_max);
  Require(t.zero_window >= 2, n.Key("zero_window"), "must be at least 2");
  Require(t.zero_k_max >= 1 && t.zero_k_max <= 52, n.Key("zero_k_max"), "must lie in [1, 52]");
}

void ParseTrials(const Node& n, TrialCounts& t) {
  n.Allow({"dual_sets", "axiom_sets", "series_measures", "comparability_draws",
           "triangle_draws"});
  const std::pair<const char*, int*> counts[] = {
      {"dual_sets", &t.dual_sets},
      {"axiom_sets", &t.axiom_sets},
      {"series_measures", &t.series_measures},
      {"comparability_draws", &t.comparability_draws},
      {"triangle_draws", &t.triangle_draws},
  };
  for (const auto& [key, ptr] : counts) {
    n.Read(key, *ptr);
    Require(*ptr >= 1, n.Key(key), "must be positive");
  }
}

RunConfig FromJson(const Json& j) {
  RunConfig c;
  const Node root(j, "");
  root.Allow({"schema", "kernel", "set", "schedule", "resolutions", "solver", "maximal",
              "unbounded", "tolerances", "trials", "seed", "threads", "output_dir",
              "formats"});
  if (const Json* v = root.Find("schema")) {
    Require(Node::String(*v, "schema") == kConfigSchema, "schema",
            std::string("unsupported schema, expected ") + kConfigSchema);
  }
  if (const Json* v = root.Find("kernel")) ParseKernel(Node(*v, "kernel"), c.kernel);
  if (const Json* v = root.Find("set")) ParseSet(Node(*v, "set"), c.set);
  if (const Json* v = root.Find("schedule")) ParseSchedule(Node(*v, "schedule"), c.schedule);
  if (const Json* v = root.Find("solver")) ParseSolver(Node(*v, "solver"), c.solver);
  if (const Json* v = root.Find("maximal")) ParseMaximal(Node(*v, "maximal"), c.maximal);
  if (const Json* v = root.Find("unbounded")) {
    ParseUnbounded(Node(*v, "unbounded"), c.unbounded);
  }
  if (const Json* v = root.Find("tolerances")) {
    ParseTolerances(Node(*v, "tolerances"), c.tolerances);
  }
  if (const Json* v = root.Find("trials")) ParseTrials(Node(*v, "trials"), c.trials);
  root.Read("resolutions", c.resolutions);
  for (std::size_t i = 0; i < c.resolutions.size(); ++i) {
    Require(c.resolutions[i] >= 1, Node::Index("resolutions", i), "must be positive");
    if (i > 0) {
      Require(c.resolutions[i] > c.resolutions[i - 1], Node::Index("resolutions", i),
              "resolutions must increase");
    }
  }
  if (const Json* v = root.Find("seed")) {
    Require(v->is_number_unsigned() || (v->is_number_integer() && v->get<long long>() >= 0),
            "seed", "expected a nonnegative integer");
    c.seed = v->get<std::uint64_t>();
  }
  root.Read("threads", c.threads);
  Require(c.threads >= 1, "threads", "must be positive");
  root.Read("output_dir", c.output_dir);
  Require(!c.output_dir.empty(), "output_dir", "must not be empty");
  root.Read("formats", c.formats);
  Require(!c.formats.empty(), "formats", "must not be empty");
  for (std::size_t i = 0; i < c.formats.size(); ++i) {
    Require(c.formats[i] == "csv" || c.formats[i] == "json", Node::Index("formats", i),
            "expected csv or json");
  }
  return c;
}

Json ToJson(const RunConfig& c) {
  Json j;
  j["schema"] = kConfigSchema;
  j["kernel"] = {{"family", c.kernel.family},
                 {"variant", c.kernel.variant},
                 {"dimension", c.kernel.dimension},
                 {"parameter", c.kernel.parameter},
                 {"coefficient_file", c.kernel.coefficient_file},
                 {"truncation", c.kernel.truncation},
                 {"series_tolerance", c.kernel.series_tolerance}};
  j["set"] = {{"kind", c.set.kind},
              {"dimension", c.set.dimension},
              {"points", c.set.points},
              {"weights", c.set.weights},
              {"direction", c.set.direction},
              {"t0", c.set.t0},
              {"t1", c.set.t1},
              {"base_angles", c.set.base_angles},
              {"frequencies", c.set.frequencies},
              {"resolution", c.set.resolution},
              {"orbit_resolution", c.set.orbit_resolution},
              {"polynomial", c.set.polynomial}};
  j["schedule"] = {{"k_min", c.schedule.k_min},
                   {"k_max", c.schedule.k_max},
                   {"radii", c.schedule.radii}};
  j["resolutions"] = c.resolutions;
  j["solver"] = {{"relative_tolerance", c.solver.relative_tolerance},
                 {"absolute_tolerance", c.solver.absolute_tolerance},
                 {"max_iterations", c.solver.max_iterations},
                 {"sweep_relative_tolerance", c.solver.sweep_relative_tolerance},
                 {"sweep_absolute_tolerance", c.solver.sweep_absolute_tolerance}};
  Json levels = Json::array();
  for (const auto& [nu, nphi] : c.maximal.grid_levels) levels.push_back({nu, nphi});
  j["maximal"] = {{"alphas", c.maximal.alphas},
                  {"t_fractions", c.maximal.t_fractions},
                  {"t_values", c.maximal.t_values},
                  {"grid_levels", levels},
                  {"radial", c.maximal.radial},
                  {"angular", c.maximal.angular},
                  {"tangential", c.maximal.tangential},
                  {"r_max", c.maximal.r_max},
                  {"kappa", c.maximal.kappa},
                  {"kernel_radii", c.maximal.kernel_radii},
                  {"potential_lengths", c.maximal.potential_lengths},
                  {"potential_resolution", c.maximal.potential_resolution},
                  {"potential_radius", c.maximal.potential_radius}};
  j["unbounded"] = {{"terms", c.unbounded.terms},
                    {"base", c.unbounded.base},
                    {"resolution", c.unbounded.resolution}};
  const Tolerances& t = c.tolerances;
  j["tolerances"] = {{"hardy_length_relative", t.hardy_length_relative},
                     {"hardy_uniform_relative", t.hardy_uniform_relative},
                     {"full_circle_absolute", t.full_circle_absolute},
                     {"flat_energy_absolute", t.flat_energy_absolute},
                     {"modulus_energy_relative", t.modulus_energy_relative},
                     {"log_fit_r_squared", t.log_fit_r_squared},
                     {"zero_threshold", t.zero_threshold},
                     {"zero_window", t.zero_window},
                     {"zero_k_max", t.zero_k_max},
                     {"pushforward_relative", t.pushforward_relative},
                     {"single_atom_absolute", t.single_atom_absolute},
                     {"duality_relative", t.duality_relative},
                     {"variational_floor", t.variational_floor},
                     {"axiom_absolute", t.axiom_absolute},
                     {"series_relative", t.series_relative},
                     {"weak_type_growth", t.weak_type_growth},
                     {"unbounded_relative", t.unbounded_relative},
                     {"norm_budget_slack", t.norm_budget_slack},
                     {"monotonicity_slack", t.monotonicity_slack},
                     {"resolved_relative", t.resolved_relative}};
  j["trials"] = {{"dual_sets", c.trials.dual_sets},
                 {"axiom_sets", c.trials.axiom_sets},
                 {"series_measures", c.trials.series_measures},
                 {"comparability_draws", c.trials.comparability_draws},
                 {"triangle_draws", c.trials.triangle_draws}};
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  j["output_dir"] = c.output_dir;
  j["formats"] = c.formats;
  return j;
}

std::vector<Complex> ToComplex(const std::vector<double>& v) {
  std::vector<Complex> out;
  for (std::size_t i = 0; i + 1 < v.size(); i += 2) out.emplace_back(v[i], v[i + 1]);
  return out;
}

}  // namespace

bool RunConfig::WantsCsv() const {
  return std::find(formats.begin(), formats.end(), "csv") != formats.end();
}
bool RunConfig::WantsJson() const {
  return std::find(formats.begin(), formats.end(), "json") != formats.end();
}

RunConfig ParseConfig(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError("", "syntax error at line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + e.what());
  }
  return FromJson(j);
}

RunConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

std::string SerializeConfig(const RunConfig& config) { return ToJson(config).dump(2) + "\n"; }

std::string EffectiveOutputDir(const RunConfig& config) {
  const char* env = std::getenv("BALLCAP_OUTPUT_DIR");
  return env != nullptr && *env != '\0' ? std::string(env) : config.output_dir;
}

KernelSpec MakeKernel(const KernelConfig& k) {
  const KernelVariant variant = ParseVariant(k.variant);
  KernelSpec spec = k.family == "custom"
                        ? KernelSpec::Custom(k.dimension,
                                             LoadCoefficientFile(k.coefficient_file, k.truncation),
                                             variant)
                        : KernelSpec::FromName(k.family, k.dimension, variant, k.parameter,
                                               k.truncation);
  return spec.WithSeriesTolerance(k.series_tolerance);
}

SetDescription MakeSet(const SetConfig& s) {
  const int d = s.dimension;
  std::vector<Complex> direction = ToComplex(s.direction);
  if (direction.empty()) direction = BallPoint::Basis(d, 0).coordinates();
  std::vector<BallPoint> points;
  for (const auto& p : s.points) points.emplace_back(ToComplex(p));
  switch (ParseSetKind(s.kind)) {
    case SetKind::kFinitePoints:
      return SetDescription::FinitePoints(std::move(points));
    case SetKind::kArc:
      return SetDescription::Arc(direction, s.t0, s.t1, s.resolution);
    case SetKind::kFlatCircle:
      return SetDescription::FlatCircle(direction, s.resolution);
    case SetKind::kTangentialCircle:
      return SetDescription::TangentialCircle(
          s.base_angles.empty() ? std::vector<double>{0.0} : s.base_angles, s.resolution);
    case SetKind::kProductLift:
      return SetDescription::ProductLift(s.t0, s.t1, s.resolution, s.orbit_resolution);
    case SetKind::kOrbitUnion:
      return SetDescription::OrbitUnion(std::move(points), s.frequencies, s.resolution);
  }
  throw ConfigError("set.kind", "unsupported set kind");
}

DiscreteMeasure MakeMeasure(const SetConfig& s) {
  if (!s.weights.empty()) {
    std::vector<BallPoint> points;
    for (const auto& p : s.points) points.emplace_back(ToComplex(p));
    return DiscreteMeasure(std::move(points), s.weights);
  }
  return DiscreteMeasure::Uniform(Discretize(MakeSet(s)));
}

std::vector<double> MakeSchedule(const ScheduleConfig& s) {
  if (!s.radii.empty()) return s.radii;
  std::vector<double> out;
  for (int k = s.k_min; k <= s.k_max; ++k) out.push_back(1.0 - std::ldexp(1.0, -k));
  return out;
}

SimplexQpOptions MakeSolver(const SolverConfig& s) {
  SimplexQpOptions o;
  o.relative_tolerance = s.relative_tolerance;
  o.absolute_tolerance = s.absolute_tolerance;
  o.max_iterations = s.max_iterations;
  return o;
}

SweepOptions MakeSweep(const RunConfig& c) {
  SweepOptions o;
  o.schedule = MakeSchedule(c.schedule);
  o.resolutions = c.resolutions;
  o.solver = MakeSolver(c.solver);
  o.solver.relative_tolerance = c.solver.sweep_relative_tolerance;
  o.solver.absolute_tolerance = c.solver.sweep_absolute_tolerance;
  o.resolved_tolerance = c.tolerances.resolved_relative;
  o.monotonicity_slack = c.tolerances.monotonicity_slack;
  o.zero_threshold = c.tolerances.zero_threshold;
  o.zero_window = c.tolerances.zero_window;
  o.threads = c.threads;
  return o;
}

WeakTypeOptions MakeWeakType(const RunConfig& c) {
  WeakTypeOptions o;
  o.alphas = c.maximal.alphas;
  o.t_fractions = c.maximal.t_fractions;
  o.absolute_t = c.maximal.t_values;
  o.grid_levels = c.maximal.grid_levels;
  o.sampler.radial = c.maximal.radial;
  o.sampler.angular = c.maximal.angular;
  o.sampler.tangential = c.maximal.tangential;
  o.sampler.r_max = c.maximal.r_max;
  o.kappa = c.maximal.kappa;
  o.solver = MakeSolver(c.solver);
  o.threads = c.threads;
  return o;
}

}  // namespace ballcap
