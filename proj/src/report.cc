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

#include "ballcap/report.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ballcap/errors.h"

namespace ballcap {

namespace {

using Json = nlohmann::ordered_json;

void Dump(const Json& j, std::ostringstream& out, int indent) {
  const std::string pad(indent + 2, ' '), close(indent, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& item : j.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(item.key()).dump() << ": ";
        Dump(item.value(), out, indent + 2);
      }
      out << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_structured();
      out << (flat ? "[" : "[\n");
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out << (flat ? ", " : ",\n");
        if (!flat) out << pad;
        Dump(j[i], out, indent + 2);
      }
      out << (flat ? "]" : "\n" + close + "]");
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (std::isfinite(x)) {
        out << FormatNumber(x);
      } else {
        out << "null";
      }
      return;
    }
    default:
      out << j.dump();
  }
}

std::string Render(const Json& j) {
  std::ostringstream out;
  Dump(j, out, 0);
  out << "\n";
  return out.str();
}

Json Header(const char* kind) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = kind;
  return j;
}

Json Vector(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json OptionalNumber(const std::optional<double>& v) {
  return v.has_value() ? Json(*v) : Json(nullptr);
}

Json FitJson(const GrowthFit& f) {
  return {{"law", GrowthLawName(f.law)},
          {"intercept", f.intercept},
          {"slope", f.slope},
          {"exponent", f.exponent},
          {"r_squared", f.r_squared}};
}

Json EquilibriumFields(const EquilibriumResult& e, bool weights) {
  Json j = {{"energy", e.energy},
            {"cap_r", e.cap_r},
            {"fw_gap", e.fw_gap},
            {"variational_residual", e.variational_residual},
            {"iterations", e.iterations},
            {"stage", e.stage},
            {"converged", e.converged}};
  if (weights) j["weights"] = Vector(e.weights);
  return j;
}

std::ofstream OpenCsv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

void CloseCsv(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c == '\n' ? ' ' : c;
  }
  return q + "\"";
}

}  // namespace

std::string FormatNumber(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void EnsureDirectory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

std::string EnergyReportJson(const EnergyReport& r, const std::string& kernel,
                             const std::string& set) {
  Json j = Header("energy");
  j["kernel"] = kernel;
  j["set"] = set;
  j["r_grid"] = r.r_grid;
  j["e_r_values"] = r.e_r_values;
  Json series = Json::array();
  for (const auto& v : r.series_values) series.push_back(OptionalNumber(v));
  j["series_values"] = series;
  j["increments"] = r.increments;
  j["classification"] =
      r.classification == EnergyClassification::kConverged ? "converged" : "diverging";
  j["limit_estimate"] = r.limit_infinite ? Json("inf") : Json(r.limit_estimate);
  Json fits = Json::array();
  for (const auto& f : r.fits) fits.push_back(FitJson(f));
  j["fits"] = fits;
  j["best_fit"] = r.best_fit ? FitJson(*r.best_fit) : Json(nullptr);
  return Render(j);
}

std::string CapacityEstimateJson(const CapacityEstimate& e) {
  Json j = Header("capacity_estimate");
  j["kernel"] = e.kernel;
  j["set"] = e.set;
  j["r_grid"] = e.r_grid;
  j["resolutions"] = e.resolutions;
  Json cells = Json::array();
  for (const auto& c : e.cells) {
    Json cell = {{"r_index", c.r_index},
                 {"resolution_index", c.resolution_index},
                 {"r", c.r},
                 {"resolution", c.resolution},
                 {"atom_count", c.atom_count}};
    cell["result"] = c.result ? EquilibriumFields(*c.result, false) : Json(nullptr);
    cell["error"] = c.error;
    cells.push_back(cell);
  }
  j["cells"] = cells;
  Json finest = Json::array();
  for (double c : e.cap_finest) finest.push_back(c);
  j["cap_finest"] = finest;
  Json resolved = Json::array();
  for (bool b : e.resolved) resolved.push_back(b);
  j["resolved"] = resolved;
  j["last_resolved"] = e.last_resolved;
  j["last_resolved_cap"] = e.last_resolved_cap;
  j["extrapolated_cap"] = e.extrapolated_cap;
  j["classification"] = ClassificationName(e.classification);
  j["decay_exponent"] = e.decay_exponent;
  j["monotonicity"] = {{"worst_r_violation", e.monotonicity.worst_r_violation},
                       {"worst_resolution_violation", e.monotonicity.worst_resolution_violation},
                       {"r_monotone", e.monotonicity.r_monotone},
                       {"resolution_monotone", e.monotonicity.resolution_monotone},
                       {"resolution_nested", e.monotonicity.resolution_nested},
                       {"violations", e.monotonicity.violations}};
  j["degenerate"] = e.degenerate;
  j["notes"] = e.notes;
  return Render(j);
}

std::string EquilibriumJson(const EquilibriumResult& result, const std::string& kernel,
                            const std::string& set, double r) {
  Json j = Header("equilibrium");
  j["kernel"] = kernel;
  j["set"] = set;
  j["r"] = r;
  const Json fields = EquilibriumFields(result, true);
  for (const auto& item : fields.items()) j[item.key()] = item.value();
  return Render(j);
}

std::string DualJson(const DualResult& d, const std::string& kernel, const std::string& set,
                     double r) {
  Json j = Header("dual");
  j["kernel"] = kernel;
  j["set"] = set;
  j["r"] = r;
  j["coefficients"] = Vector(d.coefficients);
  j["norm_sq"] = d.norm_sq;
  j["min_re_on_F"] = d.min_re_on_F;
  j["dual_value"] = d.dual_value;
  j["primal_energy"] = d.primal_energy;
  j["duality_product"] = d.duality_product;
  j["nonnegative_qp_value"] = OptionalNumber(d.nonnegative_qp_value);
  j["nonnegative_qp_converged"] = d.nonnegative_qp_converged;
  return Render(j);
}

std::string WeakTypeJson(const WeakTypeReport& r) {
  Json j = Header("weak_type");
  j["max_ratio"] = r.max_ratio;
  j["refinement_growth"] = r.refinement_growth;
  j["level_max_ratio"] = r.level_max_ratio;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"function_id", row.function_id},
                    {"alpha", row.alpha},
                    {"grid_level", row.grid_level},
                    {"grid_size", row.grid_size},
                    {"t", row.t},
                    {"superlevel_size", row.superlevel_size},
                    {"capacity_r", row.capacity_r},
                    {"cap_estimate", row.cap_estimate},
                    {"ratio", row.ratio},
                    {"error", row.error}});
  }
  j["rows"] = rows;
  return Render(j);
}

std::string UnboundednessJson(const UnboundednessSummary& s, const std::string& kernel,
                              const std::string& set) {
  Json j = Header("unboundedness");
  j["kernel"] = kernel;
  j["set"] = set;
  Json rows = Json::array();
  for (const auto& row : s.rows) {
    rows.push_back({{"n", row.n},
                    {"r", row.r},
                    {"cap", row.cap},
                    {"min_re_at_radius", row.min_re_at_radius},
                    {"min_re_on_set", row.min_re_on_set},
                    {"norm", row.norm},
                    {"budget", row.budget},
                    {"antipodal", row.antipodal}});
  }
  j["rows"] = rows;
  return Render(j);
}

std::string ScenarioReportJson(const ScenarioReport& r) {
  Json j = Header("scenario");
  j["scenario_id"] = r.id;
  j["pass"] = r.pass();
  Json inputs;
  for (const auto& [key, value] : r.inputs) inputs[key] = value;
  j["inputs"] = inputs.is_null() ? Json::object() : inputs;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"observed", c.observed},
                      {"expected", c.expected},
                      {"tolerance", c.tolerance},
                      {"rule", CheckRuleName(c.rule)},
                      {"basis", c.basis},
                      {"pass", c.Passes()}});
  }
  j["checks"] = checks;
  j["min_variational_residual"] = r.min_variational_residual;
  j["solved_instances"] = r.solved_instances;
  j["seconds"] = r.seconds;
  j["notes"] = r.notes;
  j["artifacts"] = r.artifacts;
  return Render(j);
}

void WriteEnergyCsv(const EnergyReport& r, const std::string& path) {
  std::ofstream out = OpenCsv(path);
  out << "# schema: " << kReportSchema << "\n"
      << "# r: dilation radius\n"
      << "# E_r: direct double sum over atoms\n"
      << "# series_E_r: truncated moment series (empty when not computed)\n"
      << "# increment: relative change of E_r from the previous radius\n"
      << "r,E_r,series_E_r,increment\n";
  for (std::size_t i = 0; i < r.r_grid.size(); ++i) {
    out << FormatNumber(r.r_grid[i]) << "," << FormatNumber(r.e_r_values[i]) << ",";
    if (i < r.series_values.size() && r.series_values[i]) out << FormatNumber(*r.series_values[i]);
    out << "," << FormatNumber(i < r.increments.size() ? r.increments[i] : 0.0) << "\n";
  }
  CloseCsv(out, path);
}

void WriteCapacityCsv(const CapacityEstimate& e, const std::string& path) {
  std::ofstream out = OpenCsv(path);
  out << "# schema: " << kReportSchema << "\n"
      << "# r: dilation radius; resolution: ladder value; atoms: discretized atom count\n"
      << "# cap_r: 1 / minimal energy; fw_gap: certificate gap\n"
      << "# variational_residual: min_i (G lambda)_i - energy; stage: final solver stage\n"
      << "# error: empty when the cell converged\n"
      << "r,resolution,atoms,cap_r,fw_gap,variational_residual,stage,error\n";
  for (const auto& c : e.cells) {
    out << FormatNumber(c.r) << "," << c.resolution << "," << c.atom_count << ",";
    if (c.result) {
      out << FormatNumber(c.result->cap_r) << "," << FormatNumber(c.result->fw_gap) << ","
          << FormatNumber(c.result->variational_residual) << "," << c.result->stage;
    } else {
      out << ",,,";
    }
    out << "," << Quote(c.error) << "\n";
  }
  CloseCsv(out, path);
}

void WriteWeakTypeCsv(const WeakTypeReport& r, const std::string& path) {
  std::ofstream out = OpenCsv(path);
  out << "# schema: " << kReportSchema << "\n"
      << "# t: superlevel threshold; cap_estimate: r-capacity of {M_alpha f > t} on the grid\n"
      << "# ratio: cap_estimate * t^2 / ||f||^2\n"
      << "# function, alpha, grid_level, grid_size, superlevel_size, capacity_r: context\n"
      << "t,cap_estimate,ratio,function,alpha,grid_level,grid_size,superlevel_size,capacity_r\n";
  for (const auto& row : r.rows) {
    out << FormatNumber(row.t) << "," << FormatNumber(row.cap_estimate) << ","
        << FormatNumber(row.ratio) << "," << Quote(row.function_id) << ","
        << FormatNumber(row.alpha) << "," << row.grid_level << "," << row.grid_size << ","
        << row.superlevel_size << "," << FormatNumber(row.capacity_r) << "\n";
  }
  CloseCsv(out, path);
}

void WriteUnboundednessCsv(const UnboundednessSummary& s, const std::string& path) {
  std::ofstream out = OpenCsv(path);
  out << "# schema: " << kReportSchema << "\n"
      << "# n: number of terms; r: radius r_n; cap: cap_{r_n}\n"
      << "# min_re_at_radius: min over atoms of Re F_n(r_n p)\n"
      << "# min_re_on_set: min over atoms of Re F_n(p)\n"
      << "# norm: ||F_n||; budget: sum of cap_k^{1/2}; antipodal: |F_n(-r_n p_0)|\n"
      << "n,r,cap,min_re_at_radius,min_re_on_set,norm,budget,antipodal\n";
  for (const auto& row : s.rows) {
    out << row.n << "," << FormatNumber(row.r) << "," << FormatNumber(row.cap) << ","
        << FormatNumber(row.min_re_at_radius) << "," << FormatNumber(row.min_re_on_set) << ","
        << FormatNumber(row.norm) << "," << FormatNumber(row.budget) << ","
        << FormatNumber(row.antipodal) << "\n";
  }
  CloseCsv(out, path);
}

}  // namespace ballcap
