// Copyright 2026 The Authors.
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

#include "tropical/report.hpp"

#include <algorithm>

#include "json.hpp"
#include "tropical/arrangement_file.hpp"
#include "tropical/axioms.hpp"
#include "tropical/duality.hpp"
#include "tropical/error.hpp"
#include "tropical/secondary.hpp"

namespace tropical {
namespace {

using json = nlohmann::ordered_json;

const char* PassFail(bool pass) { return pass ? "pass" : "fail"; }
const char* Bool(bool value) { return value ? "true" : "false"; }

std::string IndexList(const std::vector<std::size_t>& indices) {
  std::string out = "[";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(indices[k] + 1);
  }
  return out + "]";
}

// Accumulates the text and JSON renderings side by side.
class ReportWriter {
 public:
  ReportWriter(std::string_view name, std::string_view digest,
               const ReportOptions& options)
      : options_(options) {
    command_ = options.command.empty() ? std::string(name) : options.command;
    digest_ = std::string(digest);
    Line("command", command_);
    Line("input", digest_);
  }

  void Line(std::string_view key, std::string_view value) {
    text_.append(key).append(": ").append(value).append("\n");
  }
  void Raw(std::string_view line) { text_.append(line).append("\n"); }

  json& results() { return results_; }

  Report Finish(int exit_status) {
    Report report;
    report.exit_status = exit_status;
    if (options_.json) {
      json doc;
      doc["command"] = command_;
      doc["input_digest"] = digest_;
      doc["results"] = std::move(results_);
      doc["exit_status"] = exit_status;
      report.text = doc.dump(2) + "\n";
    } else {
      Line("exit", std::to_string(exit_status));
      report.text = std::move(text_);
    }
    return report;
  }

 private:
  const ReportOptions& options_;
  std::string command_;
  std::string digest_;
  std::string text_;
  json results_ = json::object();
};

void WriteParameters(ReportWriter& w, const Arrangement& arr) {
  w.Line("parameters",
         "n=" + std::to_string(arr.n()) + " d=" + std::to_string(arr.d()));
  w.results()["n"] = arr.n();
  w.results()["d"] = arr.d();
}

json CellJson(const CellGraph& cell, std::int64_t volume) {
  json edges = json::array();
  for (auto [i, j] : cell.Edges()) edges.push_back({i, j});
  return json{{"edges", std::move(edges)}, {"volume", volume}};
}

std::string GkzText(const GkzVector& gkz) {
  std::string out;
  for (std::size_t i = 0; i < gkz.n; ++i) {
    for (int j = 1; j <= gkz.d; ++j) {
      if (!out.empty()) out += ' ';
      out += "(" + std::to_string(i + 1) + "," + std::to_string(j) +
             ")=" + std::to_string(gkz.at(i, j));
    }
  }
  return out;
}

int SampleCount(const Arrangement& arr, const ReportOptions& options) {
  if (options.samples > 0) return options.samples;
  return std::max(static_cast<int>(2 * arr.n()) * arr.d(), kDefaultSamples);
}

}  // namespace

Report TypeOfReport(const Arrangement& arr, std::string_view digest,
                    std::string_view point_csv, const ReportOptions& options) {
  ProjectivePoint point = ParsePoint(point_csv);
  TypeVector type = TypeOfPoint(arr, point);
  ReportWriter w("type-of", digest, options);
  w.Line("point", point.ToString());
  w.Line("type", type.ToString());
  w.results()["point"] = point.ToString();
  w.results()["type"] = type.ToString();
  return w.Finish(0);
}

Report CheckReport(const Arrangement& arr, std::string_view digest,
                   const ReportOptions& options) {
  const std::size_t n = arr.n();
  const int d = arr.d();
  ReportWriter w("check", digest, options);
  WriteParameters(w, arr);
  json& results = w.results();

  // Genericity and the apex-size bound.
  const GenericityReport genericity = CheckGenericity(arr);
  w.Line("generic", Bool(genericity.generic));
  json apexes = json::array();
  bool size_bound_holds = true;
  for (const auto& apex : genericity.apexes) {
    std::string line = "total " + std::to_string(apex.total) + " bound " +
                       std::to_string(genericity.bound);
    if (apex.generic()) {
      line += " generic";
    } else {
      line += " non-generic on faces of " + IndexList(apex.offending);
    }
    w.Line("apex " + std::to_string(apex.index + 1), line);
    json offending = json::array();
    for (std::size_t l : apex.offending) offending.push_back(l + 1);
    apexes.push_back({{"apex", apex.index + 1},
                      {"total", apex.total},
                      {"generic", apex.generic()},
                      {"offending", std::move(offending)}});
    size_bound_holds = size_bound_holds && (apex.generic() ? apex.total == genericity.bound
                                                 : apex.total > genericity.bound);
  }
  results["genericity"] = {{"generic", genericity.generic},
                           {"bound", genericity.bound},
                           {"apexes", std::move(apexes)}};

  // Types and axioms.
  const TypeSet types = EnumerateTypes(arr, options.budget);
  w.Line("types", std::to_string(types.size()));
  results["type_count"] = types.size();
  const AxiomReport axioms = CheckTropicalOrientedMatroid(types, n, d);
  json ax = json::object();

  {
    const auto& r = axioms.boundary;
    std::string missing;
    json missing_json = json::array();
    for (int j : r.missing) {
      missing += (missing.empty() ? "" : ",") + std::to_string(j);
      missing_json.push_back(j);
    }
    w.Line("boundary", r.pass ? "pass" : "fail missing constant types for [" +
                                             missing + "]");
    ax["boundary"] = {{"pass", r.pass}, {"missing", std::move(missing_json)}};
  }
  {
    const auto& r = axioms.elimination;
    json entry = {{"pass", r.pass}};
    if (r.failure) {
      w.Line("elimination", "fail at A=" + r.failure->a.ToString() +
                                " B=" + r.failure->b.ToString() + " position " +
                                std::to_string(r.failure->position + 1));
      entry["a"] = r.failure->a.ToString();
      entry["b"] = r.failure->b.ToString();
      entry["position"] = r.failure->position + 1;
    } else {
      w.Line("elimination", "pass");
    }
    ax["elimination"] = std::move(entry);
  }
  {
    const auto& r = axioms.comparability;
    json entry = {{"pass", r.pass}};
    if (r.failure) {
      w.Line("comparability", "fail at A=" + r.failure->first.ToString() +
                                  " B=" + r.failure->second.ToString());
      entry["a"] = r.failure->first.ToString();
      entry["b"] = r.failure->second.ToString();
    } else {
      w.Line("comparability", "pass");
    }
    ax["comparability"] = std::move(entry);
  }
  {
    const auto& r = axioms.surrounding;
    json entry = {{"pass", r.pass}};
    if (r.failure) {
      w.Line("surrounding", "fail at " + r.failure->type.ToString() +
                                " partition " + r.failure->partition.ToString() +
                                " refinement " + r.failure->refinement.ToString() +
                                " absent");
      entry["type"] = r.failure->type.ToString();
      entry["partition"] = r.failure->partition.ToString();
      entry["refinement"] = r.failure->refinement.ToString();
    } else {
      w.Line("surrounding", "pass");
    }
    ax["surrounding"] = std::move(entry);
  }
  {
    const auto& r = axioms.local_refinement;
    json entry = {{"pass", r.pass}};
    if (r.failure) {
      w.Line("local_refinement",
             "fail at " + r.failure->type.ToString() + " position " +
                 std::to_string(r.failure->position + 1) + " singleton {" +
                 std::to_string(r.failure->label) + "}");
      entry["type"] = r.failure->type.ToString();
      entry["position"] = r.failure->position + 1;
      entry["singleton"] = r.failure->label;
    } else {
      w.Line("local_refinement", "pass");
    }
    ax["local_refinement"] = std::move(entry);
  }
  w.Line("is_tom", Bool(axioms.is_tom));
  ax["is_tom"] = axioms.is_tom;
  results["axioms"] = std::move(ax);

  // Dual subdivision.
  const Subdivision sub = DualSubdivision(arr, types);
  const bool triangulation = IsTriangulation(sub);
  std::int64_t volume_total = 0;
  for (const auto& cell : sub.maximal_cells) volume_total += NormalizedVolume(cell);
  w.Line("maximal_cells", std::to_string(sub.maximal_cells.size()));
  w.Line("triangulation", Bool(triangulation));
  const bool concurrent = genericity.generic && !triangulation;
  if (concurrent) {
    w.Line("note", "no apex lies on another hyperplane, but some vertex lies "
                   "on hyperplanes closing a cycle, so the subdivision has a "
                   "non-simplex cell");
  }
  results["subdivision"] = {{"maximal_cells", sub.maximal_cells.size()},
                            {"volume_total", volume_total},
                            {"triangulation", triangulation},
                            {"non_apex_degeneracy", concurrent}};

  // Internal consistency: any failure here is a bug, never a property of
  // valid input.
  bool complementarity = true;
  for (const auto& type : types) {
    complementarity = complementarity &&
                      ArrangementCellDim(arr, type) +
                              CellDim(TypeToGraph(type, d)) ==
                          static_cast<int>(n) + d - 2;
  }
  const std::vector<std::pair<std::string, bool>> checks = {
      {"apex_size_bound", size_bound_holds},
      {"boundary_axiom", axioms.boundary.pass},
      {"triangulation_is_generic_tom",
       !triangulation || (genericity.generic && axioms.is_tom)},
      {"triangulation_passes_local_refinement",
       !triangulation || axioms.local_refinement.pass},
      {"non_generic_not_triangulation", genericity.generic || !triangulation},
      {"non_generic_fails_local_refinement",
       genericity.generic || !axioms.local_refinement.pass},
      {"volume_sum", volume_total == ProductVolume(n, d)},
      {"dimension_complementarity", complementarity},
      {"regular_matches_dual", RegularSubdivision(arr.Matrix()) == sub},
  };
  bool consistent = true;
  json checks_json = json::array();
  for (const auto& [name, pass] : checks) {
    w.Line("consistency " + name, PassFail(pass));
    checks_json.push_back({{"name", name}, {"pass", pass}});
    consistent = consistent && pass;
  }
  w.Line("correspondence", consistent ? "consistent" : "inconsistent");
  results["correspondence"] = {{"consistent", consistent},
                               {"checks", std::move(checks_json)}};
  return w.Finish(consistent ? 0 : static_cast<int>(ErrorCode::kConsistency));
}

Report SubdivisionReport(const Arrangement& arr, std::string_view digest,
                         const ReportOptions& options) {
  ReportWriter w("subdivision", digest, options);
  WriteParameters(w, arr);
  json& results = w.results();

  const Subdivision sub = DualSubdivision(arr, options.budget);
  w.Line("maximal_cells", std::to_string(sub.maximal_cells.size()));
  json cells = json::array();
  std::int64_t total = 0;
  for (const auto& cell : sub.maximal_cells) {
    const std::int64_t volume = NormalizedVolume(cell);
    total += volume;
    w.Raw(cell.ToString() + " vol " + std::to_string(volume));
    cells.push_back(CellJson(cell, volume));
  }
  const std::int64_t expected = ProductVolume(arr.n(), arr.d());
  const bool triangulation = IsTriangulation(sub);
  w.Line("volume_total", std::to_string(total) + " of " + std::to_string(expected));
  w.Line("triangulation", Bool(triangulation));
  results["maximal_cells"] = std::move(cells);
  results["volume_total"] = total;
  results["product_volume"] = expected;
  results["triangulation"] = triangulation;

  int exit_status = total == expected ? 0 : static_cast<int>(ErrorCode::kConsistency);
  if (!options.flips) return w.Finish(exit_status);

  const int samples = SampleCount(arr, options);
  w.Line("flips", "seed=" + std::to_string(options.seed) +
                      " samples=" + std::to_string(samples));
  json flips = {{"seed", options.seed}, {"samples", samples}};
  if (IsGeneric(arr)) {
    w.Line("notice", "arrangement is generic; its subdivision is already a "
                     "triangulation and leaves no flip open");
    flips["notice"] = "generic";
    results["flips"] = std::move(flips);
    return w.Finish(exit_status);
  }

  const NonGenericFaceVerdict verdict =
      CheckNonGenericFace(arr, samples, options.seed, options.budget);
  w.Line("refining_triangulations", std::to_string(verdict.triangulations.size()));
  json triangulations = json::array();
  for (std::size_t t = 0; t < verdict.triangulations.size(); ++t) {
    w.Raw("triangulation " + std::to_string(t + 1) + ":");
    json simplices = json::array();
    for (const auto& cell : verdict.triangulations[t].maximal_cells) {
      w.Raw("  " + cell.ToString() + " vol 1");
      json edges = json::array();
      for (auto [i, j] : cell.Edges()) edges.push_back({i, j});
      simplices.push_back(std::move(edges));
    }
    w.Raw("  gkz " + GkzText(verdict.gkz[t]));
    triangulations.push_back(
        {{"simplices", std::move(simplices)}, {"gkz", verdict.gkz[t].entries}});
  }
  json flip_pairs = json::array();
  for (std::size_t a = 0; a < verdict.triangulations.size(); ++a) {
    for (std::size_t b = a + 1; b < verdict.triangulations.size(); ++b) {
      const bool related =
          FlipRelated(verdict.triangulations[a], verdict.triangulations[b]);
      w.Line("flip_related " + std::to_string(a + 1) + " " + std::to_string(b + 1),
             Bool(related));
      flip_pairs.push_back({{"pair", {a + 1, b + 1}}, {"flip", related}});
    }
  }
  w.Line("all_refine", Bool(verdict.all_refine));
  w.Line("face_dimension", std::to_string(verdict.face_dimension));
  w.Line("all_triangulations_regular", Bool(verdict.asserted));
  w.Line("positive_dimensional_face", Bool(verdict.holds));
  flips["triangulations"] = std::move(triangulations);
  flips["flip_related"] = std::move(flip_pairs);
  flips["all_refine"] = verdict.all_refine;
  flips["face_dimension"] = verdict.face_dimension;
  flips["all_triangulations_regular"] = verdict.asserted;
  flips["positive_dimensional_face"] = verdict.holds;
  results["flips"] = std::move(flips);
  if (verdict.asserted && !verdict.holds) {
    exit_status = static_cast<int>(ErrorCode::kConsistency);
  }
  return w.Finish(exit_status);
}

}  // namespace tropical
