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

// Acceptance suite: nine property checks over random and constructed
// arrangements. Prints one PASS/FAIL line per criterion and exits nonzero if
// any fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "process.hpp"
#include "support.hpp"
#include "tropical/arrangement_file.hpp"
#include "tropical/axioms.hpp"
#include "tropical/duality.hpp"
#include "tropical/geometry.hpp"
#include "tropical/secondary.hpp"

using namespace tropical;
using testing::Rng;

namespace {

// Collects the first few failure descriptions of one criterion.
class Outcome {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  void Info(const std::string& text) { info_ = text; }
  bool pass() const { return failures_ == 0 && checks_ > 0; }
  std::string Summary() const {
    std::string out = std::to_string(checks_) + " checks";
    if (!info_.empty()) out += ", " + info_;
    if (failures_ > 0) {
      out += ", " + std::to_string(failures_) + " failed";
      for (const auto& note : notes_) out += "\n      " + note;
    }
    return out;
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> notes_;
  std::string info_;
};

std::string Describe(const Arrangement& arr) {
  return SerializeArrangement(arr, FileFormat::kText);
}

struct Suites {
  std::vector<Arrangement> random;     // criterion 1
  std::vector<Arrangement> generic;    // criterion 2
  std::vector<testing::NonGenericInstance> non_generic;  // criterion 3
};

Suites BuildSuites() {
  Suites s;
  Rng rng(20261015);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + k % 3;
    const int d = 2 + (k / 3) % 3;
    s.random.push_back(testing::RandomArrangement(rng, n, d));
  }
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + k % 3;
    const int d = 2 + (k / 3) % 2;
    s.generic.push_back(testing::RandomGenericArrangement(rng, n, d));
  }
  for (int k = 0; k < 25; ++k) {
    const std::size_t n = 2 + k % 2;
    s.non_generic.push_back(testing::RandomNonGeneric(rng, n, k % 5 == 4));
  }
  return s;
}

Arrangement E2() { return Arrangement(RationalMatrix{{0, 0, 0}, {1, 1, 0}}); }

constexpr int kSamples = 64;

// 1. Apex sizes against n + d - 1.
Outcome ApexBound(const Suites& s) {
  Outcome o;
  int non_generic = 0;
  std::vector<Arrangement> all = s.random;
  for (const auto& inst : s.non_generic) all.push_back(inst.arrangement);
  for (const auto& arr : all) {
    const GenericityReport r = CheckGenericity(arr);
    for (const auto& apex : r.apexes) {
      const std::string where = "apex " + std::to_string(apex.index + 1) + " of\n" + Describe(arr);
      o.Expect(apex.total >= r.bound, "total below bound at " + where);
      if (apex.generic()) {
        o.Expect(apex.total == r.bound, "generic apex above bound at " + where);
      } else {
        ++non_generic;
        o.Expect(apex.total > r.bound, "non-generic apex at bound at " + where);
      }
    }
  }
  o.Info(std::to_string(s.random.size()) + " random and " + std::to_string(s.non_generic.size()) +
         " constructed arrangements, " + std::to_string(non_generic) + " non-generic apexes");
  return o;
}

// 2. Generic arrangements satisfy the four axioms.
Outcome GenericTom(const Suites& s) {
  Outcome o;
  for (const auto& arr : s.generic) {
    const AxiomReport r = CheckTropicalOrientedMatroid(EnumerateTypes(arr), arr.n(), arr.d());
    o.Expect(r.boundary.pass && r.elimination.pass && r.comparability.pass &&
                 r.surrounding.pass && r.is_tom,
             "not a tropical oriented matroid:\n" + Describe(arr));
  }
  o.Info(std::to_string(s.generic.size()) + " generic arrangements");
  return o;
}

// 3. Local refinement fails at the constructed non-generic apex.
Outcome NonGenericRefinement(const Suites& s) {
  Outcome o;
  int surrounding_pass = 0;
  for (const auto& inst : s.non_generic) {
    const Arrangement& arr = inst.arrangement;
    const TypeSet types = EnumerateTypes(arr);
    const std::string where = "moved " + std::to_string(inst.moved + 1) + " onto " +
                              std::to_string(inst.host + 1) + ":\n" + Describe(arr);
    o.Expect(!CheckLocalRefinement(types).pass, "local refinement passed, " + where);
    const TypeVector apex = ApexType(arr, inst.moved);
    bool at_apex = false;
    for (const auto& f : LocalRefinementFailures(types)) {
      at_apex = at_apex || (f.type == apex && f.position == inst.host);
    }
    o.Expect(at_apex, "no failure at the apex and incidence, " + where);
    const std::vector<std::size_t> offending = CheckGenericity(arr).apexes[inst.moved].offending;
    o.Expect(std::find(offending.begin(), offending.end(), inst.host) != offending.end(),
             "genericity witness differs, " + where);
    o.Expect(!IsGeneric(arr), "reported generic, " + where);
    surrounding_pass += CheckSurrounding(types, arr.d()).pass;
  }
  o.Info(std::to_string(s.non_generic.size()) + " constructed arrangements, surrounding passes on " +
         std::to_string(surrounding_pass) + " (informational)");
  return o;
}

// 4. Generic arrangements give triangulations by spanning trees.
Outcome GenericTriangulation(const Suites& s) {
  Outcome o;
  for (const auto& arr : s.generic) {
    const Subdivision sub = DualSubdivision(arr);
    const std::uint64_t expected = testing::DraconianCount(CompleteGraph(arr.n(), arr.d()));
    o.Expect(expected == testing::Binomial(static_cast<int>(arr.n()) + arr.d() - 2,
                                           static_cast<int>(arr.n()) - 1),
             "volume oracle disagrees with the binomial");
    o.Expect(IsTriangulation(sub), "not a triangulation:\n" + Describe(arr));
    o.Expect(sub.maximal_cells.size() == expected,
             "cell count " + std::to_string(sub.maximal_cells.size()) + " for\n" + Describe(arr));
    for (const auto& cell : sub.maximal_cells) {
      o.Expect(IsSpanningTree(cell), "cell " + cell.ToString() + " is not a spanning tree");
    }
  }
  return o;
}

// 5. Refining triangulations of non-generic arrangements.
Outcome NonGenericFaces(const Suites& s) {
  Outcome o;
  const Subdivision e2 = DualSubdivision(E2());
  o.Expect(e2.maximal_cells.size() == 2, "E2 cell count");
  if (e2.maximal_cells.size() == 2) {
    const CellGraph& simplex = e2.maximal_cells[0];
    const CellGraph& pyramid = e2.maximal_cells[1];
    o.Expect(simplex.EdgeCount() == 4 && NormalizedVolume(simplex) == 1, "E2 simplex");
    o.Expect(pyramid.EdgeCount() == 5 && NormalizedVolume(pyramid) == 2, "E2 pyramid");
  }
  const auto e2_tri = RefiningTriangulations(E2(), kSamples);
  o.Expect(e2_tri.size() == 2, "E2 has " + std::to_string(e2_tri.size()) + " refining triangulations");
  if (e2_tri.size() == 2) {
    const GkzVector a = ComputeGkzVector(e2_tri[0]);
    const GkzVector b = ComputeGkzVector(e2_tri[1]);
    o.Expect(a != b, "E2 GKZ vectors coincide");
    o.Expect(AffineHullDimension({a, b}) == 1, "E2 face dimension");
  }
  int min_tri = 1 << 30, min_dim = 1 << 30;
  for (const auto& inst : s.non_generic) {
    const NonGenericFaceVerdict v = CheckNonGenericFace(inst.arrangement, kSamples);
    min_tri = std::min<int>(min_tri, v.triangulations.size());
    min_dim = std::min(min_dim, v.face_dimension);
    o.Expect(v.triangulations.size() >= 2,
             std::to_string(v.triangulations.size()) + " triangulations for\n" +
                 Describe(inst.arrangement));
    o.Expect(v.face_dimension >= 1, "face dimension " + std::to_string(v.face_dimension) +
                                        " for\n" + Describe(inst.arrangement));
    o.Expect(v.all_refine, "a triangulation does not refine the subdivision");
  }
  o.Info("suite 3 minimum: " + std::to_string(min_tri) + " triangulations, face dimension " +
         std::to_string(min_dim));
  return o;
}

// 6. Lower envelope of the apex heights equals the dual subdivision.
Outcome RegularEqualsDual(const Suites& s) {
  Outcome o;
  auto compare = [&](const Arrangement& arr) {
    o.Expect(RegularSubdivision(arr.Matrix()) == DualSubdivision(arr),
             "regular and dual differ for\n" + Describe(arr));
  };
  for (const auto& arr : s.generic) compare(arr);
  for (const auto& inst : s.non_generic) compare(inst.arrangement);
  return o;
}

// 7. Enumerated full-dimensional types against 10,000 sampled points.
Outcome SamplingAgreement() {
  Outcome o;
  Rng rng(7);
  int instances = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int d = 2; d <= 4; ++d) {
      const bool small = n <= 3 && d <= 3;
      for (int rep = 0; rep < (small ? 3 : 1); ++rep) {
        const Arrangement arr = testing::RandomArrangement(rng, n, d);
        const TypeSet types = EnumerateTypes(arr);
        std::set<TypeVector> full;
        for (const auto& t : types) {
          if (ArrangementCellDim(arr, t) == d - 1) full.insert(t);
        }
        std::set<TypeVector> hit;
        for (const auto& x : testing::SamplePoints(arr.Matrix(), 10000, rng)) {
          const TypeVector t(testing::NaiveType(arr.Matrix(), x));
          o.Expect(types.count(t) == 1, "sampled type " + t.ToString() + " not enumerated for\n" +
                                            Describe(arr));
          if (TypeTotalSize(t) == static_cast<int>(n)) hit.insert(t);
        }
        for (const auto& t : hit) {
          o.Expect(full.count(t) == 1, "extra full-dimensional type " + t.ToString());
        }
        if (small) {
          o.Expect(hit == full, "sampling missed " + std::to_string(full.size() - hit.size()) +
                                    " full-dimensional types of\n" + Describe(arr));
        }
        ++instances;
      }
    }
  }
  o.Info(std::to_string(instances) + " arrangements");
  return o;
}

// 8. Dimension complementarity, volume sums and GKZ sums.
Outcome StructuralInvariants(const Suites& s) {
  Outcome o;
  long types_checked = 0, subdivisions = 0, triangulations = 0;
  auto check_subdivision = [&](const Subdivision& sub) {
    std::int64_t total = 0;
    for (const auto& cell : sub.maximal_cells) total += NormalizedVolume(cell);
    o.Expect(total == ProductVolume(sub.n, sub.d), "volume sum " + std::to_string(total));
    ++subdivisions;
    if (IsTriangulation(sub)) {
      const std::int64_t expected = (static_cast<std::int64_t>(sub.n) + sub.d - 1) *
                                    ProductVolume(sub.n, sub.d);
      o.Expect(ComputeGkzVector(sub).Sum() == expected, "GKZ sum");
      ++triangulations;
    }
  };
  auto check_arrangement = [&](const Arrangement& arr) {
    const TypeSet types = EnumerateTypes(arr);
    const int target = static_cast<int>(arr.n()) + arr.d() - 2;
    for (const auto& t : types) {
      o.Expect(ArrangementCellDim(arr, t) + CellDim(TypeToGraph(t, arr.d())) == target,
               "complementarity fails at " + t.ToString());
      ++types_checked;
    }
    check_subdivision(DualSubdivision(arr, types));
  };
  for (const auto& arr : s.random) check_arrangement(arr);
  for (const auto& arr : s.generic) check_arrangement(arr);
  for (const auto& inst : s.non_generic) {
    check_arrangement(inst.arrangement);
    for (const auto& t : RefiningTriangulations(inst.arrangement, kSamples)) check_subdivision(t);
  }
  o.Info(std::to_string(types_checked) + " types, " + std::to_string(subdivisions) +
         " subdivisions, " + std::to_string(triangulations) + " triangulations");
  return o;
}

int CountBold(const std::string& path, int& rays) {
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(path, tree);
  int bold = 0;
  rays = 0;
  for (const auto& [name, group] : tree.get_child("svg")) {
    if (name != "g") continue;
    for (const auto& [tag, node] : group) {
      if (tag != "line") continue;
      const std::string cls = node.get<std::string>("<xmlattr>.class", "");
      rays += cls.rfind("ray", 0) == 0;
      bold += cls == "ray bold";
    }
  }
  return bold;
}

// A random arrangement file with non-canonical spellings of its entries.
std::string RandomFile(Rng& rng, bool text) {
  const std::size_t n = 1 + rng() % 4;
  const int d = 2 + static_cast<int>(rng() % 4);
  std::ostringstream out;
  auto entry = [&]() {
    const Rational value = testing::RandomRational(rng);
    switch (rng() % 4) {
      case 0: return FormatRational(value);
      case 1: {
        const long k = 2 + static_cast<long>(rng() % 5);
        return Rational(value.get_num() * k).get_str() + "/" +
               Rational(value.get_den() * k).get_str();
      }
      case 2: return std::to_string(static_cast<long>(rng() % 200) - 100) + ".25";
      default: return std::string(value < 0 ? "-" : "+") + FormatRational(abs(value));
    }
  };
  if (text) {
    out << n << " " << d << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (int j = 0; j < d; ++j) out << (j ? "  " : "") << entry();
      out << "\n";
    }
  } else {
    out << "{\"d\": " << d << ", \"n\": " << n << ", \"apexes\": [";
    for (std::size_t i = 0; i < n; ++i) {
      out << (i ? ", " : "") << "[";
      for (int j = 0; j < d; ++j) out << (j ? ", " : "") << "\"" << entry() << "\"";
      out << "]";
    }
    out << "]}";
  }
  return out.str();
}

// 9. Determinism, file round-trips and rendering through the CLI.
Outcome CliBehaviour() {
  Outcome o;
  using testing::DataFile;
  const std::vector<std::string> commands = {
      "check --input " + DataFile("three_nongeneric.json"),
      "check --json --input " + DataFile("pair.json"),
      "subdivision --flips --seed 7 --input " + DataFile("three_nongeneric.json"),
      "subdivision --flips --seed 7 --json --input " + DataFile("pair.json"),
      "type-of --input " + DataFile("pair.txt") + " --format text --point 1/2,0,0",
  };
  for (const auto& c : commands) {
    const auto first = testing::RunCli(c);
    const auto second = testing::RunCli(c);
    o.Expect(first.status == 0 && !first.out.empty(), "command failed: " + c);
    o.Expect(first.out == second.out && first.status == second.status, "output differs: " + c);
  }

  Rng rng(99);
  const std::string dir = "/tmp/tropical_acceptance_" + std::to_string(getpid());
  std::filesystem::create_directories(dir);
  for (int k = 0; k < 100; ++k) {
    const bool text = k % 2 == 1;
    const std::string path = dir + "/random_" + std::to_string(k) + (text ? ".txt" : ".json");
    std::ofstream(path) << RandomFile(rng, text);
    std::ifstream in(path);
    const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const FileFormat format = text ? FileFormat::kText : FileFormat::kJson;
    const Arrangement first = ParseArrangement(data, format);
    for (FileFormat out : {FileFormat::kJson, FileFormat::kText}) {
      const std::string serialized = SerializeArrangement(first, out);
      o.Expect(ParseArrangement(serialized, out) == first, "round trip failed for " + path);
    }
  }

  struct RenderCase {
    const char* file;
    bool generic;
  };
  for (const RenderCase& rc : {RenderCase{"three_generic.json", true},
                               RenderCase{"three_nongeneric.json", false}}) {
    const std::string svg = dir + "/" + rc.file + ".svg";
    const auto r = testing::RunCli("render --input " + DataFile(rc.file) + " --out " +
                                   testing::Quote(svg));
    o.Expect(r.status == 0, std::string("render failed for ") + rc.file);
    try {
      int rays = 0;
      const int bold = CountBold(svg, rays);
      o.Expect(rays == 9, std::string("ray count for ") + rc.file);
      o.Expect(rc.generic ? bold == 0 : bold >= 3, std::string("bold count for ") + rc.file);
    } catch (const std::exception& e) {
      o.Expect(false, std::string("malformed SVG for ") + rc.file + ": " + e.what());
    }
  }
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const Suites suites = BuildSuites();
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"apex type sizes against n+d-1", [&] { return ApexBound(suites); }},
      {"generic arrangements are tropical oriented matroids", [&] { return GenericTom(suites); }},
      {"non-generic apexes fail local refinement", [&] { return NonGenericRefinement(suites); }},
      {"generic arrangements triangulate by spanning trees", [&] { return GenericTriangulation(suites); }},
      {"non-generic arrangements span positive-dimensional faces", [&] { return NonGenericFaces(suites); }},
      {"regular subdivision equals dual subdivision", [&] { return RegularEqualsDual(suites); }},
      {"full-dimensional types match random sampling", [] { return SamplingAgreement(); }},
      {"structural invariants", [&] { return StructuralInvariants(suites); }},
      {"command-line determinism, round-trips and rendering", [] { return CliBehaviour(); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].run();
    } catch (const std::exception& e) {
      outcome.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !outcome.pass();
    std::printf("[%s] %zu. %s (%s; %.1fs)\n", outcome.pass() ? "PASS" : "FAIL", k + 1,
                criteria[k].name, outcome.Summary().c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
