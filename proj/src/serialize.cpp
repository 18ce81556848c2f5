// Copyright 2026 The cutgap Authors
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

#include "cutgap/serialize.hpp"

#include <set>

#include "cutgap/error.hpp"
#include "cutgap/graph_io.hpp"
#include "json.hpp"

namespace cutgap {

namespace {

using nlohmann::json;

[[noreturn]] void ParseFail(const std::string& what) { Fail(ErrorKind::kParse, what); }

std::string Dump(const json& doc) { return doc.dump(2) + "\n"; }

json ParseDocument(std::string_view text, const std::string& what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    ParseFail(what + " JSON: " + e.what());
  }
  if (!doc.is_object()) ParseFail(what + " JSON: top level must be an object");
  return doc;
}

const json& Field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) ParseFail(where + ": must be an object");
  if (!obj.contains(key)) ParseFail(where + ": missing field \"" + key + "\"");
  return obj.at(key);
}

long Int(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_number_integer()) ParseFail(where + ": field \"" + key + "\" must be an integer");
  return v.get<long>();
}

bool Bool(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_boolean()) ParseFail(where + ": field \"" + key + "\" must be a boolean");
  return v.get<bool>();
}

std::string Str(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_string()) ParseFail(where + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

Rational Rat(const json& obj, const char* key, const std::string& where) {
  const std::string text = Str(obj, key, where);
  try {
    return ParseRational(text);
  } catch (const Error& e) {
    ParseFail(where + ": field \"" + key + "\": " + e.what());
  }
}

const json& Array(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_array()) ParseFail(where + ": field \"" + key + "\" must be an array");
  return v;
}

std::string At(const std::string& where, const char* key, std::size_t i) {
  return where + " " + key + "[" + std::to_string(i) + "]";
}

int VertexCount(const json& obj, const std::string& where) {
  const long n = Int(obj, "n", where);
  if (n < 1 || n > 100000) ParseFail(where + ": field \"n\" must be between 1 and 100000");
  return static_cast<int>(n);
}

VertexId Vertex(const json& obj, const char* key, int n, const std::string& where) {
  const long v = Int(obj, key, where);
  if (v < 0 || v >= n) ParseFail(where + ": field \"" + key + "\" is out of range");
  return static_cast<VertexId>(v);
}

json CutJson(const CutSet& s) { return s.Members(); }

CutSet ParseCut(const json& v, int n, const std::string& where) {
  if (!v.is_array()) ParseFail(where + ": must be an array of vertices");
  CutSet s(n);
  for (const auto& m : v) {
    if (!m.is_number_integer()) ParseFail(where + ": vertices must be integers");
    const long id = m.get<long>();
    if (id < 0 || id >= n) ParseFail(where + ": vertex out of range");
    s.insert(static_cast<VertexId>(id));
  }
  return s;
}

std::string PairKey(VertexPair e) {
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}

json SolutionObject(const FractionalSolution& x) {
  json doc;
  doc["n"] = x.vertex_count();
  doc["values"] = json::object();
  for (const auto& [e, v] : x.values()) doc["values"][PairKey(e)] = ToString(v);
  if (!x.graph_ref.empty()) doc["graph"] = x.graph_ref;
  return doc;
}

// Keys are "u-v" with decimal vertex ids.
VertexPair ParsePairKey(const std::string& key, int n, const std::string& where) {
  const auto dash = key.find('-');
  auto number = [&](std::string_view digits) {
    if (digits.empty() || digits.size() > 9) ParseFail(where + ": key \"" + key + "\" is not \"u-v\"");
    long v = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') ParseFail(where + ": key \"" + key + "\" is not \"u-v\"");
      v = v * 10 + (ch - '0');
    }
    if (v >= n) ParseFail(where + ": key \"" + key + "\" has a vertex out of range");
    return static_cast<VertexId>(v);
  };
  if (dash == std::string::npos) ParseFail(where + ": key \"" + key + "\" is not \"u-v\"");
  const std::string_view view(key);
  const VertexId u = number(view.substr(0, dash));
  const VertexId v = number(view.substr(dash + 1));
  if (u == v) ParseFail(where + ": key \"" + key + "\" is a self-loop");
  return {u, v};
}

FractionalSolution SolutionFrom(const json& doc, const std::string& where) {
  const int n = VertexCount(doc, where);
  FractionalSolution x(n);
  const json& values = Field(doc, "values", where);
  if (!values.is_object()) ParseFail(where + ": field \"values\" must be an object");
  for (const auto& [key, value] : values.items()) {
    const std::string at = where + " values[\"" + key + "\"]";
    const auto [u, v] = ParsePairKey(key, n, where + " values");
    if (!value.is_string()) ParseFail(at + ": must be a \"p/q\" string");
    Rational r;
    try {
      r = ParseRational(value.get<std::string>());
    } catch (const Error& e) {
      ParseFail(at + ": " + e.what());
    }
    if (r < 0) ParseFail(at + ": must be nonnegative");
    if (x.values().count(MakePair(u, v))) ParseFail(at + ": repeated vertex pair");
    x.Set(u, v, r);
  }
  if (doc.contains("graph")) x.graph_ref = Str(doc, "graph", where);
  return x;
}

json DirectedObject(const DirectedSolution& y) {
  json doc;
  doc["n"] = y.vertex_count();
  doc["arcs"] = json::array();
  for (const auto& [a, v] : y.values()) {
    doc["arcs"].push_back({{"from", a.first}, {"to", a.second}, {"value", ToString(v)}});
  }
  return doc;
}

json MultisetArray(const EdgeMultiset& f) {
  json out = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0) out.push_back({{"edge", i}, {"count", f[i]}});
  }
  return out;
}

EdgeMultiset MultisetFrom(const json& arr, std::size_t edge_count, const std::string& where) {
  if (!arr.is_array()) ParseFail(where + ": must be an array");
  EdgeMultiset f(edge_count, 0);
  std::set<long> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const long id = Int(arr[i], "edge", at);
    const long count = Int(arr[i], "count", at);
    if (id < 0 || static_cast<std::size_t>(id) >= edge_count) {
      ParseFail(at + ": field \"edge\" is out of range");
    }
    if (count < 1) ParseFail(at + ": field \"count\" must be positive");
    if (!seen.insert(id).second) ParseFail(at + ": repeated edge id");
    f[id] = static_cast<int>(count);
  }
  return f;
}

json MinCutObject(const CutSet& side, const Rational& value) {
  return {{"side", CutJson(side)}, {"value", ToString(value)}};
}

json StatsObject(const SolutionStats& s) {
  return {{"fractionality", ToString(s.fractionality)},
          {"denominator", s.denominator.get_str()},
          {"max_support_degree", s.max_support_degree},
          {"n", s.n},
          {"support_edges", s.support_edges}};
}

json SplitObject(const SplitResult& split) {
  return {{"feasible", split.feasible},
          {"nodes", split.nodes},
          {"edges", split.part_a.size()},
          {"part_a", MultisetArray(split.part_a)},
          {"part_b", MultisetArray(split.part_b)}};
}

}  // namespace

std::string SolutionToJson(const FractionalSolution& x) { return Dump(SolutionObject(x)); }

FractionalSolution ParseSolutionJson(std::string_view text) {
  return SolutionFrom(ParseDocument(text, "solution"), "solution");
}

std::string DirectedToJson(const DirectedSolution& y) { return Dump(DirectedObject(y)); }

DirectedSolution ParseDirectedJson(std::string_view text) {
  const json doc = ParseDocument(text, "directed solution");
  const std::string where = "directed solution";
  const int n = VertexCount(doc, where);
  DirectedSolution y(n);
  const json& arcs = Array(doc, "arcs", where);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string at = At(where, "arcs", i);
    const VertexId from = Vertex(arcs[i], "from", n, at);
    const VertexId to = Vertex(arcs[i], "to", n, at);
    if (from == to) ParseFail(at + ": self-loop");
    const Rational value = Rat(arcs[i], "value", at);
    if (value < 0) ParseFail(at + ": field \"value\" must be nonnegative");
    if (y.values().count({from, to})) ParseFail(at + ": repeated arc");
    y.Set(from, to, value);
  }
  return y;
}

std::string CertificateToJson(const ExtremenessResult& result, int n, int k) {
  json doc;
  doc["n"] = n;
  doc["k"] = k;
  doc["extreme"] = result.extreme;
  if (result.certificate) {
    const auto& c = *result.certificate;
    json cert;
    cert["variables"] = json::array();
    for (const auto& [u, v] : c.variables) cert["variables"].push_back({u, v});
    cert["tight_family"] = json::array();
    for (const auto& s : c.tight_family.sets) cert["tight_family"].push_back(CutJson(s));
    cert["tight_cuts"] = json::array();
    for (const auto& s : c.tight_cuts) cert["tight_cuts"].push_back(CutJson(s));
    cert["tight_rows"] = c.tight_rows;
    cert["rank"] = c.rank;
    cert["laminar_rank"] = c.laminar_rank;
    cert["min_cut"] = MinCutObject(c.min_cut, c.min_cut_value);
    cert["used_family_hint"] = c.used_family_hint;
    doc["certificate"] = std::move(cert);
  }
  if (result.refutation) {
    const auto& r = *result.refutation;
    json ref;
    ref["stage"] = ToString(r.stage);
    if (r.violated_cut) ref["violated_cut"] = MinCutObject(r.violated_cut->cut, r.violated_cut->value);
    if (r.violated_degree) {
      ref["violated_degree"] = {{"vertex", r.violated_degree->vertex},
                                {"degree", ToString(r.violated_degree->degree)}};
    }
    if (r.plus) ref["plus"] = SolutionObject(*r.plus);
    if (r.minus) ref["minus"] = SolutionObject(*r.minus);
    ref["rank"] = r.rank;
    ref["variables"] = r.variables;
    doc["refutation"] = std::move(ref);
  }
  return Dump(doc);
}

ParsedCertificate ParseCertificateJson(std::string_view text) {
  const json doc = ParseDocument(text, "certificate");
  const std::string where = "certificate";
  ParsedCertificate out;
  out.n = VertexCount(doc, where);
  out.k = static_cast<int>(Int(doc, "k", where));
  out.result.extreme = Bool(doc, "extreme", where);
  const int n = out.n;
  auto count = [](const json& obj, const char* key, const std::string& at) {
    const long v = Int(obj, key, at);
    if (v < 0) ParseFail(at + ": field \"" + key + "\" must be nonnegative");
    return static_cast<std::size_t>(v);
  };
  if (doc.contains("certificate")) {
    const json& c = doc["certificate"];
    const std::string at = "certificate.certificate";
    ExtremenessCertificate cert;
    const json& vars = Array(c, "variables", at);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const json& p = vars[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
          !p[1].is_number_integer()) {
        ParseFail(At(at, "variables", i) + ": must be a pair of vertices");
      }
      cert.variables.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    cert.tight_family.n = n;
    const json& family = Array(c, "tight_family", at);
    for (std::size_t i = 0; i < family.size(); ++i) {
      cert.tight_family.sets.push_back(ParseCut(family[i], n, At(at, "tight_family", i)));
    }
    const json& cuts = Array(c, "tight_cuts", at);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      cert.tight_cuts.push_back(ParseCut(cuts[i], n, At(at, "tight_cuts", i)));
    }
    cert.tight_rows = count(c, "tight_rows", at);
    cert.rank = count(c, "rank", at);
    cert.laminar_rank = count(c, "laminar_rank", at);
    const json& mc = Field(c, "min_cut", at);
    cert.min_cut = ParseCut(Field(mc, "side", at + ".min_cut"), n, at + ".min_cut.side");
    cert.min_cut_value = Rat(mc, "value", at + ".min_cut");
    cert.used_family_hint = Bool(c, "used_family_hint", at);
    out.result.certificate = std::move(cert);
  }
  if (doc.contains("refutation")) {
    const json& r = doc["refutation"];
    const std::string at = "certificate.refutation";
    ExtremenessRefutation ref;
    const std::string stage = Str(r, "stage", at);
    if (stage == "infeasible") {
      ref.stage = VerifyStage::kInfeasible;
    } else if (stage == "not-unique") {
      ref.stage = VerifyStage::kNotUnique;
    } else if (stage == "certified") {
      ref.stage = VerifyStage::kCertified;
    } else {
      ParseFail(at + ": unknown stage \"" + stage + "\"");
    }
    if (r.contains("violated_cut")) {
      const json& vc = r["violated_cut"];
      ref.violated_cut = CutViolation{ParseCut(Field(vc, "side", at), n, at + ".violated_cut.side"),
                                      Rat(vc, "value", at + ".violated_cut")};
    }
    if (r.contains("violated_degree")) {
      const json& vd = r["violated_degree"];
      ref.violated_degree = DegreeViolation{Vertex(vd, "vertex", n, at + ".violated_degree"),
                                            Rat(vd, "degree", at + ".violated_degree")};
    }
    if (r.contains("plus")) ref.plus = SolutionFrom(r["plus"], at + ".plus");
    if (r.contains("minus")) ref.minus = SolutionFrom(r["minus"], at + ".minus");
    ref.rank = count(r, "rank", at);
    ref.variables = count(r, "variables", at);
    out.result.refutation = std::move(ref);
  }
  return out;
}

std::string PathCoverToJson(const PathCoverInstance& inst) {
  json doc = json::parse(GraphToJson(inst.tree));
  doc["pairs"] = json::array();
  for (const auto& [u, v] : inst.pairs) doc["pairs"].push_back({u, v});
  return Dump(doc);
}

PathCoverInstance ParsePathCoverJson(std::string_view text) {
  json doc = ParseDocument(text, "path cover instance");
  const std::string where = "path cover instance";
  const json pairs = Array(doc, "pairs", where);
  doc.erase("pairs");
  PathCoverInstance inst{ParseGraphJson(doc.dump()), {}};
  const int n = inst.tree.vertex_count();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const json& p = pairs[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      ParseFail(At(where, "pairs", i) + ": must be a pair of vertices");
    }
    const long u = p[0].get<long>();
    const long v = p[1].get<long>();
    if (u < 0 || v < 0 || u >= n || v >= n) ParseFail(At(where, "pairs", i) + ": vertex out of range");
    inst.pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return inst;
}

std::string SetCoverToJson(const SetCoverInstance& sc) {
  json doc;
  doc["ground"] = sc.ground;
  doc["triples"] = json::array();
  for (const auto& t : sc.triples) doc["triples"].push_back({t[0], t[1], t[2]});
  return Dump(doc);
}

SetCoverInstance ParseSetCoverJson(std::string_view text) {
  const json doc = ParseDocument(text, "set cover instance");
  const std::string where = "set cover instance";
  SetCoverInstance sc;
  const long ground = Int(doc, "ground", where);
  if (ground < 0 || ground > 64) ParseFail(where + ": field \"ground\" must be between 0 and 64");
  sc.ground = static_cast<int>(ground);
  const json& triples = Array(doc, "triples", where);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const json& t = triples[i];
    if (!t.is_array() || t.size() != 3) ParseFail(At(where, "triples", i) + ": must list 3 elements");
    std::array<int, 3> triple{};
    for (int j = 0; j < 3; ++j) {
      if (!t[j].is_number_integer()) ParseFail(At(where, "triples", i) + ": elements must be integers");
      triple[j] = t[j].get<int>();
    }
    sc.triples.push_back(triple);
  }
  return sc;
}

std::string MultisetToJson(const EdgeMultiset& f) {
  json doc;
  doc["multiset"] = MultisetArray(f);
  return Dump(doc);
}

EdgeMultiset ParseMultisetJson(std::string_view text, std::size_t edge_count) {
  const json doc = ParseDocument(text, "multiset");
  return MultisetFrom(Array(doc, "multiset", "multiset"), edge_count, "multiset entries");
}

std::string GapToJson(const GapResult& gap) {
  json doc;
  doc["t"] = ToString(gap.t);
  doc["columns"] = gap.columns;
  doc["iterations"] = gap.iterations;
  doc["combination"] = json::array();
  for (const auto& [c, w] : gap.combination) {
    doc["combination"].push_back({{"cycle", c.cycle}, {"weight", ToString(w)}});
  }
  return Dump(doc);
}

GapResult ParseGapJson(std::string_view text) {
  const json doc = ParseDocument(text, "gap result");
  const std::string where = "gap result";
  GapResult gap;
  gap.t = Rat(doc, "t", where);
  gap.columns = static_cast<int>(Int(doc, "columns", where));
  gap.iterations = static_cast<int>(Int(doc, "iterations", where));
  const json& combination = Array(doc, "combination", where);
  for (std::size_t i = 0; i < combination.size(); ++i) {
    const std::string at = At(where, "combination", i);
    const json& cycle = Array(combination[i], "cycle", at);
    CycleColumn column;
    std::set<long> seen;
    for (const auto& v : cycle) {
      if (!v.is_number_integer()) ParseFail(at + ": cycle vertices must be integers");
      const long id = v.get<long>();
      if (id < 0 || id >= static_cast<long>(cycle.size()) || !seen.insert(id).second) {
        ParseFail(at + ": field \"cycle\" must be a permutation of 0..n-1");
      }
      column.cycle.push_back(static_cast<VertexId>(id));
    }
    const Rational w = Rat(combination[i], "weight", at);
    if (w <= 0) ParseFail(at + ": field \"weight\" must be positive");
    gap.combination.emplace_back(std::move(column), w);
  }
  return gap;
}

std::string SplitToJson(const SplitResult& split) { return Dump(SplitObject(split)); }

SplitResult ParseSplitJson(std::string_view text) {
  const json doc = ParseDocument(text, "split result");
  const std::string where = "split result";
  SplitResult split;
  split.feasible = Bool(doc, "feasible", where);
  split.nodes = Int(doc, "nodes", where);
  const long edges = Int(doc, "edges", where);
  if (edges < 0) ParseFail(where + ": field \"edges\" must be nonnegative");
  split.part_a = MultisetFrom(Array(doc, "part_a", where), edges, where + " part_a");
  split.part_b = MultisetFrom(Array(doc, "part_b", where), edges, where + " part_b");
  return split;
}

std::string StatsToJson(const SolutionStats& stats) { return Dump(StatsObject(stats)); }

std::string FeasibilityToJson(const FeasibilityReport& report, int k, LPVariant variant) {
  json doc;
  doc["k"] = k;
  doc["variant"] = ToString(variant);
  doc["feasible"] = report.feasible;
  if (report.violated_cut) {
    doc["violated_cut"] = MinCutObject(report.violated_cut->cut, report.violated_cut->value);
  }
  if (report.violated_degree) {
    doc["violated_degree"] = {{"vertex", report.violated_degree->vertex},
                              {"degree", ToString(report.violated_degree->degree)}};
  }
  return Dump(doc);
}

std::string CutLPResultToJson(const CutLPResult& result, const CutLP& lp) {
  json doc;
  doc["k"] = lp.k;
  doc["variant"] = ToString(lp.variant);
  doc["feasible"] = result.feasible;
  doc["rounds"] = result.rounds;
  if (!result.feasible) {
    doc["infeasibility_reason"] = result.infeasibility_reason;
    return Dump(doc);
  }
  doc["value"] = ToString(result.value);
  doc["solution"] = SolutionObject(result.solution);
  doc["edge_values"] = json::array();
  for (const auto& v : result.edge_values) doc["edge_values"].push_back(ToString(v));
  doc["active_cuts"] = json::array();
  for (const auto& s : result.active_cuts) doc["active_cuts"].push_back(CutJson(s));
  return Dump(doc);
}

std::string EnumerationToJson(const EnumerationResult& result) {
  json doc;
  doc["n"] = result.n;
  doc["candidate_graphs"] = result.candidate_graphs;
  doc["extreme_points"] = result.extreme_points;
  doc["classes"] = json::array();
  for (const auto& c : result.classes) {
    doc["classes"].push_back(
        {{"label", c.label}, {"stats", StatsObject(c.stats)}, {"solution", SolutionObject(c.x)}});
  }
  return Dump(doc);
}

std::string DirectedFaceToJson(const DirectedFaceResult& face) {
  json doc;
  doc["attempts"] = face.attempts;
  doc["rank"] = face.rank;
  doc["min_positive"] = ToString(face.min_positive);
  doc["solution"] = DirectedObject(face.y);
  return Dump(doc);
}

std::string ConversionToJson(const ConversionResult& conversion) {
  json doc;
  doc["input_cost"] = ToString(conversion.input_cost);
  doc["output_cost"] = ToString(conversion.output_cost);
  doc["replacements"] = conversion.replacements;
  doc["multiset"] = MultisetArray(conversion.edges);
  return Dump(doc);
}

std::string WitnessToJson(const LowerBoundWitness& witness) {
  json doc;
  doc["verified"] = witness.verified;
  doc["connectivity"] = witness.connectivity;
  if (witness.verified) doc["bound"] = witness.bound;
  if (!witness.reason.empty()) doc["reason"] = witness.reason;
  if (witness.violated_cut) {
    doc["violated_cut"] = MinCutObject(witness.violated_cut->side, witness.violated_cut->value);
  }
  if (witness.split) doc["split"] = SplitObject(*witness.split);
  return Dump(doc);
}

std::string PathCoverOptimumToJson(const PathCoverOptimum& opt) {
  json doc;
  doc["feasible"] = opt.feasible;
  if (opt.feasible) {
    doc["size"] = opt.size;
    doc["witness"] = opt.witness;
  }
  return Dump(doc);
}

}  // namespace cutgap
