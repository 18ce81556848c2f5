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

#include "cutgap/cutgap.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <initializer_list>
#include <new>
#include <string>
#include <string_view>

#include "cutgap/cutlp.hpp"
#include "cutgap/decompose.hpp"
#include "cutgap/error.hpp"
#include "cutgap/extreme.hpp"
#include "cutgap/gap.hpp"
#include "cutgap/graph_io.hpp"
#include "cutgap/metric.hpp"
#include "cutgap/reductions.hpp"
#include "cutgap/report.hpp"
#include "cutgap/serialize.hpp"
#include "json.hpp"

struct cutgap_graph {
  cutgap::MultiGraph g;
};

struct cutgap_solution {
  cutgap::FractionalSolution x;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

cutgap_status StatusOf(cutgap::ErrorKind kind) {
  switch (kind) {
    case cutgap::ErrorKind::kInvalidArgument: return CUTGAP_INVALID_ARGUMENT;
    case cutgap::ErrorKind::kDomain: return CUTGAP_DOMAIN_ERROR;
    case cutgap::ErrorKind::kBoundExceeded: return CUTGAP_BOUND_EXCEEDED;
    case cutgap::ErrorKind::kParse: return CUTGAP_PARSE_ERROR;
  }
  return CUTGAP_INTERNAL_ERROR;
}

template <typename F>
cutgap_status Guard(F&& body) {
  try {
    body();
    last_error.clear();
    return CUTGAP_OK;
  } catch (const cutgap::Error& e) {
    last_error = e.what();
    return StatusOf(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
  } catch (...) {
    last_error = "internal error";
  }
  return CUTGAP_INTERNAL_ERROR;
}

void Require(bool ok, const char* what) {
  if (!ok) cutgap::Fail(cutgap::ErrorKind::kInvalidArgument, what);
}

char* Copy(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

json OptionsDocument(const char* text, const char* what,
                     std::initializer_list<std::string_view> keys) {
  if (text == nullptr) return json::object();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    cutgap::Fail(cutgap::ErrorKind::kParse, std::string(what) + ": " + e.what());
  }
  if (!doc.is_object()) cutgap::Fail(cutgap::ErrorKind::kParse, std::string(what) + ": must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      cutgap::Fail(cutgap::ErrorKind::kParse, std::string(what) + ": unknown field \"" + key + "\"");
    }
  }
  return doc;
}

int IntOption(const json& doc, const char* key, int fallback, const char* what) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_number_integer()) {
    cutgap::Fail(cutgap::ErrorKind::kParse,
                 std::string(what) + ": field \"" + key + "\" must be an integer");
  }
  return doc[key].get<int>();
}

}  // namespace

extern "C" {

const char* cutgap_version(void) { return "0.1.0"; }

const char* cutgap_last_error(void) { return last_error.c_str(); }

const char* cutgap_status_name(cutgap_status status) {
  switch (status) {
    case CUTGAP_OK: return "ok";
    case CUTGAP_INVALID_ARGUMENT: return "invalid argument";
    case CUTGAP_PARSE_ERROR: return "parse error";
    case CUTGAP_DOMAIN_ERROR: return "domain error";
    case CUTGAP_BOUND_EXCEEDED: return "bound exceeded";
    case CUTGAP_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void cutgap_string_free(char* text) { std::free(text); }

cutgap_status cutgap_graph_parse(const char* text, cutgap_graph** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    *out = new cutgap_graph{cutgap::ParseGraph(text)};
  });
}

cutgap_status cutgap_graph_read(const char* path, cutgap_graph** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new cutgap_graph{cutgap::ReadGraphFile(path)};
  });
}

cutgap_status cutgap_graph_to_json(const cutgap_graph* g, char** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = Copy(cutgap::GraphToJson(g->g));
  });
}

cutgap_status cutgap_graph_to_dot(const cutgap_graph* g, char** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = Copy(cutgap::ToDot(g->g));
  });
}

int cutgap_graph_vertex_count(const cutgap_graph* g) { return g ? g->g.vertex_count() : -1; }

int cutgap_graph_edge_count(const cutgap_graph* g) {
  return g ? static_cast<int>(g->g.edge_count()) : -1;
}

void cutgap_graph_free(cutgap_graph* g) { delete g; }

cutgap_status cutgap_solution_parse(const char* text, cutgap_solution** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    *out = new cutgap_solution{cutgap::ParseSolutionJson(text)};
  });
}

cutgap_status cutgap_solution_read(const char* path, cutgap_solution** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new cutgap_solution{cutgap::ParseSolutionJson(cutgap::ReadTextFile(path))};
  });
}

cutgap_status cutgap_solution_to_json(const cutgap_solution* x, char** out) {
  return Guard([&] {
    Require(x != nullptr && out != nullptr, "null argument");
    *out = Copy(cutgap::SolutionToJson(x->x));
  });
}

int cutgap_solution_vertex_count(const cutgap_solution* x) {
  return x ? x->x.vertex_count() : -1;
}

cutgap_status cutgap_solution_get(const cutgap_solution* x, int u, int v, char** out) {
  return Guard([&] {
    Require(x != nullptr && out != nullptr, "null argument");
    const int n = x->x.vertex_count();
    Require(u >= 0 && v >= 0 && u < n && v < n, "vertex out of range");
    *out = Copy(cutgap::ToString(x->x.Get(u, v)));
  });
}

void cutgap_solution_free(cutgap_solution* x) { delete x; }

cutgap_status cutgap_solve(const cutgap_graph* g, int k, int bounded,
                           cutgap_solution** solution, char** report) {
  return Guard([&] {
    Require(g != nullptr && report != nullptr, "null argument");
    cutgap::CutLP lp{g->g, k, bounded ? cutgap::LPVariant::kBounded : cutgap::LPVariant::kUnbounded};
    cutgap::CutLPResult result = cutgap::Solve(lp);
    *report = Copy(cutgap::CutLPResultToJson(result, lp));
    if (solution != nullptr) {
      *solution = result.feasible ? new cutgap_solution{result.solution} : nullptr;
    }
  });
}

cutgap_status cutgap_separate(const cutgap_solution* x, int k, int bounded, char** report) {
  return Guard([&] {
    Require(x != nullptr && report != nullptr, "null argument");
    const auto variant = bounded ? cutgap::LPVariant::kBounded : cutgap::LPVariant::kUnbounded;
    *report = Copy(cutgap::FeasibilityToJson(cutgap::CheckFeasibility(x->x, k, variant), k, variant));
  });
}

cutgap_status cutgap_construct_fibonacci(int t, cutgap_solution** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = new cutgap_solution{cutgap::ConstructFibonacci(t)};
  });
}

cutgap_status cutgap_verify_extreme(const cutgap_solution* x, int k, char** certificate) {
  return Guard([&] {
    Require(x != nullptr && certificate != nullptr, "null argument");
    const cutgap::ExtremenessResult result = cutgap::VerifyExtreme(x->x, k);
    *certificate = Copy(cutgap::CertificateToJson(result, x->x.vertex_count(), k));
  });
}

cutgap_status cutgap_stats(const cutgap_solution* x, char** out) {
  return Guard([&] {
    Require(x != nullptr && out != nullptr, "null argument");
    *out = Copy(cutgap::StatsToJson(cutgap::Stats(x->x)));
  });
}

cutgap_status cutgap_enumerate(int n, const char* filters_json, char** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    const json doc = OptionsDocument(
        filters_json, "enumeration filters",
        {"min_denominator", "min_max_degree", "require_three_connected", "max_n"});
    cutgap::EnumerationFilters filters;
    if (doc.contains("min_denominator")) {
      const json& v = doc["min_denominator"];
      if (v.is_number_integer()) {
        filters.min_denominator = v.get<long>();
      } else if (v.is_string()) {
        filters.min_denominator = cutgap::Integer(v.get<std::string>());
      } else {
        cutgap::Fail(cutgap::ErrorKind::kParse,
                     "enumeration filters: field \"min_denominator\" must be an integer");
      }
    }
    filters.min_max_degree = IntOption(doc, "min_max_degree", filters.min_max_degree,
                                       "enumeration filters");
    filters.max_n = IntOption(doc, "max_n", filters.max_n, "enumeration filters");
    if (doc.contains("require_three_connected")) {
      if (!doc["require_three_connected"].is_boolean()) {
        cutgap::Fail(cutgap::ErrorKind::kParse,
                     "enumeration filters: field \"require_three_connected\" must be a boolean");
      }
      filters.require_three_connected = doc["require_three_connected"].get<bool>();
    }
    *out = Copy(cutgap::EnumerationToJson(cutgap::EnumerateExtremePoints(n, filters)));
  });
}

cutgap_status cutgap_domination_gap(const cutgap_solution* x, char** out) {
  return Guard([&] {
    Require(x != nullptr && out != nullptr, "null argument");
    *out = Copy(cutgap::GapToJson(cutgap::DominationGap(x->x)));
  });
}

cutgap_status cutgap_lift(const cutgap_solution* x, int face_extreme, uint64_t seed, char** out) {
  return Guard([&] {
    Require(x != nullptr && out != nullptr, "null argument");
    if (face_extreme) {
      *out = Copy(cutgap::DirectedFaceToJson(cutgap::DirectedFaceExtreme(x->x, seed)));
    } else {
      *out = Copy(cutgap::DirectedToJson(cutgap::LiftToDirected(x->x)));
    }
  });
}

cutgap_status cutgap_reduce_pcot_to_kecss(const char* instance_json, int k, int simple,
                                          char** graph_json) {
  return Guard([&] {
    Require(instance_json != nullptr && graph_json != nullptr, "null argument");
    const cutgap::PathCoverInstance inst = cutgap::ParsePathCoverJson(instance_json);
    *graph_json = Copy(cutgap::GraphToJson(cutgap::KecssFromPathCover(inst, k, simple != 0)));
  });
}

cutgap_status cutgap_reduce_setcover_to_pcot(const char* setcover_json, char** instance_json) {
  return Guard([&] {
    Require(setcover_json != nullptr && instance_json != nullptr, "null argument");
    const cutgap::SetCoverInstance sc = cutgap::ParseSetCoverJson(setcover_json);
    *instance_json = Copy(cutgap::PathCoverToJson(cutgap::SetCoverToPathCover(sc)));
  });
}

cutgap_status cutgap_pcot_opt(const char* instance_json, char** out) {
  return Guard([&] {
    Require(instance_json != nullptr && out != nullptr, "null argument");
    const cutgap::PathCoverInstance inst = cutgap::ParsePathCoverJson(instance_json);
    *out = Copy(cutgap::PathCoverOptimumToJson(cutgap::PathCoverOpt(inst)));
  });
}

cutgap_status cutgap_setcover_opt(const char* setcover_json, int* out) {
  return Guard([&] {
    Require(setcover_json != nullptr && out != nullptr, "null argument");
    *out = cutgap::SetCoverOpt(cutgap::ParseSetCoverJson(setcover_json));
  });
}

cutgap_status cutgap_convert_ecsm_to_ecss(const cutgap_graph* g, const char* multiset_json,
                                          char** out) {
  return Guard([&] {
    Require(g != nullptr && multiset_json != nullptr && out != nullptr, "null argument");
    const cutgap::EdgeMultiset f = cutgap::ParseMultisetJson(multiset_json, g->g.edge_count());
    *out = Copy(cutgap::ConversionToJson(cutgap::EcsmToEcss(g->g, f)));
  });
}

cutgap_status cutgap_split(const cutgap_graph* g, int a, int b, char** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = Copy(cutgap::SplitToJson(cutgap::SplitSearch(g->g, a, b)));
  });
}

cutgap_status cutgap_split_witness(const cutgap_graph* g, int a, int b, char** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = Copy(cutgap::WitnessToJson(cutgap::FLowerWitness(a, b, g->g)));
  });
}

cutgap_status cutgap_split_bound(int c, int k, int t, int n, char** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = Copy(cutgap::ToString(cutgap::SplittingGapBound(c, k, t, n)));
  });
}

cutgap_status cutgap_report(const char* options_json, char** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    const json doc = OptionsDocument(
        options_json, "report options",
        {"max_gap_t", "max_fibonacci_t", "max_directed_t", "enumeration_max_n"});
    cutgap::ReportOptions options;
    options.max_gap_t = IntOption(doc, "max_gap_t", options.max_gap_t, "report options");
    options.max_fibonacci_t =
        IntOption(doc, "max_fibonacci_t", options.max_fibonacci_t, "report options");
    options.max_directed_t =
        IntOption(doc, "max_directed_t", options.max_directed_t, "report options");
    options.enumeration_max_n =
        IntOption(doc, "enumeration_max_n", options.enumeration_max_n, "report options");
    *out = Copy(cutgap::RegressionReport(options));
  });
}

}  // extern "C"
