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

#include "cutgap/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace cutgap {
namespace {

using nlohmann::json;

[[noreturn]] void ParseFail(const std::string& what) { Fail(ErrorKind::kParse, what); }

long RequireInt(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) ParseFail(where + ": missing field \"" + key + "\"");
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) ParseFail(where + ": field \"" + key + "\" must be an integer");
  return v.get<long>();
}

}  // namespace

MultiGraph ParseGraphJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    ParseFail(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object()) ParseFail("graph JSON: top level must be an object");
  const long n = RequireInt(doc, "n", "graph");
  if (n < 1) ParseFail("graph: field \"n\" must be >= 1");
  MultiGraph g(static_cast<int>(n));
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    ParseFail("graph: field \"edges\" must be an array");
  }
  std::size_t index = 0;
  for (const auto& e : doc["edges"]) {
    const std::string where = "graph edges[" + std::to_string(index++) + "]";
    if (!e.is_object()) ParseFail(where + ": must be an object");
    const long u = RequireInt(e, "u", where);
    const long v = RequireInt(e, "v", where);
    Rational cost = 0;
    if (e.contains("cost")) {
      if (!e["cost"].is_string()) ParseFail(where + ": field \"cost\" must be a \"p/q\" string");
      try {
        cost = ParseRational(e["cost"].get<std::string>());
      } catch (const Error& err) {
        ParseFail(where + ": field \"cost\": " + err.what());
      }
    }
    long mult = e.contains("mult") ? RequireInt(e, "mult", where) : 1;
    if (u < 0 || u >= n || v < 0 || v >= n) ParseFail(where + ": vertex out of range");
    if (u == v) ParseFail(where + ": self-loop");
    if (mult < 1) ParseFail(where + ": field \"mult\" must be positive");
    if (cost < 0) ParseFail(where + ": field \"cost\" must be nonnegative");
    g.AddEdge(static_cast<int>(u), static_cast<int>(v), cost, static_cast<int>(mult));
  }
  return g;
}

std::string GraphToJson(const MultiGraph& g) {
  json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back(
        {{"u", e.u}, {"v", e.v}, {"cost", ToString(e.cost)}, {"mult", e.multiplicity}});
  }
  return doc.dump(2) + "\n";
}

MultiGraph ParseEdgeList(std::string_view text) {
  struct Row {
    long u, v;
    Rational cost;
    long mult;
  };
  std::vector<Row> rows;
  long n = -1;
  long max_id = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "edge list line " + std::to_string(line_no);
    if (tok[0] == "n") {
      if (tok.size() != 2 || !rows.empty()) ParseFail(where + ": malformed vertex count");
      try {
        n = std::stol(tok[1]);
      } catch (const std::exception&) {
        ParseFail(where + ": vertex count must be an integer");
      }
      continue;
    }
    if (tok.size() < 3 || tok.size() > 4) ParseFail(where + ": expected `u v p/q [mult]`");
    Row r{};
    try {
      r.u = std::stol(tok[0]);
      r.v = std::stol(tok[1]);
      r.mult = tok.size() == 4 ? std::stol(tok[3]) : 1;
    } catch (const std::exception&) {
      ParseFail(where + ": vertex ids and multiplicity must be integers");
    }
    try {
      r.cost = ParseRational(tok[2]);
    } catch (const Error& e) {
      ParseFail(where + ": cost: " + e.what());
    }
    if (r.u < 0 || r.v < 0) ParseFail(where + ": negative vertex id");
    max_id = std::max({max_id, r.u, r.v});
    rows.push_back(std::move(r));
  }
  if (n < 0) n = max_id + 1;
  if (n < 1) ParseFail("edge list: empty graph");
  if (max_id >= n) ParseFail("edge list: vertex id exceeds declared count");
  MultiGraph g(static_cast<int>(n));
  for (const auto& r : rows) {
    if (r.u == r.v) ParseFail("edge list: self-loop at vertex " + std::to_string(r.u));
    if (r.mult < 1) ParseFail("edge list: multiplicity must be positive");
    if (r.cost < 0) ParseFail("edge list: cost must be nonnegative");
    g.AddEdge(static_cast<int>(r.u), static_cast<int>(r.v), r.cost, static_cast<int>(r.mult));
  }
  return g;
}

MultiGraph ParseGraph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? ParseGraphJson(text) : ParseEdgeList(text);
  }
  ParseFail("empty graph file");
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorKind::kInvalidArgument, "cannot write '" + path + "'");
  out << contents;
}

MultiGraph ReadGraphFile(const std::string& path) { return ParseGraph(ReadTextFile(path)); }

}  // namespace cutgap
