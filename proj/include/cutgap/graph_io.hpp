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

#ifndef CUTGAP_GRAPH_IO_HPP_
#define CUTGAP_GRAPH_IO_HPP_

#include <string>
#include <string_view>

#include "cutgap/graph.hpp"

namespace cutgap {

// {"n": int, "edges": [{"u": int, "v": int, "cost": "p/q", "mult": int}]}
// "cost" defaults to "0" and "mult" to 1 when absent.
MultiGraph ParseGraphJson(std::string_view text);
std::string GraphToJson(const MultiGraph& g);

// One edge per line: `u v p/q [mult]`. Blank lines and '#' comments are
// skipped; an optional leading `n <count>` line fixes the vertex count,
// otherwise it is one more than the largest id.
MultiGraph ParseEdgeList(std::string_view text);

// JSON when the first non-blank character is '{', edge list otherwise.
MultiGraph ParseGraph(std::string_view text);
MultiGraph ReadGraphFile(const std::string& path);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& contents);

}  // namespace cutgap

#endif  // CUTGAP_GRAPH_IO_HPP_
