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

#ifndef CUTGAP_SERIALIZE_HPP_
#define CUTGAP_SERIALIZE_HPP_

// JSON text for every value that crosses a file or API boundary. All numbers
// that may be fractional are written as exact "p/q" strings. Parsers throw
// Error(kParse) naming the offending field; writing a parsed value reproduces
// the input byte for byte when the input was produced by the writer.

#include <string>
#include <string_view>

#include "cutgap/cutlp.hpp"
#include "cutgap/decompose.hpp"
#include "cutgap/extreme.hpp"
#include "cutgap/gap.hpp"
#include "cutgap/graph.hpp"
#include "cutgap/metric.hpp"
#include "cutgap/reductions.hpp"

namespace cutgap {

std::string SolutionToJson(const FractionalSolution& x);
FractionalSolution ParseSolutionJson(std::string_view text);

std::string DirectedToJson(const DirectedSolution& y);
DirectedSolution ParseDirectedJson(std::string_view text);

std::string CertificateToJson(const ExtremenessResult& result, int n, int k);
struct ParsedCertificate {
  ExtremenessResult result;
  int n = 0;
  int k = 0;
};
ParsedCertificate ParseCertificateJson(std::string_view text);

std::string PathCoverToJson(const PathCoverInstance& inst);
PathCoverInstance ParsePathCoverJson(std::string_view text);

std::string SetCoverToJson(const SetCoverInstance& sc);
SetCoverInstance ParseSetCoverJson(std::string_view text);

std::string MultisetToJson(const EdgeMultiset& f);
// edge_count sizes the result; ids must be below it.
EdgeMultiset ParseMultisetJson(std::string_view text, std::size_t edge_count);

std::string GapToJson(const GapResult& gap);
GapResult ParseGapJson(std::string_view text);

std::string SplitToJson(const SplitResult& split);
SplitResult ParseSplitJson(std::string_view text);

// Write-only reports.
std::string StatsToJson(const SolutionStats& stats);
std::string FeasibilityToJson(const FeasibilityReport& report, int k, LPVariant variant);
std::string CutLPResultToJson(const CutLPResult& result, const CutLP& lp);
std::string EnumerationToJson(const EnumerationResult& result);
std::string DirectedFaceToJson(const DirectedFaceResult& face);
std::string ConversionToJson(const ConversionResult& conversion);
std::string WitnessToJson(const LowerBoundWitness& witness);
std::string PathCoverOptimumToJson(const PathCoverOptimum& opt);

}  // namespace cutgap

#endif  // CUTGAP_SERIALIZE_HPP_
