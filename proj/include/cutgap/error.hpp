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

#ifndef CUTGAP_ERROR_HPP_
#define CUTGAP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cutgap {

// Failure categories. The C API maps each one onto a status code.
enum class ErrorKind {
  kInvalidArgument,  // malformed input, violated precondition
  kDomain,           // well-formed input the operation rejects (infeasible, not metric, ...)
  kBoundExceeded,    // exhaustive-search size limit hit
  kParse,            // file or string could not be parsed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace cutgap

#endif  // CUTGAP_ERROR_HPP_
