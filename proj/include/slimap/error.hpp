// Copyright 2026 The slimap Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slimap {

enum class Errc {
  // cover validation
  InvalidArc,
  MissingCoverage,
  DisconnectedIntersection,
  TripleOverlap,
  NotMinimal,
  TooFewArcs,
  // inputs and structure
  InvalidSpace,
  InvalidEdge,
  InvalidGraph,
  OutOfWindow,
  NegativeCapacity,
  Parse,
  Schema,
  Io,
  // flows and solvers
  NotAFlow,
  ConstraintViolation,
  InconsistentLevel,
  NoRepeatInWindow,
  PreconditionViolated,
  TooLarge,
  Unbounded,
  Infeasible,
  InternalInconsistency,
  // verification batteries
  MismatchFound,
  TheoremCheckFailed,
};

std::string_view name_of(Errc code);

/// Process exit status used by the command-line tool for each error class.
int exit_code_of(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(name_of(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace slimap
