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

#include "slimap/error.hpp"

namespace slimap {

std::string_view name_of(Errc code) {
  switch (code) {
    case Errc::InvalidArc: return "InvalidArc";
    case Errc::MissingCoverage: return "MissingCoverage";
    case Errc::DisconnectedIntersection: return "DisconnectedIntersection";
    case Errc::TripleOverlap: return "TripleOverlap";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::TooFewArcs: return "TooFewArcs";
    case Errc::InvalidSpace: return "InvalidSpace";
    case Errc::InvalidEdge: return "InvalidEdge";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::OutOfWindow: return "OutOfWindow";
    case Errc::NegativeCapacity: return "NegativeCapacity";
    case Errc::Parse: return "Parse";
    case Errc::Schema: return "Schema";
    case Errc::Io: return "Io";
    case Errc::NotAFlow: return "NotAFlow";
    case Errc::ConstraintViolation: return "ConstraintViolation";
    case Errc::InconsistentLevel: return "InconsistentLevel";
    case Errc::NoRepeatInWindow: return "NoRepeatInWindow";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Unbounded: return "Unbounded";
    case Errc::Infeasible: return "Infeasible";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::MismatchFound: return "MismatchFound";
    case Errc::TheoremCheckFailed: return "TheoremCheckFailed";
  }
  return "Unknown";
}

int exit_code_of(Errc code) {
  switch (code) {
    case Errc::Parse:
    case Errc::Io:
      return 3;
    case Errc::NotAFlow:
      return 4;
    case Errc::MismatchFound:
    case Errc::TheoremCheckFailed:
    case Errc::InternalInconsistency:
      return 5;
    default:
      return 2;
  }
}

}  // namespace slimap
