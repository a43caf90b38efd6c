// Copyright 2026 The quatsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quatsim/error.hpp"

#include <utility>

namespace quatsim {

const char *invariant_name(Invariant invariant) {
    switch (invariant) {
        case Invariant::kNotSelfAdjoint:
            return "self-adjointness";
        case Invariant::kNotPsd:
            return "positive semi-definiteness";
        case Invariant::kTraceNotOne:
            return "unit trace";
        case Invariant::kIncomplete:
            return "completeness";
        case Invariant::kEffectTooLarge:
            return "effect bound";
        case Invariant::kKrausNormalization:
            return "kraus normalization";
        case Invariant::kDimensionMismatch:
            return "dimension";
        case Invariant::kEmpty:
            return "non-empty";
        case Invariant::kProbabilityRange:
            return "probability range";
        case Invariant::kFrameConsistency:
            return "frame-function consistency";
    }
    return "unknown";
}

ValidationError::ValidationError(Invariant invariant, std::string object, const std::string &detail)
    : std::runtime_error(object + ": " + invariant_name(invariant) + " violated: " + detail),
      invariant_(invariant),
      object_(std::move(object)) {}

}  // namespace quatsim
