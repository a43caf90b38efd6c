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

#ifndef QUATSIM_JSON_IO_HPP
#define QUATSIM_JSON_IO_HPP

#include <optional>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "quatsim/campaign.hpp"
#include "quatsim/cmatrix.hpp"
#include "quatsim/qmatrix.hpp"
#include "quatsim/qqt.hpp"
#include "quatsim/quaternion.hpp"

namespace quatsim {

/// Version written to, and required in, every top-level document.
inline constexpr int kSchemaVersion = 1;

/// Malformed or mismatched JSON input.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Scalars: a quaternion is [h0, h1, h2, h3], a complex number [re, im].
nlohmann::json quaternion_to_json(const Quaternion &h);
Quaternion quaternion_from_json(const nlohmann::json &j);
nlohmann::json complex_to_json(const Complex &z);
Complex complex_from_json(const nlohmann::json &j);

// {"rows", "cols", "entries": [[q, ...], ...]} with one inner list per row.
nlohmann::json qmatrix_to_json(const QMatrix &a);
QMatrix qmatrix_from_json(const nlohmann::json &j);

// {"dim", "entries": [q, ...]}
nlohmann::json qvector_to_json(const QVector &v);
QVector qvector_from_json(const nlohmann::json &j);

// {"rows", "cols", "entries": [[re, im], ...]}, flat and row-major.
nlohmann::json cmatrix_to_json(const CMatrix &m);
CMatrix cmatrix_from_json(const nlohmann::json &j);

// Top-level documents carry "schema": 1. The readers validate the object
// and so may throw ValidationError in addition to FormatError.
nlohmann::json state_to_json(const State &rho);
State state_from_json(const nlohmann::json &j);
nlohmann::json povm_to_json(const Povm &povm);
Povm povm_from_json(const nlohmann::json &j);
/// Optional "mode": "default" | "strict" records the normalization.
nlohmann::json channel_to_json(const Channel &channel);
Channel channel_from_json(const nlohmann::json &j, std::optional<TraceMode> mode_override = {});

nlohmann::json report_to_json(const VerificationReport &report);

/// Throws FormatError unless j is an object with "schema" == kSchemaVersion.
void require_schema(const nlohmann::json &j);

}  // namespace quatsim

#endif
