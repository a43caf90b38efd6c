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

#include "quatsim/json_io.hpp"

#include <string>

#include "quatsim/error.hpp"

namespace quatsim {

using nlohmann::json;

namespace {

const json &field(const json &j, const char *key) {
    if (!j.is_object()) {
        throw FormatError(std::string("expected an object containing \"") + key + "\"");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw FormatError(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

std::size_t dimension(const json &j, const char *key) {
    const json &v = field(j, key);
    if (!v.is_number_unsigned()) {
        throw FormatError(std::string("field \"") + key + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

double number(const json &v) {
    if (!v.is_number()) {
        throw FormatError("expected a number, got " + v.dump());
    }
    return v.get<double>();
}

const json &array(const json &j, const char *key) {
    const json &v = field(j, key);
    if (!v.is_array()) {
        throw FormatError(std::string("field \"") + key + "\" must be an array");
    }
    return v;
}

std::vector<QMatrix> matrix_list(const json &j, const char *key) {
    std::vector<QMatrix> out;
    for (const auto &m : array(j, key)) {
        out.push_back(qmatrix_from_json(m));
    }
    return out;
}

json matrix_list_to_json(const std::vector<QMatrix> &ms) {
    json out = json::array();
    for (const auto &m : ms) {
        out.push_back(qmatrix_to_json(m));
    }
    return out;
}

TraceMode parse_mode(const json &v) {
    if (v == "default") {
        return TraceMode::kDefault;
    }
    if (v == "strict") {
        return TraceMode::kStrict;
    }
    throw FormatError("mode must be \"default\" or \"strict\", got " + v.dump());
}

}  // namespace

void require_schema(const json &j) {
    if (!j.is_object()) {
        throw FormatError("document must be a JSON object");
    }
    auto it = j.find("schema");
    if (it == j.end()) {
        throw FormatError("document has no \"schema\" field");
    }
    if (!it->is_number_integer() || it->get<int>() != kSchemaVersion) {
        throw FormatError("unsupported schema " + it->dump() + " (expected " + std::to_string(kSchemaVersion) + ")");
    }
}

json quaternion_to_json(const Quaternion &h) { return json::array({h.h0, h.h1, h.h2, h.h3}); }

Quaternion quaternion_from_json(const json &j) {
    if (!j.is_array() || j.size() != 4) {
        throw FormatError("a quaternion is a 4-array [h0, h1, h2, h3], got " + j.dump());
    }
    return {number(j[0]), number(j[1]), number(j[2]), number(j[3])};
}

json complex_to_json(const Complex &z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw FormatError("a complex number is a 2-array [re, im], got " + j.dump());
    }
    return {number(j[0]), number(j[1])};
}

json qmatrix_to_json(const QMatrix &a) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) {
            row.push_back(quaternion_to_json(a(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

QMatrix qmatrix_from_json(const json &j) {
    const std::size_t rows = dimension(j, "rows");
    const std::size_t cols = dimension(j, "cols");
    const json &entries = array(j, "entries");
    if (entries.size() != rows) {
        throw FormatError("QMatrix declares " + std::to_string(rows) + " rows but lists " +
                          std::to_string(entries.size()));
    }
    QMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!entries[r].is_array() || entries[r].size() != cols) {
            throw FormatError("QMatrix row " + std::to_string(r) + " must hold " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            a(r, c) = quaternion_from_json(entries[r][c]);
        }
    }
    return a;
}

json qvector_to_json(const QVector &v) {
    json entries = json::array();
    for (const auto &h : v.entries()) {
        entries.push_back(quaternion_to_json(h));
    }
    return {{"dim", v.dim()}, {"entries", std::move(entries)}};
}

QVector qvector_from_json(const json &j) {
    const std::size_t dim = dimension(j, "dim");
    const json &entries = array(j, "entries");
    if (entries.size() != dim) {
        throw FormatError("QVector declares dim " + std::to_string(dim) + " but lists " +
                          std::to_string(entries.size()) + " entries");
    }
    QVector v(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        v[r] = quaternion_from_json(entries[r]);
    }
    return v;
}

json cmatrix_to_json(const CMatrix &m) {
    json entries = json::array();
    for (const auto &z : m.entries()) {
        entries.push_back(complex_to_json(z));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

CMatrix cmatrix_from_json(const json &j) {
    const std::size_t rows = dimension(j, "rows");
    const std::size_t cols = dimension(j, "cols");
    const json &entries = array(j, "entries");
    if (entries.size() != rows * cols) {
        throw FormatError("CMatrix " + std::to_string(rows) + "x" + std::to_string(cols) + " needs " +
                          std::to_string(rows * cols) + " entries, got " + std::to_string(entries.size()));
    }
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (const auto &z : entries) {
        data.push_back(complex_from_json(z));
    }
    return CMatrix(rows, cols, std::move(data));
}

json state_to_json(const State &rho) {
    return {{"schema", kSchemaVersion}, {"dim", rho.dim()}, {"matrix", qmatrix_to_json(rho.matrix())}};
}

State state_from_json(const json &j) {
    require_schema(j);
    const std::size_t dim = dimension(j, "dim");
    QMatrix m = qmatrix_from_json(field(j, "matrix"));
    if (m.rows() != dim || m.cols() != dim) {
        throw FormatError("state matrix does not match dim " + std::to_string(dim));
    }
    return State(std::move(m));
}

json povm_to_json(const Povm &povm) {
    return {{"schema", kSchemaVersion}, {"dim", povm.dim()}, {"effects", matrix_list_to_json(povm.effects())}};
}

Povm povm_from_json(const json &j) {
    require_schema(j);
    const std::size_t dim = dimension(j, "dim");
    auto effects = matrix_list(j, "effects");
    for (const auto &e : effects) {
        if (e.rows() != dim || e.cols() != dim) {
            throw FormatError("povm effect does not match dim " + std::to_string(dim));
        }
    }
    return Povm(std::move(effects));
}

json channel_to_json(const Channel &channel) {
    return {{"schema", kSchemaVersion},
            {"in_dim", channel.in_dim()},
            {"out_dim", channel.out_dim()},
            {"mode", std::string(trace_mode_name(channel.mode()))},
            {"kraus", matrix_list_to_json(channel.kraus())}};
}

Channel channel_from_json(const json &j, std::optional<TraceMode> mode_override) {
    require_schema(j);
    const std::size_t in_dim = dimension(j, "in_dim");
    const std::size_t out_dim = dimension(j, "out_dim");
    auto kraus = matrix_list(j, "kraus");
    for (const auto &a : kraus) {
        if (a.rows() != out_dim || a.cols() != in_dim) {
            throw FormatError("Kraus operator is not " + std::to_string(out_dim) + "x" + std::to_string(in_dim));
        }
    }
    TraceMode mode = TraceMode::kDefault;
    if (auto it = j.find("mode"); it != j.end()) {
        mode = parse_mode(*it);
    }
    if (mode_override) {
        mode = *mode_override;
    }
    return Channel(std::move(kraus), mode);
}

json report_to_json(const VerificationReport &report) {
    json counterexample = nullptr;
    if (report.counterexample) {
        counterexample = {{"trial", report.counterexample->trial},
                          {"seed", report.counterexample->seed},
                          {"check", report.counterexample->check},
                          {"deviation", report.counterexample->deviation}};
    }
    return {{"schema", kSchemaVersion},
            {"trials", report.trials},
            {"dims", report.dims},
            {"mode", std::string(trace_mode_name(report.mode))},
            {"tolerance", report.tolerance},
            {"max_measurement_dev", report.max_measurement_dev},
            {"max_channel_dev", report.max_channel_dev},
            {"max_intermediate_dev", report.max_intermediate_dev},
            {"max_probability_sum_dev", report.max_probability_sum_dev},
            {"max_embedding_dev", report.max_embedding_dev},
            {"max_inner_product_dev", report.max_inner_product_dev},
            {"max_trace_dev", report.max_trace_dev},
            {"max_spectral_dev", report.max_spectral_dev},
            {"worst_seed", report.worst_seed},
            {"worst_trial", report.worst_trial},
            {"violations", report.violations},
            {"passed", report.passed()},
            {"counterexample", std::move(counterexample)}};
}

}  // namespace quatsim
