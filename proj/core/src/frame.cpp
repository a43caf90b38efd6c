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

#include "quatsim/frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "quatsim/error.hpp"
#include "quatsim/qqt.hpp"
#include "quatsim/spectral.hpp"

namespace quatsim {

namespace {

std::vector<FrameQuery> make_queries(const std::vector<QMatrix> &basis, double margin) {
    std::vector<FrameQuery> queries;
    queries.reserve(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const QMatrix &y = basis[r];
        const std::size_t d = y.rows();
        const double dd = static_cast<double>(d);
        double shift = std::abs(spectral_decompose(y).eigenvalues.front()) + margin;
        // tr((Y + cI)^2) = tr(Y^2) + 2c tr(Y) + c^2 d
        double t2 = hs_form(y, y) + 2.0 * shift * trace(y) + shift * shift * dd;
        double scale = std::max(1.0, std::sqrt(t2 / dd));
        QMatrix g = (y + QMatrix::identity(d) * shift) * (1.0 / scale);
        if (!is_effect(g)) {
            throw std::logic_error("frame_schedule: query " + std::to_string(r) + " is not an effect");
        }
        queries.push_back({std::move(g), r, shift, scale});
    }
    return queries;
}

}  // namespace

std::vector<QMatrix> FrameSchedule::effects() const {
    std::vector<QMatrix> out;
    out.reserve(size());
    out.push_back(identity);
    for (const auto &q : primary) {
        out.push_back(q.effect);
    }
    for (const auto &q : check) {
        out.push_back(q.effect);
    }
    return out;
}

FrameSchedule frame_schedule(std::size_t d, const FrameOptions &options) {
    if (d == 0) {
        throw DimensionError("frame_schedule: dimension must be positive");
    }
    if (options.margin <= 0.0 || options.check_margin <= 0.0 || options.margin == options.check_margin) {
        throw std::invalid_argument("frame_schedule: margins must be positive and distinct");
    }
    auto basis = sa_basis(d);
    FrameSchedule schedule;
    schedule.dim = d;
    schedule.identity = QMatrix::identity(d);
    schedule.primary = make_queries(basis, options.margin);
    schedule.check = make_queries(basis, options.check_margin);
    return schedule;
}

FrameReconstruction reconstruct_from_values(const FrameSchedule &schedule, std::span<const double> values,
                                            const FrameOptions &options) {
    if (values.size() != schedule.size()) {
        std::ostringstream msg;
        msg << "reconstruct_from_values: expected " << schedule.size() << " values for dim " << schedule.dim
            << ", got " << values.size();
        throw DimensionError(msg.str());
    }
    const std::size_t d = schedule.dim;
    const std::size_t n = schedule.primary.size();
    const auto basis = sa_basis(d);
    const double f_identity = values[0];

    FrameReconstruction out;
    out.residual = std::abs(f_identity - 1.0);
    out.coefficients.resize(n);
    out.rho = QMatrix(d, d);
    for (std::size_t r = 0; r < n; ++r) {
        const FrameQuery &qp = schedule.primary[r];
        const FrameQuery &qc = schedule.check[r];
        // f(G) = (f(Y) + shift f(I)) / scale by R-linearity.
        double primary = qp.scale * values[1 + r] - qp.shift * f_identity;
        double check = qc.scale * values[1 + n + r] - qc.shift * f_identity;
        out.residual = std::max(out.residual, std::abs(primary - check));
        out.coefficients[r] = primary;
        out.rho += basis[qp.basis_index] * primary;
    }
    double missing = 1.0 - trace(out.rho);
    out.rho += QMatrix::identity(d) * (missing / static_cast<double>(d));
    out.trace_correction = missing;
    out.residual = std::max(out.residual, std::abs(missing));
    if (!std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); })) {
        out.residual = std::numeric_limits<double>::infinity();
        out.rho = QMatrix::identity(d) * (1.0 / static_cast<double>(d));
    }
    out.consistent = out.residual <= options.tolerance;
    out.is_state = out.consistent && is_psd(out.rho);
    return out;
}

FrameReconstruction frame_reconstruct(const std::function<double(const QMatrix &)> &f, std::size_t d,
                                      const FrameOptions &options) {
    FrameSchedule schedule = frame_schedule(d, options);
    std::vector<double> values;
    values.reserve(schedule.size());
    for (const auto &e : schedule.effects()) {
        values.push_back(f(e));
    }
    return reconstruct_from_values(schedule, values, options);
}

}  // namespace quatsim
