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

#include "quatsim/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "quatsim/embed.hpp"
#include "quatsim/error.hpp"

namespace quatsim {

CMatrix lift_state(const State &rho) { return psi(rho.matrix()) * Complex(0.5); }

std::vector<CMatrix> lift_povm(const Povm &povm) {
    std::vector<CMatrix> out;
    out.reserve(povm.size());
    for (const auto &e : povm.effects()) {
        out.push_back(psi(e));
    }
    return out;
}

std::vector<CMatrix> lift_channel(const Channel &channel) {
    std::vector<CMatrix> out;
    out.reserve(channel.kraus().size());
    for (const auto &a : channel.kraus()) {
        out.push_back(psi(a));
    }
    return out;
}

std::vector<double> complex_probabilities(const CMatrix &sigma, const std::vector<CMatrix> &effects) {
    std::vector<double> q;
    q.reserve(effects.size());
    for (const auto &f : effects) {
        q.push_back(trace(f * sigma).real());
    }
    return q;
}

CMatrix apply_complex_kraus(const std::vector<CMatrix> &kraus, const CMatrix &sigma) {
    if (kraus.empty()) {
        throw DimensionError("apply_complex_kraus: no Kraus operators");
    }
    CMatrix out(kraus.front().rows(), kraus.front().rows());
    for (const auto &k : kraus) {
        out += k * sigma * adjoint(k);
    }
    return out;
}

double complex_kraus_residual(const std::vector<CMatrix> &kraus, TraceMode mode) {
    if (kraus.empty()) {
        return 0.0;
    }
    const std::size_t n = mode == TraceMode::kStrict ? kraus.front().rows() : kraus.front().cols();
    CMatrix total(n, n);
    for (const auto &k : kraus) {
        total += mode == TraceMode::kStrict ? k * adjoint(k) : adjoint(k) * k;
    }
    return max_abs_diff(total, CMatrix::identity(n));
}

LiftedProcess lift(const State &rho, const Povm &povm) { return {lift_state(rho), lift_povm(povm), {}}; }

LiftedProcess lift(const State &rho, const Channel &channel, const Povm &povm) {
    return {lift_state(rho), lift_povm(povm), lift_channel(channel)};
}

MeasurementReport measurement_equiv(const State &rho, const Povm &povm) {
    MeasurementReport report;
    report.p = born_raw(rho, povm);
    report.q = complex_probabilities(lift_state(rho), lift_povm(povm));
    for (std::size_t r = 0; r < report.p.size(); ++r) {
        report.max_dev = std::max(report.max_dev, std::abs(report.p[r] - report.q[r]));
        report.sum_p += report.p[r];
        report.sum_q += report.q[r];
    }
    return report;
}

ChannelReport channel_equiv(const State &rho, const Channel &channel, const Povm &povm) {
    if (povm.dim() != channel.out_dim()) {
        throw ValidationError(Invariant::kDimensionMismatch, "channel_equiv",
                              "povm dim " + std::to_string(povm.dim()) + " vs channel output dim " +
                                  std::to_string(channel.out_dim()));
    }
    ChannelReport report;
    report.mode = channel.mode();

    // Quaternionic side.
    QMatrix out = apply_kraus(channel, rho.matrix());
    report.p.reserve(povm.size());
    for (const auto &e : povm.effects()) {
        double t = 0.0;
        for (std::size_t r = 0; r < e.rows(); ++r) {
            for (std::size_t s = 0; s < e.cols(); ++s) {
                t += (e(r, s) * out(s, r)).real();
            }
        }
        report.p.push_back(t);
    }

    // Complex side, never touching quaternions after the lift.
    CMatrix theta = apply_complex_kraus(lift_channel(channel), lift_state(rho));
    report.q = complex_probabilities(theta, lift_povm(povm));

    for (std::size_t r = 0; r < report.p.size(); ++r) {
        report.max_dev = std::max(report.max_dev, std::abs(report.p[r] - report.q[r]));
    }
    report.intermediate_dev = max_abs_diff(theta, psi(out) * Complex(0.5));
    if (channel.mode() == TraceMode::kDefault) {
        report.trace_checked = true;
        report.output_trace_dev = std::abs(trace(out) - 1.0);
    }
    return report;
}

}  // namespace quatsim
