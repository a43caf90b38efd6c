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

#ifndef QUATSIM_SIMULATE_HPP
#define QUATSIM_SIMULATE_HPP

#include <vector>

#include "quatsim/cmatrix.hpp"
#include "quatsim/qqt.hpp"

namespace quatsim {

/// sigma = psi(rho) / 2: Hermitian, PSD, unit trace on C^{2d}.
CMatrix lift_state(const State &rho);
/// {psi(E_r)}, a POVM on C^{2d}.
std::vector<CMatrix> lift_povm(const Povm &povm);
/// {psi(A_r)}, Kraus operators C^{2d} -> C^{2p}.
std::vector<CMatrix> lift_channel(const Channel &channel);

/// Re tr(F_r sigma) per outcome, computed with complex arithmetic only.
std::vector<double> complex_probabilities(const CMatrix &sigma, const std::vector<CMatrix> &effects);
/// sum_r K_r sigma K_r*.
CMatrix apply_complex_kraus(const std::vector<CMatrix> &kraus, const CMatrix &sigma);

/// Largest entry of |sum K_r* K_r - I| (default) or |sum K_r K_r* - I| (strict).
double complex_kraus_residual(const std::vector<CMatrix> &kraus, TraceMode mode);

struct LiftedProcess {
    CMatrix sigma;
    std::vector<CMatrix> c_povm;
    std::vector<CMatrix> c_channel;  // empty when no channel was lifted
};

LiftedProcess lift(const State &rho, const Povm &povm);
LiftedProcess lift(const State &rho, const Channel &channel, const Povm &povm);

struct MeasurementReport {
    std::vector<double> p;  // quaternionic Born rule
    std::vector<double> q;  // complex simulation
    double max_dev = 0.0;
    double sum_p = 0.0;
    double sum_q = 0.0;
};

/// Compare p(r) = tr(E_r rho) against q(r) = tr(psi(E_r) sigma(rho)).
MeasurementReport measurement_equiv(const State &rho, const Povm &povm);

struct ChannelReport {
    TraceMode mode = TraceMode::kDefault;
    std::vector<double> p;  // tr(E_r Phi(rho))
    std::vector<double> q;  // tr(psi(E_r) Theta(sigma(rho)))
    double max_dev = 0.0;
    /// max |Theta(sigma(rho)) - psi(Phi(rho)) / 2|
    double intermediate_dev = 0.0;
    /// |tr Phi(rho) - 1|; only meaningful in default mode.
    double output_trace_dev = 0.0;
    bool trace_checked = false;
};

/// Compare preparation -> channel -> measurement in both pictures. The
/// POVM acts on the channel's output space. Throws ValidationError on
/// dimension mismatch.
ChannelReport channel_equiv(const State &rho, const Channel &channel, const Povm &povm);

}  // namespace quatsim

#endif
