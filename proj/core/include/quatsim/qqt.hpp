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

#ifndef QUATSIM_QQT_HPP
#define QUATSIM_QQT_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "quatsim/qmatrix.hpp"
#include "quatsim/random.hpp"

namespace quatsim {

/// Tolerance shared by every validation gate in this header.
inline constexpr double kValidationTolerance = 1e-9;

/// Which Kraus normalization a Channel is validated against.
enum class TraceMode {
    /// sum_r A_r* A_r = I on the input space; guarantees tr(Phi(rho)) = tr(rho).
    kDefault,
    /// sum_r A_r A_r* = I on the output space, as literally written in the
    /// source formalism. Does not guarantee unit-trace outputs.
    kStrict,
};

std::string_view trace_mode_name(TraceMode mode);

/// Unit-trace PSD d x d quaternionic matrix.
class State {
  public:
    /// Throws ValidationError (kNotSelfAdjoint, kNotPsd, kTraceNotOne).
    explicit State(QMatrix rho);

    static State maximally_mixed(std::size_t d);

    std::size_t dim() const { return rho_.rows(); }
    const QMatrix &matrix() const { return rho_; }

  private:
    QMatrix rho_;
};

/// PSD effects E_1..E_m with sum E_r = I and tr(E_r^2) <= d.
class Povm {
  public:
    /// Throws ValidationError (kEmpty, kDimensionMismatch, kNotPsd,
    /// kEffectTooLarge, kIncomplete).
    explicit Povm(std::vector<QMatrix> effects);

    std::size_t dim() const { return effects_.front().rows(); }
    std::size_t size() const { return effects_.size(); }
    const std::vector<QMatrix> &effects() const { return effects_; }

  private:
    std::vector<QMatrix> effects_;
};

/// Kraus-form map rho -> sum_r A_r rho A_r* with A_r in M_{p,d}(H).
class Channel {
  public:
    /// Throws ValidationError (kEmpty, kDimensionMismatch, kKrausNormalization).
    explicit Channel(std::vector<QMatrix> kraus, TraceMode mode = TraceMode::kDefault);

    static Channel identity(std::size_t d);

    std::size_t in_dim() const { return kraus_.front().cols(); }
    std::size_t out_dim() const { return kraus_.front().rows(); }
    TraceMode mode() const { return mode_; }
    const std::vector<QMatrix> &kraus() const { return kraus_; }

  private:
    std::vector<QMatrix> kraus_;
    TraceMode mode_;
};

/// PSD and tr(E^2) <= d + 1e-9.
bool is_effect(const QMatrix &e);

/// Largest entry of |sum_r A_r* A_r - I_d| (default) or |sum_r A_r A_r* - I_p| (strict).
double kraus_normalization_residual(const std::vector<QMatrix> &kraus, TraceMode mode);

/// Unclamped tr(E_r rho) per outcome.
std::vector<double> born_raw(const State &rho, const Povm &povm);

/// p(r) = tr(E_r rho), checked against [-1e-9, 1 + 1e-9] and
/// |sum p - 1| <= 1e-9, then clamped to [0, 1]. Throws ValidationError
/// (kDimensionMismatch, kProbabilityRange).
std::vector<double> born(const State &rho, const Povm &povm);

/// sum_r A_r rho A_r* without validating the output.
QMatrix apply_kraus(const Channel &channel, const QMatrix &rho);

/// Phi(rho) validated as a State. Throws ValidationError if the dimensions
/// disagree or the output is not a state.
State apply_channel(const Channel &channel, const State &rho);

State random_state(Rng &rng, std::size_t d);
/// E_r = S^{-1/2} F_r S^{-1/2} with random PSD F_r and S = sum F_r.
Povm random_povm(Rng &rng, std::size_t d, std::size_t outcomes);
/// A_r = B_r T^{-1/2}, T = sum B_r* B_r (default mode), or
/// A_r = T^{-1/2} B_r, T = sum B_r B_r* (strict mode).
Channel random_channel(Rng &rng, std::size_t in_dim, std::size_t out_dim, std::size_t n_kraus,
                       TraceMode mode = TraceMode::kDefault);

}  // namespace quatsim

#endif
