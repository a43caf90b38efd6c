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

#include "quatsim/qqt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "quatsim/error.hpp"
#include "quatsim/spectral.hpp"

namespace quatsim {

namespace {

constexpr double kConditioningFloor = 1e-10;

// tr(AB) = Re sum_{r,s} A_rs B_sr.
double trace_of_product(const QMatrix &a, const QMatrix &b) {
    double t = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t s = 0; s < a.cols(); ++s) {
            t += (a(r, s) * b(s, r)).real();
        }
    }
    return t;
}

double min_eigenvalue(const QMatrix &a) { return spectral_decompose(a).eigenvalues.front(); }

std::string shape_of(const QMatrix &a) {
    std::ostringstream s;
    s << a.rows() << "x" << a.cols();
    return s.str();
}

void require_psd(const QMatrix &a, const std::string &object) {
    if (!a.is_square()) {
        throw ValidationError(Invariant::kDimensionMismatch, object, "matrix is " + shape_of(a));
    }
    if (!is_self_adjoint(a, kValidationTolerance)) {
        throw ValidationError(Invariant::kNotSelfAdjoint, object, "A - A* exceeds tolerance");
    }
    if (!is_psd(a)) {
        std::ostringstream msg;
        msg << "smallest eigenvalue " << min_eigenvalue(a);
        throw ValidationError(Invariant::kNotPsd, object, msg.str());
    }
}

}  // namespace

std::string_view trace_mode_name(TraceMode mode) { return mode == TraceMode::kStrict ? "strict" : "default"; }

State::State(QMatrix rho) : rho_(std::move(rho)) {
    if (rho_.rows() == 0) {
        throw ValidationError(Invariant::kEmpty, "state", "zero-dimensional matrix");
    }
    require_psd(rho_, "state");
    double t = trace(rho_);
    if (std::abs(t - 1.0) > kValidationTolerance) {
        std::ostringstream msg;
        msg << "trace is " << t;
        throw ValidationError(Invariant::kTraceNotOne, "state", msg.str());
    }
}

State State::maximally_mixed(std::size_t d) {
    return State(QMatrix::identity(d) * (1.0 / static_cast<double>(d)));
}

Povm::Povm(std::vector<QMatrix> effects) : effects_(std::move(effects)) {
    if (effects_.empty()) {
        throw ValidationError(Invariant::kEmpty, "povm", "no effects");
    }
    const std::size_t d = effects_.front().rows();
    if (d == 0) {
        throw ValidationError(Invariant::kEmpty, "povm", "zero-dimensional effects");
    }
    QMatrix total(d, d);
    for (std::size_t r = 0; r < effects_.size(); ++r) {
        const QMatrix &e = effects_[r];
        std::string object = "povm effect " + std::to_string(r);
        if (e.rows() != d || e.cols() != d) {
            throw ValidationError(Invariant::kDimensionMismatch, object,
                                  "expected " + std::to_string(d) + "x" + std::to_string(d) + ", got " + shape_of(e));
        }
        require_psd(e, object);
        double t2 = trace_of_product(e, e);
        if (t2 > static_cast<double>(d) + kValidationTolerance) {
            std::ostringstream msg;
            msg << "tr(E^2) = " << t2 << " exceeds " << d;
            throw ValidationError(Invariant::kEffectTooLarge, object, msg.str());
        }
        total += e;
    }
    double dev = max_abs_diff(total, QMatrix::identity(d));
    if (dev > kValidationTolerance) {
        std::ostringstream msg;
        msg << "sum of effects differs from the identity by " << dev;
        throw ValidationError(Invariant::kIncomplete, "povm", msg.str());
    }
}

Channel::Channel(std::vector<QMatrix> kraus, TraceMode mode) : kraus_(std::move(kraus)), mode_(mode) {
    if (kraus_.empty()) {
        throw ValidationError(Invariant::kEmpty, "channel", "no Kraus operators");
    }
    const std::size_t p = kraus_.front().rows();
    const std::size_t d = kraus_.front().cols();
    if (p == 0 || d == 0) {
        throw ValidationError(Invariant::kEmpty, "channel", "zero-dimensional Kraus operator");
    }
    for (std::size_t r = 0; r < kraus_.size(); ++r) {
        if (kraus_[r].rows() != p || kraus_[r].cols() != d) {
            throw ValidationError(Invariant::kDimensionMismatch, "channel kraus " + std::to_string(r),
                                  "expected " + shape_of(kraus_.front()) + ", got " + shape_of(kraus_[r]));
        }
    }
    double dev = kraus_normalization_residual(kraus_, mode_);
    if (dev > kValidationTolerance) {
        std::ostringstream msg;
        msg << (mode_ == TraceMode::kStrict ? "sum A A*" : "sum A* A") << " differs from the identity by " << dev;
        throw ValidationError(Invariant::kKrausNormalization, "channel", msg.str());
    }
}

Channel Channel::identity(std::size_t d) { return Channel({QMatrix::identity(d)}); }

bool is_effect(const QMatrix &e) {
    if (!e.is_square() || !is_psd(e)) {
        return false;
    }
    return trace_of_product(e, e) <= static_cast<double>(e.rows()) + kValidationTolerance;
}

double kraus_normalization_residual(const std::vector<QMatrix> &kraus, TraceMode mode) {
    if (kraus.empty()) {
        return 0.0;
    }
    const std::size_t n = mode == TraceMode::kStrict ? kraus.front().rows() : kraus.front().cols();
    QMatrix total(n, n);
    for (const auto &a : kraus) {
        total += mode == TraceMode::kStrict ? a * adjoint(a) : adjoint(a) * a;
    }
    return max_abs_diff(total, QMatrix::identity(n));
}

std::vector<double> born_raw(const State &rho, const Povm &povm) {
    if (rho.dim() != povm.dim()) {
        throw ValidationError(Invariant::kDimensionMismatch, "born",
                              "state dim " + std::to_string(rho.dim()) + " vs povm dim " + std::to_string(povm.dim()));
    }
    std::vector<double> p;
    p.reserve(povm.size());
    for (const auto &e : povm.effects()) {
        p.push_back(trace_of_product(e, rho.matrix()));
    }
    return p;
}

std::vector<double> born(const State &rho, const Povm &povm) {
    std::vector<double> p = born_raw(rho, povm);
    double sum = 0.0;
    for (std::size_t r = 0; r < p.size(); ++r) {
        if (p[r] < -kValidationTolerance || p[r] > 1.0 + kValidationTolerance) {
            std::ostringstream msg;
            msg << "p(" << r << ") = " << p[r];
            throw ValidationError(Invariant::kProbabilityRange, "born", msg.str());
        }
        sum += p[r];
    }
    if (std::abs(sum - 1.0) > kValidationTolerance) {
        std::ostringstream msg;
        msg << "probabilities sum to " << sum;
        throw ValidationError(Invariant::kProbabilityRange, "born", msg.str());
    }
    for (auto &x : p) {
        x = std::clamp(x, 0.0, 1.0);
    }
    return p;
}

QMatrix apply_kraus(const Channel &channel, const QMatrix &rho) {
    if (rho.rows() != channel.in_dim() || rho.cols() != channel.in_dim()) {
        throw ValidationError(Invariant::kDimensionMismatch, "channel",
                              "input is " + shape_of(rho) + ", channel expects dim " + std::to_string(channel.in_dim()));
    }
    QMatrix out(channel.out_dim(), channel.out_dim());
    for (const auto &a : channel.kraus()) {
        out += a * rho * adjoint(a);
    }
    return out;
}

State apply_channel(const Channel &channel, const State &rho) { return State(apply_kraus(channel, rho.matrix())); }

State random_state(Rng &rng, std::size_t d) { return State(random_state_matrix(rng, d)); }

Povm random_povm(Rng &rng, std::size_t d, std::size_t outcomes) {
    if (outcomes == 0) {
        throw std::invalid_argument("random_povm: need at least one outcome");
    }
    std::vector<QMatrix> f;
    f.reserve(outcomes);
    QMatrix total(d, d);
    for (std::size_t r = 0; r < outcomes; ++r) {
        f.push_back(random_psd(rng, d));
        total += f.back();
    }
    QMatrix s = inv_sqrt_psd(total, kConditioningFloor);
    for (auto &e : f) {
        QMatrix m = s * e * s;
        e = 0.5 * (m + adjoint(m));
    }
    return Povm(std::move(f));
}

Channel random_channel(Rng &rng, std::size_t in_dim, std::size_t out_dim, std::size_t n_kraus, TraceMode mode) {
    const bool strict = mode == TraceMode::kStrict;
    // The normalizer has quaternionic rank at most n_kraus * (other dim).
    if (n_kraus == 0 || (strict ? n_kraus * in_dim < out_dim : n_kraus * out_dim < in_dim)) {
        throw std::invalid_argument("random_channel: too few Kraus operators for the requested shape");
    }
    std::vector<QMatrix> b;
    b.reserve(n_kraus);
    const std::size_t n = strict ? out_dim : in_dim;
    QMatrix total(n, n);
    for (std::size_t r = 0; r < n_kraus; ++r) {
        b.push_back(random_ginibre(rng, out_dim, in_dim));
        total += strict ? b.back() * adjoint(b.back()) : adjoint(b.back()) * b.back();
    }
    QMatrix t = inv_sqrt_psd(0.5 * (total + adjoint(total)), kConditioningFloor);
    for (auto &a : b) {
        a = strict ? t * a : a * t;
    }
    return Channel(std::move(b), mode);
}

}  // namespace quatsim
