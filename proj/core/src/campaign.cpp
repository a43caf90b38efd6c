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

#include "quatsim/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quatsim/embed.hpp"
#include "quatsim/random.hpp"
#include "quatsim/simulate.hpp"
#include "quatsim/spectral.hpp"

namespace quatsim {

namespace {

// Bounds that are not subject to the --tol override.
constexpr double kProbabilitySumTolerance = 1e-9;
constexpr double kSpectralTolerance = 1e-9;

class TrialRecorder {
  public:
    TrialRecorder(VerificationReport &report, std::size_t trial, std::uint64_t seed)
        : report_(report), trial_(trial), seed_(seed) {}

    void check(const char *name, double deviation, double bound) {
        if (!(deviation <= bound)) {
            ++report_.violations;
            if (!report_.counterexample) {
                report_.counterexample = Counterexample{trial_, seed_, name, deviation};
            }
        }
    }

  private:
    VerificationReport &report_;
    std::size_t trial_;
    std::uint64_t seed_;
};

std::size_t pick(Rng &rng, const std::vector<std::size_t> &dims) { return dims[rng.uniform_index(0, dims.size() - 1)]; }

double relative(double residual, double scale) { return residual / std::max(1.0, scale); }

void check_invariants(const CampaignConfig &config, Rng &rng, VerificationReport &report, TrialRecorder &rec) {
    const double tol = config.tolerance;
    const std::size_t p = pick(rng, config.dims);
    const std::size_t d = pick(rng, config.dims);
    const std::size_t q = pick(rng, config.dims);

    // psi is R-linear, multiplicative and *-compatible.
    QMatrix a = random_ginibre(rng, p, d);
    QMatrix a2 = random_ginibre(rng, p, d);
    QMatrix b = random_ginibre(rng, d, q);
    double s1 = rng.normal();
    double s2 = rng.normal();
    double linear = relative(max_abs_diff(psi(s1 * a + s2 * a2), psi(a) * Complex(s1) + psi(a2) * Complex(s2)),
                             std::abs(s1) * frobenius_norm(a) + std::abs(s2) * frobenius_norm(a2));
    double multiplicative =
        relative(max_abs_diff(psi(a) * psi(b), psi(a * b)), frobenius_norm(a) * frobenius_norm(b));
    double star = relative(max_abs_diff(psi(adjoint(a)), adjoint(psi(a))), frobenius_norm(a));
    double embedding = std::max({linear, multiplicative, star});
    report.max_embedding_dev = std::max(report.max_embedding_dev, embedding);
    rec.check("embedding_laws", embedding, tol);

    // tr(AB) = tr(psi(A) psi(B)) / 2 on self-adjoint operands.
    QMatrix x = random_self_adjoint(rng, d);
    QMatrix y = random_self_adjoint(rng, d);
    double inner = relative(std::abs(hs_form(x, y) - 0.5 * trace(psi(x) * psi(y)).real()),
                            frobenius_norm(x) * frobenius_norm(y));
    report.max_inner_product_dev = std::max(report.max_inner_product_dev, inner);
    rec.check("inner_product_correspondence", inner, tol);

    // Cyclicity and basis independence of the Re-trace.
    QMatrix c = random_ginibre(rng, d, d);
    double cyclic = relative(std::abs(trace(x * c * y) - trace(y * x * c)),
                             frobenius_norm(x) * frobenius_norm(c) * frobenius_norm(y));
    QMatrix u = random_unitary(rng, d);
    double rotated = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        QVector col = u.column(r);
        rotated += inner_product(col, c * col).real();
    }
    double basis = relative(std::abs(rotated - trace(c)), frobenius_norm(c));
    double tr_dev = std::max(cyclic, basis);
    report.max_trace_dev = std::max(report.max_trace_dev, tr_dev);
    rec.check("trace_structure", tr_dev, tol);

    // Spectral theorem via the embedding.
    SpectralDecomposition spec = spectral_decompose(x);
    double spectral = relative(max_abs_diff(spec.reconstruct(), x), frobenius_norm(x));
    report.max_spectral_dev = std::max(report.max_spectral_dev, spectral);
    rec.check("spectral_reconstruction", spectral, kSpectralTolerance);
}

}  // namespace

VerificationReport run_trial(const CampaignConfig &config, std::size_t trial) {
    const std::uint64_t seed = trial_seed(config.seed, trial);
    Rng rng(seed);
    VerificationReport report;
    report.trials = 1;
    report.dims = config.dims;
    report.mode = config.mode;
    report.tolerance = config.tolerance;
    report.worst_seed = seed;
    report.worst_trial = trial;
    TrialRecorder rec(report, trial, seed);

    {
        const std::size_t d = pick(rng, config.dims);
        const std::size_t m = rng.uniform_index(config.min_outcomes, config.max_outcomes);
        State rho = random_state(rng, d);
        Povm povm = random_povm(rng, d, m);
        MeasurementReport mr = measurement_equiv(rho, povm);
        report.max_measurement_dev = mr.max_dev;
        double sum_dev = std::max(std::abs(mr.sum_p - 1.0), std::abs(mr.sum_q - 1.0));
        report.max_probability_sum_dev = sum_dev;
        rec.check("measurement_equivalence", mr.max_dev, config.tolerance);
        rec.check("probability_sum", sum_dev, kProbabilitySumTolerance);
    }

    {
        const std::size_t d = pick(rng, config.dims);
        const std::size_t p = pick(rng, config.dims);
        const bool strict = config.mode == TraceMode::kStrict;
        const std::size_t other = strict ? d : p;
        const std::size_t needed = ((strict ? p : d) + other - 1) / other;
        const std::size_t n = rng.uniform_index(needed, std::max(needed, config.max_kraus));
        const std::size_t m = rng.uniform_index(config.min_outcomes, config.max_outcomes);
        State rho = random_state(rng, d);
        Channel channel = random_channel(rng, d, p, n, config.mode);
        Povm povm = random_povm(rng, p, m);
        ChannelReport cr = channel_equiv(rho, channel, povm);
        report.max_channel_dev = cr.max_dev;
        report.max_intermediate_dev = cr.intermediate_dev;
        rec.check("channel_equivalence", cr.max_dev, config.tolerance);
        rec.check("intermediate_identity", cr.intermediate_dev, config.tolerance);
        if (cr.trace_checked) {
            rec.check("output_trace", cr.output_trace_dev, kProbabilitySumTolerance);
        }
    }

    if (config.invariants) {
        check_invariants(config, rng, report, rec);
    }
    return report;
}

void merge(VerificationReport &into, const VerificationReport &from) {
    const double into_worst = std::max(into.max_measurement_dev, into.max_channel_dev);
    const double from_worst = std::max(from.max_measurement_dev, from.max_channel_dev);
    if (into.trials == 0 || from_worst > into_worst ||
        (from_worst == into_worst && from.worst_trial < into.worst_trial)) {
        into.worst_seed = from.worst_seed;
        into.worst_trial = from.worst_trial;
    }
    into.trials += from.trials;
    into.max_measurement_dev = std::max(into.max_measurement_dev, from.max_measurement_dev);
    into.max_channel_dev = std::max(into.max_channel_dev, from.max_channel_dev);
    into.max_intermediate_dev = std::max(into.max_intermediate_dev, from.max_intermediate_dev);
    into.max_probability_sum_dev = std::max(into.max_probability_sum_dev, from.max_probability_sum_dev);
    into.max_embedding_dev = std::max(into.max_embedding_dev, from.max_embedding_dev);
    into.max_inner_product_dev = std::max(into.max_inner_product_dev, from.max_inner_product_dev);
    into.max_trace_dev = std::max(into.max_trace_dev, from.max_trace_dev);
    into.max_spectral_dev = std::max(into.max_spectral_dev, from.max_spectral_dev);
    into.violations += from.violations;
    if (from.counterexample && (!into.counterexample || from.counterexample->trial < into.counterexample->trial)) {
        into.counterexample = from.counterexample;
    }
}

VerificationReport run_campaign(const CampaignConfig &config) {
    if (config.trials == 0) {
        throw std::invalid_argument("campaign needs at least one trial");
    }
    if (config.dims.empty() || std::find(config.dims.begin(), config.dims.end(), 0u) != config.dims.end()) {
        throw std::invalid_argument("campaign dims must be a non-empty list of positive integers");
    }
    if (config.min_outcomes == 0 || config.min_outcomes > config.max_outcomes) {
        throw std::invalid_argument("campaign outcome range is empty");
    }
    if (!std::isfinite(config.tolerance) || config.tolerance < 0.0) {
        throw std::invalid_argument("campaign tolerance must be finite and non-negative");
    }
    VerificationReport report;
    report.dims = config.dims;
    report.mode = config.mode;
    report.tolerance = config.tolerance;
    for (std::size_t t = 0; t < config.trials; ++t) {
        merge(report, run_trial(config, t));
    }
    return report;
}

}  // namespace quatsim
