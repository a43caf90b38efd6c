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

#ifndef QUATSIM_CAMPAIGN_HPP
#define QUATSIM_CAMPAIGN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quatsim/qqt.hpp"

namespace quatsim {

struct CampaignConfig {
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims{1, 2, 3, 4, 5, 6};
    std::size_t trials = 1000;
    TraceMode mode = TraceMode::kDefault;
    double tolerance = 1e-10;
    std::size_t min_outcomes = 2;
    std::size_t max_outcomes = 8;
    std::size_t max_kraus = 4;
    /// Also check embedding, trace and spectral invariants on every trial.
    bool invariants = true;
};

struct Counterexample {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string check;
    double deviation = 0.0;
};

/// Max-reduced results of a randomized equivalence campaign.
struct VerificationReport {
    std::size_t trials = 0;
    std::vector<std::size_t> dims;
    TraceMode mode = TraceMode::kDefault;
    double tolerance = 0.0;

    double max_measurement_dev = 0.0;
    double max_channel_dev = 0.0;
    double max_intermediate_dev = 0.0;
    double max_probability_sum_dev = 0.0;
    double max_embedding_dev = 0.0;
    double max_inner_product_dev = 0.0;
    double max_trace_dev = 0.0;
    double max_spectral_dev = 0.0;

    /// Seed of the trial with the largest measurement or channel deviation.
    std::uint64_t worst_seed = 0;
    std::size_t worst_trial = 0;
    std::size_t violations = 0;
    /// Lowest-index failing trial, if any.
    std::optional<Counterexample> counterexample;

    bool passed() const { return violations == 0; }
};

/// Per-trial outcome, a pure function of (config, trial index).
VerificationReport run_trial(const CampaignConfig &config, std::size_t trial);

/// Merge by max; the counterexample with the lowest trial index wins, so
/// the result does not depend on merge order.
void merge(VerificationReport &into, const VerificationReport &from);

/// Throws std::invalid_argument on an empty dims list, zero trials, or
/// an outcome range with min > max or min == 0, or a negative or
/// non-finite tolerance.
VerificationReport run_campaign(const CampaignConfig &config);

}  // namespace quatsim

#endif
