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

#ifndef QUATSIM_FRAME_HPP
#define QUATSIM_FRAME_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "quatsim/qmatrix.hpp"

namespace quatsim {

/// One effect G = (Y + shift I) / scale presented to a frame function,
/// where Y is basis element `basis_index` of sa_basis(d).
struct FrameQuery {
    QMatrix effect;
    std::size_t basis_index = 0;
    double shift = 0.0;
    double scale = 1.0;
};

struct FrameOptions {
    /// Extra shift beyond |lambda_min(Y)| for the primary queries.
    double margin = 0.1;
    /// Shift margin for the redundant consistency queries.
    double check_margin = 0.6;
    /// Largest tolerated disagreement between redundant evaluations.
    double tolerance = 1e-9;
};

/// Query order: the identity, then one primary query per basis element,
/// then one check query per basis element. All queries are effects.
struct FrameSchedule {
    std::size_t dim = 0;
    QMatrix identity;
    std::vector<FrameQuery> primary;
    std::vector<FrameQuery> check;

    std::size_t size() const { return 1 + primary.size() + check.size(); }
    std::vector<QMatrix> effects() const;
};

FrameSchedule frame_schedule(std::size_t d, const FrameOptions &options = {});

struct FrameReconstruction {
    QMatrix rho;
    /// f(Y_r) for each basis element, from the primary queries.
    std::vector<double> coefficients;
    /// max(|f(I) - 1|, max_r |primary_r - check_r|).
    double residual = 0.0;
    /// Amount added to the diagonal (as (1 - tr) / d each) for unit trace.
    double trace_correction = 0.0;
    bool consistent = false;
    /// consistent and rho is PSD.
    bool is_state = false;
};

/// Rebuild rho = sum_r f(Y_r) Y_r from values listed in schedule order.
/// Throws DimensionError if `values.size() != schedule.size()`.
FrameReconstruction reconstruct_from_values(const FrameSchedule &schedule,
                                            std::span<const double> values,
                                            const FrameOptions &options = {});

/// Queries `f` on frame_schedule(d, options), in order, and reconstructs.
FrameReconstruction frame_reconstruct(const std::function<double(const QMatrix &)> &f, std::size_t d,
                                      const FrameOptions &options = {});

}  // namespace quatsim

#endif
