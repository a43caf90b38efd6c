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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "quatsim/embed.hpp"
#include "quatsim/error.hpp"
#include "quatsim/random.hpp"
#include "quatsim/spectral.hpp"
#include "test_util.hpp"

namespace quatsim {
namespace {

using testing::CMatNear;
using testing::to_eigen;

std::vector<double> sorted_eigenvalues(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
    auto ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

TEST(LiftState, MaximallyMixed) {
    for (std::size_t d = 1; d <= 4; ++d) {
        CMatrix sigma = lift_state(State::maximally_mixed(d));
        EXPECT_TRUE(CMatNear(sigma, CMatrix::identity(2 * d) * (0.5 / static_cast<double>(d)), 1e-15));
    }
}

TEST(LiftState, PureStateSpectrum) {
    Rng rng(70);
    for (std::size_t d = 1; d <= 5; ++d) {
        CMatrix sigma = lift_state(State(outer(random_vector(rng, d))));
        EXPECT_NEAR(trace(sigma).real(), 1.0, 1e-12);
        EXPECT_NEAR(trace(sigma).imag(), 0.0, 1e-12);
        std::vector<double> ev = sorted_eigenvalues(sigma);
        for (std::size_t i = 0; i + 2 < ev.size(); ++i) {
            EXPECT_NEAR(ev[i], 0.0, 1e-12);
        }
        EXPECT_NEAR(ev[ev.size() - 2], 0.5, 1e-12);
        EXPECT_NEAR(ev.back(), 0.5, 1e-12);
    }
}

TEST(LiftState, RandomStatesAreDensityMatrices) {
    Rng rng(71);
    for (int t = 0; t < 50; ++t) {
        std::size_t d = 1 + t % 6;
        State rho = random_state(rng, d);
        CMatrix sigma = lift_state(rho);
        EXPECT_TRUE(is_hermitian(sigma));
        EXPECT_NEAR(trace(sigma).real(), 1.0, 1e-12);
        EXPECT_GE(sorted_eigenvalues(sigma).front(), -1e-12);
    }
}

TEST(LiftState, DegenerateSpectrumMatchesQuaternionic) {
    // Every eigenvalue of rho appears twice in psi(rho), halved by the lift.
    Rng rng(72);
    for (std::size_t d = 1; d <= 5; ++d) {
        State rho = random_state(rng, d);
        std::vector<double> quat = spectral_decompose(rho.matrix()).eigenvalues;
        HermitianEig eig = hermitian_eig(lift_state(rho));
        ASSERT_EQ(eig.eigenvalues.size(), 2 * d);
        for (std::size_t i = 0; i < d; ++i) {
            EXPECT_NEAR(eig.eigenvalues[2 * i], quat[i] / 2, 1e-12);
            EXPECT_NEAR(eig.eigenvalues[2 * i + 1], quat[i] / 2, 1e-12);
        }
    }
}

TEST(LiftPovm, Completeness) {
    Rng rng(73);
    for (std::size_t d = 1; d <= 5; ++d) {
        Povm povm = random_povm(rng, d, 2 + d);
        std::vector<CMatrix> lifted = lift_povm(povm);
        CMatrix total(2 * d, 2 * d);
        for (const auto &f : lifted) {
            EXPECT_TRUE(is_hermitian(f));
            EXPECT_GE(sorted_eigenvalues(f).front(), -1e-10);
            total += f;
        }
        EXPECT_TRUE(CMatNear(total, CMatrix::identity(2 * d), 1e-10));
    }
}

TEST(LiftChannel, Normalization) {
    Rng rng(74);
    for (std::size_t d = 1; d <= 4; ++d) {
        for (std::size_t p = 1; p <= 4; ++p) {
            Channel channel = random_channel(rng, d, p, (d + p - 1) / p + 1);
            std::vector<CMatrix> lifted = lift_channel(channel);
            ASSERT_EQ(lifted.size(), channel.kraus().size());
            EXPECT_EQ(lifted.front().rows(), 2 * p);
            EXPECT_EQ(lifted.front().cols(), 2 * d);
            EXPECT_LE(complex_kraus_residual(lifted, TraceMode::kDefault), 1e-10);
        }
    }
    Channel strict = random_channel(rng, 2, 3, 2, TraceMode::kStrict);
    EXPECT_LE(complex_kraus_residual(lift_channel(strict), TraceMode::kStrict), 1e-10);
}

TEST(LiftChannel, UnitaryLiftsToUnitary) {
    Rng rng(75);
    QMatrix u = random_unitary(rng, 3);
    CMatrix lu = lift_channel(Channel({u})).front();
    EXPECT_TRUE(CMatNear(adjoint(lu) * lu, CMatrix::identity(6), 1e-12));
    EXPECT_TRUE(CMatNear(lu * adjoint(lu), CMatrix::identity(6), 1e-12));
}

TEST(ComplexProbabilities, RejectsMismatchedShapes) {
    EXPECT_THROW(complex_probabilities(CMatrix::identity(2), {CMatrix::identity(4)}), DimensionError);
}

TEST(MeasurementEquiv, Example) {
    const double w = 1.0 / std::sqrt(2.0);
    State pure(outer(QVector({Quaternion(w), Quaternion::j() * w})));
    MeasurementReport r = measurement_equiv(pure, Povm({QMatrix::diagonal({1, 0}), QMatrix::diagonal({0, 1})}));
    ASSERT_EQ(r.q.size(), 2u);
    EXPECT_NEAR(r.q[0], 0.5, 1e-15);
    EXPECT_NEAR(r.q[1], 0.5, 1e-15);
    EXPECT_LE(r.max_dev, 1e-15);
}

TEST(MeasurementEquiv, RandomInstances) {
    Rng rng(76);
    for (int t = 0; t < 200; ++t) {
        std::size_t d = 1 + t % 6;
        MeasurementReport r = measurement_equiv(random_state(rng, d), random_povm(rng, d, 2 + t % 7));
        EXPECT_LE(r.max_dev, 1e-10);
        EXPECT_NEAR(r.sum_p, 1.0, 1e-9);
        EXPECT_NEAR(r.sum_q, 1.0, 1e-9);
    }
}

TEST(ChannelEquiv, ChangesDimension) {
    Rng rng(77);
    State rho = random_state(rng, 3);
    Channel channel = random_channel(rng, 3, 2, 2);
    ChannelReport r = channel_equiv(rho, channel, random_povm(rng, 2, 3));
    EXPECT_EQ(r.p.size(), 3u);
    EXPECT_LE(r.max_dev, 1e-10);
    EXPECT_LE(r.intermediate_dev, 1e-10);
    EXPECT_TRUE(r.trace_checked);
    EXPECT_LE(r.output_trace_dev, 1e-9);
}

TEST(ChannelEquiv, IntermediateIdentity) {
    Rng rng(78);
    for (int t = 0; t < 100; ++t) {
        std::size_t d = 1 + t % 5;
        std::size_t p = 1 + (t / 5) % 5;
        State rho = random_state(rng, d);
        Channel channel = random_channel(rng, d, p, (d + p - 1) / p + t % 2);
        State out = apply_channel(channel, rho);
        CMatrix theta = apply_complex_kraus(lift_channel(channel), lift_state(rho));
        EXPECT_TRUE(CMatNear(theta, lift_state(out), 1e-10));
        ChannelReport r = channel_equiv(rho, channel, random_povm(rng, p, 2));
        EXPECT_LE(r.intermediate_dev, 1e-10);
    }
}

TEST(ChannelEquiv, StrictModeSkipsTraceCheck) {
    Rng rng(79);
    Channel strict = random_channel(rng, 3, 2, 2, TraceMode::kStrict);
    ChannelReport r = channel_equiv(random_state(rng, 3), strict, random_povm(rng, 2, 2));
    EXPECT_EQ(r.mode, TraceMode::kStrict);
    EXPECT_FALSE(r.trace_checked);
    EXPECT_LE(r.max_dev, 1e-10);
    EXPECT_LE(r.intermediate_dev, 1e-10);
}

TEST(ChannelEquiv, PovmOnWrongSpace) {
    Rng rng(80);
    Channel channel = random_channel(rng, 3, 2, 2);
    EXPECT_THROW(channel_equiv(random_state(rng, 3), channel, random_povm(rng, 3, 2)), ValidationError);
    EXPECT_THROW(channel_equiv(random_state(rng, 2), channel, random_povm(rng, 2, 2)), ValidationError);
}

}  // namespace
}  // namespace quatsim
