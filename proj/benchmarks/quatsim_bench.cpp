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

#include <benchmark/benchmark.h>

#include "quatsim/campaign.hpp"
#include "quatsim/embed.hpp"
#include "quatsim/frame.hpp"
#include "quatsim/random.hpp"
#include "quatsim/simulate.hpp"
#include "quatsim/spectral.hpp"

namespace {

using namespace quatsim;

void BM_Psi(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    QMatrix a = random_ginibre(rng, d, d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(psi(a));
    }
}
BENCHMARK(BM_Psi)->RangeMultiplier(2)->Range(1, 32);

void BM_HermitianEig(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    CMatrix m = psi(random_self_adjoint(rng, d));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eig(m));
    }
    state.SetLabel("complex dim " + std::to_string(2 * d));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(1, 32);

void BM_SpectralDecompose(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    QMatrix a = random_self_adjoint(rng, d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral_decompose(a));
    }
}
BENCHMARK(BM_SpectralDecompose)->RangeMultiplier(2)->Range(1, 32);

void BM_ChannelEquiv(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(4);
    State rho = random_state(rng, d);
    Channel channel = random_channel(rng, d, d, 2);
    Povm povm = random_povm(rng, d, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(channel_equiv(rho, channel, povm));
    }
}
BENCHMARK(BM_ChannelEquiv)->DenseRange(1, 6);

void BM_FrameReconstruct(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    QMatrix rho = random_state(rng, d).matrix();
    auto f = [&](const QMatrix &e) { return hs_form(e, rho); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(frame_reconstruct(f, d));
    }
}
BENCHMARK(BM_FrameReconstruct)->DenseRange(1, 4);

void BM_CampaignTrial(benchmark::State &state) {
    CampaignConfig config;
    std::size_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial(config, trial++));
    }
}
BENCHMARK(BM_CampaignTrial);

}  // namespace

BENCHMARK_MAIN();
