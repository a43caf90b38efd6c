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

#ifndef QUATSIM_RANDOM_HPP
#define QUATSIM_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <variant>

#include "quatsim/qmatrix.hpp"

namespace quatsim {

/// Seeded source of standard-normal quaternion components.
///
/// Owns its engine; no global state. Copying an Rng forks the stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform(double lo, double hi);
    /// Uniform integer in [lo, hi].
    std::size_t uniform_index(std::size_t lo, std::size_t hi);
    Quaternion quaternion();

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// SplitMix64 mix of (master, index); used for per-trial seeds.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

Quaternion random_unit_quaternion(Rng &rng);
/// p x d matrix with independent standard-normal components.
QMatrix random_ginibre(Rng &rng, std::size_t rows, std::size_t cols);
/// (G + G*) / 2 for Ginibre G.
QMatrix random_self_adjoint(Rng &rng, std::size_t d);
/// G G*.
QMatrix random_psd(Rng &rng, std::size_t d);
/// G G* / tr(G G*).
QMatrix random_state_matrix(Rng &rng, std::size_t d);
/// Eigenvector matrix of a random self-adjoint matrix.
QMatrix random_unitary(Rng &rng, std::size_t d);
/// Unit-norm vector.
QVector random_vector(Rng &rng, std::size_t d);

enum class RandomKind { kState, kUnitary, kPsd, kVector };

/// Deterministic draw of the requested kind from a fresh Rng(seed).
std::variant<QMatrix, QVector> generate(std::uint64_t seed, std::size_t d, RandomKind kind);

}  // namespace quatsim

#endif
