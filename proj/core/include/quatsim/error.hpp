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

#ifndef QUATSIM_ERROR_HPP
#define QUATSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace quatsim {

/// Argument outside the domain of an operation (e.g. inverting zero).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Operand shapes are not conformable.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative routine failed to converge or a matrix is too ill-conditioned.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Which defining property of a quantum object failed to hold.
enum class Invariant {
    kNotSelfAdjoint,
    kNotPsd,
    kTraceNotOne,
    kIncomplete,
    kEffectTooLarge,
    kKrausNormalization,
    kDimensionMismatch,
    kEmpty,
    kProbabilityRange,
    kFrameConsistency,
};

const char *invariant_name(Invariant invariant);

/// A State, Povm, or Channel failed validation.
class ValidationError : public std::runtime_error {
  public:
    ValidationError(Invariant invariant, std::string object, const std::string &detail);

    Invariant invariant() const noexcept { return invariant_; }
    const std::string &object() const noexcept { return object_; }

  private:
    Invariant invariant_;
    std::string object_;
};

}  // namespace quatsim

#endif
