// Copyright 2026 The Uncertainty Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uncertainty {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    NonFiniteEntry,
    NonHermitianInput,
    NotPositiveSemidefinite,
    NotNormalized,
    NotOrthonormal,
    NotOrthogonal,
    NonRealExpectation,
    ZeroDeviation,
    HypothesisViolated,
    RankUnachieved,
    // Invariant violations: the theorems forbid these, so they signal a
    // numerical fault or a logic bug rather than bad input.
    BoundViolation,
    InconsistentSaturation,
    InconsistentCharacterization,
    RIndependenceViolation,
    CorollaryViolation,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NonRealExpectation: return "NonRealExpectation";
    case ErrorCode::ZeroDeviation: return "ZeroDeviation";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::RankUnachieved: return "RankUnachieved";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::InconsistentSaturation: return "InconsistentSaturation";
    case ErrorCode::InconsistentCharacterization: return "InconsistentCharacterization";
    case ErrorCode::RIndependenceViolation: return "RIndependenceViolation";
    case ErrorCode::CorollaryViolation: return "CorollaryViolation";
    }
    return "Unknown";
}

constexpr bool is_invariant_violation(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::BoundViolation:
    case ErrorCode::InconsistentSaturation:
    case ErrorCode::InconsistentCharacterization:
    case ErrorCode::RIndependenceViolation:
    case ErrorCode::CorollaryViolation:
        return true;
    default:
        return false;
    }
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace uncertainty
