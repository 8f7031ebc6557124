// Copyright 2026 The spinwig Authors
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

#include "spinwig/errors.hpp"

namespace spinwig {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidDimension: return "invalid-dimension";
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::InvalidOperator: return "invalid-operator";
        case ErrorKind::InvalidCoordinates: return "invalid-coordinates";
        case ErrorKind::DegenerateGrid: return "degenerate-grid";
        case ErrorKind::AliasingRisk: return "aliasing-risk";
        case ErrorKind::SymmetryViolation: return "symmetry-violation";
        case ErrorKind::DomainError: return "domain-error";
        case ErrorKind::OrthogonalityViolation: return "orthogonality-violation";
        case ErrorKind::NormalizationFailure: return "normalization-failure";
        case ErrorKind::BandwidthError: return "bandwidth-error";
        case ErrorKind::UnverifiedKernel: return "unverified-kernel";
        case ErrorKind::UnsupportedNoise: return "unsupported-noise";
        case ErrorKind::InvalidModel: return "invalid-model";
        case ErrorKind::NotInvertibleProfile: return "not-invertible-profile";
        case ErrorKind::IllConditioned: return "ill-conditioned";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace spinwig
