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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinwig/harmonics.hpp"
#include "spinwig/noise_models.hpp"

namespace spinwig {

enum class ProfileScope { PerOperator, PerHarmonicDegree, PerCircularFrequency };

std::string_view to_string(ProfileScope scope);

inline constexpr double kInversionFloor = 1e-3;

/// Attenuation of each traceless basis element (or of each harmonic degree /
/// circle frequency) under a noise model. The identity is never attenuated.
struct AttenuationProfile {
    ProfileScope scope = ProfileScope::PerOperator;
    /// Operators the factors refer to (empty for the harmonic scopes).
    HermitianBasis basis;
    /// One factor per basis element, or per degree n = 0 .. for harmonic scopes.
    std::vector<double> factors;
    /// Rotation frequency of each element for circular models.
    std::vector<double> frequencies;
    json provenance;

    /// Factor of the element labeled `label`; throws invalid-input if absent.
    double factor(const std::string& label) const;
    json to_json() const;
};

/// Basis in which the model acts diagonally: Gell-Mann (global), tensor
/// Gell-Mann (local), or Gell-Mann conjugated into the eigenbasis of the
/// rotation generator (circular models).
HermitianBasis mitigation_basis(const NoiseModel& model);

/// Per-operator profile on mitigation_basis(model). Circular models need a
/// distribution with vanishing sine moments at every nonzero frequency.
AttenuationProfile attenuation_profile(const NoiseModel& model);
/// Depolarizing models on a caller-chosen tensor or Gell-Mann basis.
AttenuationProfile attenuation_profile(const NoiseModel& model, const HermitianBasis& basis);
/// Degree-wise profile for degrees 0 .. n_max. Global depolarizing scales
/// every degree >= 1 by 1 - p; circular models give the circle frequency
/// factors Integral dens cos(n theta).
AttenuationProfile harmonic_profile(const NoiseModel& model, int n_max);

/// Tr[O E(rho)].
double noisy_expectation(const ComplexMatrix& obs, const DensityMatrix& rho, const NoiseModel& model);

struct MitigatedEstimate {
    double raw = 0.0;
    double factor = 1.0;
    double mitigated = 0.0;
    /// 1 / factor, the variance amplification proxy.
    double amplification = 1.0;
};

/// raw / factor per operator label. Throws ill-conditioned, naming the
/// operator, when a factor is below `floor`.
std::map<std::string, MitigatedEstimate> mitigate(const std::map<std::string, double>& raw,
                                                  const AttenuationProfile& profile,
                                                  double floor = kInversionFloor);

/// Noisy expectations of every profile basis element.
std::map<std::string, double> basis_expectations(const ComplexMatrix& noisy_rho, const AttenuationProfile& profile);

struct ObservableEstimate {
    double raw = 0.0;
    double mitigated = 0.0;
    /// Largest 1/factor among the elements O actually touches.
    double amplification = 1.0;
};

/// O = o_0 I + sum o_i B_i; the identity part is kept and every touched
/// <B_i> is divided by its factor.
ObservableEstimate mitigate_observable(const ComplexMatrix& obs, const ComplexMatrix& noisy_rho,
                                       const AttenuationProfile& profile, double floor = kInversionFloor);

/// {"scope", "provenance", "operators": [{label, raw, factor, mitigated, amplification}]}.
json mitigation_report(const std::map<std::string, MitigatedEstimate>& estimates, const AttenuationProfile& profile);

struct ReweightResult {
    HarmonicExpansion expansion;
    /// Frequencies whose factor fell below the floor; their coefficients are set to 0.
    std::vector<int> truncated;
};

/// Divides each circle frequency n >= 1 by Integral dens cos(n theta).
ReweightResult circular_reweight(const HarmonicExpansion& coeffs, const Distribution& dens,
                                 double floor = kInversionFloor);

}  // namespace spinwig
