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

#include "spinwig/mitigation.hpp"

#include <cmath>

#include "spinwig/errors.hpp"

namespace spinwig {

namespace {

constexpr double kSymmetryTolerance = 1e-12;

HermitianBasis tensor_gellmann(const std::vector<int>& dims) {
    if (dims.size() == 1) return gellmann_basis(dims[0]);
    std::vector<HermitianBasis> factors;
    for (int d : dims) factors.push_back(gellmann_basis(d));
    return tensor_basis(factors);
}

/// Eigenvectors (columns) and eigenvalues of the rotation generator.
std::pair<ComplexMatrix, RealVector> generator_eigenbasis(const NoiseModel& model) {
    if (model.kind == NoiseKind::Exchange) {
        auto [v, values] = exchange_eigenbasis(model.d1, model.d2);
        // G = -T.
        return {v, -values};
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rotation_generator(model));
    return {eig.eigenvectors(), eig.eigenvalues()};
}

double transition_frequency(const BasisLabel& label, const RealVector& eigenvalues) {
    if (label.kind == "diag") return 0.0;
    return std::abs(eigenvalues(label.row) - eigenvalues(label.col));
}

}  // namespace

std::string_view to_string(ProfileScope scope) {
    switch (scope) {
        case ProfileScope::PerOperator: return "per_operator";
        case ProfileScope::PerHarmonicDegree: return "per_harmonic_degree";
        case ProfileScope::PerCircularFrequency: return "per_circular_frequency";
    }
    return "unknown";
}

double AttenuationProfile::factor(const std::string& label) const {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis.labels[i].str() == label) return factors[i];
    }
    fail(ErrorKind::InvalidInput, "operator '" + label + "' has no attenuation factor");
}

json AttenuationProfile::to_json() const {
    json j = {{"scope", std::string(to_string(scope))}, {"provenance", provenance}, {"factors", factors}};
    if (!basis.elements.empty()) {
        json labels = json::array();
        for (const auto& l : basis.labels) labels.push_back(l.str());
        j["operators"] = labels;
    }
    if (!frequencies.empty()) j["frequencies"] = frequencies;
    return j;
}

HermitianBasis mitigation_basis(const NoiseModel& model) {
    switch (model.kind) {
        case NoiseKind::GlobalDepolarizing: return gellmann_basis(model.dim);
        case NoiseKind::LocalDepolarizing: return tensor_gellmann(model.factor_dims);
        case NoiseKind::Dephasing:
        case NoiseKind::ZZRotation:
        case NoiseKind::Exchange: {
            auto [v, values] = generator_eigenbasis(model);
            HermitianBasis b = gellmann_basis(model.dim);
            for (auto& e : b.elements) e = v * e * v.adjoint();
            return b;
        }
        case NoiseKind::WeakEntangling: break;
    }
    fail(ErrorKind::UnsupportedNoise, "weak-entangling noise has no diagonal attenuation profile");
}

AttenuationProfile attenuation_profile(const NoiseModel& model, const HermitianBasis& basis) {
    AttenuationProfile p;
    p.scope = ProfileScope::PerOperator;
    p.basis = basis;
    p.factors = depolarizing_factors(model, basis);
    p.provenance = model.to_json();
    return p;
}

AttenuationProfile attenuation_profile(const NoiseModel& model) {
    if (!model.circular()) return attenuation_profile(model, mitigation_basis(model));
    auto [v, values] = generator_eigenbasis(model);
    AttenuationProfile p;
    p.scope = ProfileScope::PerCircularFrequency;
    p.basis = mitigation_basis(model);
    p.provenance = model.to_json();
    for (const auto& label : p.basis.labels) {
        double w = transition_frequency(label, values);
        double s = model.distribution.sin_moment(w);
        require(w < 1e-12 || std::abs(s) < kSymmetryTolerance, ErrorKind::NotInvertibleProfile,
                "distribution is not symmetric at frequency " + format_double(w) + " (sine moment " +
                    format_double(s) + "); operator '" + label.str() + "' mixes with its partner");
        p.frequencies.push_back(w);
        p.factors.push_back(w < 1e-12 ? 1.0 : model.distribution.cos_moment(w));
    }
    return p;
}

AttenuationProfile harmonic_profile(const NoiseModel& model, int n_max) {
    require(n_max >= 0, ErrorKind::InvalidInput, "n_max must be nonnegative");
    AttenuationProfile p;
    p.provenance = model.to_json();
    if (model.kind == NoiseKind::GlobalDepolarizing) {
        p.scope = ProfileScope::PerHarmonicDegree;
        for (int n = 0; n <= n_max; ++n) p.factors.push_back(n == 0 ? 1.0 : 1.0 - model.p);
        return p;
    }
    require(model.circular(), ErrorKind::UnsupportedNoise,
            std::string(to_string(model.kind)) + " has no degree-wise profile");
    p.scope = ProfileScope::PerCircularFrequency;
    for (int n = 0; n <= n_max; ++n) {
        double s = model.distribution.sin_moment(n);
        require(std::abs(s) < kSymmetryTolerance, ErrorKind::NotInvertibleProfile,
                "distribution is not symmetric at frequency " + std::to_string(n));
        p.frequencies.push_back(n);
        p.factors.push_back(model.distribution.cos_moment(n));
    }
    return p;
}

double noisy_expectation(const ComplexMatrix& obs, const DensityMatrix& rho, const NoiseModel& model) {
    require(obs.rows() == rho.dim() && obs.cols() == rho.dim(), ErrorKind::InvalidInput,
            "observable dimension does not match the state");
    return (obs * apply_channel(rho, model).matrix()).trace().real();
}

std::map<std::string, MitigatedEstimate> mitigate(const std::map<std::string, double>& raw,
                                                  const AttenuationProfile& profile, double floor) {
    require(!profile.basis.elements.empty(), ErrorKind::InvalidInput, "profile has no operators");
    std::map<std::string, MitigatedEstimate> out;
    for (const auto& [label, value] : raw) {
        double f = profile.factor(label);
        require(std::abs(f) >= floor, ErrorKind::IllConditioned,
                "operator '" + label + "' has attenuation factor " + format_double(f) + " below the floor " +
                    format_double(floor));
        out[label] = MitigatedEstimate{value, f, value / f, 1.0 / std::abs(f)};
    }
    return out;
}

std::map<std::string, double> basis_expectations(const ComplexMatrix& noisy_rho, const AttenuationProfile& profile) {
    require(noisy_rho.rows() == profile.basis.dim, ErrorKind::InvalidInput, "state dimension does not match the profile");
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < profile.basis.size(); ++i) {
        out[profile.basis.labels[i].str()] = (profile.basis.elements[i] * noisy_rho).trace().real();
    }
    return out;
}

ObservableEstimate mitigate_observable(const ComplexMatrix& obs, const ComplexMatrix& noisy_rho,
                                       const AttenuationProfile& profile, double floor) {
    const auto& basis = profile.basis;
    require(!basis.elements.empty(), ErrorKind::InvalidInput, "profile has no operators");
    require(obs.rows() == basis.dim && noisy_rho.rows() == basis.dim, ErrorKind::InvalidInput,
            "observable and state must match the profile dimension");
    BasisExpansion e = expand_in_basis(obs, basis);
    ObservableEstimate out;
    out.raw = (obs * noisy_rho).trace().real();
    out.mitigated = e.identity * noisy_rho.trace().real();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        double c = e.coeffs(static_cast<Eigen::Index>(i));
        if (std::abs(c) < 1e-14) continue;
        double f = profile.factors[i];
        require(std::abs(f) >= floor, ErrorKind::IllConditioned,
                "operator '" + basis.labels[i].str() + "' has attenuation factor " + format_double(f) +
                    " below the floor " + format_double(floor));
        out.mitigated += c * (basis.elements[i] * noisy_rho).trace().real() / f;
        out.amplification = std::max(out.amplification, 1.0 / std::abs(f));
    }
    return out;
}

json mitigation_report(const std::map<std::string, MitigatedEstimate>& estimates, const AttenuationProfile& profile) {
    json ops = json::array();
    for (const auto& [label, e] : estimates) {
        ops.push_back({{"label", label},
                       {"raw", e.raw},
                       {"factor", e.factor},
                       {"mitigated", e.mitigated},
                       {"amplification", e.amplification}});
    }
    return {{"scope", std::string(to_string(profile.scope))}, {"provenance", profile.provenance}, {"operators", ops}};
}

ReweightResult circular_reweight(const HarmonicExpansion& coeffs, const Distribution& dens, double floor) {
    require(coeffs.p == 2, ErrorKind::InvalidInput, "circular_reweight needs a circle expansion");
    require(dens.symmetric(std::max(coeffs.n_max, 1), kSymmetryTolerance), ErrorKind::NotInvertibleProfile,
            "distribution is not symmetric about 0");
    ReweightResult out{coeffs, {}};
    for (int n = 1; n <= coeffs.n_max; ++n) {
        double f = dens.cos_moment(n);
        bool keep = std::abs(f) >= floor;
        if (!keep) out.truncated.push_back(n);
        for (std::size_t i = 0; i < coeffs.index.size(); ++i) {
            if (coeffs.index[i].n != n) continue;
            auto e = static_cast<Eigen::Index>(i);
            out.expansion.coeffs(e) = keep ? coeffs.coeffs(e) / f : 0.0;
        }
    }
    return out;
}

}  // namespace spinwig
