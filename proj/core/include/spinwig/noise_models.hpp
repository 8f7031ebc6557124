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

#include <string_view>
#include <utility>
#include <vector>

#include "spinwig/distribution.hpp"
#include "spinwig/operator_core.hpp"

namespace spinwig {

enum class NoiseKind {
    GlobalDepolarizing,
    LocalDepolarizing,
    Dephasing,
    ZZRotation,
    Exchange,
    WeakEntangling,
};

std::string_view to_string(NoiseKind kind);

struct NoiseModel {
    NoiseKind kind = NoiseKind::GlobalDepolarizing;
    int dim = 0;
    /// Local depolarizing factor dimensions.
    std::vector<int> factor_dims;
    double p = 0.0;
    std::vector<double> local_p;
    /// Rotation angle law for the circular models.
    Distribution distribution;
    int d1 = 0;
    int d2 = 0;
    /// Weak-entangling angle laws.
    int qubits = 0;
    Distribution theta12;
    Distribution theta23;
    Distribution local_angles;

    /// True for models of the form Integral dens(theta) e^{-i theta G} . e^{i theta G}.
    bool circular() const;
    json to_json() const;
};

NoiseModel global_depolarizing(int dim, double p);
NoiseModel local_depolarizing(std::vector<int> dims, std::vector<double> ps);
/// Generator 2 J_z = diag(N-1, N-3, ..., 1-N); sigma_z for a qubit.
NoiseModel dephasing_noise(Distribution d, int dim = 2);
/// Generator Z (x) Z on two qubits.
NoiseModel zz_noise(Distribution d);
/// U(theta) = exp(i theta T) with T the unit hopping generator per charge block.
NoiseModel exchange_noise(int d1, int d2, Distribution d);
NoiseModel weak_entangling_noise(int qubits, Distribution theta12, Distribution theta23,
                                 Distribution local_angles);

/// {"kind", "params", "distribution"} (plus "distributions" for
/// weak_entangling).
NoiseModel noise_from_json(const json& j);

/// G with U(theta) = e^{-i theta G} for circular models.
ComplexMatrix rotation_generator(const NoiseModel& model);

/// Hopping generator sum |a-1, b+1><a, b| + h.c. with unit amplitudes.
ComplexMatrix exchange_hop_generator(int d1, int d2);

/// e^{i 2 theta cos(h pi / (D + 1))}, h = 1 .. D.
std::vector<cplx> toeplitz_eigenvalues(int D, double theta);

/// Eigenvectors (columns, product basis) and eigenvalues of the hopping
/// generator from the closed-form Toeplitz spectrum of each block.
std::pair<ComplexMatrix, RealVector> exchange_eigenbasis(int d1, int d2);

/// Weighted unitary list realizing the channel exactly.
std::vector<std::pair<double, ComplexMatrix>> unitary_mixture(const NoiseModel& model);

/// Schroedinger picture on density matrices. Weak-entangling noise acts on a
/// gadget state instead (see gadget.hpp).
DensityMatrix apply_channel(const DensityMatrix& rho, const NoiseModel& model);
ComplexMatrix apply_channel(const ComplexMatrix& op, const NoiseModel& model);
/// Heisenberg picture: sum w U^dagger O U.
ComplexMatrix apply_adjoint(const ComplexMatrix& obs, const NoiseModel& model);

/// Global: 1 - p for every element. Local: product of (1 - p_k) over the
/// element's support.
std::vector<double> depolarizing_factors(const NoiseModel& model, const HermitianBasis& basis);

/// Block-wise exchange evolution averaged over `d`.
DensityMatrix exchange_channel(const DensityMatrix& rho, int d1, int d2, const Distribution& d);

}  // namespace spinwig
