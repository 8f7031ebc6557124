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

#include <array>
#include <map>
#include <vector>

#include "spinwig/kernel.hpp"

namespace spinwig {

/// sqrt((N + 1) N (N - 1) / 2).
double parity_normalization(int dim);

/// Delta(xi) = A I - B |xi><xi|.
struct ParityCoefficients {
    double a = 0.0;
    double b = 0.0;
};

/// A and B read off the closed form (1/N) U [I - Nrm L_last] U^dagger.
ParityCoefficients parity_coefficients(int dim);

/// (1/N) U (I - Nrm L_last) U^dagger with U e_{N-1} = xi, built directly
/// from the last Gell-Mann element.
ComplexMatrix parity_kernel_closed_form(const ComplexVector& xi);

/// Displaced parity over the full coset S^{2N-1}; grid exact to `degree`.
KernelPtr displaced_parity_kernel(int dim, int degree = 4);

/// Harmonic-weighted coherent-state kernel. n_max = 0 gives the
/// normalization-only kernel; n_max = 1 is a bandwidth error.
KernelPtr brif_mann_kernel(int dim, int n_max);

/// Product kernel over the product of full-coset coordinate spaces.
KernelPtr tensor_product_kernel(const std::vector<int>& dims);

/// Qubit kernel over (theta, eta) for sigma_z dephasing.
KernelPtr dephasing_kernel(int n_theta = 16, int n_eta = 16);

/// Two-qubit kernel over (theta, eta) for Z (x) Z rotations.
KernelPtr zz_kernel(int n_theta = 16, int n_eta = 24);

/// Kernel over (phi1, phi2, theta, eta) for charge-preserving exchange.
KernelPtr exchange_kernel(int d1, int d2);

/// Forced constants for reloading or perturbing a kernel.
struct KernelOverrides {
    std::optional<double> c_delta;
    std::optional<std::vector<double>> class_scales;
};

/// Rebuilds a kernel from a constructor name and its params JSON, as stored
/// in a manifest. Names: parity, brif, tensor, dephasing, zz, exchange.
KernelPtr build_kernel(const std::string& name, const json& params, const KernelOverrides& overrides = {});

/// The ZZ kernel operator family: b_{k,j} (6), c1/c2_{m,n} (8), d2.
HermitianBasis zz_operator_basis();

/// Residual-label indices for an effective kernel.
struct EffectiveIndices {
    /// omega[k][j - 1] for block k, j = 1 .. dim(B_k)^2 - 1.
    std::vector<std::vector<int>> omega;
    /// Omega for each transition (k, l, k', l').
    std::map<std::array<int, 4>, int> Omega;
};

/// omega_{k,j} = 1-based lexicographic position of (k, j);
/// Omega = sum_k (dim(B_k)^2 - 1) + 1-based lexicographic position.
EffectiveIndices effective_kernel_indices(const std::vector<int>& block_dims_b,
                                          const std::vector<std::array<int, 4>>& transitions);

}  // namespace spinwig
