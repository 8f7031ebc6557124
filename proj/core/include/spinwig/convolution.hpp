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

#include <vector>

#include "spinwig/harmonics.hpp"

namespace spinwig {

/// Quadrature over the rotation group of S^{p-1}. `stabilizer_volume` is the
/// volume of the subgroup fixing the reference point, so that
/// (1/|K|) sum_r w_r h(R_r xi0) integrates h over the sphere.
struct RotationSampler {
    int p = 0;
    std::vector<RealMatrix> rotations;
    std::vector<double> weights;
    double stabilizer_volume = 1.0;

    std::size_t size() const { return weights.size(); }
};

/// n equispaced rotations of the circle.
RotationSampler circle_shifts(int n);
/// ZYZ-type Euler rule on SO(3) with the pole axis x_1 playing the role of z:
/// uniform rules in both pole rotations and Gauss-Legendre in cos(beta).
RotationSampler euler_rotations(int n_alpha, int n_beta, int n_gamma);

/// (f * g)(x) = (1/|K|) Integral_G f(y^-1 x) g(y xi0) dy, evaluated by the
/// rotation rule at every grid node and expanded in `table`. xi0 is the
/// reference point theta_1 = 0 (the x_1 axis).
HarmonicExpansion convolve(const HarmonicExpansion& f, const HarmonicExpansion& g,
                           const HarmonicBasisTable& table, const RotationSampler& sampler);

/// Element-wise theorem for f rotationally symmetric about xi0:
/// c_{n,j} = a_n Omega_{p-1} / N(p,n) c^g_{n,j}, a_n = f_n(xi0).
/// On S^1 every f is admissible and the complex Fourier product is used.
HarmonicExpansion zonal_convolve(const HarmonicExpansion& f_zonal, const HarmonicExpansion& g,
                                 const HarmonicBasisTable& table);

/// Largest component of f orthogonal to the zonal direction, over degrees.
double zonal_residual(const HarmonicExpansion& f, const HarmonicBasisTable& table);

}  // namespace spinwig
