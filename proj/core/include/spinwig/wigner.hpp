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

#include <memory>

#include "spinwig/kernel.hpp"
#include "spinwig/noise_models.hpp"

namespace spinwig {

/// Tr[op Delta(xi)] on the kernel's grid nodes.
struct WignerFunction {
    std::shared_ptr<const Kernel> kernel;
    RealVector values;

    /// Quadrature sum with the kernel measure.
    double integral() const;
    /// Sum of w W1 W2 over the nodes; both must share a kernel.
    double overlap(const WignerFunction& other) const;
};

WignerFunction wigner(const DensityMatrix& rho, std::shared_ptr<const Kernel> kernel);
/// Any Hermitian operator, e.g. an observable.
WignerFunction wigner(const ComplexMatrix& op, std::shared_ptr<const Kernel> kernel);

/// Integral W(xi) Delta(xi). Refuses kernels that have not passed verify_sw.
ComplexMatrix reconstruct_operator(const WignerFunction& w);
DensityMatrix reconstruct(const WignerFunction& w);

struct ConvolutionPaths {
    /// Path (a): apply the channel to rho, then take W.
    WignerFunction channel_first;
    /// Path (b): convolve W_rho with the noise distribution along the
    /// kernel's shift coordinate, slice by slice in harmonic space.
    WignerFunction convolved;
    double max_difference = 0.0;
};

/// Needs a kernel whose shift generator equals the model's rotation
/// generator (dephasing and ZZ kernels); other pairs raise unsupported-noise.
ConvolutionPaths channel_as_convolution(std::shared_ptr<const Kernel> kernel, const NoiseModel& noise,
                                        const DensityMatrix& rho);

}  // namespace spinwig
