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

#include <string>
#include <vector>

#include "spinwig/matrix_io.hpp"

namespace spinwig {

/// Probability measure on the circle stored as a quadrature rule: angles and
/// nonnegative weights summing to 1.
struct Distribution {
    std::string name;
    double sigma = 0.0;
    double center = 0.0;
    int quadrature_points = 0;
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
    /// Integral of cos(n theta) and sin(n theta); n may be fractional.
    double cos_moment(double n) const;
    double sin_moment(double n) const;
    /// True if every sine moment up to `max_frequency` vanishes to tol.
    bool symmetric(int max_frequency = 32, double tol = 1e-12) const;
    json to_json() const;
};

Distribution delta_distribution(double at = 0.0);
/// n equispaced angles on [0, 2pi); moments exact below frequency n.
Distribution uniform_distribution(int n = 64);
/// Gaussian truncated to center +- 5 sigma, Gauss-Legendre nodes, weights
/// renormalized to 1.
Distribution wrapped_gaussian(double sigma, int n = 64, double center = 0.0);
/// Throws invalid-model unless weights are nonnegative and sum to 1 (1e-10).
Distribution tabulated_distribution(std::vector<double> nodes, std::vector<double> weights);
/// Law of theta1 + theta2 for independent draws.
Distribution convolve_distributions(const Distribution& a, const Distribution& b);

/// {"name": delta|uniform|wrapped-gaussian|tabulated, "sigma", "center",
///  "quadrature_points", "nodes", "weights"}.
Distribution distribution_from_json(const json& j);

}  // namespace spinwig
