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

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinwig/operator_core.hpp"

namespace spinwig {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss rule on [-1, 1] for the weight (1 - t^2)^a, a > -1 (Golub-Welsch).
/// a = 0 is Gauss-Legendre.
QuadratureRule gauss_gegenbauer(int n, double a);
QuadratureRule gauss_legendre(int n);
/// Gauss-Legendre mapped to [lo, hi].
QuadratureRule gauss_legendre(int n, double lo, double hi);
/// n equispaced nodes 2 pi k / n with weights 2 pi / n.
QuadratureRule uniform_circle(int n);

/// Surface area of S^{p-1} embedded in R^p.
double sphere_area(int p);

/// Cartesian point of S^{p-1} from (theta_1 .. theta_{p-2}, phi):
/// x_1 = cos t1, x_2 = sin t1 cos t2, ..., x_{p-1} = (prod sin) cos phi,
/// x_p = (prod sin) sin phi. The reference point is theta_1 = 0.
RealVector sphere_point(int p, const std::vector<double>& angles);
/// Inverse of sphere_point for a unit vector (azimuth in [0, 2pi)).
std::vector<double> sphere_angles(const RealVector& x);

/// Quadrature grid on S^{p-1} (kind "sphere") or on the quarter arc
/// theta in [0, pi/2] with weight sin(theta) cos(theta) (kind "arc", p = 2).
///
/// Sphere polar angles use Gauss rules in cos(theta_k) with the Gegenbauer
/// weight carrying the S^{p-1} Jacobian; the azimuth is the uniform rule.
/// `exactness` is the highest polynomial degree (in the Cartesian
/// coordinates) integrated exactly.
struct SphereGrid {
    std::string kind = "sphere";
    int p = 0;
    int polar_points = 0;
    int azimuth_points = 0;
    int exactness = 0;
    std::vector<std::vector<double>> nodes;
    std::vector<double> weights;
    double total_mass = 0.0;
    /// size() x p matrix of Cartesian coordinates.
    RealMatrix points;

    std::size_t size() const { return weights.size(); }
    int angle_count() const { return static_cast<int>(nodes.empty() ? 0 : nodes[0].size()); }
};

/// Product grid with `resolution` points per polar angle and in the azimuth.
SphereGrid make_grid(int p, int resolution);
/// Smallest product grid integrating every polynomial of `degree` exactly.
SphereGrid make_grid_for_degree(int p, int degree);
/// Quarter-arc grid with n Gauss-Legendre nodes in theta.
SphereGrid make_arc_grid(int n);

/// Polar factor of the nested SU(N) coset coordinates: theta in [0, pi/2]
/// with weight cos(theta) sin^(2 power + 1)(theta), integrated by
/// Gauss-Legendre in u = cos^2(theta) (kind "coset-polar", p = 2).
SphereGrid make_coset_polar_grid(int n, int power);

nlohmann::json grid_to_json(const SphereGrid& grid);

/// Flat product of several grids; the last factor varies fastest.
class ProductGrid {
public:
    ProductGrid() = default;
    explicit ProductGrid(std::vector<SphereGrid> factors);

    std::size_t size() const { return size_; }
    std::size_t factor_count() const { return factors_.size(); }
    const SphereGrid& factor(std::size_t k) const { return factors_[k]; }
    const std::vector<SphereGrid>& factors() const { return factors_; }

    /// Per-factor node indices of a flat node.
    void decode(std::size_t node, std::vector<std::size_t>& out) const;
    double weight(std::size_t node) const;
    /// Concatenated angle tuple.
    std::vector<double> coords(std::size_t node) const;
    double total_mass() const;
    int coord_count() const;

private:
    std::vector<SphereGrid> factors_;
    std::size_t size_ = 0;
};

}  // namespace spinwig
