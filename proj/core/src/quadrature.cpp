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

#include "spinwig/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinwig/errors.hpp"

namespace spinwig {

QuadratureRule gauss_gegenbauer(int n, double a) {
    require(n >= 1, ErrorKind::InvalidInput, "quadrature needs at least one node");
    require(a > -1.0, ErrorKind::InvalidInput, "Gegenbauer exponent must exceed -1");
    // Jacobi matrix of the monic orthogonal polynomials for (1 - t^2)^a.
    RealMatrix jac = RealMatrix::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        double kk = k;
        double b2 = kk * (kk + 2 * a) / ((2 * kk + 2 * a + 1) * (2 * kk + 2 * a - 1));
        jac(k, k - 1) = jac(k - 1, k) = std::sqrt(b2);
    }
    double mu0 = std::sqrt(std::numbers::pi) * std::exp(std::lgamma(a + 1) - std::lgamma(a + 1.5));
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(jac);
    QuadratureRule rule;
    for (int k = 0; k < n; ++k) {
        double v0 = es.eigenvectors()(0, k);
        rule.nodes.push_back(es.eigenvalues()(k));
        rule.weights.push_back(mu0 * v0 * v0);
    }
    // Symmetrize: the rule is exactly symmetric about 0.
    for (int k = 0; k < n / 2; ++k) {
        int m = n - 1 - k;
        double x = 0.5 * (rule.nodes[m] - rule.nodes[k]);
        double w = 0.5 * (rule.weights[m] + rule.weights[k]);
        rule.nodes[k] = -x;
        rule.nodes[m] = x;
        rule.weights[k] = rule.weights[m] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

QuadratureRule gauss_legendre(int n) { return gauss_gegenbauer(n, 0.0); }

QuadratureRule gauss_legendre(int n, double lo, double hi) {
    QuadratureRule r = gauss_legendre(n);
    double half = 0.5 * (hi - lo);
    double mid = 0.5 * (hi + lo);
    for (int k = 0; k < n; ++k) {
        r.nodes[k] = mid + half * r.nodes[k];
        r.weights[k] *= half;
    }
    return r;
}

QuadratureRule uniform_circle(int n) {
    require(n >= 1, ErrorKind::InvalidInput, "circle rule needs at least one node");
    QuadratureRule r;
    for (int k = 0; k < n; ++k) {
        r.nodes.push_back(2.0 * std::numbers::pi * k / n);
        r.weights.push_back(2.0 * std::numbers::pi / n);
    }
    return r;
}

double sphere_area(int p) {
    require(p >= 1, ErrorKind::InvalidDimension, "sphere dimension must be positive");
    return 2.0 * std::pow(std::numbers::pi, p / 2.0) / std::tgamma(p / 2.0);
}

RealVector sphere_point(int p, const std::vector<double>& angles) {
    require(p >= 2, ErrorKind::InvalidDimension, "sphere needs p >= 2");
    require(static_cast<int>(angles.size()) == p - 1, ErrorKind::InvalidCoordinates,
            "sphere point needs p - 1 angles");
    RealVector x(p);
    double prod = 1.0;
    for (int k = 0; k < p - 2; ++k) {
        x(k) = prod * std::cos(angles[k]);
        prod *= std::sin(angles[k]);
    }
    x(p - 2) = prod * std::cos(angles[p - 2]);
    x(p - 1) = prod * std::sin(angles[p - 2]);
    return x;
}

std::vector<double> sphere_angles(const RealVector& x) {
    const int p = static_cast<int>(x.size());
    require(p >= 2, ErrorKind::InvalidDimension, "sphere needs p >= 2");
    std::vector<double> angles(p - 1);
    for (int k = 0; k < p - 2; ++k) {
        double tail = x.tail(p - k - 1).norm();
        angles[k] = std::atan2(tail, x(k));
    }
    double phi = std::atan2(x(p - 1), x(p - 2));
    if (phi < 0) phi += 2 * std::numbers::pi;
    angles[p - 2] = phi;
    return angles;
}

namespace {

SphereGrid product_sphere_grid(int p, int polar, int azimuth) {
    require(p >= 2, ErrorKind::InvalidDimension, "make_grid needs p >= 2");
    require(azimuth >= 2 && (p == 2 || polar >= 1), ErrorKind::InvalidInput,
            "grid resolution must be at least 2");
    SphereGrid g;
    g.p = p;
    g.polar_points = p == 2 ? 0 : polar;
    g.azimuth_points = azimuth;
    g.exactness = p == 2 ? azimuth - 1 : std::min(azimuth - 1, 2 * polar - 1);

    std::vector<QuadratureRule> rules;
    for (int k = 0; k < p - 2; ++k) {
        int m = p - 2 - k;  // dimension of the sphere swept by this angle
        QuadratureRule r = gauss_gegenbauer(polar, (m - 1) / 2.0);
        for (double& t : r.nodes) t = std::acos(std::clamp(t, -1.0, 1.0));
        rules.push_back(std::move(r));
    }
    rules.push_back(uniform_circle(azimuth));

    std::size_t total = 1;
    for (const auto& r : rules) total *= r.nodes.size();
    g.points.resize(static_cast<Eigen::Index>(total), p);
    std::vector<double> angles(rules.size());
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        double w = 1.0;
        for (std::size_t k = rules.size(); k-- > 0;) {
            std::size_t i = rest % rules[k].nodes.size();
            rest /= rules[k].nodes.size();
            angles[k] = rules[k].nodes[i];
            w *= rules[k].weights[i];
        }
        g.nodes.push_back(angles);
        g.weights.push_back(w);
        g.points.row(static_cast<Eigen::Index>(flat)) = sphere_point(p, angles).transpose();
    }
    g.total_mass = 0.0;
    for (double w : g.weights) g.total_mass += w;
    return g;
}

}  // namespace

SphereGrid make_grid(int p, int resolution) {
    require(resolution >= 2, ErrorKind::InvalidInput, "grid resolution must be at least 2");
    return product_sphere_grid(p, resolution, resolution);
}

SphereGrid make_grid_for_degree(int p, int degree) {
    require(degree >= 1, ErrorKind::InvalidInput, "grid degree must be positive");
    return product_sphere_grid(p, degree / 2 + 1, degree + 1);
}

SphereGrid make_arc_grid(int n) {
    require(n >= 2, ErrorKind::InvalidInput, "arc grid needs at least 2 nodes");
    SphereGrid g;
    g.kind = "arc";
    g.p = 2;
    g.polar_points = n;
    g.exactness = 2 * n - 1;
    QuadratureRule r = gauss_legendre(n, 0.0, std::numbers::pi / 2);
    g.points.resize(n, 2);
    for (int k = 0; k < n; ++k) {
        double t = r.nodes[k];
        g.nodes.push_back({t});
        g.weights.push_back(r.weights[k] * std::sin(t) * std::cos(t));
        g.points(k, 0) = std::cos(t);
        g.points(k, 1) = std::sin(t);
    }
    g.total_mass = 0.5;
    return g;
}

SphereGrid make_coset_polar_grid(int n, int power) {
    require(n >= 1 && power >= 0, ErrorKind::InvalidInput, "bad coset polar grid request");
    SphereGrid g;
    g.kind = "coset-polar";
    g.p = 2;
    g.polar_points = n;
    g.exactness = 2 * n - 1;
    QuadratureRule r = gauss_legendre(n, 0.0, 1.0);
    g.points.resize(n, 2);
    for (int k = 0; k < n; ++k) {
        double u = r.nodes[k];
        double t = std::acos(std::sqrt(u));
        g.nodes.push_back({t});
        g.weights.push_back(0.5 * r.weights[k] * std::pow(1.0 - u, power));
        g.points(k, 0) = std::cos(t);
        g.points(k, 1) = std::sin(t);
    }
    g.total_mass = 0.5 / (power + 1.0);
    return g;
}

nlohmann::json grid_to_json(const SphereGrid& grid) {
    return nlohmann::json{{"p", grid.p},
                          {"kind", grid.kind},
                          {"exactness", grid.exactness},
                          {"total_mass", grid.total_mass},
                          {"nodes", grid.nodes},
                          {"weights", grid.weights}};
}

ProductGrid::ProductGrid(std::vector<SphereGrid> factors) : factors_(std::move(factors)) {
    require(!factors_.empty(), ErrorKind::InvalidInput, "product grid needs a factor");
    size_ = 1;
    for (const auto& f : factors_) size_ *= f.size();
}

void ProductGrid::decode(std::size_t node, std::vector<std::size_t>& out) const {
    out.resize(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        out[k] = node % factors_[k].size();
        node /= factors_[k].size();
    }
}

double ProductGrid::weight(std::size_t node) const {
    double w = 1.0;
    for (std::size_t k = factors_.size(); k-- > 0;) {
        w *= factors_[k].weights[node % factors_[k].size()];
        node /= factors_[k].size();
    }
    return w;
}

std::vector<double> ProductGrid::coords(std::size_t node) const {
    std::vector<std::size_t> idx;
    decode(node, idx);
    std::vector<double> out;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        const auto& a = factors_[k].nodes[idx[k]];
        out.insert(out.end(), a.begin(), a.end());
    }
    return out;
}

double ProductGrid::total_mass() const {
    double m = 1.0;
    for (const auto& f : factors_) m *= f.total_mass;
    return m;
}

int ProductGrid::coord_count() const {
    int c = 0;
    for (const auto& f : factors_) c += f.angle_count();
    return c;
}

}  // namespace spinwig
