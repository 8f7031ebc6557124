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

#include "spinwig/distribution.hpp"

#include <cmath>
#include <numbers>

#include "spinwig/errors.hpp"
#include "spinwig/quadrature.hpp"

namespace spinwig {

double Distribution::cos_moment(double n) const {
    double s = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) s += weights[k] * std::cos(n * nodes[k]);
    return s;
}

double Distribution::sin_moment(double n) const {
    double s = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) s += weights[k] * std::sin(n * nodes[k]);
    return s;
}

bool Distribution::symmetric(int max_frequency, double tol) const {
    for (int n = 1; n <= max_frequency; ++n) {
        if (std::abs(sin_moment(n)) > tol) return false;
    }
    return true;
}

json Distribution::to_json() const {
    json j = {{"name", name}, {"quadrature_points", quadrature_points}};
    if (name == "wrapped-gaussian") {
        j["sigma"] = sigma;
        j["center"] = center;
    }
    if (name == "delta") j["center"] = center;
    if (name == "tabulated") {
        j["nodes"] = nodes;
        j["weights"] = weights;
    }
    return j;
}

Distribution delta_distribution(double at) {
    Distribution d;
    d.name = "delta";
    d.center = at;
    d.quadrature_points = 1;
    d.nodes = {at};
    d.weights = {1.0};
    return d;
}

Distribution uniform_distribution(int n) {
    require(n >= 1, ErrorKind::InvalidModel, "uniform distribution needs at least one node");
    Distribution d;
    d.name = "uniform";
    d.quadrature_points = n;
    for (int k = 0; k < n; ++k) {
        d.nodes.push_back(2 * std::numbers::pi * k / n);
        d.weights.push_back(1.0 / n);
    }
    return d;
}

Distribution wrapped_gaussian(double sigma, int n, double center) {
    require(sigma > 0.0, ErrorKind::InvalidModel, "wrapped Gaussian needs sigma > 0");
    require(n >= 2, ErrorKind::InvalidModel, "wrapped Gaussian needs at least two nodes");
    Distribution d;
    d.name = "wrapped-gaussian";
    d.sigma = sigma;
    d.center = center;
    d.quadrature_points = n;
    auto rule = gauss_legendre(n, center - 5 * sigma, center + 5 * sigma);
    double total = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        double x = rule.nodes[k] - center;
        double w = rule.weights[k] * std::exp(-x * x / (2 * sigma * sigma));
        d.nodes.push_back(rule.nodes[k]);
        d.weights.push_back(w);
        total += w;
    }
    for (double& w : d.weights) w /= total;
    return d;
}

Distribution tabulated_distribution(std::vector<double> nodes, std::vector<double> weights) {
    require(!nodes.empty() && nodes.size() == weights.size(), ErrorKind::InvalidModel,
            "tabulated distribution needs matching nonempty nodes and weights");
    double total = 0.0;
    for (double w : weights) {
        require(w >= 0.0, ErrorKind::InvalidModel, "distribution weights must be nonnegative");
        total += w;
    }
    require(std::abs(total - 1.0) < 1e-10, ErrorKind::InvalidModel,
            "distribution weights sum to " + format_double(total) + ", not 1");
    Distribution d;
    d.name = "tabulated";
    d.quadrature_points = static_cast<int>(nodes.size());
    d.nodes = std::move(nodes);
    d.weights = std::move(weights);
    return d;
}

Distribution convolve_distributions(const Distribution& a, const Distribution& b) {
    Distribution d;
    d.name = "tabulated";
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            d.nodes.push_back(a.nodes[i] + b.nodes[j]);
            d.weights.push_back(a.weights[i] * b.weights[j]);
        }
    }
    d.quadrature_points = static_cast<int>(d.nodes.size());
    return d;
}

Distribution distribution_from_json(const json& j) {
    try {
        const std::string name = j.at("name");
        if (name == "delta") return delta_distribution(j.value("center", 0.0));
        if (name == "uniform") return uniform_distribution(j.value("quadrature_points", 64));
        if (name == "wrapped-gaussian") {
            return wrapped_gaussian(j.at("sigma"), j.value("quadrature_points", 64), j.value("center", 0.0));
        }
        if (name == "tabulated") {
            return tabulated_distribution(j.at("nodes").get<std::vector<double>>(),
                                          j.at("weights").get<std::vector<double>>());
        }
        fail(ErrorKind::InvalidModel, "unknown distribution '" + name + "'");
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidModel, std::string("bad distribution: ") + e.what());
    }
}

}  // namespace spinwig
