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

#include "spinwig/noise_models.hpp"

#include <cmath>
#include <numbers>

#include "spinwig/coherent_states.hpp"
#include "spinwig/errors.hpp"

namespace spinwig {

namespace {

void check_distribution(const Distribution& d) {
    require(!d.nodes.empty() && d.nodes.size() == d.weights.size(), ErrorKind::InvalidModel,
            "distribution has no nodes");
    double total = 0.0;
    for (double w : d.weights) {
        require(w >= 0.0, ErrorKind::InvalidModel, "distribution weights must be nonnegative");
        total += w;
    }
    require(std::abs(total - 1.0) < 1e-10, ErrorKind::InvalidModel,
            "distribution integrates to " + format_double(total) + ", not 1");
}

void check_probability(double p) {
    require(p >= 0.0 && p <= 1.0, ErrorKind::InvalidModel, "probability " + format_double(p) + " outside [0, 1]");
}

/// X^a Z^b on C^d.
ComplexMatrix weyl(int d, int a, int b) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        m((k + a) % d, k) = std::polar(1.0, 2 * std::numbers::pi * b * k / d);
    }
    return m;
}

/// (1 - p) id + p * uniform Weyl twirl on C^d.
std::vector<std::pair<double, ComplexMatrix>> depolarizing_terms(int d, double p) {
    std::vector<std::pair<double, ComplexMatrix>> out;
    const double w = p / (d * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            double weight = w + (a == 0 && b == 0 ? 1.0 - p : 0.0);
            if (weight > 0.0) out.emplace_back(weight, weyl(d, a, b));
        }
    }
    return out;
}

std::vector<std::pair<double, ComplexMatrix>> circular_terms(const ComplexMatrix& g, const Distribution& d) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(g);
    const ComplexMatrix& v = eig.eigenvectors();
    std::vector<std::pair<double, ComplexMatrix>> out;
    for (std::size_t k = 0; k < d.size(); ++k) {
        ComplexVector phases(g.rows());
        for (Eigen::Index i = 0; i < g.rows(); ++i) phases(i) = std::polar(1.0, -d.nodes[k] * eig.eigenvalues()(i));
        out.emplace_back(d.weights[k], v * phases.asDiagonal() * v.adjoint());
    }
    return out;
}

ComplexMatrix mix(const ComplexMatrix& m, const std::vector<std::pair<double, ComplexMatrix>>& terms, bool adjoint) {
    ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
    for (const auto& [w, u] : terms) {
        if (adjoint) {
            out += w * (u.adjoint() * m * u);
        } else {
            out += w * (u * m * u.adjoint());
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::GlobalDepolarizing: return "global_depolarizing";
        case NoiseKind::LocalDepolarizing: return "local_depolarizing";
        case NoiseKind::Dephasing: return "dephasing";
        case NoiseKind::ZZRotation: return "zz_rotation";
        case NoiseKind::Exchange: return "exchange";
        case NoiseKind::WeakEntangling: return "weak_entangling";
    }
    return "unknown";
}

bool NoiseModel::circular() const {
    return kind == NoiseKind::Dephasing || kind == NoiseKind::ZZRotation || kind == NoiseKind::Exchange;
}

json NoiseModel::to_json() const {
    json j = {{"kind", std::string(to_string(kind))}};
    switch (kind) {
        case NoiseKind::GlobalDepolarizing: j["params"] = {{"dim", dim}, {"p", p}}; break;
        case NoiseKind::LocalDepolarizing: j["params"] = {{"dims", factor_dims}, {"p", local_p}}; break;
        case NoiseKind::Dephasing: j["params"] = {{"dim", dim}}; break;
        case NoiseKind::ZZRotation: j["params"] = json::object(); break;
        case NoiseKind::Exchange: j["params"] = {{"d1", d1}, {"d2", d2}}; break;
        case NoiseKind::WeakEntangling:
            j["params"] = {{"qubits", qubits}};
            j["distributions"] = {{"theta12", theta12.to_json()},
                                  {"theta23", theta23.to_json()},
                                  {"local", local_angles.to_json()}};
            break;
    }
    if (circular()) j["distribution"] = distribution.to_json();
    return j;
}

NoiseModel global_depolarizing(int dim, double p) {
    require(dim >= 2, ErrorKind::InvalidDimension, "depolarizing needs dim >= 2");
    check_probability(p);
    NoiseModel m;
    m.kind = NoiseKind::GlobalDepolarizing;
    m.dim = dim;
    m.factor_dims = {dim};
    m.p = p;
    return m;
}

NoiseModel local_depolarizing(std::vector<int> dims, std::vector<double> ps) {
    require(!dims.empty() && dims.size() == ps.size(), ErrorKind::InvalidModel,
            "local depolarizing needs one probability per factor");
    NoiseModel m;
    m.kind = NoiseKind::LocalDepolarizing;
    m.dim = 1;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        require(dims[k] >= 2, ErrorKind::InvalidDimension, "factor dimensions must be >= 2");
        check_probability(ps[k]);
        m.dim *= dims[k];
    }
    m.factor_dims = std::move(dims);
    m.local_p = std::move(ps);
    return m;
}

NoiseModel dephasing_noise(Distribution d, int dim) {
    require(dim >= 2, ErrorKind::InvalidDimension, "dephasing needs dim >= 2");
    check_distribution(d);
    NoiseModel m;
    m.kind = NoiseKind::Dephasing;
    m.dim = dim;
    m.distribution = std::move(d);
    return m;
}

NoiseModel zz_noise(Distribution d) {
    check_distribution(d);
    NoiseModel m;
    m.kind = NoiseKind::ZZRotation;
    m.dim = 4;
    m.factor_dims = {2, 2};
    m.distribution = std::move(d);
    return m;
}

NoiseModel exchange_noise(int d1, int d2, Distribution d) {
    require(d1 >= 1 && d2 >= 1, ErrorKind::InvalidDimension, "exchange needs d1, d2 >= 1");
    check_distribution(d);
    NoiseModel m;
    m.kind = NoiseKind::Exchange;
    m.dim = (d1 + 1) * (d2 + 1);
    m.factor_dims = {d1 + 1, d2 + 1};
    m.d1 = d1;
    m.d2 = d2;
    m.distribution = std::move(d);
    return m;
}

NoiseModel weak_entangling_noise(int qubits, Distribution theta12, Distribution theta23,
                                 Distribution local_angles) {
    require(qubits == 3, ErrorKind::InvalidModel, "weak-entangling model is defined on the 1-2-3 line");
    check_distribution(theta12);
    check_distribution(theta23);
    check_distribution(local_angles);
    NoiseModel m;
    m.kind = NoiseKind::WeakEntangling;
    m.qubits = qubits;
    m.dim = 1 << qubits;
    m.theta12 = std::move(theta12);
    m.theta23 = std::move(theta23);
    m.local_angles = std::move(local_angles);
    return m;
}

NoiseModel noise_from_json(const json& j) {
    try {
        const std::string kind = j.at("kind");
        const json params = j.value("params", json::object());
        if (kind == "global_depolarizing") return global_depolarizing(params.at("dim"), params.at("p"));
        if (kind == "local_depolarizing") {
            return local_depolarizing(params.at("dims").get<std::vector<int>>(),
                                      params.at("p").get<std::vector<double>>());
        }
        if (kind == "dephasing") return dephasing_noise(distribution_from_json(j.at("distribution")), params.value("dim", 2));
        if (kind == "zz_rotation") return zz_noise(distribution_from_json(j.at("distribution")));
        if (kind == "exchange") {
            return exchange_noise(params.at("d1"), params.at("d2"), distribution_from_json(j.at("distribution")));
        }
        if (kind == "weak_entangling") {
            const json& ds = j.at("distributions");
            return weak_entangling_noise(params.value("qubits", 3), distribution_from_json(ds.at("theta12")),
                                         distribution_from_json(ds.at("theta23")),
                                         distribution_from_json(ds.at("local")));
        }
        fail(ErrorKind::InvalidModel, "unknown noise kind '" + kind + "'");
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidModel, std::string("bad noise model: ") + e.what());
    }
}

ComplexMatrix exchange_hop_generator(int d1, int d2) {
    const int dim = (d1 + 1) * (d2 + 1);
    ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
    for (int a = 1; a <= d1; ++a) {
        for (int b = 0; b < d2; ++b) {
            int from = a * (d2 + 1) + b;
            int to = (a - 1) * (d2 + 1) + b + 1;
            g(to, from) = 1.0;
            g(from, to) = 1.0;
        }
    }
    return g;
}

ComplexMatrix rotation_generator(const NoiseModel& model) {
    switch (model.kind) {
        case NoiseKind::Dephasing: {
            ComplexMatrix g = ComplexMatrix::Zero(model.dim, model.dim);
            for (int k = 0; k < model.dim; ++k) g(k, k) = model.dim - 1 - 2.0 * k;
            return g;
        }
        case NoiseKind::ZZRotation: {
            ComplexMatrix g = ComplexMatrix::Zero(4, 4);
            g.diagonal() << 1, -1, -1, 1;
            return g;
        }
        case NoiseKind::Exchange: return -exchange_hop_generator(model.d1, model.d2);
        default: fail(ErrorKind::UnsupportedNoise, std::string(to_string(model.kind)) + " is not a circular model");
    }
}

std::vector<cplx> toeplitz_eigenvalues(int D, double theta) {
    require(D >= 1, ErrorKind::InvalidDimension, "Toeplitz block needs D >= 1");
    std::vector<cplx> out;
    for (int h = 1; h <= D; ++h) out.push_back(std::polar(1.0, 2 * theta * std::cos(h * std::numbers::pi / (D + 1))));
    return out;
}

std::pair<ComplexMatrix, RealVector> exchange_eigenbasis(int d1, int d2) {
    auto dims = block_dims(d1, d2);
    const int dim = (d1 + 1) * (d2 + 1);
    ComplexMatrix block = ComplexMatrix::Zero(dim, dim);
    RealVector values(dim);
    int offset = 0;
    for (int D : dims) {
        auto lambda = toeplitz_eigenvalues(D, 1.0);
        for (int h = 1; h <= D; ++h) {
            values(offset + h - 1) = std::arg(lambda[h - 1]);
            for (int m = 0; m < D; ++m) {
                block(offset + m, offset + h - 1) =
                    std::sqrt(2.0 / (D + 1)) * std::sin((m + 1) * h * std::numbers::pi / (D + 1));
            }
        }
        offset += D;
    }
    return {charge_permutation(d1, d2) * block, values};
}

std::vector<std::pair<double, ComplexMatrix>> unitary_mixture(const NoiseModel& model) {
    switch (model.kind) {
        case NoiseKind::GlobalDepolarizing: return depolarizing_terms(model.dim, model.p);
        case NoiseKind::LocalDepolarizing: {
            std::vector<std::pair<double, ComplexMatrix>> acc = {{1.0, ComplexMatrix::Identity(1, 1)}};
            for (std::size_t k = 0; k < model.factor_dims.size(); ++k) {
                auto local = depolarizing_terms(model.factor_dims[k], model.local_p[k]);
                std::vector<std::pair<double, ComplexMatrix>> next;
                for (const auto& [w1, u1] : acc) {
                    for (const auto& [w2, u2] : local) next.emplace_back(w1 * w2, kron(u1, u2));
                }
                acc = std::move(next);
            }
            return acc;
        }
        case NoiseKind::Dephasing:
        case NoiseKind::ZZRotation:
        case NoiseKind::Exchange: return circular_terms(rotation_generator(model), model.distribution);
        case NoiseKind::WeakEntangling:
            fail(ErrorKind::UnsupportedNoise, "weak-entangling noise acts on gadget states; use weak_entangling_channel");
    }
    return {};
}

ComplexMatrix apply_channel(const ComplexMatrix& op, const NoiseModel& model) {
    require(op.rows() == model.dim && op.cols() == model.dim, ErrorKind::InvalidInput,
            "operator dimension " + std::to_string(op.rows()) + " does not match noise dimension " +
                std::to_string(model.dim));
    return mix(op, unitary_mixture(model), false);
}

DensityMatrix apply_channel(const DensityMatrix& rho, const NoiseModel& model) {
    return DensityMatrix(apply_channel(rho.matrix(), model));
}

ComplexMatrix apply_adjoint(const ComplexMatrix& obs, const NoiseModel& model) {
    require(obs.rows() == model.dim && obs.cols() == model.dim, ErrorKind::InvalidInput,
            "observable dimension does not match noise dimension");
    return mix(obs, unitary_mixture(model), true);
}

std::vector<double> depolarizing_factors(const NoiseModel& model, const HermitianBasis& basis) {
    require(basis.dim == model.dim, ErrorKind::InvalidInput, "basis dimension does not match noise dimension");
    std::vector<double> out;
    if (model.kind == NoiseKind::GlobalDepolarizing) {
        out.assign(basis.size(), 1.0 - model.p);
        return out;
    }
    require(model.kind == NoiseKind::LocalDepolarizing, ErrorKind::UnsupportedNoise,
            std::string(to_string(model.kind)) + " has no depolarizing factors");
    require(basis.factor_dims == model.factor_dims, ErrorKind::InvalidInput,
            "basis factors do not match the local depolarizing factors");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        double f = 1.0;
        for (int k : support(basis, i)) f *= 1.0 - model.local_p[k];
        out.push_back(f);
    }
    return out;
}

DensityMatrix exchange_channel(const DensityMatrix& rho, int d1, int d2, const Distribution& d) {
    const int dim = (d1 + 1) * (d2 + 1);
    require(rho.dim() == dim, ErrorKind::InvalidInput, "state dimension does not match (d1+1)(d2+1)");
    check_distribution(d);
    auto [v, values] = exchange_eigenbasis(d1, d2);
    // Eigen-decomposition from the Toeplitz formula: U(theta) = V diag(lambda(theta)) V^T.
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (std::size_t k = 0; k < d.size(); ++k) {
        ComplexVector phases(dim);
        for (int i = 0; i < dim; ++i) phases(i) = std::polar(1.0, d.nodes[k] * values(i));
        ComplexMatrix u = v * phases.asDiagonal() * v.adjoint();
        out += d.weights[k] * (u * rho.matrix() * u.adjoint());
    }
    return DensityMatrix(out);
}

}  // namespace spinwig
