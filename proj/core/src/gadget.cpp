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

#include "spinwig/gadget.hpp"

#include <cmath>
#include <numeric>

#include "spinwig/errors.hpp"

namespace spinwig {

namespace {

constexpr double kWeakRegime = 0.2;
constexpr std::size_t kMaxWeakNodes = 4096;

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix projector(int bit) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(bit, bit) = 1.0;
    return m;
}

ComplexMatrix plus_plus() {
    return ComplexMatrix::Constant(4, 4, 0.25);
}

ComplexMatrix bell_density() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return m;
}

/// e^{i eta X} before and e^{i phi Z} after, as one-qubit matrices.
ComplexMatrix rot_x(double a) {
    ComplexMatrix m(2, 2);
    m << std::cos(a), cplx(0, std::sin(a)), cplx(0, std::sin(a)), std::cos(a);
    return m;
}

ComplexMatrix rot_z(double a) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, a);
    m(1, 1) = std::polar(1.0, -a);
    return m;
}

ComplexMatrix local_layer(const ComplexMatrix& one) {
    return kron(kron(one, one), one);
}

std::vector<int> all_twos(int n) {
    return std::vector<int>(n, 2);
}

}  // namespace

ComplexMatrix qubit_operator(const ComplexMatrix& op, const std::vector<int>& qubits, int total) {
    const int k = static_cast<int>(qubits.size());
    require(op.rows() == (Eigen::Index{1} << k) && op.cols() == op.rows(), ErrorKind::InvalidOperator,
            "operator size does not match its qubit list");
    std::uint64_t mask = 0;
    for (int q : qubits) {
        require(q >= 0 && q < total, ErrorKind::InvalidInput, "qubit index out of range");
        mask |= std::uint64_t{1} << (total - 1 - q);
    }
    const Eigen::Index dim = Eigen::Index{1} << total;
    auto sub = [&](Eigen::Index x) {
        int s = 0;
        for (int q : qubits) s = (s << 1) | static_cast<int>((x >> (total - 1 - q)) & 1);
        return s;
    };
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            if ((r & ~mask) != (c & ~mask)) continue;
            out(r, c) = op(sub(r), sub(c));
        }
    }
    return out;
}

ComplexMatrix cnot(int control, int target, int total) {
    ComplexMatrix local = kron(projector(0), ComplexMatrix::Identity(2, 2)) + kron(projector(1), pauli_x());
    return qubit_operator(local, {control, target}, total);
}

ComplexMatrix GadgetState::pair_projector() const {
    ComplexMatrix p = ComplexMatrix::Identity(Eigen::Index{1} << n_qubits, Eigen::Index{1} << n_qubits);
    for (int k = 0; k < n_pairs; ++k) p = kron(p, plus_plus());
    return p;
}

double GadgetState::success_weight() const {
    return (pair_projector() * extended_rho.matrix()).trace().real();
}

double GadgetState::expectation() const {
    double w = success_weight();
    require(w > 1e-14, ErrorKind::DomainError, "pair projection has zero success weight");
    return (extended_obs * extended_rho.matrix()).trace().real() / w;
}

DensityMatrix GadgetState::postselected_state() const {
    ComplexMatrix p = pair_projector();
    ComplexMatrix m = p * extended_rho.matrix() * p;
    std::vector<int> keep(n_qubits);
    std::iota(keep.begin(), keep.end(), 0);
    ComplexMatrix reduced = partial_trace(m, all_twos(total_qubits()), keep);
    double w = reduced.trace().real();
    require(w > 1e-14, ErrorKind::DomainError, "pair projection has zero success weight");
    reduced /= w;
    return DensityMatrix(0.5 * (reduced + reduced.adjoint()));
}

std::vector<int> GadgetState::qudit(int j) const {
    require(j >= 0 && j < n_qubits, ErrorKind::InvalidInput, "qudit index out of range");
    std::vector<int> out = {j};
    if (j > 0) out.push_back(n_qubits + 2 * (j - 1) + 1);
    if (j + 1 < n_qubits) out.push_back(n_qubits + 2 * j);
    return out;
}

GadgetState gadget_extend(const DensityMatrix& rho, const ComplexMatrix& obs) {
    const int dim = rho.dim();
    int n = 0;
    while ((1 << n) < dim) ++n;
    require((1 << n) == dim, ErrorKind::InvalidInput, "gadget needs a qubit register");
    require(n >= 2, ErrorKind::InvalidInput, "gadget needs at least two qubits");
    require(obs.rows() == dim && obs.cols() == dim, ErrorKind::InvalidInput, "observable dimension mismatch");
    require(is_hermitian(obs), ErrorKind::InvalidOperator, "observable is not Hermitian");
    ComplexMatrix r = rho.matrix();
    ComplexMatrix o = obs;
    for (int k = 0; k + 1 < n; ++k) {
        r = kron(r, bell_density());
        o = kron(o, plus_plus());
    }
    return GadgetState{DensityMatrix(r), o, n, n - 1, std::vector<bool>(n - 1, false)};
}

GadgetState teleported_cnot(const GadgetState& g, int control, int target) {
    require(std::abs(control - target) == 1 && std::min(control, target) >= 0 &&
                std::max(control, target) < g.n_qubits,
            ErrorKind::InvalidInput, "teleported CNOT needs adjacent computational qubits");
    const int k = std::min(control, target);
    require(!g.pair_used[k], ErrorKind::InvalidInput, "Bell pair " + std::to_string(k) + " already consumed");
    const int total = g.total_qubits();
    const int a = g.n_qubits + 2 * k;
    const int b = a + 1;
    ComplexMatrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    ComplexMatrix v = qubit_operator(h, {a}, total) * cnot(b, target, total) * cnot(control, a, total);
    ComplexMatrix r = v * g.extended_rho.matrix() * v.adjoint();
    GadgetState out = g;
    out.extended_rho = DensityMatrix(0.5 * (r + r.adjoint()));
    out.pair_used[k] = true;
    return out;
}

std::array<ComplexMatrix, 3> weak_entangling_local_factors(const WeakAngles& a) {
    const cplx i12(0, a.theta12), i23(0, a.theta23);
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix p1 = projector(1);
    const ComplexMatrix xm = pauli_x() - id;
    // Bond-dimension-2 split of I + i t12 C12 + i t23 C23; the bond index of
    // each link lives on its Bell pair in the Z basis.
    std::array<ComplexMatrix, 2> w1 = {id, i12 * p1};
    std::array<std::array<ComplexMatrix, 2>, 2> w2 = {{{(1.0 + i12 + i23) * id, i23 * p1},
                                                       {xm, ComplexMatrix::Zero(2, 2)}}};
    std::array<ComplexMatrix, 2> w3 = {id, xm};
    const ComplexMatrix pre = rot_x(a.eta);
    const ComplexMatrix post = rot_z(a.phi);
    std::array<ComplexMatrix, 3> out;
    out[0] = ComplexMatrix::Zero(4, 4);
    out[1] = ComplexMatrix::Zero(8, 8);
    out[2] = ComplexMatrix::Zero(4, 4);
    for (int x = 0; x < 2; ++x) {
        out[0] += kron(post * w1[x] * pre, projector(x));
        out[2] += kron(post * w3[x] * pre, projector(x));
        for (int y = 0; y < 2; ++y) {
            out[1] += kron(kron(post * w2[x][y] * pre, projector(x)), projector(y));
        }
    }
    return out;
}

ComplexMatrix weak_entangling_first_order(const WeakAngles& a) {
    ComplexMatrix c12 = cnot(0, 1, 3), c23 = cnot(1, 2, 3);
    ComplexMatrix core = ComplexMatrix::Identity(8, 8) + cplx(0, a.theta12) * c12 + cplx(0, a.theta23) * c23;
    return local_layer(rot_z(a.phi)) * core * local_layer(rot_x(a.eta));
}

ComplexMatrix weak_entangling_exact(const WeakAngles& a) {
    const ComplexMatrix id = ComplexMatrix::Identity(8, 8);
    // C_X squares to I, so e^{i t C} = cos t + i sin t C.
    auto expc = [&](const ComplexMatrix& c, double t) -> ComplexMatrix {
        return std::cos(t) * id + cplx(0, std::sin(t)) * c;
    };
    ComplexMatrix core = expc(cnot(0, 1, 3), a.theta12) * expc(cnot(1, 2, 3), a.theta23);
    return local_layer(rot_z(a.phi)) * core * local_layer(rot_x(a.eta));
}

std::vector<std::pair<double, WeakAngles>> weak_entangling_nodes(const NoiseModel& model) {
    require(model.kind == NoiseKind::WeakEntangling, ErrorKind::UnsupportedNoise,
            "expected a weak-entangling model");
    const auto& t12 = model.theta12;
    const auto& t23 = model.theta23;
    const auto& loc = model.local_angles;
    const std::size_t count = t12.size() * t23.size() * loc.size() * loc.size();
    require(count <= kMaxWeakNodes, ErrorKind::InvalidModel,
            "weak-entangling quadrature has " + std::to_string(count) + " nodes; limit is " +
                std::to_string(kMaxWeakNodes));
    std::vector<std::pair<double, WeakAngles>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < t12.size(); ++i)
        for (std::size_t j = 0; j < t23.size(); ++j)
            for (std::size_t k = 0; k < loc.size(); ++k)
                for (std::size_t l = 0; l < loc.size(); ++l) {
                    double w = t12.weights[i] * t23.weights[j] * loc.weights[k] * loc.weights[l];
                    out.emplace_back(w, WeakAngles{t12.nodes[i], t23.nodes[j], loc.nodes[k], loc.nodes[l]});
                }
    return out;
}

DensityMatrix exact_weak_entangling_channel(const DensityMatrix& rho, const NoiseModel& model) {
    require(rho.dim() == 8, ErrorKind::InvalidInput, "weak-entangling channel acts on three qubits");
    ComplexMatrix out = ComplexMatrix::Zero(8, 8);
    for (const auto& [w, a] : weak_entangling_nodes(model)) {
        ComplexMatrix u = weak_entangling_exact(a);
        out += w * (u * rho.matrix() * u.adjoint());
    }
    return DensityMatrix(0.5 * (out + out.adjoint()));
}

json WeakEntanglingResult::to_json() const {
    return {{"success_weight", success_weight},
            {"first_order_gap", first_order_gap},
            {"max_angle", max_angle},
            {"gap_constant", gap_constant},
            {"regime_warning", regime_warning}};
}

WeakEntanglingResult weak_entangling_channel(const GadgetState& g, const NoiseModel& model) {
    require(g.n_qubits == 3, ErrorKind::InvalidInput, "weak-entangling channel needs three computational qubits");
    for (bool used : g.pair_used) {
        require(!used, ErrorKind::InvalidInput, "weak-entangling channel needs unconsumed Bell pairs");
    }
    const auto nodes = weak_entangling_nodes(model);
    const int total = g.total_qubits();
    ComplexMatrix acc = ComplexMatrix::Zero(g.extended_rho.dim(), g.extended_rho.dim());
    double max_angle = 0.0;
    for (const auto& [w, a] : nodes) {
        max_angle = std::max({max_angle, std::abs(a.theta12), std::abs(a.theta23)});
        auto f = weak_entangling_local_factors(a);
        ComplexMatrix m = ComplexMatrix::Identity(acc.rows(), acc.cols());
        for (int j = 0; j < 3; ++j) m = qubit_operator(f[j], g.qudit(j), total) * m;
        acc += w * (m * g.extended_rho.matrix() * m.adjoint());
    }
    acc = 0.5 * (acc + acc.adjoint());
    acc /= acc.trace().real();

    WeakEntanglingResult out{g};
    out.state.extended_rho = DensityMatrix(acc);
    out.success_weight = out.state.success_weight();
    out.max_angle = max_angle;
    out.regime_warning = max_angle > kWeakRegime;
    auto exact = exact_weak_entangling_channel(g.postselected_state(), model);
    out.first_order_gap = trace_distance(out.state.postselected_state().matrix(), exact.matrix());
    out.gap_constant = max_angle > 0.0 ? out.first_order_gap / (max_angle * max_angle) : 0.0;
    return out;
}

}  // namespace spinwig
