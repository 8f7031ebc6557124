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
#include <vector>

#include "spinwig/noise_models.hpp"
#include "spinwig/operator_core.hpp"

namespace spinwig {

/// Computational qubits 0 .. n-1 followed by n-1 Bell pairs; pair k occupies
/// qubits (n + 2k, n + 2k + 1) and links computational qubits k and k + 1.
struct GadgetState {
    DensityMatrix extended_rho;
    ComplexMatrix extended_obs;
    int n_qubits = 0;
    int n_pairs = 0;
    std::vector<bool> pair_used;

    int total_qubits() const { return n_qubits + 2 * n_pairs; }
    /// I (x) |++><++| on every pair.
    ComplexMatrix pair_projector() const;
    /// Tr[P rho']: the probability that every pair lands in |++>.
    double success_weight() const;
    /// Tr[O' rho'] / success_weight.
    double expectation() const;
    /// Computational state conditioned on the pair projection.
    DensityMatrix postselected_state() const;
    /// Qubits of local qudit j: computational qubit j plus its ancillas.
    std::vector<int> qudit(int j) const;
};

/// Operator on `total` qubits acting as `op` on `qubits` (first listed is
/// the most significant) and as identity elsewhere.
ComplexMatrix qubit_operator(const ComplexMatrix& op, const std::vector<int>& qubits, int total);

/// rho -> rho (x) Phi+^{n-1}, O -> O (x) |++><++|^{n-1}.
GadgetState gadget_extend(const DensityMatrix& rho, const ComplexMatrix& obs);

/// CNOT between adjacent computational qubits by local operations on the
/// linking pair: CNOT(control, a), CNOT(b, target), H(a). The pair
/// projection then completes the gate.
GadgetState teleported_cnot(const GadgetState& g, int control, int target);

/// CNOT from `control` to `target` on `total` qubits.
ComplexMatrix cnot(int control, int target, int total);

/// One quadrature node of the weak-entangling family.
struct WeakAngles {
    double theta12 = 0.0;
    double theta23 = 0.0;
    /// Pre-rotation e^{i eta X} and post-rotation e^{i phi Z} on every qubit.
    double eta = 0.0;
    double phi = 0.0;
};

/// Qudit-local factors M_0 (q0, a0), M_1 (q1, b0, a1), M_2 (q2, b1) of the
/// first-order operator; within a qudit the computational qubit is most
/// significant.
std::array<ComplexMatrix, 3> weak_entangling_local_factors(const WeakAngles& a);

/// L_post [I + i t12 C12 + i t23 C23] L_pre on the three computational qubits.
ComplexMatrix weak_entangling_first_order(const WeakAngles& a);
/// L_post e^{i t12 C12} e^{i t23 C23} L_pre.
ComplexMatrix weak_entangling_exact(const WeakAngles& a);

/// Product quadrature over the four model distributions (local angles are
/// drawn independently for eta and phi).
std::vector<std::pair<double, WeakAngles>> weak_entangling_nodes(const NoiseModel& model);

/// Exact-exponential reference channel on the computational qubits.
DensityMatrix exact_weak_entangling_channel(const DensityMatrix& rho, const NoiseModel& model);

struct WeakEntanglingResult {
    GadgetState state;
    /// Pair-projection success weight after the channel.
    double success_weight = 0.0;
    /// Trace distance between the renormalized first-order and exact channels.
    double first_order_gap = 0.0;
    /// Largest |theta| on the quadrature support.
    double max_angle = 0.0;
    /// first_order_gap / max_angle^2 (0 when max_angle is 0).
    double gap_constant = 0.0;
    /// Set when some |theta| exceeds 0.2.
    bool regime_warning = false;

    json to_json() const;
};

/// Applies the first-order family in the extended space through the local
/// factors and renormalizes the trace. Needs 3 computational qubits with
/// unused pairs.
WeakEntanglingResult weak_entangling_channel(const GadgetState& g, const NoiseModel& model);

}  // namespace spinwig
