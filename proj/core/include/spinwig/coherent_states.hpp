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

#include <functional>
#include <string>
#include <vector>

#include "spinwig/harmonics.hpp"
#include "spinwig/operator_core.hpp"

namespace spinwig {

/// Nested SU(N) coherent state from 2(dim-1) angles ordered
/// (theta_1, phi_1, theta_2, phi_2, ...):
/// z_1 = cos t1, z_2 = e^{i p1} sin t1 cos t2, ..., z_N = e^{i p_{N-1}} prod sin.
/// All zeros gives the reference state e_0.
ComplexVector sun_coherent(int dim, const std::vector<double>& angles);

/// Point of S^{2N-1} in R^{2N} read as z_k = x_{2k-1} + i x_{2k}.
ComplexVector sphere_coherent(const RealVector& x);

/// SU(2) coherent state in D dimensions:
/// sum_m e^{i m phi2} e^{i (D-m-1) phi1} sin^m cos^{D-m-1} sqrt(C(D-1, m)) |m>.
ComplexVector su2_coherent_in_d(int D, double phi1, double phi2, double theta);

/// Block dimensions D_J, J = 0 .. d1 + d2, for subsystems with highest
/// excitations d1 and d2. Sum is (d1 + 1)(d2 + 1).
std::vector<int> block_dims(int d1, int d2);

/// |J; m> = |a> (x) |b> with b = max(0, J - d1) + m, a = J - b.
struct ChargeState {
    int J = 0;
    int m = 0;
    int a = 0;
    int b = 0;
    /// Index a (d2 + 1) + b in the product basis.
    int product_index = 0;
};
std::vector<ChargeState> charge_basis(int d1, int d2);
/// Columns are product-basis images of the block basis vectors.
ComplexMatrix charge_permutation(int d1, int d2);

enum class ChargePhase {
    /// Block components eta^{D_J}_m in closed form, no renormalization.
    Omit,
    /// Extra per-block phase e^{i (a_min phi1 + b_min phi2)} so that the
    /// phases are e^{i (a phi1 + b phi2)} and phi1, phi2 act as the local
    /// number rotations.
    Include,
};

/// Direct sum of su2_coherent_in_d over the charge blocks, in block order,
/// scaled by 1/sqrt(number of blocks) so the full vector has unit norm.
ComplexVector tensor_sum_coherent(int d1, int d2, double phi1, double phi2, double theta,
                                  ChargePhase phase = ChargePhase::Omit);

/// A coherent-state family with its coordinate quadrature.
struct CoherentFamily {
    std::string name;
    int dim = 0;
    std::string coord_space;
    ProductGrid grid;
    /// Whether the family integrates to a multiple of the identity.
    bool resolution_of_unity = false;
    std::function<ComplexVector(const std::vector<double>&)> state;

    ComplexVector at_node(std::size_t node) const { return state(grid.coords(node)); }
};

/// Full coset S^{2N-1} with the product grid exact to `degree`.
CoherentFamily full_coset_family(int dim, int degree = 4);
/// Nested-angle SU(N) family with n points per angle.
CoherentFamily sun_family(int dim, int n);
/// |theta> = e^{-i theta sigma_z} |+> on a uniform circle grid.
CoherentFamily dephasing_family(int n);
/// |theta> = e^{-i theta Z Z} |++> on a uniform circle grid.
CoherentFamily zz_family(int n);
/// Tensor-sum family over (phi1, phi2, theta) in the product basis; phi
/// circles with n_phi points, theta arc with n_theta points.
CoherentFamily exchange_family(int d1, int d2, int n_phi, int n_theta,
                               ChargePhase phase = ChargePhase::Include);

/// Integral of |xi><xi| over the family grid.
ComplexMatrix frame_operator(const CoherentFamily& family);

struct DisplacementOperator {
    int n = 0;
    int j = 1;
    ComplexMatrix mat;
};

/// D_{n,j} = Integral Y_{n,j}(xi) |xi><xi| d xi by quadrature.
std::vector<DisplacementOperator> displacement_operators(const CoherentFamily& family,
                                                         const ProductHarmonics& harmonics);
std::vector<DisplacementOperator> displacement_operators(const CoherentFamily& family,
                                                         const HarmonicBasisTable& table);

/// f^{(i)}_{(n,j)} = Tr[D_{n,j} O_i] / Tr[O_i^2] (1/2 Tr[D L_i] for
/// Gell-Mann), with caller-declared noise-equivalence classes of basis
/// indices.
struct CoefficientTable {
    std::vector<HarmonicIndex> harmonics;
    /// basis.size() x harmonics.size()
    RealMatrix entries;
    std::vector<std::vector<int>> classes;

    RealMatrix row_gram() const;
    /// CSV with columns class, i, n, j, value (rows outside every class get
    /// class -1).
    std::string to_csv() const;
};

CoefficientTable coefficient_table(const std::vector<DisplacementOperator>& ops,
                                   const HermitianBasis& basis,
                                   const std::vector<std::vector<int>>& classes);

/// Throws orthogonality-violation naming the first pair of rows in one
/// class whose overlap exceeds tol relative to the larger row norm.
void check_class_orthogonality(const CoefficientTable& table, double tol = 1e-8);

/// Row of the identity operator, Tr[D_{n,j}] / dim.
RealVector identity_row(const std::vector<DisplacementOperator>& ops, int dim);

}  // namespace spinwig
