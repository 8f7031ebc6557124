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

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spinwig {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Tolerance used when validating density matrices (minimum eigenvalue).
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-10;

double hermiticity_residual(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTolerance);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double min_eigenvalue(const ComplexMatrix& hermitian);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);

/// Places `op` on factor `site` of a tensor product with the given factor
/// dimensions (identity elsewhere).
ComplexMatrix embed(const ComplexMatrix& op, std::span<const int> dims, int site);

/// Traces out every factor whose index is not in `keep` (sorted ascending).
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep);

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng);
ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng);

/// Unit-trace Hermitian PSD matrix. Construction validates the invariants.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix mat, double tol = kPsdTolerance);

    static DensityMatrix maximally_mixed(int dim);
    static DensityMatrix pure(const ComplexVector& psi);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const ComplexMatrix& matrix() const { return mat_; }

private:
    ComplexMatrix mat_;
};

/// Structured label for one basis element.
///
/// Gell-Mann elements use kind "sym", "antisym" (row < col) or "diag"
/// (row = col = rank l, 1-based). Tensor elements use kind "tensor" and list
/// one index per factor, 0 meaning identity and k >= 1 the k-th factor
/// element.
struct BasisLabel {
    std::string kind;
    int row = 0;
    int col = 0;
    std::vector<int> factor_indices;

    std::string str() const;
};

struct HermitianBasis {
    int dim = 0;
    std::vector<ComplexMatrix> elements;
    std::vector<BasisLabel> labels;
    /// Tr[B_i^2]; 2 for Gell-Mann elements, 2 * prod(identity-slot dims) for
    /// tensor elements.
    std::vector<double> norms;
    /// Factor dimensions for tensor bases, {dim} otherwise.
    std::vector<int> factor_dims;

    std::size_t size() const { return elements.size(); }
};

/// Generalized Gell-Mann matrices normalized to Tr[L_i L_j] = 2 delta_ij.
/// Order: symmetric pairs, antisymmetric pairs (both lexicographic in
/// (row, col)), then diagonal elements l = 1 .. dim-1. The last element is
/// proportional to diag(1, ..., 1, -(dim-1)).
HermitianBasis gellmann_basis(int dim);

/// Kronecker products over {identity} U factor elements, minus the
/// all-identity product. Index order is lexicographic with the first factor
/// slowest.
HermitianBasis tensor_basis(std::span<const HermitianBasis> factors);

/// Seeded G G^dagger / Tr construction from a complex Gaussian matrix.
DensityMatrix random_density(int dim, std::uint64_t seed);
/// Haar-random pure state.
DensityMatrix random_pure_density(int dim, std::uint64_t seed);

struct BasisExpansion {
    double identity = 0.0;
    RealVector coeffs;
};

/// op = identity * I + sum_i coeffs_i B_i with coeffs_i = Tr[op B_i] / Tr[B_i^2].
BasisExpansion expand_in_basis(const ComplexMatrix& op, const HermitianBasis& basis);
ComplexMatrix reconstruct(const BasisExpansion& expansion, const HermitianBasis& basis);

/// Indices of tensor factors on which a tensor-basis element acts
/// non-trivially. For non-tensor bases this is {0}.
std::vector<int> support(const HermitianBasis& basis, std::size_t index);

}  // namespace spinwig
