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

#include <cmath>

#include <gtest/gtest.h>

#include "spinwig/errors.hpp"
#include "spinwig/matrix_io.hpp"
#include "spinwig/operator_core.hpp"

using namespace spinwig;

namespace {

ComplexMatrix pauli(char which) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    if (which == 'x') {
        m(0, 1) = m(1, 0) = 1.0;
    } else if (which == 'y') {
        m(0, 1) = cplx(0, -1);
        m(1, 0) = cplx(0, 1);
    } else {
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
    }
    return m;
}

// Brute-force check of every pair, independent of the construction.
double worst_pair_overlap(const HermitianBasis& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        worst = std::max(worst, std::abs(b.elements[i].trace()));
        for (std::size_t j = 0; j < b.size(); ++j) {
            cplx tr = (b.elements[i] * b.elements[j]).trace();
            double expect = i == j ? b.norms[i] : 0.0;
            worst = std::max(worst, std::abs(tr - expect));
        }
    }
    return worst;
}

}  // namespace

TEST(GellMann, QubitIsPauli) {
    auto b = gellmann_basis(2);
    ASSERT_EQ(b.size(), 3u);
    EXPECT_LT((b.elements[0] - pauli('x')).norm(), 1e-15);
    EXPECT_LT((b.elements[1] - pauli('y')).norm(), 1e-15);
    EXPECT_LT((b.elements[2] - pauli('z')).norm(), 1e-15);
}

TEST(GellMann, QutritLastElement) {
    auto b = gellmann_basis(3);
    ASSERT_EQ(b.size(), 8u);
    ComplexMatrix expect = ComplexMatrix::Zero(3, 3);
    expect(0, 0) = expect(1, 1) = 1.0 / std::sqrt(3.0);
    expect(2, 2) = -2.0 / std::sqrt(3.0);
    EXPECT_LT((b.elements.back() - expect).norm(), 1e-15);
    EXPECT_NEAR((b.elements.back() * b.elements.back()).trace().real(), 2.0, 1e-14);
}

TEST(GellMann, OrthonormalUpToEight) {
    for (int d = 2; d <= 8; ++d) {
        auto b = gellmann_basis(d);
        EXPECT_EQ(b.size(), static_cast<std::size_t>(d * d - 1));
        EXPECT_LT(worst_pair_overlap(b), 1e-12) << "dim " << d;
        for (const auto& e : b.elements) EXPECT_TRUE(is_hermitian(e, 1e-15));
    }
}

TEST(GellMann, RejectsSmallDim) {
    try {
        gellmann_basis(1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidDimension);
    }
}

TEST(TensorBasis, Cardinality) {
    std::vector<HermitianBasis> f22 = {gellmann_basis(2), gellmann_basis(2)};
    EXPECT_EQ(tensor_basis(f22).size(), 15u);
    std::vector<HermitianBasis> f23 = {gellmann_basis(2), gellmann_basis(3)};
    auto b = tensor_basis(f23);
    EXPECT_EQ(b.size(), 35u);
    EXPECT_EQ(b.dim, 6);
    EXPECT_LT(worst_pair_overlap(b), 1e-12);
    std::vector<HermitianBasis> f2 = {gellmann_basis(2)};
    auto single = tensor_basis(f2);
    ASSERT_EQ(single.size(), 3u);
    EXPECT_LT((single.elements[2] - pauli('z')).norm(), 1e-15);
    std::vector<HermitianBasis> none;
    EXPECT_THROW(tensor_basis(none), Error);
}

TEST(TensorBasis, ElementsAreKroneckerProducts) {
    std::vector<HermitianBasis> f = {gellmann_basis(2), gellmann_basis(2)};
    auto b = tensor_basis(f);
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto& idx = b.labels[i].factor_indices;
        ComplexMatrix a = idx[0] == 0 ? ComplexMatrix::Identity(2, 2) : f[0].elements[idx[0] - 1];
        ComplexMatrix c = idx[1] == 0 ? ComplexMatrix::Identity(2, 2) : f[1].elements[idx[1] - 1];
        EXPECT_LT((b.elements[i] - kron(a, c)).norm(), 1e-15);
    }
    // sigma_x (x) I acts on factor 0 only.
    EXPECT_EQ(support(b, 3), std::vector<int>({0}));
}

TEST(RandomDensity, DeterministicAndValid) {
    auto a = random_density(2, 7);
    auto b = random_density(2, 7);
    EXPECT_EQ((a.matrix() - b.matrix()).norm(), 0.0);
    auto c = random_density(3, 1);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c.matrix());
    EXPECT_GE(es.eigenvalues().minCoeff(), 0.0);
    EXPECT_NEAR(es.eigenvalues().sum(), 1.0, 1e-14);
    EXPECT_LT(hermiticity_residual(random_density(4, 2).matrix()), 1e-12);
}

TEST(DensityMatrix, RejectsInvalid) {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    EXPECT_THROW(DensityMatrix{m}, Error);
    m(0, 0) = 1.5;
    m(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix{m}, Error);
}

TEST(Expansion, BasisElementAndIdentity) {
    auto b = gellmann_basis(2);
    auto e = expand_in_basis(pauli('x'), b);
    EXPECT_NEAR(e.identity, 0.0, 1e-15);
    EXPECT_NEAR(e.coeffs(0), 1.0, 1e-15);
    EXPECT_NEAR(e.coeffs(1), 0.0, 1e-15);
    EXPECT_NEAR(e.coeffs(2), 0.0, 1e-15);
    auto id = expand_in_basis(ComplexMatrix::Identity(2, 2), b);
    EXPECT_NEAR(id.identity, 1.0, 1e-15);
    EXPECT_LT(id.coeffs.norm(), 1e-15);
}

TEST(Expansion, RoundTripRandomHermitian) {
    std::mt19937_64 rng(11);
    for (int d : {3, 4, 5}) {
        ComplexMatrix h = random_hermitian(d, rng);
        auto b = gellmann_basis(d);
        EXPECT_LT((reconstruct(expand_in_basis(h, b), b) - h).cwiseAbs().maxCoeff(), 1e-12);
    }
    std::vector<HermitianBasis> f = {gellmann_basis(2), gellmann_basis(3)};
    auto tb = tensor_basis(f);
    ComplexMatrix h = random_hermitian(6, rng);
    EXPECT_LT((reconstruct(expand_in_basis(h, tb), tb) - h).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Expansion, RejectsNonHermitian) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    try {
        expand_in_basis(m, gellmann_basis(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidOperator);
    }
}

TEST(PartialTrace, ProductState) {
    auto a = random_density(2, 3).matrix();
    auto c = random_density(3, 4).matrix();
    std::vector<int> dims = {2, 3};
    std::vector<int> keep0 = {0};
    std::vector<int> keep1 = {1};
    EXPECT_LT((partial_trace(kron(a, c), dims, keep0) - a).norm(), 1e-14);
    EXPECT_LT((partial_trace(kron(a, c), dims, keep1) - c).norm(), 1e-14);
}

TEST(MatrixJson, RoundTrip) {
    auto rho = random_density(3, 5).matrix();
    auto back = matrix_from_json(matrix_to_json(rho));
    EXPECT_EQ((rho - back).norm(), 0.0);
}
