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

#include "spinwig/quadrature.hpp"

namespace spinwig {

/// Number of linearly independent degree-n harmonics on S^{p-1}.
int harmonic_count(int p, int n);

struct HarmonicIndex {
    int n = 0;
    int j = 1;  // 1-based within the degree
    bool operator==(const HarmonicIndex&) const = default;
};

/// Real orthonormal harmonics Y_{n,j} for n <= n_max, sampled on a grid and
/// stored as polynomials in the Cartesian coordinates so they can also be
/// evaluated off-grid.
///
/// Degree n is obtained by Gram-Schmidt of the degree-n monomials (ordered
/// lexicographically, x_1 power descending) against everything of lower
/// degree under the grid quadrature. On S^1 this yields
/// Y_{n,1} = cos(n phi)/sqrt(pi), Y_{n,2} = sin(n phi)/sqrt(pi).
class HarmonicBasisTable {
public:
    const SphereGrid& grid() const { return grid_; }
    int p() const { return grid_.p; }
    int n_max() const { return n_max_; }
    std::size_t size() const { return index_.size(); }
    const std::vector<HarmonicIndex>& index() const { return index_; }
    /// grid.size() x size()
    const RealMatrix& values() const { return values_; }
    /// Position of (n, j) in index(), or -1.
    int position(int n, int j) const;

    RealVector evaluate_point(const RealVector& x) const;
    RealVector evaluate(const std::vector<double>& angles) const;

    /// Quadrature Gram matrix of the stored functions.
    RealMatrix gram() const;

    friend HarmonicBasisTable build_harmonics(const SphereGrid& grid, int n_max);

private:
    SphereGrid grid_;
    int n_max_ = 0;
    std::vector<HarmonicIndex> index_;
    RealMatrix values_;
    std::vector<std::vector<int>> exponents_;
    /// size() x exponents_.size()
    RealMatrix monomial_coeffs_;
};

HarmonicBasisTable build_harmonics(const SphereGrid& grid, int n_max);

struct HarmonicExpansion {
    int p = 0;
    int n_max = 0;
    std::vector<HarmonicIndex> index;
    RealVector coeffs;

    double get(int n, int j) const;
    /// Coefficients of degree n, ordered by j.
    RealVector degree(int n) const;
    int bandwidth(double tol) const;
};

HarmonicExpansion zero_expansion(const HarmonicBasisTable& table);
HarmonicExpansion expand(const RealVector& samples, const HarmonicBasisTable& table);
RealVector synthesize(const HarmonicExpansion& expansion, const HarmonicBasisTable& table);
/// Pointwise sum at an arbitrary Cartesian point.
double synthesize_at(const HarmonicExpansion& expansion, const HarmonicBasisTable& table,
                     const RealVector& x);

/// Products of harmonics on the factors of a ProductGrid. Functions are
/// ordered by total degree, then lexicographically in the factor positions;
/// the exposed (n, j) uses the total degree and a running j.
class ProductHarmonics {
public:
    ProductHarmonics() = default;
    explicit ProductHarmonics(std::vector<HarmonicBasisTable> factors);

    std::size_t size() const { return index_.size(); }
    std::size_t factor_count() const { return factors_.size(); }
    const HarmonicBasisTable& factor(std::size_t k) const { return factors_[k]; }
    const std::vector<HarmonicIndex>& index() const { return index_; }
    /// Per-factor table positions of product function f.
    const std::vector<int>& components(std::size_t f) const { return components_[f]; }
    ProductGrid grid() const;

    RealVector values_at(const std::vector<std::size_t>& factor_nodes) const;
    RealVector evaluate(const std::vector<double>& coords) const;

private:
    std::vector<HarmonicBasisTable> factors_;
    std::vector<HarmonicIndex> index_;
    std::vector<std::vector<int>> components_;
};

/// Generalized Legendre polynomial on S^{p-1}, normalized to P_n(1) = 1.
double gegenbauer(int p, int n, double t);

std::string expansion_to_csv(const HarmonicExpansion& expansion);

}  // namespace spinwig
