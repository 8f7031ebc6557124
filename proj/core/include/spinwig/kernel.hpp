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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spinwig/coherent_states.hpp"
#include "spinwig/matrix_io.hpp"

namespace spinwig {

/// Unscaled symbol values F_i(xi), one per basis element, on the nodes of a
/// product grid and at arbitrary coordinates.
class SymbolProvider {
public:
    virtual ~SymbolProvider() = default;
    virtual std::size_t count() const = 0;
    virtual RealVector at_node(std::size_t node) const = 0;
    virtual RealVector at(const std::vector<double>& coords) const = 0;
};

using SymbolPtr = std::shared_ptr<const SymbolProvider>;

/// F_i(xi) = <xi|O_i|xi> / Tr[O_i^2] over a coherent family.
SymbolPtr direct_symbols(const CoherentFamily& family, const HermitianBasis& basis);

/// F_i(xi) = sum_k entries(i, k) Y_k(xi).
SymbolPtr expansion_symbols(const ProductHarmonics& harmonics, const RealMatrix& entries);

/// Symbols of a tensor basis from per-factor symbols: identity slots
/// contribute 1/d_k, slot k >= 1 contributes factor symbol k - 1. Factor
/// grids are concatenated with the last factor fastest.
SymbolPtr product_symbols(const std::vector<SymbolPtr>& factors,
                          const std::vector<ProductGrid>& grids, const HermitianBasis& basis);

/// Label carried by an operator along the residual circle coordinate.
struct Residual {
    enum class Kind { None, Sin, Cos };
    Kind kind = Kind::None;
    int frequency = 0;

    double operator()(double eta) const;
    std::string str() const;
};

/// F_i(xi, eta) = g_i(xi) r_i(eta), with g_i = 1 for invariant operators and
/// the noise symbol otherwise. eta is the last coordinate.
SymbolPtr effective_symbols(SymbolPtr noise, std::size_t noise_nodes, std::vector<bool> invariant,
                            std::vector<Residual> residuals, const SphereGrid& eta_grid);

/// A coordinate map paired with the unitary that should implement it.
struct Symmetry {
    std::function<std::vector<double>(const std::vector<double>&)> move;
    ComplexMatrix unitary;
};
using SymmetrySampler = std::function<std::vector<Symmetry>(int count, std::uint64_t seed)>;

/// Everything a constructor hands to build_general_kernel.
struct KernelSpec {
    std::string name;
    json params = json::object();
    int dim = 0;
    std::vector<int> factor_dims;
    std::string coord_space;
    std::vector<std::string> coord_names;
    ProductGrid grid;
    HermitianBasis basis;
    std::vector<std::vector<int>> classes;
    SymbolPtr symbols;
    std::optional<CoefficientTable> table;
    /// Skip solving and use these values.
    std::optional<double> forced_c;
    std::optional<std::vector<double>> forced_scales;
    SymmetrySampler symmetries;
    /// Delta(theta + a) = e^{-i a G} Delta(theta) e^{i a G} along coordinate
    /// `shift_coord`, when the kernel has one.
    std::optional<ComplexMatrix> shift_generator;
    int shift_coord = 0;
    json extras = json::object();
};

/// Delta(xi) = C I + sum_i s_class(i) F_i(xi) O_i with the measure rescaled
/// to total mass dim.
class Kernel {
public:
    const std::string& name() const { return spec_.name; }
    const json& params() const { return spec_.params; }
    int dim() const { return spec_.dim; }
    const std::vector<int>& factor_dims() const { return spec_.factor_dims; }
    const std::string& coord_space() const { return spec_.coord_space; }
    const std::vector<std::string>& coord_names() const { return spec_.coord_names; }
    const ProductGrid& grid() const { return spec_.grid; }
    const HermitianBasis& basis() const { return spec_.basis; }
    const std::vector<std::vector<int>>& classes() const { return spec_.classes; }
    const std::optional<CoefficientTable>& table() const { return spec_.table; }
    const SymbolProvider& symbols() const { return *spec_.symbols; }
    const SymmetrySampler& symmetries() const { return spec_.symmetries; }
    const std::optional<ComplexMatrix>& shift_generator() const { return spec_.shift_generator; }
    int shift_coord() const { return spec_.shift_coord; }
    const json& extras() const { return spec_.extras; }

    double c_delta() const { return c_delta_; }
    const std::vector<double>& class_scales() const { return class_scales_; }
    /// Per-operator scale s_class(i).
    const RealVector& op_scales() const { return op_scales_; }
    double weight_scale() const { return weight_scale_; }
    double total_mass() const { return spec_.grid.total_mass() * weight_scale_; }
    bool informationally_incomplete() const { return incomplete_; }
    /// Largest deviation found while solving (0 when forced).
    double solve_residual() const { return solve_residual_; }

    std::size_t node_count() const { return spec_.grid.size(); }
    double node_weight(std::size_t node) const { return spec_.grid.weight(node) * weight_scale_; }
    std::vector<double> node_coords(std::size_t node) const { return spec_.grid.coords(node); }

    /// Coefficients s_i F_i(xi) of the basis elements.
    RealVector coefficients_at_node(std::size_t node) const;
    RealVector coefficients_at(const std::vector<double>& coords) const;
    ComplexMatrix at_node(std::size_t node) const;
    ComplexMatrix at(const std::vector<double>& coords) const;

    bool verified() const { return verified_; }
    void mark_verified(bool pass) { verified_ = pass; }

    /// Manifest JSON (without the CSV path, which the caller adds).
    json manifest() const;

    friend std::shared_ptr<Kernel> build_general_kernel(KernelSpec spec);

private:
    ComplexMatrix assemble(const RealVector& coeffs) const;

    KernelSpec spec_;
    double c_delta_ = 0.0;
    std::vector<double> class_scales_;
    RealVector op_scales_;
    double weight_scale_ = 1.0;
    bool incomplete_ = false;
    double solve_residual_ = 0.0;
    bool verified_ = false;
};

using KernelPtr = std::shared_ptr<Kernel>;

/// Solves C and the class scales so that S-W.3 and S-W.4 hold on the basis:
/// C = 1/dim and s_c = (t_i G_ii)^{-1/2} from the symbol Gram matrix G.
/// Throws normalization-failure if the scaled Gram differs from
/// diag(1/t_i) or a first moment is nonzero by more than 1e-9, or if the
/// diagonal t_i G_ii is not constant inside a class.
KernelPtr build_general_kernel(KernelSpec spec);

}  // namespace spinwig
