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

#include "spinwig/kernel.hpp"

#include <cmath>

#include "spinwig/errors.hpp"
#include "spinwig/parallel.hpp"

namespace spinwig {

namespace {

RealVector expectation_symbols(const ComplexVector& v, const HermitianBasis& basis) {
    RealVector f(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        f(static_cast<Eigen::Index>(i)) = v.dot(basis.elements[i] * v).real() / basis.norms[i];
    }
    return f;
}

class DirectSymbols : public SymbolProvider {
public:
    DirectSymbols(CoherentFamily family, HermitianBasis basis)
        : family_(std::move(family)), basis_(std::move(basis)) {
        table_.resize(static_cast<Eigen::Index>(family_.grid.size()),
                      static_cast<Eigen::Index>(basis_.size()));
        for (std::size_t k = 0; k < family_.grid.size(); ++k) {
            table_.row(static_cast<Eigen::Index>(k)) =
                expectation_symbols(family_.at_node(k), basis_).transpose();
        }
    }
    std::size_t count() const override { return basis_.size(); }
    RealVector at_node(std::size_t node) const override {
        return table_.row(static_cast<Eigen::Index>(node)).transpose();
    }
    RealVector at(const std::vector<double>& coords) const override {
        return expectation_symbols(family_.state(coords), basis_);
    }

private:
    CoherentFamily family_;
    HermitianBasis basis_;
    RealMatrix table_;
};

class ExpansionSymbols : public SymbolProvider {
public:
    ExpansionSymbols(ProductHarmonics harmonics, RealMatrix entries)
        : harmonics_(std::move(harmonics)), entries_(std::move(entries)), grid_(harmonics_.grid()) {}
    std::size_t count() const override { return static_cast<std::size_t>(entries_.rows()); }
    RealVector at_node(std::size_t node) const override {
        std::vector<std::size_t> fn;
        grid_.decode(node, fn);
        return entries_ * harmonics_.values_at(fn);
    }
    RealVector at(const std::vector<double>& coords) const override {
        return entries_ * harmonics_.evaluate(coords);
    }

private:
    ProductHarmonics harmonics_;
    RealMatrix entries_;
    ProductGrid grid_;
};

class ProductSymbols : public SymbolProvider {
public:
    ProductSymbols(std::vector<SymbolPtr> factors, const std::vector<ProductGrid>& grids,
                   const HermitianBasis& basis)
        : factors_(std::move(factors)), dims_(basis.factor_dims) {
        require(factors_.size() == grids.size() && factors_.size() == dims_.size(),
                ErrorKind::InvalidInput, "product symbols need one grid and dimension per factor");
        for (const auto& g : grids) {
            sizes_.push_back(g.size());
            coord_counts_.push_back(g.coord_count());
        }
        for (const auto& l : basis.labels) {
            require(l.factor_indices.size() == factors_.size(), ErrorKind::InvalidInput,
                    "product symbols need a tensor basis");
            slots_.push_back(l.factor_indices);
        }
    }
    std::size_t count() const override { return slots_.size(); }
    RealVector at_node(std::size_t node) const override {
        std::vector<RealVector> parts(factors_.size());
        for (std::size_t k = factors_.size(); k-- > 0;) {
            parts[k] = factors_[k]->at_node(node % sizes_[k]);
            node /= sizes_[k];
        }
        return combine(parts);
    }
    RealVector at(const std::vector<double>& coords) const override {
        std::vector<RealVector> parts;
        std::size_t offset = 0;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            std::vector<double> c(coords.begin() + static_cast<std::ptrdiff_t>(offset),
                                  coords.begin() + static_cast<std::ptrdiff_t>(offset + coord_counts_[k]));
            parts.push_back(factors_[k]->at(c));
            offset += static_cast<std::size_t>(coord_counts_[k]);
        }
        return combine(parts);
    }

private:
    RealVector combine(const std::vector<RealVector>& parts) const {
        RealVector out(static_cast<Eigen::Index>(slots_.size()));
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            double v = 1.0;
            for (std::size_t k = 0; k < factors_.size(); ++k) {
                int s = slots_[i][k];
                v *= s == 0 ? 1.0 / dims_[k] : parts[k](s - 1);
            }
            out(static_cast<Eigen::Index>(i)) = v;
        }
        return out;
    }

    std::vector<SymbolPtr> factors_;
    std::vector<int> dims_;
    std::vector<std::size_t> sizes_;
    std::vector<int> coord_counts_;
    std::vector<std::vector<int>> slots_;
};

class EffectiveSymbols : public SymbolProvider {
public:
    EffectiveSymbols(SymbolPtr noise, std::vector<bool> invariant, std::vector<Residual> residuals,
                     const SphereGrid& eta_grid)
        : noise_(std::move(noise)), invariant_(std::move(invariant)), residuals_(std::move(residuals)) {
        require(invariant_.size() == noise_->count() && residuals_.size() == noise_->count(),
                ErrorKind::InvalidInput, "effective symbols need one label per operator");
        for (const auto& node : eta_grid.nodes) eta_.push_back(node[0]);
    }
    std::size_t count() const override { return residuals_.size(); }
    RealVector at_node(std::size_t node) const override {
        return combine(noise_->at_node(node / eta_.size()), eta_[node % eta_.size()]);
    }
    RealVector at(const std::vector<double>& coords) const override {
        std::vector<double> head(coords.begin(), coords.end() - 1);
        return combine(noise_->at(head), coords.back());
    }

private:
    RealVector combine(const RealVector& g, double eta) const {
        RealVector out(g.size());
        for (Eigen::Index i = 0; i < g.size(); ++i) {
            double base = invariant_[i] ? 1.0 : g(i);
            out(i) = base * residuals_[i](eta);
        }
        return out;
    }

    SymbolPtr noise_;
    std::vector<bool> invariant_;
    std::vector<Residual> residuals_;
    std::vector<double> eta_;
};

struct Moments {
    RealMatrix gram;
    RealVector first;
    Moments& operator+=(const Moments& o) {
        gram += o.gram;
        first += o.first;
        return *this;
    }
};

}  // namespace

double Residual::operator()(double eta) const {
    switch (kind) {
        case Kind::None: return 1.0;
        case Kind::Sin: return std::sin(frequency * eta);
        case Kind::Cos: return std::cos(frequency * eta);
    }
    return 1.0;
}

std::string Residual::str() const {
    switch (kind) {
        case Kind::None: return "1";
        case Kind::Sin: return "sin(" + std::to_string(frequency) + " eta)";
        case Kind::Cos: return "cos(" + std::to_string(frequency) + " eta)";
    }
    return "1";
}

SymbolPtr direct_symbols(const CoherentFamily& family, const HermitianBasis& basis) {
    require(family.dim == basis.dim, ErrorKind::InvalidInput, "family and basis differ in dimension");
    return std::make_shared<DirectSymbols>(family, basis);
}

SymbolPtr expansion_symbols(const ProductHarmonics& harmonics, const RealMatrix& entries) {
    require(static_cast<std::size_t>(entries.cols()) == harmonics.size(), ErrorKind::InvalidInput,
            "coefficient table width differs from the harmonic count");
    return std::make_shared<ExpansionSymbols>(harmonics, entries);
}

SymbolPtr product_symbols(const std::vector<SymbolPtr>& factors, const std::vector<ProductGrid>& grids,
                          const HermitianBasis& basis) {
    return std::make_shared<ProductSymbols>(factors, grids, basis);
}

SymbolPtr effective_symbols(SymbolPtr noise, std::size_t noise_nodes, std::vector<bool> invariant,
                            std::vector<Residual> residuals, const SphereGrid& eta_grid) {
    require(eta_grid.p == 2 && eta_grid.kind == "sphere", ErrorKind::InvalidInput,
            "residual coordinate must be a circle");
    require(noise_nodes > 0, ErrorKind::InvalidInput, "empty noise grid");
    return std::make_shared<EffectiveSymbols>(std::move(noise), std::move(invariant),
                                              std::move(residuals), eta_grid);
}

RealVector Kernel::coefficients_at_node(std::size_t node) const {
    return spec_.symbols->at_node(node).cwiseProduct(op_scales_);
}

RealVector Kernel::coefficients_at(const std::vector<double>& coords) const {
    return spec_.symbols->at(coords).cwiseProduct(op_scales_);
}

ComplexMatrix Kernel::assemble(const RealVector& coeffs) const {
    ComplexMatrix d = c_delta_ * ComplexMatrix::Identity(spec_.dim, spec_.dim);
    for (std::size_t i = 0; i < spec_.basis.size(); ++i) {
        double c = coeffs(static_cast<Eigen::Index>(i));
        if (c != 0.0) d += c * spec_.basis.elements[i];
    }
    return d;
}

ComplexMatrix Kernel::at_node(std::size_t node) const { return assemble(coefficients_at_node(node)); }

ComplexMatrix Kernel::at(const std::vector<double>& coords) const {
    require(static_cast<int>(coords.size()) == spec_.grid.coord_count(), ErrorKind::InvalidCoordinates,
            "kernel " + spec_.name + " takes " + std::to_string(spec_.grid.coord_count()) + " coordinates");
    return assemble(coefficients_at(coords));
}

json Kernel::manifest() const {
    json grid = json::object();
    json factors = json::array();
    for (const auto& f : spec_.grid.factors()) {
        factors.push_back({{"kind", f.kind},
                           {"p", f.p},
                           {"polar_points", f.polar_points},
                           {"azimuth_points", f.azimuth_points},
                           {"exactness", f.exactness},
                           {"nodes", f.size()}});
    }
    grid["factors"] = factors;
    grid["nodes"] = spec_.grid.size();
    grid["coordinate_mass"] = spec_.grid.total_mass();
    json classes = json::array();
    for (std::size_t c = 0; c < spec_.classes.size(); ++c) {
        json members = json::array();
        for (int i : spec_.classes[c]) members.push_back(spec_.basis.labels[i].str());
        classes.push_back({{"members", members}, {"indices", spec_.classes[c]}, {"scale", class_scales_[c]}});
    }
    return {{"constructor", spec_.name},
            {"params", spec_.params},
            {"dim", spec_.dim},
            {"factor_dims", spec_.factor_dims},
            {"coord_space", spec_.coord_space},
            {"coord_names", spec_.coord_names},
            {"grid", grid},
            {"measure_mass", total_mass()},
            {"weight_scale", weight_scale_},
            {"c_delta", c_delta_},
            {"classes", classes},
            {"informationally_incomplete", incomplete_},
            {"solve_residual", solve_residual_},
            {"extras", spec_.extras}};
}

KernelPtr build_general_kernel(KernelSpec spec) {
    require(spec.dim >= 2, ErrorKind::InvalidDimension, "kernel needs dim >= 2");
    require(spec.symbols != nullptr, ErrorKind::InvalidInput, "kernel needs symbols");
    require(spec.basis.dim == spec.dim, ErrorKind::InvalidInput, "basis dimension differs from kernel");
    const std::size_t nb = spec.basis.size();
    require(spec.symbols->count() == nb, ErrorKind::InvalidInput, "one symbol per basis element");

    std::vector<int> class_of(nb, -1);
    for (std::size_t c = 0; c < spec.classes.size(); ++c) {
        for (int i : spec.classes[c]) {
            require(i >= 0 && static_cast<std::size_t>(i) < nb && class_of[i] < 0, ErrorKind::InvalidInput,
                    "classes must partition the basis");
            class_of[i] = static_cast<int>(c);
        }
    }
    for (std::size_t i = 0; i < nb; ++i) {
        if (class_of[i] < 0) {
            class_of[i] = static_cast<int>(spec.classes.size());
            spec.classes.push_back({static_cast<int>(i)});
        }
    }

    auto kernel = std::shared_ptr<Kernel>(new Kernel());
    Kernel& k = *kernel;
    k.weight_scale_ = spec.dim / spec.grid.total_mass();
    k.c_delta_ = spec.forced_c.value_or(1.0 / spec.dim);
    k.class_scales_.assign(spec.classes.size(), 0.0);
    k.op_scales_ = RealVector::Zero(static_cast<Eigen::Index>(nb));

    if (spec.forced_scales) {
        require(spec.forced_scales->size() == spec.classes.size(), ErrorKind::InvalidInput,
                "forced scales need one value per class");
        k.class_scales_ = *spec.forced_scales;
    } else {
        const SymbolProvider& sym = *spec.symbols;
        const double ws = k.weight_scale_;
        const ProductGrid& grid = spec.grid;
        Moments zero{RealMatrix::Zero(nb, nb), RealVector::Zero(nb)};
        Moments m = chunked_reduce(grid.size(), zero, [&](std::size_t b, std::size_t e) {
            Moments acc = zero;
            for (std::size_t node = b; node < e; ++node) {
                RealVector f = sym.at_node(node);
                double w = grid.weight(node) * ws;
                acc.gram.selfadjointView<Eigen::Lower>().rankUpdate(f, w);
                acc.first += w * f;
            }
            return acc;
        });
        RealMatrix gram = m.gram.selfadjointView<Eigen::Lower>();

        double worst = 0.0;
        std::string worst_what;
        auto note = [&](double r, const std::string& what) {
            if (r > worst) {
                worst = r;
                worst_what = what;
            }
        };
        for (std::size_t c = 0; c < spec.classes.size(); ++c) {
            const auto& members = spec.classes[c];
            double mean = 0.0;
            for (int i : members) mean += spec.basis.norms[i] * gram(i, i);
            mean /= static_cast<double>(members.size());
            if (mean < 1e-14) {
                k.incomplete_ = true;
                continue;
            }
            for (int i : members) {
                note(std::abs(spec.basis.norms[i] * gram(i, i) - mean) / mean,
                     "class " + std::to_string(c) + " diagonal at " + spec.basis.labels[i].str());
            }
            k.class_scales_[c] = std::sqrt(1.0 / mean);
        }
        for (std::size_t i = 0; i < nb; ++i) {
            k.op_scales_(static_cast<Eigen::Index>(i)) = k.class_scales_[class_of[i]];
        }
        for (std::size_t i = 0; i < nb; ++i) {
            double si = k.op_scales_(i);
            if (si == 0.0) continue;
            note(std::abs(si * m.first(i)), "first moment of " + spec.basis.labels[i].str());
            for (std::size_t j = 0; j < nb; ++j) {
                double sj = k.op_scales_(j);
                if (sj == 0.0) continue;
                double target = i == j ? 1.0 / spec.basis.norms[i] : 0.0;
                note(std::abs(si * sj * gram(i, j) - target),
                     "gram entry " + spec.basis.labels[i].str() + " x " + spec.basis.labels[j].str());
            }
        }
        k.solve_residual_ = worst;
        if (worst > 1e-9) {
            fail(ErrorKind::NormalizationFailure,
                 spec.name + ": scale solve residual " + format_double(worst) + " at " + worst_what);
        }
    }
    for (std::size_t i = 0; i < nb; ++i) {
        k.op_scales_(static_cast<Eigen::Index>(i)) = k.class_scales_[class_of[i]];
        if (k.op_scales_(i) == 0.0) k.incomplete_ = true;
    }
    k.spec_ = std::move(spec);
    return kernel;
}

}  // namespace spinwig
