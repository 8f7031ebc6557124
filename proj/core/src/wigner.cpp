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

#include "spinwig/wigner.hpp"

#include <cmath>

#include "spinwig/convolution.hpp"
#include "spinwig/errors.hpp"
#include "spinwig/harmonics.hpp"

namespace spinwig {

namespace {

RealVector basis_traces(const ComplexMatrix& op, const HermitianBasis& basis) {
    RealVector r(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        r(static_cast<Eigen::Index>(i)) = (op * basis.elements[i]).trace().real();
    }
    return r;
}

void require_same_kernel(const WignerFunction& a, const WignerFunction& b) {
    require(a.kernel && a.kernel == b.kernel, ErrorKind::InvalidInput, "Wigner functions use different kernels");
}

}  // namespace

double WignerFunction::integral() const {
    double s = 0.0;
    for (std::size_t k = 0; k < kernel->node_count(); ++k) {
        s += kernel->node_weight(k) * values(static_cast<Eigen::Index>(k));
    }
    return s;
}

double WignerFunction::overlap(const WignerFunction& other) const {
    require_same_kernel(*this, other);
    double s = 0.0;
    for (std::size_t k = 0; k < kernel->node_count(); ++k) {
        auto e = static_cast<Eigen::Index>(k);
        s += kernel->node_weight(k) * values(e) * other.values(e);
    }
    return s;
}

WignerFunction wigner(const ComplexMatrix& op, std::shared_ptr<const Kernel> kernel) {
    require(kernel != nullptr, ErrorKind::InvalidInput, "no kernel");
    require(op.rows() == kernel->dim() && op.cols() == kernel->dim(), ErrorKind::InvalidInput,
            "operator dimension " + std::to_string(op.rows()) + " does not match kernel dimension " +
                std::to_string(kernel->dim()));
    require(is_hermitian(op), ErrorKind::InvalidOperator, "operator is not Hermitian");
    const RealVector r = basis_traces(op, kernel->basis());
    const double tr = op.trace().real();
    WignerFunction w{kernel, RealVector(static_cast<Eigen::Index>(kernel->node_count()))};
    for (std::size_t k = 0; k < kernel->node_count(); ++k) {
        w.values(static_cast<Eigen::Index>(k)) = kernel->c_delta() * tr + kernel->coefficients_at_node(k).dot(r);
    }
    return w;
}

WignerFunction wigner(const DensityMatrix& rho, std::shared_ptr<const Kernel> kernel) {
    return wigner(rho.matrix(), std::move(kernel));
}

ComplexMatrix reconstruct_operator(const WignerFunction& w) {
    const Kernel& k = *w.kernel;
    require(k.verified(), ErrorKind::UnverifiedKernel,
            "kernel '" + k.name() + "' has not passed verify_sw; run verify_sw before reconstructing");
    double mass = 0.0;
    RealVector acc = RealVector::Zero(static_cast<Eigen::Index>(k.basis().size()));
    for (std::size_t node = 0; node < k.node_count(); ++node) {
        double wv = k.node_weight(node) * w.values(static_cast<Eigen::Index>(node));
        mass += wv;
        acc += wv * k.coefficients_at_node(node);
    }
    ComplexMatrix out = k.c_delta() * mass * ComplexMatrix::Identity(k.dim(), k.dim());
    for (std::size_t i = 0; i < k.basis().size(); ++i) out += acc(static_cast<Eigen::Index>(i)) * k.basis().elements[i];
    return out;
}

DensityMatrix reconstruct(const WignerFunction& w) {
    ComplexMatrix m = reconstruct_operator(w);
    return DensityMatrix(0.5 * (m + m.adjoint()));
}

ConvolutionPaths channel_as_convolution(std::shared_ptr<const Kernel> kernel, const NoiseModel& noise,
                                        const DensityMatrix& rho) {
    require(kernel != nullptr, ErrorKind::InvalidInput, "no kernel");
    const auto& gen = kernel->shift_generator();
    require(gen.has_value() && noise.circular() && noise.dim == kernel->dim(), ErrorKind::UnsupportedNoise,
            std::string(to_string(noise.kind)) + " noise is not a rotation of kernel '" + kernel->name() +
                "' coordinates");
    ComplexMatrix g = rotation_generator(noise);
    require(frobenius_distance(g, *gen) < 1e-12, ErrorKind::UnsupportedNoise,
            std::string(to_string(noise.kind)) + " generator differs from the shift generator of kernel '" +
                kernel->name() + "'");
    const ProductGrid& grid = kernel->grid();
    require(kernel->shift_coord() == 0 && grid.factor(0).p == 2 && grid.factor(0).kind == "sphere", ErrorKind::UnsupportedNoise,
            "kernel shift coordinate is not a leading circle factor");

    ConvolutionPaths out{wigner(apply_channel(rho, noise), kernel), wigner(rho, kernel)};

    const SphereGrid& circle = grid.factor(0);
    const std::size_t n_theta = circle.size();
    const std::size_t rest = grid.size() / n_theta;
    const int n_max = static_cast<int>((n_theta - 1) / 2);
    const HarmonicBasisTable table = build_harmonics(circle, n_max);

    // Distribution as a band-limited density: sum_k w_k sum_{n,j} Y(alpha_k) Y.
    HarmonicExpansion density = zero_expansion(table);
    for (std::size_t k = 0; k < noise.distribution.size(); ++k) {
        density.coeffs += noise.distribution.weights[k] * table.evaluate({noise.distribution.nodes[k]});
    }

    const RealVector input = out.convolved.values;
    for (std::size_t r = 0; r < rest; ++r) {
        RealVector slice(static_cast<Eigen::Index>(n_theta));
        for (std::size_t t = 0; t < n_theta; ++t) slice(static_cast<Eigen::Index>(t)) = input(static_cast<Eigen::Index>(t * rest + r));
        HarmonicExpansion e = expand(slice, table);
        double alias = (synthesize(e, table) - slice).cwiseAbs().maxCoeff();
        require(alias < 1e-9, ErrorKind::AliasingRisk,
                "Wigner slice exceeds the circle bandwidth " + std::to_string(n_max) + " (residual " +
                    format_double(alias) + ")");
        RealVector shifted = synthesize(zonal_convolve(density, e, table), table);
        for (std::size_t t = 0; t < n_theta; ++t) {
            out.convolved.values(static_cast<Eigen::Index>(t * rest + r)) = shifted(static_cast<Eigen::Index>(t));
        }
    }
    out.max_difference = (out.convolved.values - out.channel_first.values).cwiseAbs().maxCoeff();
    return out;
}

}  // namespace spinwig
