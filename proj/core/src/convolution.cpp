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

#include "spinwig/convolution.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "spinwig/errors.hpp"

namespace spinwig {

namespace {

RealMatrix plane_rotation(int p, int a, int b, double angle) {
    RealMatrix r = RealMatrix::Identity(p, p);
    r(a, a) = std::cos(angle);
    r(b, b) = std::cos(angle);
    r(b, a) = std::sin(angle);
    r(a, b) = -std::sin(angle);
    return r;
}

RealVector pole(int p) {
    RealVector e = RealVector::Zero(p);
    e(0) = 1.0;
    return e;
}

void require_same_sphere(const HarmonicExpansion& f, const HarmonicExpansion& g,
                         const HarmonicBasisTable& table) {
    require(f.p == g.p && f.p == table.p(), ErrorKind::InvalidInput,
            "convolution operands live on different spheres");
}

}  // namespace

RotationSampler circle_shifts(int n) {
    require(n >= 1, ErrorKind::InvalidInput, "circle sampler needs nodes");
    RotationSampler s;
    s.p = 2;
    QuadratureRule r = uniform_circle(n);
    for (int k = 0; k < n; ++k) {
        s.rotations.push_back(plane_rotation(2, 0, 1, r.nodes[k]));
        s.weights.push_back(r.weights[k]);
    }
    s.stabilizer_volume = 1.0;
    return s;
}

RotationSampler euler_rotations(int n_alpha, int n_beta, int n_gamma) {
    require(n_alpha >= 1 && n_beta >= 1 && n_gamma >= 1, ErrorKind::InvalidInput,
            "Euler sampler needs nodes in every angle");
    RotationSampler s;
    s.p = 3;
    QuadratureRule ra = uniform_circle(n_alpha);
    QuadratureRule rb = gauss_legendre(n_beta);
    QuadratureRule rg = uniform_circle(n_gamma);
    for (int a = 0; a < n_alpha; ++a) {
        RealMatrix ma = plane_rotation(3, 1, 2, ra.nodes[a]);
        for (int b = 0; b < n_beta; ++b) {
            RealMatrix mb = plane_rotation(3, 0, 1, std::acos(rb.nodes[b]));
            for (int g = 0; g < n_gamma; ++g) {
                RealMatrix mg = plane_rotation(3, 1, 2, rg.nodes[g]);
                s.rotations.push_back(ma * mb * mg);
                s.weights.push_back(ra.weights[a] * rb.weights[b] * rg.weights[g]);
            }
        }
    }
    s.stabilizer_volume = 2.0 * std::numbers::pi;
    return s;
}

HarmonicExpansion convolve(const HarmonicExpansion& f, const HarmonicExpansion& g,
                           const HarmonicBasisTable& table, const RotationSampler& sampler) {
    require_same_sphere(f, g, table);
    require(sampler.p == table.p(), ErrorKind::InvalidInput,
            "rotation sampler acts on a different sphere");
    const int p = table.p();
    const RealVector xi0 = pole(p);

    // g at the rotated reference points does not depend on x.
    std::vector<double> g_at(sampler.size());
    for (std::size_t r = 0; r < sampler.size(); ++r) {
        g_at[r] = synthesize_at(g, table, sampler.rotations[r] * xi0);
    }
    const auto nodes = static_cast<Eigen::Index>(table.grid().size());
    RealVector out(nodes);
    for (Eigen::Index k = 0; k < nodes; ++k) {
        RealVector x = table.grid().points.row(k).transpose();
        double acc = 0.0;
        for (std::size_t r = 0; r < sampler.size(); ++r) {
            if (g_at[r] == 0.0) continue;
            RealVector y = sampler.rotations[r].transpose() * x;
            acc += sampler.weights[r] * g_at[r] * synthesize_at(f, table, y);
        }
        out(k) = acc / sampler.stabilizer_volume;
    }
    return expand(out, table);
}

double zonal_residual(const HarmonicExpansion& f, const HarmonicBasisTable& table) {
    const RealVector y0 = table.evaluate_point(pole(table.p()));
    double worst = 0.0;
    for (int n = 0; n <= f.n_max; ++n) {
        RealVector c = f.degree(n);
        RealVector y(c.size());
        int k = 0;
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (table.index()[i].n == n && k < c.size()) y(k++) = y0(static_cast<Eigen::Index>(i));
        }
        double yy = y.squaredNorm();
        RealVector perp = yy > 0 ? RealVector(c - (c.dot(y) / yy) * y) : c;
        worst = std::max(worst, perp.norm());
    }
    return worst;
}

HarmonicExpansion zonal_convolve(const HarmonicExpansion& f_zonal, const HarmonicExpansion& g,
                                 const HarmonicBasisTable& table) {
    require_same_sphere(f_zonal, g, table);
    const int p = table.p();
    HarmonicExpansion out = zero_expansion(table);
    out.n_max = std::min(f_zonal.n_max, g.n_max);
    if (p == 2) {
        const double sp = std::sqrt(std::numbers::pi);
        for (int n = 0; n <= out.n_max; ++n) {
            if (n == 0) {
                int pos = table.position(0, 1);
                out.coeffs(pos) = std::sqrt(2.0 * std::numbers::pi) * f_zonal.get(0, 1) * g.get(0, 1);
                continue;
            }
            std::complex<double> fh(sp * f_zonal.get(n, 1), -sp * f_zonal.get(n, 2));
            std::complex<double> gh(sp * g.get(n, 1), -sp * g.get(n, 2));
            std::complex<double> h = fh * gh;
            out.coeffs(table.position(n, 1)) = h.real() / sp;
            out.coeffs(table.position(n, 2)) = -h.imag() / sp;
        }
        return out;
    }

    double resid = zonal_residual(f_zonal, table);
    require(resid < 1e-10, ErrorKind::SymmetryViolation,
            "f is not rotationally symmetric about the reference point (residual " +
                std::to_string(resid) + ")");
    const RealVector y0 = table.evaluate_point(pole(p));
    const double omega = sphere_area(p);
    for (int n = 0; n <= out.n_max; ++n) {
        double a_n = 0.0;
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (table.index()[i].n == n) a_n += f_zonal.get(n, table.index()[i].j) * y0(static_cast<Eigen::Index>(i));
        }
        double factor = a_n * omega / harmonic_count(p, n);
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (table.index()[i].n == n) {
                out.coeffs(static_cast<Eigen::Index>(i)) = factor * g.get(n, table.index()[i].j);
            }
        }
    }
    return out;
}

}  // namespace spinwig
