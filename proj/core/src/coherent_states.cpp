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

#include "spinwig/coherent_states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "spinwig/errors.hpp"
#include "spinwig/matrix_io.hpp"

namespace spinwig {

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

ComplexVector sun_coherent(int dim, const std::vector<double>& angles) {
    require(dim >= 2, ErrorKind::InvalidDimension, "sun_coherent needs dim >= 2");
    require(static_cast<int>(angles.size()) == 2 * (dim - 1), ErrorKind::InvalidCoordinates,
            "sun_coherent needs 2(dim-1) angles");
    ComplexVector z(dim);
    double prod = 1.0;
    for (int k = 0; k < dim - 1; ++k) {
        double theta = angles[2 * k];
        cplx phase = k == 0 ? cplx(1.0, 0.0) : std::polar(1.0, angles[2 * k - 1]);
        z(k) = phase * prod * std::cos(theta);
        prod *= std::sin(theta);
    }
    z(dim - 1) = std::polar(prod, angles[2 * dim - 3]);
    return z;
}

ComplexVector sphere_coherent(const RealVector& x) {
    require(x.size() >= 2 && x.size() % 2 == 0, ErrorKind::InvalidCoordinates,
            "sphere_coherent needs an even-dimensional point");
    ComplexVector z(x.size() / 2);
    for (Eigen::Index k = 0; k < z.size(); ++k) z(k) = cplx(x(2 * k), x(2 * k + 1));
    return z;
}

ComplexVector su2_coherent_in_d(int D, double phi1, double phi2, double theta) {
    require(D >= 1, ErrorKind::InvalidDimension, "su2_coherent_in_d needs D >= 1");
    ComplexVector v(D);
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    for (int m = 0; m < D; ++m) {
        double amp = std::pow(s, m) * std::pow(c, D - m - 1) * std::sqrt(binom(D - 1, m));
        v(m) = std::polar(amp, m * phi2 + (D - m - 1) * phi1);
    }
    return v;
}

std::vector<int> block_dims(int d1, int d2) {
    require(d1 >= 1 && d2 >= 1, ErrorKind::InvalidDimension, "block_dims needs d1, d2 >= 1");
    std::vector<int> out;
    for (int J = 0; J <= d1 + d2; ++J) {
        int D;
        if (J <= d1 && J <= d2) {
            D = J + 1;
        } else if (d1 <= J && J <= d2) {
            D = d1 + 1;
        } else if (d2 <= J && J <= d1) {
            D = d2 + 1;
        } else {
            D = d1 + d2 - J + 1;
        }
        out.push_back(D);
    }
    int total = 0;
    for (int D : out) total += D;
    require(total == (d1 + 1) * (d2 + 1), ErrorKind::InvalidDimension,
            "block dimensions do not sum to the product dimension");
    return out;
}

std::vector<ChargeState> charge_basis(int d1, int d2) {
    auto dims = block_dims(d1, d2);
    std::vector<ChargeState> out;
    for (int J = 0; J <= d1 + d2; ++J) {
        int b_min = std::max(0, J - d1);
        for (int m = 0; m < dims[J]; ++m) {
            int b = b_min + m;
            int a = J - b;
            out.push_back({J, m, a, b, a * (d2 + 1) + b});
        }
    }
    return out;
}

ComplexMatrix charge_permutation(int d1, int d2) {
    auto basis = charge_basis(d1, d2);
    const int dim = (d1 + 1) * (d2 + 1);
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) p(basis[k].product_index, k) = 1.0;
    return p;
}

ComplexVector tensor_sum_coherent(int d1, int d2, double phi1, double phi2, double theta,
                                  ChargePhase phase) {
    auto dims = block_dims(d1, d2);
    const int dim = (d1 + 1) * (d2 + 1);
    ComplexVector out(dim);
    int offset = 0;
    const double norm = 1.0 / std::sqrt(static_cast<double>(dims.size()));
    for (int J = 0; J < static_cast<int>(dims.size()); ++J) {
        ComplexVector block = su2_coherent_in_d(dims[J], phi1, phi2, theta);
        if (phase == ChargePhase::Include) {
            int b_min = std::max(0, J - d1);
            int a_min = J - std::min(J, d2);
            block *= std::polar(1.0, a_min * phi1 + b_min * phi2);
        }
        out.segment(offset, dims[J]) = norm * block;
        offset += dims[J];
    }
    return out;
}

CoherentFamily full_coset_family(int dim, int degree) {
    require(dim >= 2, ErrorKind::InvalidDimension, "coherent family needs dim >= 2");
    CoherentFamily f;
    f.name = "full-coset";
    f.dim = dim;
    f.coord_space = "S^" + std::to_string(2 * dim - 1);
    f.grid = ProductGrid({make_grid_for_degree(2 * dim, degree)});
    f.resolution_of_unity = true;
    const int p = 2 * dim;
    f.state = [p](const std::vector<double>& c) { return sphere_coherent(sphere_point(p, c)); };
    return f;
}

CoherentFamily sun_family(int dim, int n) {
    require(dim >= 2, ErrorKind::InvalidDimension, "coherent family needs dim >= 2");
    std::vector<SphereGrid> factors;
    for (int k = 1; k < dim; ++k) {
        factors.push_back(make_coset_polar_grid(n, dim - k - 1));
        factors.push_back(make_grid(2, std::max(n, 2)));
    }
    CoherentFamily f;
    f.name = "sun-nested";
    f.dim = dim;
    f.coord_space = "CP^" + std::to_string(dim - 1) + " (nested angles)";
    f.grid = ProductGrid(std::move(factors));
    f.resolution_of_unity = true;
    f.state = [dim](const std::vector<double>& c) { return sun_coherent(dim, c); };
    return f;
}

CoherentFamily dephasing_family(int n) {
    CoherentFamily f;
    f.name = "dephasing";
    f.dim = 2;
    f.coord_space = "theta in [0, 2pi)";
    f.grid = ProductGrid({make_grid(2, n)});
    f.resolution_of_unity = false;
    f.state = [](const std::vector<double>& c) {
        ComplexVector v(2);
        v << std::polar(1.0, -c[0]), std::polar(1.0, c[0]);
        return ComplexVector(v / std::sqrt(2.0));
    };
    return f;
}

CoherentFamily zz_family(int n) {
    CoherentFamily f;
    f.name = "zz";
    f.dim = 4;
    f.coord_space = "theta in [0, 2pi)";
    f.grid = ProductGrid({make_grid(2, n)});
    f.resolution_of_unity = false;
    f.state = [](const std::vector<double>& c) {
        ComplexVector v(4);
        cplx m = std::polar(0.5, -c[0]);
        cplx p = std::polar(0.5, c[0]);
        v << m, p, p, m;
        return v;
    };
    return f;
}

CoherentFamily exchange_family(int d1, int d2, int n_phi, int n_theta, ChargePhase phase) {
    block_dims(d1, d2);
    CoherentFamily f;
    f.name = "exchange";
    f.dim = (d1 + 1) * (d2 + 1);
    f.coord_space = "(phi1, phi2) in [0, 2pi)^2, theta in [0, pi/2]";
    f.grid = ProductGrid({make_grid(2, n_phi), make_grid(2, n_phi), make_arc_grid(n_theta)});
    f.resolution_of_unity = false;
    ComplexMatrix perm = charge_permutation(d1, d2);
    f.state = [d1, d2, phase, perm](const std::vector<double>& c) {
        return ComplexVector(perm * tensor_sum_coherent(d1, d2, c[0], c[1], c[2], phase));
    };
    return f;
}

ComplexMatrix frame_operator(const CoherentFamily& family) {
    ComplexMatrix acc = ComplexMatrix::Zero(family.dim, family.dim);
    for (std::size_t k = 0; k < family.grid.size(); ++k) {
        ComplexVector v = family.at_node(k);
        acc += family.grid.weight(k) * (v * v.adjoint());
    }
    return acc;
}

std::vector<DisplacementOperator> displacement_operators(const CoherentFamily& family,
                                                         const ProductHarmonics& harmonics) {
    ProductGrid hg = harmonics.grid();
    require(hg.factor_count() == family.grid.factor_count(), ErrorKind::InvalidInput,
            "harmonics and family use different coordinate spaces");
    for (std::size_t k = 0; k < hg.factor_count(); ++k) {
        require(hg.factor(k).size() == family.grid.factor(k).size() &&
                    hg.factor(k).kind == family.grid.factor(k).kind,
                ErrorKind::InvalidInput, "harmonics grid does not match the family grid");
    }
    std::vector<DisplacementOperator> out;
    for (const auto& idx : harmonics.index()) {
        out.push_back({idx.n, idx.j, ComplexMatrix::Zero(family.dim, family.dim)});
    }
    std::vector<std::size_t> fn;
    for (std::size_t node = 0; node < family.grid.size(); ++node) {
        family.grid.decode(node, fn);
        ComplexVector v = family.at_node(node);
        ComplexMatrix proj = family.grid.weight(node) * (v * v.adjoint());
        RealVector y = harmonics.values_at(fn);
        for (std::size_t f = 0; f < out.size(); ++f) {
            out[f].mat += y(static_cast<Eigen::Index>(f)) * proj;
        }
    }
    for (auto& d : out) d.mat = 0.5 * (d.mat + d.mat.adjoint()).eval();
    return out;
}

std::vector<DisplacementOperator> displacement_operators(const CoherentFamily& family,
                                                         const HarmonicBasisTable& table) {
    return displacement_operators(family, ProductHarmonics({table}));
}

RealMatrix CoefficientTable::row_gram() const { return entries * entries.transpose(); }

std::string CoefficientTable::to_csv() const {
    std::vector<int> cls(static_cast<std::size_t>(entries.rows()), -1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (int i : classes[c]) cls[i] = static_cast<int>(c);
    }
    std::ostringstream out;
    out << "class,i,n,j,value\n";
    for (Eigen::Index i = 0; i < entries.rows(); ++i) {
        for (std::size_t k = 0; k < harmonics.size(); ++k) {
            out << cls[i] << "," << i << "," << harmonics[k].n << "," << harmonics[k].j << ","
                << format_double(entries(i, static_cast<Eigen::Index>(k))) << "\n";
        }
    }
    return out.str();
}

CoefficientTable coefficient_table(const std::vector<DisplacementOperator>& ops,
                                   const HermitianBasis& basis,
                                   const std::vector<std::vector<int>>& classes) {
    require(!ops.empty(), ErrorKind::InvalidInput, "no displacement operators");
    require(ops[0].mat.rows() == basis.dim, ErrorKind::InvalidInput,
            "displacement operators and basis differ in dimension");
    CoefficientTable t;
    for (const auto& d : ops) t.harmonics.push_back({d.n, d.j});
    t.entries.resize(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(ops.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t k = 0; k < ops.size(); ++k) {
            cplx tr = (ops[k].mat.transpose().cwiseProduct(basis.elements[i])).sum();
            t.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = tr.real() / basis.norms[i];
        }
    }
    for (const auto& c : classes) {
        for (int i : c) {
            require(i >= 0 && i < static_cast<int>(basis.size()), ErrorKind::InvalidInput,
                    "class member outside the basis");
        }
    }
    t.classes = classes;
    check_class_orthogonality(t);
    return t;
}

void check_class_orthogonality(const CoefficientTable& table, double tol) {
    RealMatrix g = table.row_gram();
    for (const auto& c : table.classes) {
        for (std::size_t a = 0; a < c.size(); ++a) {
            for (std::size_t b = a + 1; b < c.size(); ++b) {
                double scale = std::max(g(c[a], c[a]), g(c[b], c[b]));
                if (scale < 1e-20) continue;  // both rows vanish
                double overlap = std::abs(g(c[a], c[b]));
                if (overlap > tol * scale) {
                    fail(ErrorKind::OrthogonalityViolation,
                         "coefficient rows " + std::to_string(c[a]) + " and " + std::to_string(c[b]) +
                             " overlap by " + format_double(overlap / scale));
                }
            }
        }
    }
}

RealVector identity_row(const std::vector<DisplacementOperator>& ops, int dim) {
    RealVector r(static_cast<Eigen::Index>(ops.size()));
    for (std::size_t k = 0; k < ops.size(); ++k) {
        r(static_cast<Eigen::Index>(k)) = ops[k].mat.trace().real() / dim;
    }
    return r;
}

}  // namespace spinwig
