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

#include "spinwig/operator_core.hpp"

#include <cmath>
#include <sstream>

#include "spinwig/errors.hpp"

namespace spinwig {

double hermiticity_residual(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_residual(m) <= tol; }

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).norm(); }

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix d = a - b;
    d = 0.5 * (d + d.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(d, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
    ComplexMatrix h = 0.5 * (hermitian + hermitian.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
    require(!factors.empty(), ErrorKind::InvalidInput, "kron_all needs at least one factor");
    ComplexMatrix out = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) {
        out = kron(out, factors[k]);
    }
    return out;
}

ComplexMatrix embed(const ComplexMatrix& op, std::span<const int> dims, int site) {
    require(site >= 0 && site < static_cast<int>(dims.size()), ErrorKind::InvalidInput,
            "embed site out of range");
    require(op.rows() == dims[site] && op.cols() == dims[site], ErrorKind::InvalidInput,
            "embed operator does not match factor dimension");
    std::vector<ComplexMatrix> parts;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (static_cast<int>(k) == site) {
            parts.push_back(op);
        } else {
            parts.push_back(ComplexMatrix::Identity(dims[k], dims[k]));
        }
    }
    return kron_all(parts);
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep) {
    int total = 1;
    for (int d : dims) total *= d;
    require(m.rows() == total && m.cols() == total, ErrorKind::InvalidInput,
            "partial_trace dimension mismatch");
    const int n = static_cast<int>(dims.size());
    std::vector<bool> kept(n, false);
    for (int k : keep) {
        require(k >= 0 && k < n, ErrorKind::InvalidInput, "partial_trace keep index out of range");
        kept[k] = true;
    }
    int keep_dim = 1;
    for (int k = 0; k < n; ++k) {
        if (kept[k]) keep_dim *= dims[k];
    }
    ComplexMatrix out = ComplexMatrix::Zero(keep_dim, keep_dim);

    // Digits of a flat index, first factor most significant.
    auto digits = [&](int flat) {
        std::vector<int> dg(n);
        for (int k = n - 1; k >= 0; --k) {
            dg[k] = flat % dims[k];
            flat /= dims[k];
        }
        return dg;
    };
    auto reduced = [&](const std::vector<int>& dg, bool want_kept) {
        int idx = 0;
        for (int k = 0; k < n; ++k) {
            if (kept[k] == want_kept) idx = idx * dims[k] + dg[k];
        }
        return idx;
    };
    for (int r = 0; r < total; ++r) {
        auto dr = digits(r);
        for (int c = 0; c < total; ++c) {
            auto dc = digits(c);
            if (reduced(dr, false) != reduced(dc, false)) continue;
            out(reduced(dr, true), reduced(dc, true)) += m(r, c);
        }
    }
    return out;
}

namespace {

ComplexMatrix gaussian_matrix(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            double re = normal(rng);
            double im = normal(rng);
            g(i, j) = cplx(re, im);
        }
    }
    return g;
}

}  // namespace

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
    ComplexMatrix g = gaussian_matrix(dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix column phases so the distribution is Haar.
    for (int k = 0; k < dim; ++k) {
        double mag = std::abs(r(k, k));
        if (mag > 0) q.col(k) *= r(k, k) / mag;
    }
    return q;
}

ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
    ComplexMatrix g = gaussian_matrix(dim, rng);
    return 0.5 * (g + g.adjoint());
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, double tol) : mat_(std::move(mat)) {
    require(mat_.rows() == mat_.cols() && mat_.rows() >= 1, ErrorKind::InvalidInput,
            "density matrix must be square and non-empty");
    require(is_hermitian(mat_, 1e-9), ErrorKind::InvalidOperator,
            "density matrix is not Hermitian");
    require(std::abs(mat_.trace() - cplx(1.0, 0.0)) <= 1e-9, ErrorKind::InvalidInput,
            "density matrix trace is not 1");
    require(min_eigenvalue(mat_) >= -tol, ErrorKind::InvalidInput,
            "density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    require(dim >= 1, ErrorKind::InvalidDimension, "dimension must be positive");
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
    double nrm = psi.norm();
    require(nrm > 0, ErrorKind::InvalidInput, "zero state vector");
    ComplexVector v = psi / nrm;
    return DensityMatrix(v * v.adjoint());
}

std::string BasisLabel::str() const {
    std::ostringstream out;
    if (kind == "tensor") {
        out << "t";
        for (int f : factor_indices) out << "_" << f;
    } else {
        out << kind << "_" << row << "_" << col;
    }
    return out.str();
}

HermitianBasis gellmann_basis(int dim) {
    require(dim >= 2, ErrorKind::InvalidDimension, "gellmann_basis needs dim >= 2");
    HermitianBasis b;
    b.dim = dim;
    b.factor_dims = {dim};
    const cplx i1(0.0, 1.0);
    for (int r = 0; r < dim; ++r) {
        for (int c = r + 1; c < dim; ++c) {
            ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
            m(r, c) = 1.0;
            m(c, r) = 1.0;
            b.elements.push_back(m);
            b.labels.push_back({"sym", r, c, {}});
        }
    }
    for (int r = 0; r < dim; ++r) {
        for (int c = r + 1; c < dim; ++c) {
            ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
            m(r, c) = -i1;
            m(c, r) = i1;
            b.elements.push_back(m);
            b.labels.push_back({"antisym", r, c, {}});
        }
    }
    for (int l = 1; l < dim; ++l) {
        ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
        double scale = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int k = 0; k < l; ++k) m(k, k) = scale;
        m(l, l) = -l * scale;
        b.elements.push_back(m);
        b.labels.push_back({"diag", l, l, {}});
    }
    b.norms.assign(b.elements.size(), 2.0);
    return b;
}

HermitianBasis tensor_basis(std::span<const HermitianBasis> factors) {
    require(!factors.empty(), ErrorKind::InvalidInput, "tensor_basis needs at least one factor");
    if (factors.size() == 1) {
        return factors[0];
    }
    HermitianBasis out;
    out.dim = 1;
    for (const auto& f : factors) {
        out.dim *= f.dim;
        out.factor_dims.push_back(f.dim);
    }
    const std::size_t nf = factors.size();
    std::size_t total = 1;
    for (const auto& f : factors) total *= f.size() + 1;
    // flat = 0 is the all-identity product and is skipped.
    for (std::size_t flat = 1; flat < total; ++flat) {
        std::vector<int> idx(nf, 0);
        std::size_t rest = flat;
        for (std::size_t k = nf; k-- > 0;) {
            idx[k] = static_cast<int>(rest % (factors[k].size() + 1));
            rest /= factors[k].size() + 1;
        }
        std::vector<ComplexMatrix> parts;
        double norm = 1.0;
        for (std::size_t f = 0; f < nf; ++f) {
            if (idx[f] == 0) {
                parts.push_back(ComplexMatrix::Identity(factors[f].dim, factors[f].dim));
                norm *= factors[f].dim;
            } else {
                parts.push_back(factors[f].elements[idx[f] - 1]);
                norm *= factors[f].norms[idx[f] - 1];
            }
        }
        out.elements.push_back(kron_all(parts));
        out.labels.push_back({"tensor", 0, 0, idx});
        out.norms.push_back(norm);
    }
    return out;
}

DensityMatrix random_density(int dim, std::uint64_t seed) {
    require(dim >= 1, ErrorKind::InvalidDimension, "dimension must be positive");
    std::mt19937_64 rng(seed);
    ComplexMatrix g = gaussian_matrix(dim, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    return DensityMatrix(rho);
}

DensityMatrix random_pure_density(int dim, std::uint64_t seed) {
    require(dim >= 1, ErrorKind::InvalidDimension, "dimension must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector psi(dim);
    for (int i = 0; i < dim; ++i) {
        double re = normal(rng);
        double im = normal(rng);
        psi(i) = cplx(re, im);
    }
    return DensityMatrix::pure(psi);
}

BasisExpansion expand_in_basis(const ComplexMatrix& op, const HermitianBasis& basis) {
    require(op.rows() == basis.dim && op.cols() == basis.dim, ErrorKind::InvalidInput,
            "operator dimension does not match basis");
    require(is_hermitian(op, 1e-9), ErrorKind::InvalidOperator,
            "expand_in_basis needs a Hermitian operator");
    BasisExpansion e;
    e.identity = op.trace().real() / basis.dim;
    e.coeffs.resize(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        // Tr[A B] for Hermitian A, B without forming the product.
        cplx tr = (op.transpose().cwiseProduct(basis.elements[i])).sum();
        e.coeffs(static_cast<Eigen::Index>(i)) = tr.real() / basis.norms[i];
    }
    return e;
}

ComplexMatrix reconstruct(const BasisExpansion& expansion, const HermitianBasis& basis) {
    require(static_cast<std::size_t>(expansion.coeffs.size()) == basis.size(),
            ErrorKind::InvalidInput, "expansion length does not match basis");
    ComplexMatrix out = expansion.identity * ComplexMatrix::Identity(basis.dim, basis.dim);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out += expansion.coeffs(static_cast<Eigen::Index>(i)) * basis.elements[i];
    }
    return out;
}

std::vector<int> support(const HermitianBasis& basis, std::size_t index) {
    require(index < basis.size(), ErrorKind::InvalidInput, "basis index out of range");
    const auto& label = basis.labels[index];
    if (label.kind != "tensor") {
        return {0};
    }
    std::vector<int> out;
    for (std::size_t k = 0; k < label.factor_indices.size(); ++k) {
        if (label.factor_indices[k] != 0) out.push_back(static_cast<int>(k));
    }
    return out;
}

}  // namespace spinwig
