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

#include "spinwig/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "spinwig/errors.hpp"
#include "spinwig/matrix_io.hpp"

namespace spinwig {

namespace {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Exponent vectors of all degree-n monomials in p variables, x_1 power
// descending.
void monomials_of_degree(int p, int n, std::vector<int>& cur, int var,
                         std::vector<std::vector<int>>& out) {
    if (var == p - 1) {
        cur[var] = n;
        out.push_back(cur);
        return;
    }
    for (int e = n; e >= 0; --e) {
        cur[var] = e;
        monomials_of_degree(p, n - e, cur, var + 1, out);
    }
    cur[var] = 0;
}

double monomial(const std::vector<int>& e, const RealVector& x) {
    double v = 1.0;
    for (std::size_t k = 0; k < e.size(); ++k) {
        for (int r = 0; r < e[k]; ++r) v *= x(static_cast<Eigen::Index>(k));
    }
    return v;
}

}  // namespace

int harmonic_count(int p, int n) {
    require(p >= 2, ErrorKind::InvalidDimension, "harmonic_count needs p >= 2");
    require(n >= 0, ErrorKind::InvalidInput, "harmonic degree must be nonnegative");
    if (n == 0) return 1;
    return static_cast<int>((2LL * n + p - 2) * binomial(n + p - 3, n - 1) / n);
}

int HarmonicBasisTable::position(int n, int j) const {
    for (std::size_t k = 0; k < index_.size(); ++k) {
        if (index_[k].n == n && index_[k].j == j) return static_cast<int>(k);
    }
    return -1;
}

RealVector HarmonicBasisTable::evaluate_point(const RealVector& x) const {
    require(x.size() == grid_.p, ErrorKind::InvalidCoordinates, "point has wrong dimension");
    RealVector mono(static_cast<Eigen::Index>(exponents_.size()));
    for (std::size_t m = 0; m < exponents_.size(); ++m) {
        mono(static_cast<Eigen::Index>(m)) = monomial(exponents_[m], x);
    }
    return monomial_coeffs_ * mono;
}

RealVector HarmonicBasisTable::evaluate(const std::vector<double>& angles) const {
    if (grid_.kind != "sphere") {
        require(angles.size() == 1, ErrorKind::InvalidCoordinates, "arc point needs one angle");
        RealVector x(2);
        x << std::cos(angles[0]), std::sin(angles[0]);
        return evaluate_point(x);
    }
    return evaluate_point(sphere_point(grid_.p, angles));
}

RealMatrix HarmonicBasisTable::gram() const {
    RealVector w = Eigen::Map<const RealVector>(grid_.weights.data(),
                                                static_cast<Eigen::Index>(grid_.weights.size()));
    return values_.transpose() * w.asDiagonal() * values_;
}

HarmonicBasisTable build_harmonics(const SphereGrid& grid, int n_max) {
    require(n_max >= 0, ErrorKind::InvalidInput, "n_max must be nonnegative");
    require(grid.exactness >= 2 * n_max, ErrorKind::AliasingRisk,
            "grid exactness " + std::to_string(grid.exactness) + " is below 2*n_max = " +
                std::to_string(2 * n_max));
    const int p = grid.p;
    const auto nodes = static_cast<Eigen::Index>(grid.size());

    HarmonicBasisTable t;
    t.grid_ = grid;
    t.n_max_ = n_max;
    std::vector<int> cur(p, 0);
    std::vector<int> degree_start;
    for (int n = 0; n <= n_max; ++n) {
        degree_start.push_back(static_cast<int>(t.exponents_.size()));
        monomials_of_degree(p, n, cur, 0, t.exponents_);
    }
    const auto nmono = static_cast<Eigen::Index>(t.exponents_.size());

    RealVector sw(nodes);
    for (Eigen::Index k = 0; k < nodes; ++k) sw(k) = std::sqrt(grid.weights[k]);

    // Accepted functions as weighted node vectors (columns) and as monomial
    // coefficient rows.
    std::vector<RealVector> vecs;
    std::vector<RealVector> coefs;
    for (int n = 0; n <= n_max; ++n) {
        int begin = degree_start[n];
        int end = n == n_max ? static_cast<int>(nmono) : degree_start[n + 1];
        int accepted = 0;
        for (int m = begin; m < end; ++m) {
            RealVector v(nodes);
            for (Eigen::Index k = 0; k < nodes; ++k) {
                RealVector x = grid.points.row(k).transpose();
                v(k) = sw(k) * monomial(t.exponents_[m], x);
            }
            RealVector c = RealVector::Zero(nmono);
            c(m) = 1.0;
            double start_norm = v.norm();
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t f = 0; f < vecs.size(); ++f) {
                    double proj = vecs[f].dot(v);
                    v -= proj * vecs[f];
                    c -= proj * coefs[f];
                }
            }
            double nrm = v.norm();
            if (nrm <= 1e-8 * std::max(start_norm, 1e-300)) continue;
            vecs.push_back(v / nrm);
            coefs.push_back(c / nrm);
            ++accepted;
            t.index_.push_back({n, accepted});
        }
        int expected = harmonic_count(p, n);
        require(accepted == expected, ErrorKind::DegenerateGrid,
                "degree " + std::to_string(n) + " produced " + std::to_string(accepted) +
                    " harmonics, expected " + std::to_string(expected));
    }

    const auto nf = static_cast<Eigen::Index>(vecs.size());
    t.values_.resize(nodes, nf);
    t.monomial_coeffs_.resize(nf, nmono);
    for (Eigen::Index f = 0; f < nf; ++f) {
        t.monomial_coeffs_.row(f) = coefs[f].transpose();
    }
    // Node values from the polynomial form, so on- and off-grid evaluation agree.
    for (Eigen::Index k = 0; k < nodes; ++k) {
        t.values_.row(k) = t.evaluate_point(grid.points.row(k).transpose()).transpose();
    }
    // Cancellation in the monomial form can cost a few digits (the quarter
    // arc is the worst case); one triangular correction restores the Gram.
    RealMatrix gram = t.gram();
    Eigen::LLT<RealMatrix> llt(gram);
    if (llt.info() == Eigen::Success) {
        RealMatrix linv = llt.matrixL().solve(RealMatrix::Identity(nf, nf));
        t.monomial_coeffs_ = linv * t.monomial_coeffs_;
        t.values_ = t.values_ * linv.transpose();
    }
    return t;
}

double HarmonicExpansion::get(int n, int j) const {
    for (std::size_t k = 0; k < index.size(); ++k) {
        if (index[k].n == n && index[k].j == j) return coeffs(static_cast<Eigen::Index>(k));
    }
    return 0.0;
}

RealVector HarmonicExpansion::degree(int n) const {
    std::vector<double> out;
    for (std::size_t k = 0; k < index.size(); ++k) {
        if (index[k].n == n) out.push_back(coeffs(static_cast<Eigen::Index>(k)));
    }
    return Eigen::Map<RealVector>(out.data(), static_cast<Eigen::Index>(out.size()));
}

int HarmonicExpansion::bandwidth(double tol) const {
    int bw = 0;
    for (std::size_t k = 0; k < index.size(); ++k) {
        if (std::abs(coeffs(static_cast<Eigen::Index>(k))) > tol) bw = std::max(bw, index[k].n);
    }
    return bw;
}

HarmonicExpansion zero_expansion(const HarmonicBasisTable& table) {
    HarmonicExpansion e;
    e.p = table.p();
    e.n_max = table.n_max();
    e.index = table.index();
    e.coeffs = RealVector::Zero(static_cast<Eigen::Index>(table.size()));
    return e;
}

HarmonicExpansion expand(const RealVector& samples, const HarmonicBasisTable& table) {
    require(samples.size() == static_cast<Eigen::Index>(table.grid().size()),
            ErrorKind::InvalidInput, "samples are not aligned with the grid");
    RealVector ws(samples.size());
    for (Eigen::Index k = 0; k < samples.size(); ++k) ws(k) = table.grid().weights[k] * samples(k);
    HarmonicExpansion e = zero_expansion(table);
    e.coeffs = table.values().transpose() * ws;
    return e;
}

namespace {

RealVector aligned_coeffs(const HarmonicExpansion& expansion, const HarmonicBasisTable& table) {
    require(expansion.p == table.p(), ErrorKind::InvalidInput, "expansion lives on another sphere");
    require(expansion.n_max <= table.n_max(), ErrorKind::InvalidInput,
            "expansion bandwidth exceeds the table");
    RealVector c = RealVector::Zero(static_cast<Eigen::Index>(table.size()));
    for (std::size_t k = 0; k < expansion.index.size(); ++k) {
        int pos = table.position(expansion.index[k].n, expansion.index[k].j);
        require(pos >= 0, ErrorKind::InvalidInput, "expansion index missing from table");
        c(pos) = expansion.coeffs(static_cast<Eigen::Index>(k));
    }
    return c;
}

}  // namespace

RealVector synthesize(const HarmonicExpansion& expansion, const HarmonicBasisTable& table) {
    return table.values() * aligned_coeffs(expansion, table);
}

double synthesize_at(const HarmonicExpansion& expansion, const HarmonicBasisTable& table,
                     const RealVector& x) {
    return table.evaluate_point(x).dot(aligned_coeffs(expansion, table));
}

double gegenbauer(int p, int n, double t) {
    require(p >= 2, ErrorKind::InvalidDimension, "gegenbauer needs p >= 2");
    require(n >= 0, ErrorKind::InvalidInput, "degree must be nonnegative");
    require(std::abs(t) <= 1.0 + 1e-14, ErrorKind::DomainError, "gegenbauer argument outside [-1,1]");
    t = std::clamp(t, -1.0, 1.0);
    if (n == 0) return 1.0;
    if (p == 2) return std::cos(n * std::acos(t));
    const double lam = (p - 2) / 2.0;
    double c0 = 1.0;
    double c1 = 2.0 * lam * t;
    double one0 = 1.0;
    double one1 = 2.0 * lam;
    for (int k = 2; k <= n; ++k) {
        double c2 = (2.0 * t * (k + lam - 1) * c1 - (k + 2 * lam - 2) * c0) / k;
        double o2 = (2.0 * (k + lam - 1) * one1 - (k + 2 * lam - 2) * one0) / k;
        c0 = c1;
        c1 = c2;
        one0 = one1;
        one1 = o2;
    }
    return c1 / one1;
}

std::string expansion_to_csv(const HarmonicExpansion& expansion) {
    std::ostringstream out;
    out << "n,j,value\n";
    for (std::size_t k = 0; k < expansion.index.size(); ++k) {
        out << expansion.index[k].n << "," << expansion.index[k].j << ","
            << format_double(expansion.coeffs(static_cast<Eigen::Index>(k))) << "\n";
    }
    return out.str();
}

}  // namespace spinwig

namespace spinwig {

ProductHarmonics::ProductHarmonics(std::vector<HarmonicBasisTable> factors)
    : factors_(std::move(factors)) {
    require(!factors_.empty(), ErrorKind::InvalidInput, "product harmonics need a factor");
    int top = 0;
    for (const auto& f : factors_) top += f.n_max();
    std::size_t total = 1;
    for (const auto& f : factors_) total *= f.size();
    const std::size_t nf = factors_.size();
    for (int n = 0; n <= top; ++n) {
        int j = 0;
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::vector<int> comp(nf);
            std::size_t rest = flat;
            int deg = 0;
            for (std::size_t k = nf; k-- > 0;) {
                comp[k] = static_cast<int>(rest % factors_[k].size());
                rest /= factors_[k].size();
                deg += factors_[k].index()[comp[k]].n;
            }
            if (deg != n) continue;
            index_.push_back({n, ++j});
            components_.push_back(std::move(comp));
        }
    }
}

ProductGrid ProductHarmonics::grid() const {
    std::vector<SphereGrid> g;
    for (const auto& f : factors_) g.push_back(f.grid());
    return ProductGrid(std::move(g));
}

RealVector ProductHarmonics::values_at(const std::vector<std::size_t>& factor_nodes) const {
    RealVector out(static_cast<Eigen::Index>(size()));
    for (std::size_t f = 0; f < size(); ++f) {
        double v = 1.0;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            v *= factors_[k].values()(static_cast<Eigen::Index>(factor_nodes[k]), components_[f][k]);
        }
        out(static_cast<Eigen::Index>(f)) = v;
    }
    return out;
}

RealVector ProductHarmonics::evaluate(const std::vector<double>& coords) const {
    std::vector<RealVector> per;
    std::size_t offset = 0;
    for (const auto& t : factors_) {
        auto count = static_cast<std::size_t>(t.grid().angle_count());
        require(offset + count <= coords.size(), ErrorKind::InvalidCoordinates,
                "too few coordinates for product harmonics");
        std::vector<double> part(coords.begin() + offset, coords.begin() + offset + count);
        per.push_back(t.evaluate(part));
        offset += count;
    }
    require(offset == coords.size(), ErrorKind::InvalidCoordinates,
            "too many coordinates for product harmonics");
    RealVector out(static_cast<Eigen::Index>(size()));
    for (std::size_t f = 0; f < size(); ++f) {
        double v = 1.0;
        for (std::size_t k = 0; k < factors_.size(); ++k) v *= per[k](components_[f][k]);
        out(static_cast<Eigen::Index>(f)) = v;
    }
    return out;
}

}  // namespace spinwig
