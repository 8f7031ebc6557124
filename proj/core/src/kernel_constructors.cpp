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

#include "spinwig/kernel_constructors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "spinwig/errors.hpp"

namespace spinwig {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

KernelPtr finish(KernelSpec spec, const KernelOverrides& o) {
    spec.forced_c = o.c_delta;
    spec.forced_scales = o.class_scales;
    return build_general_kernel(std::move(spec));
}

/// e^{-i a G} for diagonal G.
ComplexMatrix diagonal_evolution(const ComplexMatrix& g, double a) {
    ComplexMatrix u = ComplexMatrix::Zero(g.rows(), g.cols());
    for (Eigen::Index k = 0; k < g.rows(); ++k) u(k, k) = std::polar(1.0, -a * g(k, k).real());
    return u;
}

RealVector realify(const ComplexVector& z) {
    RealVector x(2 * z.size());
    for (Eigen::Index k = 0; k < z.size(); ++k) {
        x(2 * k) = z(k).real();
        x(2 * k + 1) = z(k).imag();
    }
    return x;
}

std::vector<double> move_on_coset(const ComplexMatrix& u, const std::vector<double>& c) {
    const int p = static_cast<int>(2 * u.rows());
    ComplexVector z = u * sphere_coherent(sphere_point(p, c));
    return sphere_angles(realify(z));
}

SymmetrySampler unitary_sampler(std::vector<int> dims) {
    return [dims](int count, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::vector<Symmetry> out;
        for (int s = 0; s < count; ++s) {
            std::vector<ComplexMatrix> us;
            for (int d : dims) us.push_back(random_unitary(d, rng));
            Symmetry sym;
            sym.unitary = kron_all(us);
            sym.move = [us](const std::vector<double>& c) {
                std::vector<double> out;
                std::size_t offset = 0;
                for (const auto& u : us) {
                    std::size_t n = static_cast<std::size_t>(2 * u.rows() - 1);
                    std::vector<double> part(c.begin() + static_cast<std::ptrdiff_t>(offset),
                                             c.begin() + static_cast<std::ptrdiff_t>(offset + n));
                    auto moved = move_on_coset(u, part);
                    out.insert(out.end(), moved.begin(), moved.end());
                    offset += n;
                }
                return out;
            };
            out.push_back(std::move(sym));
        }
        return out;
    };
}

/// Shifts coordinate `coord` by a uniform angle; unitary e^{-i a G}.
SymmetrySampler shift_sampler(ComplexMatrix g, int coord) {
    return [g, coord](int count, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> angle(0.0, kTwoPi);
        std::vector<Symmetry> out;
        for (int s = 0; s < count; ++s) {
            double a = angle(rng);
            Symmetry sym;
            sym.unitary = diagonal_evolution(g, a);
            sym.move = [a, coord](std::vector<double> c) {
                c[coord] += a;
                return c;
            };
            out.push_back(std::move(sym));
        }
        return out;
    };
}

std::vector<int> all_indices(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
    return v;
}

json table_extras(const CoefficientTable& t) {
    return {{"harmonics", t.harmonics.size()}, {"operators", t.entries.rows()}};
}

ComplexMatrix pauli(char c) {
    ComplexMatrix m(2, 2);
    switch (c) {
        case 'x': m << 0, 1, 1, 0; break;
        case 'y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
        case 'z': m << 1, 0, 0, -1; break;
        default: m = ComplexMatrix::Identity(2, 2);
    }
    return m;
}

KernelPtr parity_impl(int dim, int degree, const KernelOverrides& o) {
    require(dim >= 2, ErrorKind::InvalidDimension, "displaced parity needs dim >= 2");
    auto fam = full_coset_family(dim, degree);
    auto basis = gellmann_basis(dim);
    auto harm = build_harmonics(fam.grid.factor(0), 2);
    auto table = coefficient_table(displacement_operators(fam, harm), basis, {all_indices(basis.size())});

    KernelSpec spec;
    spec.name = "parity";
    spec.params = {{"dim", dim}, {"degree", degree}};
    spec.dim = dim;
    spec.factor_dims = {dim};
    spec.coord_space = fam.coord_space;
    for (int k = 1; k < 2 * dim; ++k) spec.coord_names.push_back("a" + std::to_string(k));
    spec.grid = fam.grid;
    spec.symbols = direct_symbols(fam, basis);
    spec.basis = basis;
    spec.classes = {all_indices(basis.size())};
    spec.table = table;
    spec.symmetries = unitary_sampler({dim});
    ParityCoefficients pc = parity_coefficients(dim);
    spec.extras = {{"normalization_N", parity_normalization(dim)},
                   {"closed_form_A", pc.a},
                   {"closed_form_B", pc.b},
                   {"table", table_extras(table)}};
    auto k = finish(std::move(spec), o);
    return k;
}

KernelPtr brif_impl(int dim, int n_max, const KernelOverrides& o) {
    require(dim >= 2, ErrorKind::InvalidDimension, "Brif-Mann kernel needs dim >= 2");
    require(n_max >= 0, ErrorKind::InvalidInput, "n_max must be nonnegative");
    if (n_max == 1) {
        fail(ErrorKind::BandwidthError,
             "coherent-state symbols on S^" + std::to_string(2 * dim - 1) +
                 " have degree 2; n_max = 1 truncates them (use n_max >= 2, or 0 for normalization only)");
    }
    auto fam = full_coset_family(dim, std::max(4, 2 * n_max));
    auto basis = gellmann_basis(dim);
    ProductHarmonics harm({build_harmonics(fam.grid.factor(0), n_max)});
    auto ops = displacement_operators(fam, harm);
    auto table = coefficient_table(ops, basis, {all_indices(basis.size())});

    KernelSpec spec;
    spec.name = "brif";
    spec.params = {{"dim", dim}, {"n_max", n_max}};
    spec.dim = dim;
    spec.factor_dims = {dim};
    spec.coord_space = fam.coord_space;
    for (int k = 1; k < 2 * dim; ++k) spec.coord_names.push_back("a" + std::to_string(k));
    spec.grid = fam.grid;
    spec.symbols = expansion_symbols(harm, table.entries);
    spec.basis = basis;
    spec.classes = {all_indices(basis.size())};
    spec.table = table;
    spec.symmetries = unitary_sampler({dim});
    spec.extras = {{"table", table_extras(table)}};
    return finish(std::move(spec), o);
}

KernelPtr tensor_impl(const std::vector<int>& dims, const KernelOverrides& o) {
    require(!dims.empty(), ErrorKind::InvalidInput, "tensor kernel needs at least one factor");
    if (dims.size() == 1) return parity_impl(dims[0], 4, o);
    int total = 1;
    std::vector<HermitianBasis> factor_bases;
    std::vector<SymbolPtr> factor_symbols;
    std::vector<ProductGrid> factor_grids;
    std::vector<SphereGrid> all_grids;
    std::vector<CoefficientTable> factor_tables;
    std::vector<RealVector> identity_rows;
    std::vector<HarmonicBasisTable> harm_factors;
    std::string space;
    std::vector<std::string> names;
    for (std::size_t f = 0; f < dims.size(); ++f) {
        int d = dims[f];
        require(d >= 2, ErrorKind::InvalidDimension, "tensor factors need dim >= 2");
        total *= d;
        auto fam = full_coset_family(d);
        auto basis = gellmann_basis(d);
        auto harm = build_harmonics(fam.grid.factor(0), 2);
        auto ops = displacement_operators(fam, harm);
        factor_tables.push_back(coefficient_table(ops, basis, {all_indices(basis.size())}));
        identity_rows.push_back(identity_row(ops, d));
        harm_factors.push_back(harm);
        factor_symbols.push_back(direct_symbols(fam, basis));
        factor_grids.push_back(fam.grid);
        for (const auto& g : fam.grid.factors()) all_grids.push_back(g);
        factor_bases.push_back(basis);
        space += (f ? " x " : "") + fam.coord_space;
        for (int k = 1; k < 2 * d; ++k) names.push_back("f" + std::to_string(f + 1) + "_a" + std::to_string(k));
    }
    require(total <= 16, ErrorKind::InvalidDimension, "tensor kernel limited to total dim 16");
    HermitianBasis basis = tensor_basis(factor_bases);

    // Support-pattern classes.
    std::map<std::vector<int>, std::vector<int>> by_support;
    for (std::size_t i = 0; i < basis.size(); ++i) by_support[support(basis, i)].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> classes;
    for (auto& [s, members] : by_support) classes.push_back(members);

    // Product coefficient table from factor tables.
    ProductHarmonics ph(harm_factors);
    CoefficientTable table;
    table.harmonics = ph.index();
    table.entries.resize(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(ph.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& slots = basis.labels[i].factor_indices;
        for (std::size_t h = 0; h < ph.size(); ++h) {
            const auto& comp = ph.components(h);
            double v = 1.0;
            for (std::size_t f = 0; f < dims.size(); ++f) {
                v *= slots[f] == 0 ? identity_rows[f](comp[f])
                                   : factor_tables[f].entries(slots[f] - 1, comp[f]);
            }
            table.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(h)) = v;
        }
    }
    table.classes = classes;

    KernelSpec spec;
    spec.name = "tensor";
    spec.params = {{"dims", dims}};
    spec.dim = total;
    spec.factor_dims = dims;
    spec.coord_space = space;
    spec.coord_names = names;
    spec.grid = ProductGrid(all_grids);
    spec.symbols = product_symbols(factor_symbols, factor_grids, basis);
    spec.basis = basis;
    spec.classes = classes;
    spec.table = table;
    spec.symmetries = unitary_sampler(dims);
    spec.extras = {{"table", table_extras(table)}};
    return finish(std::move(spec), o);
}

KernelPtr dephasing_impl(int n_theta, int n_eta, const KernelOverrides& o) {
    require(n_theta >= 5 && n_eta >= 7, ErrorKind::InvalidInput,
            "dephasing kernel needs n_theta >= 5 and n_eta >= 7");
    auto fam = dephasing_family(n_theta);
    auto basis = gellmann_basis(2);  // sigma_x, sigma_y, sigma_z
    auto harm = build_harmonics(fam.grid.factor(0), 2);
    std::vector<std::vector<int>> classes = {{0, 1}, {2}};
    auto table = coefficient_table(displacement_operators(fam, harm), basis, classes);
    SphereGrid eta = make_grid(2, n_eta);
    std::vector<Residual> res = {{Residual::Kind::Sin, 3}, {Residual::Kind::Sin, 3}, {Residual::Kind::Cos, 1}};

    KernelSpec spec;
    spec.name = "dephasing";
    spec.params = {{"n_theta", n_theta}, {"n_eta", n_eta}};
    spec.dim = 2;
    spec.factor_dims = {2};
    spec.coord_space = "(theta, eta) in [0, 2pi)^2";
    spec.coord_names = {"theta", "eta"};
    spec.grid = ProductGrid({fam.grid.factor(0), eta});
    spec.symbols = effective_symbols(direct_symbols(fam, basis), fam.grid.size(), {false, false, true}, res, eta);
    spec.basis = basis;
    spec.classes = classes;
    spec.table = table;
    spec.symmetries = shift_sampler(pauli('z'), 0);
    spec.shift_generator = pauli('z');
    spec.shift_coord = 0;
    json labels = json::array();
    for (std::size_t i = 0; i < res.size(); ++i) labels.push_back({{"op", basis.labels[i].str()}, {"residual", res[i].str()}});
    spec.extras = {{"residuals", labels}, {"table", table_extras(table)}};
    return finish(std::move(spec), o);
}

KernelPtr zz_impl(int n_theta, int n_eta, const KernelOverrides& o) {
    require(n_theta >= 5 && n_eta >= 21, ErrorKind::InvalidInput, "zz kernel needs n_theta >= 5 and n_eta >= 21");
    auto fam = zz_family(n_theta);
    HermitianBasis basis = zz_operator_basis();
    auto idx = effective_kernel_indices({2, 2}, {{1, 0, 0, 0}, {1, 0, 0, 1}, {1, 1, 0, 0}, {1, 1, 0, 1}});

    std::vector<bool> invariant;
    std::vector<Residual> res;
    std::vector<std::vector<int>> classes;
    std::map<std::array<int, 4>, std::vector<int>> c_pairs;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& l = basis.labels[i];
        if (l.kind == "b") {
            invariant.push_back(true);
            res.push_back({Residual::Kind::Sin, idx.omega[l.row][l.col - 1]});
            classes.push_back({static_cast<int>(i)});
        } else if (l.kind == "c1" || l.kind == "c2") {
            invariant.push_back(false);
            std::array<int, 4> t = {1, l.row, 0, l.col};
            res.push_back({Residual::Kind::Sin, idx.Omega.at(t)});
            c_pairs[t].push_back(static_cast<int>(i));
        } else {
            invariant.push_back(true);
            res.push_back({Residual::Kind::Cos, 1});
            classes.push_back({static_cast<int>(i)});
        }
    }
    for (auto& [t, members] : c_pairs) classes.push_back(members);

    auto harm = build_harmonics(fam.grid.factor(0), 2);
    auto table = coefficient_table(displacement_operators(fam, harm), basis, classes);
    SphereGrid eta = make_grid(2, n_eta);
    ComplexMatrix zz = kron(pauli('z'), pauli('z'));

    KernelSpec spec;
    spec.name = "zz";
    spec.params = {{"n_theta", n_theta}, {"n_eta", n_eta}};
    spec.dim = 4;
    spec.factor_dims = {2, 2};
    spec.coord_space = "(theta, eta) in [0, 2pi)^2";
    spec.coord_names = {"theta", "eta"};
    spec.grid = ProductGrid({fam.grid.factor(0), eta});
    spec.symbols = effective_symbols(direct_symbols(fam, basis), fam.grid.size(), invariant, res, eta);
    spec.basis = basis;
    spec.classes = classes;
    spec.table = table;
    spec.symmetries = shift_sampler(zz, 0);
    spec.shift_generator = zz;
    spec.shift_coord = 0;
    json labels = json::array();
    for (std::size_t i = 0; i < res.size(); ++i) labels.push_back({{"op", basis.labels[i].str()}, {"residual", res[i].str()}});
    spec.extras = {{"residuals", labels}, {"table", table_extras(table)}};
    return finish(std::move(spec), o);
}

KernelPtr exchange_impl(int d1, int d2, const KernelOverrides& o) {
    auto dims_j = block_dims(d1, d2);
    const int dim = (d1 + 1) * (d2 + 1);
    require(dim <= 16, ErrorKind::InvalidDimension, "exchange kernel limited to (d1+1)(d2+1) <= 16");
    const int dmax = std::max(d1, d2);
    const int n_phi = std::max(8, 4 * dmax + 2);
    int d_block = *std::max_element(dims_j.begin(), dims_j.end());
    const int n_theta = 12 + 4 * d_block;
    auto fam = exchange_family(d1, d2, n_phi, n_theta, ChargePhase::Include);

    ComplexMatrix perm = charge_permutation(d1, d2);
    HermitianBasis charge = gellmann_basis(dim);
    HermitianBasis basis = charge;
    basis.factor_dims = {d1 + 1, d2 + 1};
    for (auto& e : basis.elements) e = perm * e * perm.adjoint();

    // Transition pairs get their own class and frequency; diagonals get cos(l eta).
    std::map<std::pair<int, int>, std::vector<int>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& l = basis.labels[i];
        if (l.kind != "diag") pairs[{l.row, l.col}].push_back(static_cast<int>(i));
    }
    std::vector<Residual> res(basis.size());
    std::vector<bool> invariant(basis.size(), false);
    std::vector<std::vector<int>> classes;
    int omega = 0;
    for (auto& [rc, members] : pairs) {
        ++omega;
        for (int i : members) res[i] = {Residual::Kind::Sin, omega};
        classes.push_back(members);
    }
    int max_cos = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis.labels[i].kind == "diag") {
            res[i] = {Residual::Kind::Cos, basis.labels[i].row};
            invariant[i] = true;
            max_cos = std::max(max_cos, basis.labels[i].row);
            classes.push_back({static_cast<int>(i)});
        }
    }
    const int n_eta = std::max(16, 2 * std::max(omega, max_cos) + 2);
    SphereGrid eta = make_grid(2, n_eta);

    std::vector<HarmonicBasisTable> hf = {build_harmonics(fam.grid.factor(0), dmax),
                                          build_harmonics(fam.grid.factor(1), dmax),
                                          build_harmonics(fam.grid.factor(2), 2)};
    ProductHarmonics ph(hf);
    auto table = coefficient_table(displacement_operators(fam, ph), basis, classes);

    // Local number operators in the product basis.
    ComplexMatrix n1 = ComplexMatrix::Zero(dim, dim), n2 = ComplexMatrix::Zero(dim, dim);
    for (int a = 0; a <= d1; ++a) {
        for (int b = 0; b <= d2; ++b) {
            n1(a * (d2 + 1) + b, a * (d2 + 1) + b) = a;
            n2(a * (d2 + 1) + b, a * (d2 + 1) + b) = b;
        }
    }

    KernelSpec spec;
    spec.name = "exchange";
    spec.params = {{"d1", d1}, {"d2", d2}};
    spec.dim = dim;
    spec.factor_dims = {d1 + 1, d2 + 1};
    spec.coord_space = fam.coord_space + ", eta in [0, 2pi)";
    spec.coord_names = {"phi1", "phi2", "theta", "eta"};
    spec.grid = ProductGrid({fam.grid.factor(0), fam.grid.factor(1), fam.grid.factor(2), eta});
    spec.symbols = effective_symbols(direct_symbols(fam, basis), fam.grid.size(), invariant, res, eta);
    spec.basis = basis;
    spec.classes = classes;
    spec.table = table;
    spec.symmetries = [n1, n2](int count, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> angle(0.0, kTwoPi);
        std::vector<Symmetry> out;
        for (int s = 0; s < count; ++s) {
            double a1 = angle(rng), a2 = angle(rng);
            Symmetry sym;
            // |xi(phi + a)> = e^{i (a1 N1 + a2 N2)} |xi(phi)>
            sym.unitary = diagonal_evolution(-(a1 * n1 + a2 * n2), 1.0);
            sym.move = [a1, a2](std::vector<double> c) {
                c[0] += a1;
                c[1] += a2;
                return c;
            };
            out.push_back(std::move(sym));
        }
        return out;
    };
    json labels = json::array();
    for (std::size_t i = 0; i < res.size(); ++i) labels.push_back({{"op", basis.labels[i].str()}, {"residual", res[i].str()}});
    json charge_json = json::array();
    for (const auto& s : charge_basis(d1, d2)) {
        charge_json.push_back({{"J", s.J}, {"m", s.m}, {"a", s.a}, {"b", s.b}, {"product_index", s.product_index}});
    }
    spec.extras = {{"block_dims", dims_j},
                   {"charge_basis", charge_json},
                   {"residuals", labels},
                   {"grid_points", {{"phi", n_phi}, {"theta", n_theta}, {"eta", n_eta}}},
                   {"table", table_extras(table)}};
    return finish(std::move(spec), o);
}

}  // namespace

double parity_normalization(int dim) {
    require(dim >= 2, ErrorKind::InvalidDimension, "parity normalization needs dim >= 2");
    double n = dim;
    return std::sqrt((n + 1) * n * (n - 1) / 2);
}

ParityCoefficients parity_coefficients(int dim) {
    double c = std::sqrt(2.0 / (dim * (dim - 1.0)));
    double kappa = parity_normalization(dim) * c;
    return {(1.0 - kappa) / dim, -kappa};
}

ComplexMatrix parity_kernel_closed_form(const ComplexVector& xi) {
    const int dim = static_cast<int>(xi.size());
    auto basis = gellmann_basis(dim);
    ComplexMatrix pi = ComplexMatrix::Identity(dim, dim) - parity_normalization(dim) * basis.elements.back();
    // Unitary whose last column is xi.
    ComplexMatrix seed = ComplexMatrix::Identity(dim, dim);
    seed.col(0) = xi;
    Eigen::HouseholderQR<ComplexMatrix> qr(seed);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix u(dim, dim);
    for (int k = 0; k < dim; ++k) u.col(k) = q.col((k + 1) % dim);
    return u * pi * u.adjoint() / static_cast<double>(dim);
}

KernelPtr displaced_parity_kernel(int dim, int degree) { return parity_impl(dim, degree, {}); }
KernelPtr brif_mann_kernel(int dim, int n_max) { return brif_impl(dim, n_max, {}); }
KernelPtr tensor_product_kernel(const std::vector<int>& dims) { return tensor_impl(dims, {}); }
KernelPtr dephasing_kernel(int n_theta, int n_eta) { return dephasing_impl(n_theta, n_eta, {}); }
KernelPtr zz_kernel(int n_theta, int n_eta) { return zz_impl(n_theta, n_eta, {}); }
KernelPtr exchange_kernel(int d1, int d2) { return exchange_impl(d1, d2, {}); }

KernelPtr build_kernel(const std::string& name, const json& params, const KernelOverrides& o) {
    try {
        if (name == "parity") return parity_impl(params.at("dim"), params.value("degree", 4), o);
        if (name == "brif") return brif_impl(params.at("dim"), params.value("n_max", 2), o);
        if (name == "tensor") return tensor_impl(params.at("dims").get<std::vector<int>>(), o);
        if (name == "dephasing") return dephasing_impl(params.value("n_theta", 16), params.value("n_eta", 16), o);
        if (name == "zz") return zz_impl(params.value("n_theta", 16), params.value("n_eta", 24), o);
        if (name == "exchange") return exchange_impl(params.at("d1"), params.at("d2"), o);
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidInput, "bad parameters for kernel " + name + ": " + e.what());
    }
    fail(ErrorKind::InvalidInput, "unknown kernel constructor '" + name + "'");
}

HermitianBasis zz_operator_basis() {
    ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    ComplexMatrix zz = kron(pauli('z'), pauli('z'));
    ComplexMatrix I4 = ComplexMatrix::Identity(4, 4);
    std::vector<ComplexMatrix> locals = {kron(pauli('z'), id), kron(pauli('x'), pauli('x')),
                                         kron(pauli('y'), pauli('x'))};
    HermitianBasis b;
    b.dim = 4;
    b.factor_dims = {2, 2};
    auto add = [&](ComplexMatrix m, const std::string& kind, int row, int col) {
        m /= std::sqrt((m * m).trace().real() / 2.0);
        b.elements.push_back(m);
        b.labels.push_back({kind, row, col, {}});
        b.norms.push_back(2.0);
    };
    for (int k = 0; k < 2; ++k) {
        ComplexMatrix pa = (I4 + (k == 0 ? 1.0 : -1.0) * zz) / 2.0;
        for (int j = 0; j < 3; ++j) add(pa * locals[j], "b", k, j + 1);
    }
    // ZZ = -1 states |01>, |10> carry Z1 labels 0, 1; ZZ = +1 states |00>, |11>.
    const int minus[2] = {1, 2};
    const int plus[2] = {0, 3};
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            ComplexMatrix t = ComplexMatrix::Zero(4, 4);
            t(minus[m], plus[n]) = 1.0;
            add(t + t.adjoint(), "c1", m, n);
            add(cplx(0, 1) * (t - t.adjoint()), "c2", m, n);
        }
    }
    add(zz, "d", 2, 0);
    return b;
}

EffectiveIndices effective_kernel_indices(const std::vector<int>& block_dims_b,
                                          const std::vector<std::array<int, 4>>& transitions) {
    EffectiveIndices out;
    int running = 0;
    for (int d : block_dims_b) {
        require(d >= 1, ErrorKind::InvalidDimension, "block dimensions must be positive");
        std::vector<int> row;
        for (int j = 1; j <= d * d - 1; ++j) row.push_back(++running);
        out.omega.push_back(row);
    }
    std::set<std::array<int, 4>> sorted(transitions.begin(), transitions.end());
    int pos = 0;
    for (const auto& t : sorted) out.Omega[t] = running + (++pos);
    return out;
}

}  // namespace spinwig
