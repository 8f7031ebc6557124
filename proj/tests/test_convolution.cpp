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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "spinwig/convolution.hpp"
#include "spinwig/errors.hpp"

using namespace spinwig;

namespace {

HarmonicExpansion random_expansion(const HarmonicBasisTable& t, int n_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    auto e = zero_expansion(t);
    e.n_max = n_max;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t.index()[k].n <= n_max) e.coeffs(k) = normal(rng);
    }
    return e;
}

// Expansion of the truncated delta at the reference point.
HarmonicExpansion delta_at_pole(const HarmonicBasisTable& t) {
    RealVector pole = RealVector::Zero(t.p());
    pole(0) = 1.0;
    auto e = zero_expansion(t);
    e.coeffs = t.evaluate_point(pole);
    return e;
}

double max_abs_diff(const HarmonicExpansion& a, const HarmonicExpansion& b) {
    return (a.coeffs - b.coeffs).cwiseAbs().maxCoeff();
}

// Circle function from coefficients, evaluated with explicit trig formulas.
double circle_eval(const HarmonicExpansion& e, double phi) {
    double v = e.get(0, 1) / std::sqrt(2 * std::numbers::pi);
    for (int n = 1; n <= e.n_max; ++n) {
        v += (e.get(n, 1) * std::cos(n * phi) + e.get(n, 2) * std::sin(n * phi)) / std::sqrt(std::numbers::pi);
    }
    return v;
}

}  // namespace

TEST(Convolve, CircleDeltaIsIdentity) {
    auto t = build_harmonics(make_grid(2, 16), 5);
    auto g = random_expansion(t, 5, 1);
    auto out = convolve(delta_at_pole(t), g, t, circle_shifts(16));
    EXPECT_LT(max_abs_diff(out, g), 1e-12);
}

TEST(Convolve, SphereDeltaIsIdentity) {
    auto t = build_harmonics(make_grid(3, 8), 3);
    auto g = random_expansion(t, 3, 2);
    auto out = convolve(delta_at_pole(t), g, t, euler_rotations(8, 5, 8));
    EXPECT_LT(max_abs_diff(out, g), 1e-10);
}

TEST(Convolve, BandwidthIsMinimum) {
    auto t = build_harmonics(make_grid(3, 8), 3);
    auto f = random_expansion(t, 1, 3);
    auto g = random_expansion(t, 3, 4);
    auto out = convolve(f, g, t, euler_rotations(8, 5, 8));
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t.index()[k].n > 1) EXPECT_LT(std::abs(out.coeffs(k)), 1e-9);
    }
    EXPECT_GT(out.coeffs.cwiseAbs().maxCoeff(), 1e-3);
}

TEST(Convolve, CircleMatchesDoubleQuadrature) {
    auto t = build_harmonics(make_grid(2, 16), 4);
    auto f = random_expansion(t, 4, 5);
    auto g = random_expansion(t, 3, 6);
    auto out = convolve(f, g, t, circle_shifts(16));
    // h(x) = Integral f(x - s) g(s) ds by a fine independent rule.
    const int fine = 400;
    for (double x : {0.0, 0.7, 2.9, 5.1}) {
        double acc = 0.0;
        for (int k = 0; k < fine; ++k) {
            double s = 2 * std::numbers::pi * k / fine;
            acc += circle_eval(f, x - s) * circle_eval(g, s) * 2 * std::numbers::pi / fine;
        }
        EXPECT_NEAR(circle_eval(out, x), acc, 1e-8);
    }
}

TEST(Convolve, DegreesAreIndependent) {
    auto t = build_harmonics(make_grid(3, 8), 3);
    auto f = random_expansion(t, 3, 7);
    auto g = random_expansion(t, 3, 8);
    auto s = euler_rotations(8, 5, 8);
    auto full = convolve(f, g, t, s);
    auto f2 = f;
    auto g2 = g;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t.index()[k].n == 2) f2.coeffs(k) = g2.coeffs(k) = 0.0;
    }
    auto cut = convolve(f2, g2, t, s);
    for (std::size_t k = 0; k < t.size(); ++k) {
        double expect = t.index()[k].n == 2 ? 0.0 : full.coeffs(k);
        EXPECT_NEAR(cut.coeffs(k), expect, 1e-10);
    }
}

TEST(ZonalConvolve, CircleFourierProduct) {
    auto t = build_harmonics(make_grid(2, 16), 5);
    auto f = random_expansion(t, 5, 9);
    auto g = random_expansion(t, 5, 10);
    EXPECT_LT(max_abs_diff(zonal_convolve(f, g, t), convolve(f, g, t, circle_shifts(16))), 1e-8);
}

TEST(ZonalConvolve, SphereMatchesBruteForce) {
    auto t = build_harmonics(make_grid(3, 8), 3);
    const auto& grid = t.grid();
    RealVector samples(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) samples(k) = std::exp(1.5 * grid.points(k, 0));
    auto f = expand(samples, t);
    auto g = random_expansion(t, 3, 11);
    EXPECT_LT(zonal_residual(f, t), 1e-10);
    auto a = zonal_convolve(f, g, t);
    auto b = convolve(f, g, t, euler_rotations(8, 5, 8));
    EXPECT_LT(max_abs_diff(a, b), 1e-8);
}

TEST(ZonalConvolve, UniformKeepsOnlyDegreeZero) {
    auto t = build_harmonics(make_grid(3, 8), 3);
    auto u = zero_expansion(t);
    u.coeffs(t.position(0, 1)) = 1.0 / std::sqrt(4 * std::numbers::pi);
    auto g = random_expansion(t, 3, 12);
    auto out = zonal_convolve(u, g, t);
    for (std::size_t k = 1; k < t.size(); ++k) EXPECT_LT(std::abs(out.coeffs(k)), 1e-14);
    EXPECT_NEAR(out.get(0, 1), g.get(0, 1), 1e-12);
}

TEST(ZonalConvolve, RejectsNonZonal) {
    auto t = build_harmonics(make_grid(3, 8), 3);
    auto f = random_expansion(t, 3, 13);
    try {
        zonal_convolve(f, f, t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SymmetryViolation);
    }
}

TEST(Convolve, MismatchedSpheres) {
    auto t2 = build_harmonics(make_grid(2, 8), 2);
    auto t3 = build_harmonics(make_grid(3, 8), 2);
    EXPECT_THROW(convolve(zero_expansion(t2), zero_expansion(t3), t3, euler_rotations(4, 4, 4)), Error);
}
