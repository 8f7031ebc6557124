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

#include "spinwig/sw_verifier.hpp"

#include <algorithm>
#include <cmath>

#include "spinwig/parallel.hpp"

namespace spinwig {

namespace {

struct Accum {
    ComplexMatrix integral;
    double hermiticity = 0.0;
    double trace_min = 0.0;
    double trace_max = 0.0;
    RealVector w_sum;
    RealVector w_pair;
    std::vector<ComplexMatrix> recon;

    Accum& operator+=(const Accum& o) {
        integral += o.integral;
        hermiticity = std::max(hermiticity, o.hermiticity);
        trace_min = std::min(trace_min, o.trace_min);
        trace_max = std::max(trace_max, o.trace_max);
        w_sum += o.w_sum;
        w_pair += o.w_pair;
        for (std::size_t k = 0; k < recon.size(); ++k) recon[k] += o.recon[k];
        return *this;
    }
};

SWCondition make(const std::string& name, double residual, double tol) {
    return {name, residual, tol, residual < tol};
}

json condition_json(const SWCondition& c) {
    return {{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}};
}

}  // namespace

bool SWReport::pass() const {
    return hermiticity.pass && normalization.pass && trace_rule.pass && traciality.pass;
}

json SWReport::to_json() const {
    json conditions = json::array({condition_json(hermiticity), condition_json(normalization),
                                   condition_json(trace_rule), condition_json(traciality)});
    json out = {{"kernel", kernel},
                {"dim", dim},
                {"samples", options.samples},
                {"seed", options.seed},
                {"conditions", conditions},
                {"reconstruction", condition_json(reconstruction)},
                {"informationally_incomplete", informationally_incomplete},
                {"pass", pass()}};
    out["covariance"] = covariance ? condition_json(*covariance) : json(nullptr);
    return out;
}

SWReport verify_sw(const Kernel& kernel, const SWOptions& options) {
    const int dim = kernel.dim();
    const int ns = std::max(options.samples, 2);
    std::vector<ComplexMatrix> states;
    for (int s = 0; s < ns; ++s) {
        std::uint64_t seed = options.seed * 1000003ULL + static_cast<std::uint64_t>(s);
        states.push_back(s % 2 == 0 ? random_density(dim, seed).matrix()
                                    : random_pure_density(dim, seed).matrix());
    }

    Accum zero;
    zero.integral = ComplexMatrix::Zero(dim, dim);
    zero.trace_min = 1e300;
    zero.trace_max = -1e300;
    zero.w_sum = RealVector::Zero(ns);
    zero.w_pair = RealVector::Zero(ns);
    zero.recon.assign(static_cast<std::size_t>(ns), ComplexMatrix::Zero(dim, dim));

    Accum acc = chunked_reduce(kernel.node_count(), zero, [&](std::size_t b, std::size_t e) {
        Accum a = zero;
        RealVector w(ns);
        for (std::size_t node = b; node < e; ++node) {
            ComplexMatrix d = kernel.at_node(node);
            double weight = kernel.node_weight(node);
            a.hermiticity = std::max(a.hermiticity, (d - d.adjoint()).norm());
            double tr = d.trace().real();
            a.trace_min = std::min(a.trace_min, tr);
            a.trace_max = std::max(a.trace_max, tr);
            a.integral += weight * d;
            for (int s = 0; s < ns; ++s) {
                w(s) = (states[s].transpose().cwiseProduct(d)).sum().real();
                a.w_sum(s) += weight * w(s);
                a.recon[s] += (weight * w(s)) * d;
            }
            for (int s = 0; s < ns; ++s) a.w_pair(s) += weight * w(s) * w((s + 1) % ns);
        }
        return a;
    });

    SWReport r;
    r.kernel = kernel.name();
    r.dim = dim;
    r.options = options;
    r.informationally_incomplete = kernel.informationally_incomplete();
    const double tol = options.tolerance;
    r.hermiticity = make("hermiticity", acc.hermiticity, tol);
    ComplexMatrix diff = acc.integral - ComplexMatrix::Identity(dim, dim);
    Eigen::JacobiSVD<ComplexMatrix> svd(diff);
    r.normalization = make("normalization", svd.singularValues()(0), tol);

    double trace_res = 0.0, trac_res = 0.0, recon_res = 0.0;
    for (int s = 0; s < ns; ++s) {
        trace_res = std::max(trace_res, std::abs(acc.w_sum(s) - states[s].trace().real()));
        double target = (states[s] * states[(s + 1) % ns]).trace().real();
        trac_res = std::max(trac_res, std::abs(acc.w_pair(s) - target));
        recon_res = std::max(recon_res, (acc.recon[s] - states[s]).norm());
    }
    r.trace_rule = make("trace_rule", trace_res, tol);
    r.traciality = make("traciality", trac_res, tol);
    r.reconstruction = make("reconstruction", recon_res, 1e-6);

    if (options.rotation_probes > 0 && kernel.symmetries()) {
        auto syms = kernel.symmetries()(options.rotation_probes, options.seed);
        const std::size_t n = kernel.node_count();
        const std::size_t step = std::max<std::size_t>(1, n / static_cast<std::size_t>(std::max(1, options.covariance_nodes)));
        double worst = 0.0;
        for (const auto& g : syms) {
            for (std::size_t node = 0; node < n; node += step) {
                auto c = kernel.node_coords(node);
                ComplexMatrix lhs = kernel.at(g.move(c));
                ComplexMatrix rhs = g.unitary * kernel.at_node(node) * g.unitary.adjoint();
                worst = std::max(worst, (lhs - rhs).norm());
            }
        }
        r.covariance = make("covariance", worst, options.covariance_tolerance);
    }
    return r;
}

SWReport certify_kernel(Kernel& kernel, const SWOptions& options) {
    SWReport report = verify_sw(kernel, options);
    kernel.mark_verified(report.pass());
    return report;
}

}  // namespace spinwig
