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
#include <optional>
#include <string>

#include "spinwig/kernel.hpp"

namespace spinwig {

struct SWCondition {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SWOptions {
    /// Random states for the trace rule; consecutive pairs for traciality.
    int samples = 20;
    std::uint64_t seed = 7;
    /// Group elements for the covariance probe (0 disables it).
    int rotation_probes = 50;
    /// Nodes checked per group element.
    int covariance_nodes = 64;
    double tolerance = 1e-7;
    double covariance_tolerance = 1e-8;
};

struct SWReport {
    std::string kernel;
    int dim = 0;
    SWOptions options;
    SWCondition hermiticity;
    SWCondition normalization;
    SWCondition trace_rule;
    SWCondition traciality;
    std::optional<SWCondition> covariance;
    SWCondition reconstruction;
    bool informationally_incomplete = false;

    /// Conditions 1-4.
    bool pass() const;
    json to_json() const;
};

/// Brute-force quadrature check of the Stratonovich-Weyl conditions with the
/// kernel assembled as a full matrix at every node.
SWReport verify_sw(const Kernel& kernel, const SWOptions& options = {});
/// verify_sw, then records the verdict on the kernel (reconstruction needs it).
SWReport certify_kernel(Kernel& kernel, const SWOptions& options = {});

}  // namespace spinwig
