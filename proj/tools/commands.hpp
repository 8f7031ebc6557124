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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "spinwig/errors.hpp"
#include "spinwig/matrix_io.hpp"

namespace spinwig::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kBadInput = 2,
    kConstructionFailed = 3,
    kIncompatible = 4,
};

int exit_code(ErrorKind kind);

struct KernelBuildConfig {
    std::string type;
    std::optional<int> dim;
    std::optional<int> d1;
    std::optional<int> d2;
    std::vector<int> dims;
    std::optional<int> grid;
    std::optional<int> n_max;
    std::uint64_t seed = 0;
    std::filesystem::path out = ".";
};

struct VerifyConfig {
    std::filesystem::path manifest;
    double tol = 1e-7;
    int samples = 20;
    std::uint64_t seed = 7;
    std::filesystem::path out = ".";
};

struct PipelineConfig {
    std::filesystem::path config;
    double floor = 1e-3;
    std::uint64_t seed = 0;
    std::filesystem::path out = ".";
};

/// 64-bit FNV-1a of the compact JSON dump, as 16 hex digits.
std::string config_hash(const json& config);

/// {command, version, config_hash, seed, generated_at}. The timestamp comes
/// from SOURCE_DATE_EPOCH when set.
json run_info(const std::string& command, const json& config, std::uint64_t seed);

/// Each returns an exit code and writes its artifacts under `out`.
int cmd_kernel_build(const KernelBuildConfig& config);
int cmd_verify(const VerifyConfig& config);
int cmd_pipeline(const PipelineConfig& config);

}  // namespace spinwig::cli
