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

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace spinwig::cli;

int main(int argc, char** argv) {
    CLI::App app{"Spin Wigner kernels, noise channels and mitigation"};
    app.set_version_flag("--version", SPINWIG_VERSION_STRING);
    app.require_subcommand(1);

    KernelBuildConfig kb;
    auto* kernel = app.add_subcommand("kernel", "Kernel construction");
    kernel->require_subcommand(1);
    auto* build = kernel->add_subcommand("build", "Build a kernel and write its manifest and coefficient CSV");
    build->add_option("--type", kb.type, "parity, brif, tensor, dephasing, zz or exchange")->required();
    build->add_option("--dim", kb.dim, "Hilbert dimension (parity, brif)");
    build->add_option("--d1", kb.d1, "First exchange subsystem degree");
    build->add_option("--d2", kb.d2, "Second exchange subsystem degree");
    build->add_option("--dims", kb.dims, "Tensor factor dimensions")->delimiter(',');
    build->add_option("--grid", kb.grid, "Grid resolution (parity exactness degree, circle points)");
    build->add_option("--nmax", kb.n_max, "Harmonic cutoff (brif)");
    build->add_option("--seed", kb.seed, "Recorded seed");
    build->add_option("--out", kb.out, "Output directory");

    VerifyConfig vc;
    auto* verify = app.add_subcommand("verify", "Check the Stratonovich-Weyl conditions of a kernel manifest");
    verify->add_option("--manifest", vc.manifest, "kernel_manifest.json")->required();
    verify->add_option("--tol", vc.tol, "Residual tolerance");
    verify->add_option("--samples", vc.samples, "Random states");
    verify->add_option("--seed", vc.seed, "State seed");
    verify->add_option("--out", vc.out, "Output directory");

    PipelineConfig pc;
    auto* pipeline = app.add_subcommand("pipeline", "Apply noise to a state and mitigate its expectations");
    pipeline->add_option("--config", pc.config, "Pipeline JSON (state, noise, kernel, observables)")->required();
    pipeline->add_option("--tol", pc.floor, "Smallest attenuation factor that may be inverted");
    pipeline->add_option("--seed", pc.seed, "State seed");
    pipeline->add_option("--out", pc.out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (build->parsed()) return cmd_kernel_build(kb);
        if (verify->parsed()) return cmd_verify(vc);
        return cmd_pipeline(pc);
    } catch (const spinwig::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
}
