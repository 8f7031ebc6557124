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

#include "commands.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <sstream>

#include "spinwig/kernel_constructors.hpp"
#include "spinwig/mitigation.hpp"
#include "spinwig/noise_models.hpp"
#include "spinwig/sw_verifier.hpp"
#include "spinwig/wigner.hpp"

namespace spinwig::cli {

namespace {

const char* const kManifestFile = "kernel_manifest.json";
const char* const kCoefficientsFile = "kernel_coefficients.csv";
const char* const kReportFile = "sw_report.json";
const char* const kPipelineFile = "pipeline_report.json";
const char* const kWignerFile = "wigner.csv";

std::string timestamp() {
    std::time_t t = std::time(nullptr);
    if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::strtoll(env, nullptr, 10));
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json kernel_params(const KernelBuildConfig& c) {
    const std::string& t = c.type;
    if (t == "parity") return {{"dim", c.dim.value_or(2)}, {"degree", c.grid.value_or(4)}};
    if (t == "brif") return {{"dim", c.dim.value_or(2)}, {"n_max", c.n_max.value_or(2)}};
    if (t == "tensor") return {{"dims", c.dims.empty() ? std::vector<int>{2, 2} : c.dims}};
    if (t == "dephasing") return {{"n_theta", c.grid.value_or(16)}, {"n_eta", 16}};
    if (t == "zz") return {{"n_theta", c.grid.value_or(16)}, {"n_eta", 24}};
    if (t == "exchange") return {{"d1", c.d1.value_or(1)}, {"d2", c.d2.value_or(1)}};
    fail(ErrorKind::InvalidInput,
         "unknown kernel type '" + t + "' (expected parity, brif, tensor, dephasing, zz or exchange)");
}

std::string coefficients_csv(const Kernel& k) {
    std::ostringstream os;
    os << "node";
    for (const auto& name : k.coord_names()) os << ',' << name;
    os << ",weight";
    for (const auto& label : k.basis().labels) os << ',' << label.str();
    os << '\n';
    for (std::size_t n = 0; n < k.node_count(); ++n) {
        os << n;
        for (double x : k.node_coords(n)) os << ',' << format_double(x);
        os << ',' << format_double(k.node_weight(n));
        RealVector c = k.coefficients_at_node(n);
        for (Eigen::Index i = 0; i < c.size(); ++i) os << ',' << format_double(c(i));
        os << '\n';
    }
    return os.str();
}

std::string wigner_csv(const Kernel& k, const WignerFunction& ideal, const WignerFunction& noisy) {
    std::ostringstream os;
    os << "node";
    for (const auto& name : k.coord_names()) os << ',' << name;
    os << ",weight,ideal,noisy\n";
    for (std::size_t n = 0; n < k.node_count(); ++n) {
        auto e = static_cast<Eigen::Index>(n);
        os << n;
        for (double x : k.node_coords(n)) os << ',' << format_double(x);
        os << ',' << format_double(k.node_weight(n)) << ',' << format_double(ideal.values(e)) << ','
           << format_double(noisy.values(e)) << '\n';
    }
    return os.str();
}

void prepare(const std::filesystem::path& out) {
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    require(!ec, ErrorKind::InvalidInput, "cannot create output directory " + out.string() + ": " + ec.message());
}

json load(const std::filesystem::path& path, const std::string& what) {
    require(std::filesystem::is_regular_file(path), ErrorKind::InvalidInput, what + " not found: " + path.string());
    try {
        return read_json_file(path);
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidInput, what + " is not valid JSON: " + e.what());
    }
}

/// Tensor product of Paulis, first character on the most significant qubit.
ComplexMatrix pauli_string(const std::string& s, int dim) {
    require(!s.empty() && (1 << s.size()) == dim, ErrorKind::InvalidInput,
            "Pauli string '" + s + "' does not match dimension " + std::to_string(dim));
    ComplexMatrix m = ComplexMatrix::Identity(1, 1);
    for (char c : s) {
        char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        require(lc == 'i' || lc == 'x' || lc == 'y' || lc == 'z', ErrorKind::InvalidInput,
                "bad Pauli letter in '" + s + "'");
        ComplexMatrix f = ComplexMatrix::Zero(2, 2);
        if (lc == 'i') f << 1, 0, 0, 1;
        if (lc == 'x') f << 0, 1, 1, 0;
        if (lc == 'y') f << 0, cplx(0, -1), cplx(0, 1), 0;
        if (lc == 'z') f << 1, 0, 0, -1;
        m = kron(m, f);
    }
    return m;
}

DensityMatrix pipeline_state(const json& spec, int dim, std::uint64_t seed) {
    const std::string kind = spec.value("kind", "random");
    if (spec.contains("dim")) {
        require(spec.at("dim").get<int>() == dim, ErrorKind::InvalidInput,
                "state dimension " + spec.at("dim").dump() + " does not match noise dimension " + std::to_string(dim));
    }
    if (kind == "random") return random_density(dim, seed);
    if (kind == "pure") return random_pure_density(dim, seed);
    if (kind == "matrix") {
        ComplexMatrix m = matrix_from_json(spec.at("matrix"));
        require(m.rows() == dim, ErrorKind::InvalidInput, "state matrix dimension does not match noise dimension");
        return DensityMatrix(m);
    }
    fail(ErrorKind::InvalidInput, "unknown state kind '" + kind + "'");
}

}  // namespace

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidDimension:
        case ErrorKind::InvalidInput:
        case ErrorKind::InvalidOperator:
        case ErrorKind::InvalidCoordinates:
        case ErrorKind::InvalidModel:
        case ErrorKind::DomainError:
            return kBadInput;
        case ErrorKind::DegenerateGrid:
        case ErrorKind::AliasingRisk:
        case ErrorKind::SymmetryViolation:
        case ErrorKind::OrthogonalityViolation:
        case ErrorKind::NormalizationFailure:
        case ErrorKind::BandwidthError:
        case ErrorKind::UnverifiedKernel:
            return kConstructionFailed;
        case ErrorKind::UnsupportedNoise:
        case ErrorKind::NotInvertibleProfile:
        case ErrorKind::IllConditioned:
            return kIncompatible;
    }
    return kBadInput;
}

std::string config_hash(const json& config) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : config.dump()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json run_info(const std::string& command, const json& config, std::uint64_t seed) {
    return {{"command", command},
            {"version", SPINWIG_VERSION_STRING},
            {"config_hash", config_hash(config)},
            {"seed", seed},
            {"generated_at", timestamp()}};
}

int cmd_kernel_build(const KernelBuildConfig& c) {
    const json params = kernel_params(c);
    const json config = {{"type", c.type}, {"params", params}, {"seed", c.seed}};
    KernelPtr k = build_kernel(c.type, params);
    prepare(c.out);
    json manifest = k->manifest();
    manifest["coefficients_csv"] = kCoefficientsFile;
    manifest["config"] = config;
    manifest["run"] = run_info("kernel build", config, c.seed);
    write_text_file(c.out / kCoefficientsFile, coefficients_csv(*k));
    write_json_file(c.out / kManifestFile, manifest);
    std::cout << "kernel " << k->name() << " dim " << k->dim() << " nodes " << k->node_count() << " -> "
              << (c.out / kManifestFile).string() << '\n';
    return kOk;
}

int cmd_verify(const VerifyConfig& c) {
    const json manifest = load(c.manifest, "manifest");
    KernelOverrides o;
    KernelPtr k;
    try {
        o.c_delta = manifest.at("c_delta").get<double>();
        std::vector<double> scales;
        for (const auto& cls : manifest.at("classes")) scales.push_back(cls.at("scale").get<double>());
        o.class_scales = scales;
        k = build_kernel(manifest.at("constructor").get<std::string>(), manifest.at("params"), o);
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed manifest: ") + e.what());
    }
    require(k->dim() == manifest.value("dim", 0), ErrorKind::InvalidInput, "manifest dim does not match its constructor");

    SWOptions opt;
    opt.samples = c.samples;
    opt.seed = c.seed;
    opt.tolerance = c.tol;
    const SWReport report = verify_sw(*k, opt);

    json stable = manifest;
    if (stable.contains("run")) stable["run"].erase("generated_at");
    const json config = {{"manifest_hash", config_hash(stable)}, {"tol", c.tol}, {"samples", c.samples}, {"seed", c.seed}};
    prepare(c.out);
    json out = report.to_json();
    out["config"] = config;
    out["run"] = run_info("verify", config, c.seed);
    write_json_file(c.out / kReportFile, out);
    for (const auto& cond : out.at("conditions")) {
        std::cout << cond.at("name").get<std::string>() << ' ' << format_double(cond.at("residual").get<double>())
                  << (cond.at("pass").get<bool>() ? " pass" : " FAIL") << '\n';
    }
    return report.pass() ? kOk : kVerificationFailed;
}

int cmd_pipeline(const PipelineConfig& c) {
    const json spec = load(c.config, "pipeline config");
    require(spec.contains("noise"), ErrorKind::InvalidInput, "pipeline config needs a 'noise' entry");
    const json config = {{"pipeline", spec}, {"floor", c.floor}, {"seed", c.seed}};

    const NoiseModel noise = noise_from_json(spec.at("noise"));
    const DensityMatrix rho = pipeline_state(spec.value("state", json::object()), noise.dim, c.seed);

    std::shared_ptr<Kernel> kernel;
    if (spec.contains("kernel")) {
        const json& ks = spec.at("kernel");
        const std::string type = ks.value("type", "");
        kernel = build_kernel(type, ks.value("params", json::object()));
        require(kernel->dim() == noise.dim, ErrorKind::UnsupportedNoise,
                "kernel " + type + " has dimension " + std::to_string(kernel->dim()) + " but " +
                    std::string(to_string(noise.kind)) + " noise acts on dimension " + std::to_string(noise.dim));
    }

    const AttenuationProfile profile = attenuation_profile(noise);
    const DensityMatrix noisy = apply_channel(rho, noise);
    const auto raw = basis_expectations(noisy.matrix(), profile);
    const auto ideal = basis_expectations(rho.matrix(), profile);
    const auto estimates = mitigate(raw, profile, c.floor);

    json report = mitigation_report(estimates, profile);
    double max_error = 0.0;
    for (auto& op : report.at("operators")) {
        double truth = ideal.at(op.at("label").get<std::string>());
        double err = std::abs(op.at("mitigated").get<double>() - truth);
        op["noiseless"] = truth;
        op["error"] = err;
        max_error = std::max(max_error, err);
    }

    json observables = json::array();
    for (const auto& obs : spec.value("observables", json::array())) {
        const std::string label = obs.at("label");
        ComplexMatrix m = obs.contains("pauli") ? pauli_string(obs.at("pauli"), noise.dim) : matrix_from_json(obs.at("matrix"));
        require(m.rows() == noise.dim && is_hermitian(m), ErrorKind::InvalidInput,
                "observable '" + label + "' is not a Hermitian matrix of dimension " + std::to_string(noise.dim));
        ObservableEstimate e = mitigate_observable(m, noisy.matrix(), profile, c.floor);
        double truth = (m * rho.matrix()).trace().real();
        double err = std::abs(e.mitigated - truth);
        max_error = std::max(max_error, err);
        observables.push_back({{"label", label},
                               {"raw", e.raw},
                               {"mitigated", e.mitigated},
                               {"noiseless", truth},
                               {"error", err},
                               {"amplification", e.amplification}});
    }

    json out = {{"noise", noise.to_json()},
                {"state", {{"kind", spec.value("state", json::object()).value("kind", "random")}, {"dim", noise.dim}}},
                {"profile", profile.to_json()},
                {"mitigation", report},
                {"observables", observables},
                {"max_mitigation_error", max_error}};

    prepare(c.out);
    if (kernel) {
        const WignerFunction w_ideal = wigner(rho, kernel);
        const WignerFunction w_noisy = wigner(noisy, kernel);
        json wj = {{"kernel", kernel->name()}, {"csv", kWignerFile}, {"noisy_integral", w_noisy.integral()}};
        if (kernel->shift_generator() && noise.circular()) {
            wj["convolution_difference"] = channel_as_convolution(kernel, noise, rho).max_difference;
        }
        out["wigner"] = wj;
        write_text_file(c.out / kWignerFile, wigner_csv(*kernel, w_ideal, w_noisy));
    }
    out["config"] = config;
    out["run"] = run_info("pipeline", config, c.seed);
    write_json_file(c.out / kPipelineFile, out);
    std::cout << to_string(noise.kind) << " max mitigation error " << format_double(max_error) << '\n';
    return kOk;
}

}  // namespace spinwig::cli
