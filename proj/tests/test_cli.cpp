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

// Runs the spinwig binary end to end: exit codes, artifacts, determinism
// and schema validity.
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <unistd.h>

#include "schema_check.hpp"
#include "spinwig/operator_core.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / ("spinwig_cli_" + std::to_string(::getpid()) + "_" + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(const std::string& args) {
        std::string cmd = std::string(SPINWIG_CLI) + " " + args + " >" + (dir_ / "stdout.txt").string() + " 2>" +
                          (dir_ / "stderr.txt").string();
        int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string out(const std::string& sub) const { return (dir_ / sub).string(); }
    std::string stderr_text() const { return slurp(dir_ / "stderr.txt"); }

    static std::string slurp(const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    static json read(const fs::path& p) { return json::parse(slurp(p)); }

    fs::path write_config(const std::string& name, const json& j) {
        fs::path p = dir_ / name;
        std::ofstream(p) << j.dump();
        return p;
    }

    fs::path dir_;
};

/// Drops the one line holding the run timestamp.
std::string without_timestamp(const std::string& text) {
    std::istringstream in(text);
    std::string line, kept;
    while (std::getline(in, line)) {
        if (line.find("\"generated_at\"") == std::string::npos) kept += line + "\n";
    }
    return kept;
}

json depolarizing_config() {
    return {{"state", {{"kind", "random"}}},
            {"noise", {{"kind", "global_depolarizing"}, {"params", {{"dim", 4}, {"p", 0.2}}}}},
            {"observables", {{{"label", "ZZ"}, {"pauli", "ZZ"}}, {{"label", "XY"}, {"pauli", "XY"}}}}};
}

json gaussian_dephasing_config(double sigma) {
    return {{"noise",
             {{"kind", "dephasing"},
              {"params", {{"dim", 2}}},
              {"distribution", {{"name", "wrapped-gaussian"}, {"sigma", sigma}}}}},
            {"kernel", {{"type", "dephasing"}}}};
}

void expect_valid(const json& doc, const std::string& schema) {
    schema_check::Validator v(SPINWIG_SCHEMA_DIR);
    auto errors = v.validate(doc, schema);
    std::string all;
    for (const auto& e : errors) all += e + "\n";
    EXPECT_TRUE(errors.empty()) << all;
}

}  // namespace

TEST_F(Cli, ParityManifestRecordsNormalization) {
    ASSERT_EQ(run("kernel build --type parity --dim 2 --out " + out("k")), 0);
    json m = read(dir_ / "k" / "kernel_manifest.json");
    // sqrt((N + 1) N (N - 1) / 2) at N = 2.
    EXPECT_NEAR(m["extras"]["normalization_N"].get<double>(), std::sqrt(3.0), 1e-14);
    EXPECT_EQ(m["dim"], 2);
    EXPECT_TRUE(fs::exists(dir_ / "k" / m["coefficients_csv"].get<std::string>()));
    EXPECT_EQ(m["run"]["version"], SPINWIG_VERSION_STRING);
    EXPECT_EQ(m["run"]["config_hash"].get<std::string>().size(), 16u);
    expect_valid(m, "kernel_manifest.schema.json");
}

TEST_F(Cli, ExchangeManifestBlockDims) {
    ASSERT_EQ(run("kernel build --type exchange --d1 1 --d2 1 --out " + out("k")), 0);
    json m = read(dir_ / "k" / "kernel_manifest.json");
    // Sector J holds the pairs (a, J - a) with 0 <= a <= d1, 0 <= J - a <= d2.
    std::vector<int> expected;
    for (int J = 0; J <= 2; ++J) {
        int count = 0;
        for (int a = 0; a <= 1; ++a) count += (J - a >= 0 && J - a <= 1);
        expected.push_back(count);
    }
    EXPECT_EQ(m["extras"]["block_dims"].get<std::vector<int>>(), expected);
    expect_valid(m, "kernel_manifest.schema.json");
}

TEST_F(Cli, CoefficientCsvShape) {
    ASSERT_EQ(run("kernel build --type dephasing --out " + out("k")), 0);
    json m = read(dir_ / "k" / "kernel_manifest.json");
    std::istringstream csv(slurp(dir_ / "k" / "kernel_coefficients.csv"));
    std::string header, line;
    std::getline(csv, header);
    std::size_t cols = std::count(header.begin(), header.end(), ',') + 1;
    // node, coordinates, weight, one column per basis element (3 for a qubit).
    EXPECT_EQ(cols, 1 + m["coord_names"].size() + 1 + 3);
    std::size_t rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
        EXPECT_EQ(static_cast<std::size_t>(std::count(line.begin(), line.end(), ',') + 1), cols);
    }
    EXPECT_EQ(rows, m["grid"]["nodes"].get<std::size_t>());
}

TEST_F(Cli, BadInputExitsTwo) {
    EXPECT_EQ(run("kernel build --type foo --out " + out("k")), 2);
    EXPECT_NE(stderr_text().find("foo"), std::string::npos);
    EXPECT_EQ(run("kernel build --dim 2"), 2);
    EXPECT_EQ(run("verify --manifest " + out("missing.json")), 2);
    EXPECT_EQ(run("pipeline --config " + out("missing.json")), 2);
    EXPECT_EQ(run("frobnicate"), 2);
}

TEST_F(Cli, ConstructionFailureExitsThree) {
    // n_max = 1 carries no degree-2 content.
    EXPECT_EQ(run("kernel build --type brif --dim 2 --nmax 1 --out " + out("k")), 3);
}

TEST_F(Cli, VerifyPassesAndCatchesCorruption) {
    ASSERT_EQ(run("kernel build --type parity --dim 2 --out " + out("k")), 0);
    ASSERT_EQ(run("verify --manifest " + out("k/kernel_manifest.json") + " --out " + out("v")), 0);
    json ok = read(dir_ / "v" / "sw_report.json");
    EXPECT_TRUE(ok["pass"].get<bool>());
    expect_valid(ok, "sw_report.schema.json");

    json m = read(dir_ / "k" / "kernel_manifest.json");
    m["c_delta"] = m["c_delta"].get<double>() + 0.1;
    fs::path bad = write_config("bad_manifest.json", m);
    ASSERT_EQ(run("verify --manifest " + bad.string() + " --out " + out("b")), 1);
    json rep = read(dir_ / "b" / "sw_report.json");
    EXPECT_FALSE(rep["pass"].get<bool>());
    bool found = false;
    for (const auto& c : rep["conditions"]) {
        if (c["name"] == "normalization") {
            found = true;
            EXPECT_FALSE(c["pass"].get<bool>());
            // Integral of (C + 0.1) I over mass 2, trace 2: off by 0.1 * 2.
            EXPECT_NEAR(c["residual"].get<double>(), 0.2, 1e-9);
        }
    }
    EXPECT_TRUE(found);
    expect_valid(rep, "sw_report.schema.json");
}

TEST_F(Cli, DepolarizingPipelineRecoversNoiseless) {
    fs::path cfg = write_config("dep.json", depolarizing_config());
    ASSERT_EQ(run("pipeline --config " + cfg.string() + " --seed 11 --out " + out("p")), 0);
    json r = read(dir_ / "p" / "pipeline_report.json");
    EXPECT_LT(r["max_mitigation_error"].get<double>(), 1e-8);
    // Independent noiseless values from the same seeded state.
    spinwig::DensityMatrix rho = spinwig::random_density(4, 11);
    spinwig::ComplexMatrix z = spinwig::ComplexMatrix::Zero(2, 2), x = z, y = z;
    z << 1, 0, 0, -1;
    x << 0, 1, 1, 0;
    y << 0, spinwig::cplx(0, -1), spinwig::cplx(0, 1), 0;
    double zz = (spinwig::kron(z, z) * rho.matrix()).trace().real();
    double xy = (spinwig::kron(x, y) * rho.matrix()).trace().real();
    for (const auto& o : r["observables"]) {
        double truth = o["label"] == "ZZ" ? zz : xy;
        EXPECT_NEAR(o["mitigated"].get<double>(), truth, 1e-8);
        EXPECT_NEAR(o["raw"].get<double>(), 0.8 * truth, 1e-12);
    }
    expect_valid(r, "pipeline_report.schema.json");
}

TEST_F(Cli, GaussianDephasingListsFrequencyFactors) {
    const double sigma = 0.3;
    fs::path cfg = write_config("deph.json", gaussian_dephasing_config(sigma));
    ASSERT_EQ(run("pipeline --config " + cfg.string() + " --out " + out("p")), 0);
    json r = read(dir_ / "p" / "pipeline_report.json");
    const auto& prof = r["profile"];
    EXPECT_EQ(prof["scope"], "per_circular_frequency");
    ASSERT_EQ(prof["frequencies"].size(), prof["factors"].size());
    for (std::size_t i = 0; i < prof["factors"].size(); ++i) {
        double w = prof["frequencies"][i].get<double>();
        // Untruncated Gaussian characteristic function; the 5 sigma cut moves it by ~1e-6.
        EXPECT_NEAR(prof["factors"][i].get<double>(), std::exp(-0.5 * sigma * sigma * w * w), 2e-6);
    }
    EXPECT_LT(r["max_mitigation_error"].get<double>(), 1e-8);
    EXPECT_LT(r["wigner"]["convolution_difference"].get<double>(), 1e-7);
    EXPECT_TRUE(fs::exists(dir_ / "p" / "wigner.csv"));
    expect_valid(r, "pipeline_report.schema.json");
}

TEST_F(Cli, IncompatibilityExitsFour) {
    json asym = {{"noise",
                  {{"kind", "exchange"},
                   {"params", {{"d1", 1}, {"d2", 1}}},
                   {"distribution", {{"name", "tabulated"}, {"nodes", {0.1, 0.5}}, {"weights", {0.5, 0.5}}}}}}};
    EXPECT_EQ(run("pipeline --config " + write_config("a.json", asym).string() + " --out " + out("a")), 4);
    EXPECT_NE(stderr_text().find("not symmetric"), std::string::npos);

    json mismatch = {{"noise", {{"kind", "global_depolarizing"}, {"params", {{"dim", 3}, {"p", 0.1}}}}},
                     {"kernel", {{"type", "parity"}, {"params", {{"dim", 2}}}}}};
    EXPECT_EQ(run("pipeline --config " + write_config("m.json", mismatch).string() + " --out " + out("m")), 4);
    EXPECT_NE(stderr_text().find("dimension"), std::string::npos);

    // Uniform dephasing erases the coherences; inverting them is refused.
    json uniform = {{"noise",
                     {{"kind", "dephasing"}, {"params", {{"dim", 2}}}, {"distribution", {{"name", "uniform"}}}}}};
    EXPECT_EQ(run("pipeline --config " + write_config("u.json", uniform).string() + " --out " + out("u")), 4);
    EXPECT_NE(stderr_text().find("below the floor"), std::string::npos);
}

TEST_F(Cli, RerunsAreByteIdentical) {
    fs::path dep = write_config("dep.json", depolarizing_config());
    fs::path deph = write_config("deph.json", gaussian_dephasing_config(0.6));
    for (const char* tag : {"a", "b"}) {
        std::string t(tag);
        ASSERT_EQ(run("kernel build --type zz --seed 5 --out " + out(t + "/k")), 0);
        ASSERT_EQ(run("verify --manifest " + out(t + "/k/kernel_manifest.json") + " --seed 5 --out " + out(t + "/k")), 0);
        ASSERT_EQ(run("pipeline --config " + dep.string() + " --seed 5 --out " + out(t + "/d")), 0);
        ASSERT_EQ(run("pipeline --config " + deph.string() + " --seed 5 --out " + out(t + "/g")), 0);
    }
    int compared = 0;
    for (const auto& entry : fs::recursive_directory_iterator(dir_ / "a")) {
        if (!entry.is_regular_file()) continue;
        fs::path twin = dir_ / "b" / fs::relative(entry.path(), dir_ / "a");
        ASSERT_TRUE(fs::exists(twin)) << twin;
        std::string a = slurp(entry.path()), b = slurp(twin);
        if (entry.path().extension() == ".json") {
            EXPECT_EQ(without_timestamp(a), without_timestamp(b)) << entry.path();
        } else {
            EXPECT_EQ(a, b) << entry.path();
        }
        ++compared;
    }
    // manifest + csv + report, two pipeline reports, one Wigner csv.
    EXPECT_EQ(compared, 6);
}

TEST_F(Cli, SeedAndHashChangeWithConfig) {
    fs::path dep = write_config("dep.json", depolarizing_config());
    ASSERT_EQ(run("pipeline --config " + dep.string() + " --seed 1 --out " + out("s1")), 0);
    ASSERT_EQ(run("pipeline --config " + dep.string() + " --seed 2 --out " + out("s2")), 0);
    json a = read(dir_ / "s1" / "pipeline_report.json"), b = read(dir_ / "s2" / "pipeline_report.json");
    EXPECT_EQ(a["run"]["seed"], 1);
    EXPECT_EQ(b["run"]["seed"], 2);
    EXPECT_NE(a["run"]["config_hash"], b["run"]["config_hash"]);
}

TEST_F(Cli, TimestampFollowsSourceDateEpoch) {
    ::setenv("SOURCE_DATE_EPOCH", "0", 1);
    int rc = run("kernel build --type parity --dim 2 --out " + out("k"));
    ::unsetenv("SOURCE_DATE_EPOCH");
    ASSERT_EQ(rc, 0);
    EXPECT_EQ(read(dir_ / "k" / "kernel_manifest.json")["run"]["generated_at"], "1970-01-01T00:00:00Z");
}

TEST_F(Cli, SchemaCheckRejectsBrokenReports) {
    ASSERT_EQ(run("kernel build --type parity --dim 2 --out " + out("k")), 0);
    json m = read(dir_ / "k" / "kernel_manifest.json");
    schema_check::Validator v(SPINWIG_SCHEMA_DIR);
    json missing = m;
    missing.erase("c_delta");
    EXPECT_FALSE(v.validate(missing, "kernel_manifest.schema.json").empty());
    json bad_hash = m;
    bad_hash["run"]["config_hash"] = "XYZ";
    EXPECT_FALSE(v.validate(bad_hash, "kernel_manifest.schema.json").empty());
    json bad_type = m;
    bad_type["dim"] = "two";
    EXPECT_FALSE(v.validate(bad_type, "kernel_manifest.schema.json").empty());
}

TEST_F(Cli, VerifyReportIgnoresManifestTimestamp) {
    ::setenv("SOURCE_DATE_EPOCH", "1000", 1);
    ASSERT_EQ(run("kernel build --type parity --dim 2 --out " + out("a")), 0);
    ::setenv("SOURCE_DATE_EPOCH", "2000", 1);
    ASSERT_EQ(run("kernel build --type parity --dim 2 --out " + out("b")), 0);
    ASSERT_EQ(run("verify --manifest " + out("a/kernel_manifest.json") + " --out " + out("a")), 0);
    ASSERT_EQ(run("verify --manifest " + out("b/kernel_manifest.json") + " --out " + out("b")), 0);
    ::unsetenv("SOURCE_DATE_EPOCH");
    EXPECT_EQ(slurp(dir_ / "a" / "sw_report.json"), slurp(dir_ / "b" / "sw_report.json"));
}
