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

#include "spinwig/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spinwig/errors.hpp"

namespace spinwig {

json matrix_to_json(const ComplexMatrix& m) {
    require(m.rows() == m.cols(), ErrorKind::InvalidInput, "matrix must be square");
    json re = json::array();
    json im = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json rr = json::array();
        json ri = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            rr.push_back(m(r, c).real());
            ri.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return json{{"dim", m.rows()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json& j) {
    require(j.is_object() && j.contains("dim") && j.contains("re"), ErrorKind::InvalidInput,
            "matrix JSON needs dim and re");
    int dim = j.at("dim").get<int>();
    require(dim >= 1, ErrorKind::InvalidDimension, "matrix dim must be positive");
    const json& re = j.at("re");
    const json* im = j.contains("im") ? &j.at("im") : nullptr;
    require(re.is_array() && static_cast<int>(re.size()) == dim, ErrorKind::InvalidInput,
            "matrix re has wrong row count");
    ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        require(re[r].is_array() && static_cast<int>(re[r].size()) == dim,
                ErrorKind::InvalidInput, "matrix re has wrong column count");
        for (int c = 0; c < dim; ++c) {
            double imag = 0.0;
            if (im) {
                imag = (*im).at(r).at(c).get<double>();
            }
            m(r, c) = cplx(re[r][c].get<double>(), imag);
        }
    }
    return m;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::InvalidInput, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::InvalidInput, "malformed JSON in " + path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), ErrorKind::InvalidInput, "cannot write " + path.string());
    out << text;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace spinwig
