// Copyright 2026 The vnrank Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// JSON wire format. Complex numbers are [re, im] arrays; matrices are
// row-major flat lists of them.
//
//   state file:    {"m": 2, "n": 2, "rho": [[re, im], ...]}   (mn)^2 entries
//   unitary file:  {"m": 2, "u":   [[re, im], ...]}           m^2 entries

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "vnrank/basis.hpp"
#include "vnrank/errors.hpp"
#include "vnrank/linalg.hpp"

namespace vnrank::io {

using Json = nlohmann::ordered_json;

[[nodiscard]] inline Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

/// Row-major flat list of [re, im] pairs.
[[nodiscard]] inline Json to_json(const ComplexMatrix &a) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.push_back(to_json(a(i, j)));
        }
    }
    return out;
}

/// Nested list of rows.
[[nodiscard]] inline Json to_json(const RealMatrix &a) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            row.push_back(a(i, j));
        }
        out.push_back(std::move(row));
    }
    return out;
}

[[nodiscard]] inline Json to_json(const HermitianBasis &b) {
    Json elems = Json::array();
    for (int i = 0; i < b.size(); ++i) {
        elems.push_back(Json{{"label", b.labels()[static_cast<std::size_t>(i)].to_string()}, {"matrix", to_json(b[i])}});
    }
    return Json{{"m", b.dim()}, {"elements", std::move(elems)}};
}

[[nodiscard]] inline ComplexMatrix complex_matrix_from_json(const Json &flat, int rows, int cols, const char *field) {
    if (!flat.is_array() || flat.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        std::ostringstream os;
        os << "field '" << field << "' must be a list of " << rows * cols << " [re, im] pairs";
        throw FormatError(os.str());
    }
    ComplexMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const Json &z = flat[static_cast<std::size_t>(i * cols + j)];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                std::ostringstream os;
                os << "field '" << field << "' entry " << i * cols + j << " is not a [re, im] pair";
                throw FormatError(os.str());
            }
            a(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
            if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
                throw FormatError(std::string("field '") + field + "' has a non-finite entry");
            }
        }
    }
    return a;
}

namespace detail {
inline int positive_int(const Json &j, const char *field) {
    if (!j.contains(field) || !j[field].is_number_integer() || j[field].get<long long>() < 1 ||
        j[field].get<long long>() > 64) {
        throw FormatError(std::string("field '") + field + "' must be a positive integer");
    }
    return j[field].get<int>();
}
} // namespace detail

struct StateFile {
    int m = 0;
    int n = 0;
    ComplexMatrix rho;
};

[[nodiscard]] inline StateFile parse_state(const Json &j) {
    if (!j.is_object()) {
        throw FormatError("state file must be a JSON object");
    }
    StateFile s;
    s.m = detail::positive_int(j, "m");
    s.n = detail::positive_int(j, "n");
    if (!j.contains("rho")) {
        throw FormatError("field 'rho' is missing");
    }
    s.rho = complex_matrix_from_json(j["rho"], s.m * s.n, s.m * s.n, "rho");
    return s;
}

[[nodiscard]] inline Json state_to_json(int m, int n, const ComplexMatrix &rho) {
    return Json{{"m", m}, {"n", n}, {"rho", to_json(rho)}};
}

/// Parses {"m": m, "u": [...]}. `m` may be omitted when the entry count is a perfect square.
[[nodiscard]] inline ComplexMatrix parse_unitary(const Json &j) {
    if (!j.is_object() || !j.contains("u") || !j["u"].is_array()) {
        throw FormatError("unitary file must be an object with a 'u' list");
    }
    int m = 0;
    if (j.contains("m")) {
        m = detail::positive_int(j, "m");
    } else {
        const auto count = j["u"].size();
        m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(count))));
        if (static_cast<std::size_t>(m) * static_cast<std::size_t>(m) != count || m < 1) {
            throw FormatError("field 'u' length is not a perfect square and 'm' is absent");
        }
    }
    return complex_matrix_from_json(j["u"], m, m, "u");
}

[[nodiscard]] inline Json unitary_to_json(const ComplexMatrix &u) {
    return Json{{"m", u.rows()}, {"u", to_json(u)}};
}

[[nodiscard]] inline Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace vnrank::io
