// Copyright 2026 The qmat developers
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

#include "qmat/classical_matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qmat/errors.hpp"

namespace qmat {

namespace {

bool parse_double(const std::string& token, double& out) {
    const char* begin = token.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    if (end == begin) {
        return false;
    }
    while (*end == ' ' || *end == '\t' || *end == '\r') {
        ++end;
    }
    return *end == '\0';
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> tokens;
    std::string token;
    std::istringstream ss(line);
    while (std::getline(ss, token, ',')) {
        tokens.push_back(token);
    }
    return tokens;
}

void check_finite(const std::vector<double>& data) {
    for (double v : data) {
        if (!std::isfinite(v)) {
            throw ParseError("matrix entries must be finite");
        }
    }
}

}  // namespace

ClassicalMatrix::ClassicalMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

ClassicalMatrix ClassicalMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows[0].empty()) {
        throw DimensionError("matrix needs at least one entry");
    }
    ClassicalMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            throw DimensionError("ragged matrix rows");
        }
        for (std::size_t j = 0; j < m.cols_; ++j) {
            m.at(i, j) = rows[i][j];
        }
    }
    check_finite(m.data_);
    return m;
}

ClassicalMatrix ClassicalMatrix::from_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const std::vector<std::string> tokens = split_csv_line(line);
        std::vector<double> row;
        row.reserve(tokens.size());
        bool ok = true;
        for (const std::string& t : tokens) {
            double v = 0.0;
            if (!parse_double(t, v)) {
                ok = false;
                break;
            }
            row.push_back(v);
        }
        if (!ok) {
            if (first) {
                first = false;  // header line, skip it
                continue;
            }
            throw ParseError("non-numeric CSV token: " + line);
        }
        first = false;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError("CSV input holds no rows");
    }
    return from_rows(rows);
}

ClassicalMatrix ClassicalMatrix::from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    return from_csv(in);
}

ClassicalMatrix ClassicalMatrix::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON matrix: ") + e.what());
    }
    if (!j.is_array() || j.empty()) {
        throw ParseError("JSON matrix must be a non-empty array of rows");
    }
    std::vector<std::vector<double>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) {
            throw ParseError("JSON matrix rows must be arrays");
        }
        std::vector<double> row;
        for (const auto& v : r) {
            if (!v.is_number()) {
                throw ParseError("JSON matrix entries must be numbers");
            }
            row.push_back(v.get<double>());
        }
        rows.push_back(std::move(row));
    }
    return from_rows(rows);
}

ClassicalMatrix ClassicalMatrix::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

double ClassicalMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw AddressError("matrix index out of range");
    }
    return data_[i * cols_ + j];
}

double& ClassicalMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) {
        throw AddressError("matrix index out of range");
    }
    return data_[i * cols_ + j];
}

std::vector<double> ClassicalMatrix::row(std::size_t i) const {
    if (i >= rows_) {
        throw AddressError("matrix row out of range");
    }
    return std::vector<double>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

double ClassicalMatrix::inf_norm() const {
    double m = 0.0;
    for (double v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

ClassicalMatrix ClassicalMatrix::normalized() const {
    const double norm = inf_norm();
    if (norm == 0.0) {
        return *this;
    }
    ClassicalMatrix out = *this;
    for (double& v : out.data_) {
        v /= norm;
    }
    return out;
}

double ClassicalMatrix::max_abs_diff(const ClassicalMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("matrix shapes differ");
    }
    double m = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k) {
        m = std::max(m, std::abs(data_[k] - other.data_[k]));
    }
    return m;
}

}  // namespace qmat
