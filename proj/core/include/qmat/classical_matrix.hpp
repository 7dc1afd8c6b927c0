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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace qmat {

/// Dense real matrix of the values to embed. Row-major storage.
class ClassicalMatrix {
  public:
    ClassicalMatrix() = default;
    ClassicalMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    /// All inner vectors must have equal length.
    static ClassicalMatrix from_rows(const std::vector<std::vector<double>>& rows);

    /// Row-major comma-separated values, one row per line. A single
    /// header line is skipped when its first token is not numeric.
    /// Throws ParseError on malformed or non-finite input.
    static ClassicalMatrix from_csv(std::istream& in);
    static ClassicalMatrix from_csv_file(const std::string& path);

    /// Nested JSON arrays: [[...], [...]].
    static ClassicalMatrix from_json_text(const std::string& text);
    static ClassicalMatrix from_json_file(const std::string& path);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double at(std::size_t i, std::size_t j) const;
    double& at(std::size_t i, std::size_t j);

    std::vector<double> row(std::size_t i) const;
    const std::vector<double>& data() const { return data_; }

    /// max |f_ij|; zero only for the all-zero matrix.
    double inf_norm() const;

    /// Entries divided by the inf-norm, so everything lands in [-1, 1].
    /// The all-zero matrix is returned unchanged.
    ClassicalMatrix normalized() const;

    double max_abs_diff(const ClassicalMatrix& other) const;

    bool operator==(const ClassicalMatrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace qmat
