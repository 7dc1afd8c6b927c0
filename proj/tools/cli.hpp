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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qmat::cli {

/// One resolved invocation. Exit codes: 0 success, 2 configuration or
/// input error, 3 simulation inconsistency (norm or ledger violation).
struct RunConfig {
    std::string subcommand;  // load | demo | shift | linshift | estimate | resources
    std::string op;          // demo/resources operation name
    std::string input_path;
    std::optional<std::size_t> n_row_qubits;  // --nI
    std::optional<std::size_t> n_col_qubits;  // --nJ
    std::optional<std::uint64_t> row;
    std::optional<std::uint64_t> col;
    std::optional<std::uint64_t> col2;
    std::optional<double> alpha;
    std::string direction = "left";
    double shift = 0.0;
    std::size_t levels = 1;
    double amplitude = 0.3;
    std::uint64_t shots = 10000;
    std::size_t stages = 3;
    double failure_prob = 0.05;
    std::uint64_t seed = 0;
    std::size_t repeats = 1;
    std::string format = "json";  // json | csv | table
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv front end; parses into a RunConfig and calls run().
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmat::cli
