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

#include <string>
#include <utility>
#include <vector>

namespace qmat {

/// Run-level record of the scalar factors a pipeline introduces (1/sqrt2
/// per combining Hadamard, 1/2 per shift stage, the input inf-norm), so
/// extracted amplitudes can be compared to classical values exactly:
/// extracted = factor() * classical.
class NormLedger {
  public:
    void push(std::string label, double factor) {
        entries_.emplace_back(std::move(label), factor);
        factor_ *= factor;
    }

    double factor() const { return factor_; }
    const std::vector<std::pair<std::string, double>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

  private:
    double factor_ = 1.0;
    std::vector<std::pair<std::string, double>> entries_;
};

}  // namespace qmat
