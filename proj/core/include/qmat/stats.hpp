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
#include <map>
#include <string>

#include "qmat/gates.hpp"

namespace qmat {

/// One bucket of primitive-gate tallies.
///
/// Multi-controlled gates are applied semantically by the simulator; the
/// counters keep a claims-level ledger instead:
///  - x/h/ry/cnot count plain and singly-controlled gates directly,
///  - `multi_controlled` counts each semantic multi-controlled gate once,
///  - `toffoli_estimate` accumulates the standard decomposition cost of
///    2c-3 Toffolis per c-controlled NOT (c >= 2); a controlled rotation
///    or controlled Hadamard is ledgered as two such NOTs plus two plain
///    gates of its kind,
///  - an on-0 control contributes two X gates (its conjugation pair).
struct GateCounts {
    std::uint64_t x = 0;
    std::uint64_t h = 0;
    std::uint64_t ry = 0;
    std::uint64_t cnot = 0;
    std::uint64_t multi_controlled = 0;
    std::uint64_t toffoli_estimate = 0;

    GateCounts& operator+=(const GateCounts& o);
    GateCounts operator-(const GateCounts& o) const;  // requires *this >= o componentwise
    bool operator==(const GateCounts&) const = default;
};

/// Cumulative gate ledger for one run: totals plus a per-operation-label
/// breakdown. Counters only grow; reset() is the one way back to zero.
class GateStats {
  public:
    void record(const GateOp& g);

    /// Ledger entry for a semantic reflection 1 - 2|p><p| over n qubits:
    /// a multi-controlled Z (H-conjugated NOT) plus the X conjugation of
    /// the pattern's zero bits.
    void record_reflection(std::size_t n_qubits, std::uint64_t pattern_value);

    const GateCounts& total() const { return total_; }
    const std::map<std::string, GateCounts>& per_op() const { return per_op_; }

    void set_label(std::string label) { label_ = std::move(label); }
    const std::string& label() const { return label_; }

    void reset();

    bool operator==(const GateStats&) const = default;

  private:
    void add(const GateCounts& c);

    GateCounts total_;
    std::map<std::string, GateCounts> per_op_;
    std::string label_;
};

/// RAII label for the per-operation breakdown.
class StatsScope {
  public:
    StatsScope(GateStats& stats, std::string label) : stats_(stats), prev_(stats.label()) {
        stats_.set_label(std::move(label));
    }
    ~StatsScope() { stats_.set_label(prev_); }

    StatsScope(const StatsScope&) = delete;
    StatsScope& operator=(const StatsScope&) = delete;

  private:
    GateStats& stats_;
    std::string prev_;
};

}  // namespace qmat
