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
#include <span>
#include <string>
#include <vector>

#include "qmat/gates.hpp"
#include "qmat/layout.hpp"
#include "qmat/ledger.hpp"
#include "qmat/state_vector.hpp"

namespace qmat {

/// Reversible loader for a length-J array:
///   |0>_flag |j>  ->  f_j |0>_flag |j> + sqrt(1 - f_j^2) |1>_flag |j>.
/// Values live in [-1, 1]; J is a power of two. Immutable once built.
class Oracle {
  public:
    /// Wraps values that are already in [-1, 1]; throws RangeError otherwise.
    static Oracle from_array(std::string name, std::vector<double> values);

    /// Divides by the inf-norm first and remembers it for the ledger.
    static Oracle from_unnormalized(std::string name, std::vector<double> raw);

    const std::string& name() const { return name_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t length() const { return values_.size(); }
    std::size_t n_col_qubits() const { return n_col_qubits_; }

    /// Inf-norm of the source data (1 when built with from_array).
    double source_inf_norm() const { return inf_norm_; }

    /// Applies the loader onto (flag, cols); `cols` is little-endian and
    /// must match length(). Extra controls condition the whole fragment.
    /// With inverse=true the adjoint is applied.
    void apply(StateVector& state, std::size_t flag, std::span<const std::size_t> cols,
               std::span<const Control> extra_controls = {}, bool inverse = false) const;

    std::string to_json_text() const;
    static Oracle from_json_text(const std::string& text);

  private:
    Oracle() = default;

    std::string name_;
    std::vector<double> values_;
    std::size_t n_col_qubits_ = 0;
    double inf_norm_ = 1.0;
};

/// Parameters of a shift construction.
struct ShiftSpec {
    double s = 0.0;
    std::size_t levels = 1;
};

/// Output of a shift construction: the prepared state plus the metadata
/// needed to read it (which sector carries the result and at what scale).
struct ShiftResult {
    StateVector state;
    RegisterLayout layout;
    std::size_t levels = 1;
    double shift = 0.0;
    std::vector<double> level_shifts;  // effective per-level shift constants
    std::uint64_t marker_row = 0;      // row address carrying the result
    BasisPattern diff_sector;          // aux=0, row=marker_row
    BasisPattern sum_sector;           // aux=0, row 0 (constant shift only)
    NormLedger ledger;                 // includes the 2^-levels stage factor

    /// Result-sector values in array units (amplitudes times sqrt(J)).
    std::vector<double> sector_values() const;
    std::vector<double> sum_sector_values() const;

    std::string to_json_text() const;
};

/// Loads f on row 0 and the constant s on row 1 of a 2 x J matrix, then
/// combines the rows with one Hadamard: the diff sector carries
/// (f_j - s)/2 and the sum sector (f_j + s)/2, both in array units.
/// s is in the oracle's normalized units; throws RangeError when |s| > 1.
ShiftResult constant_shift(const Oracle& f, double s);

/// Constant shift followed by a NOT on the row qubit controlled by the
/// most significant column qubit: the diff sector carries (f_j - s)/2 on
/// the lower half of columns and (f_j + s)/2 on the upper half.
ShiftResult step_shift(const Oracle& f, double s);

/// Iterated step shift with `levels` row qubits. Level k loads a
/// constant derived from shift_schedule() and flips on the k-th most
/// significant column qubit; the all-ones row sector then carries f
/// shifted by a 2^levels-step staircase at overall scale 2^-levels.
/// levels = 1 is exactly step_shift.
ShiftResult linear_shift(const Oracle& f, double s, std::size_t levels);
ShiftResult linear_shift(const Oracle& f, const ShiftSpec& shift);

/// Per-level shift constants: s, then (2/3)s, then thirds of the
/// previous level, which keeps the staircase monotone at any depth.
std::vector<double> shift_schedule(double s, std::size_t levels);

/// The staircase the diff sector of linear_shift realizes: entry q is the
/// signed offset applied on step q of 2^levels equal column blocks.
std::vector<double> staircase_offsets(double s, std::size_t levels);

}  // namespace qmat
