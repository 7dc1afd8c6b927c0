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
#include <optional>
#include <vector>

#include "qmat/classical_matrix.hpp"
#include "qmat/layout.hpp"
#include "qmat/state_vector.hpp"

namespace qmat {

/// Fresh state with amplitude 1/sqrt(I*J) on every aux=0 (and mul=0)
/// address: a Walsh-Hadamard over the row and column registers.
StateVector init_uniform(const RegisterLayout& layout);

/// Flips the register qubits so the given address reads all-ones.
/// Row-only masking leaves the column register untouched, and vice versa.
/// Self-inverse: call again with the same arguments to undo.
void mask(StateVector& state, const RegisterLayout& layout, std::optional<std::uint64_t> row,
          std::optional<std::uint64_t> col);

/// Embeds f entry by entry on a freshly initialised uniform state: the
/// aux=0 sector picks up f_ij/(inf_norm*sqrt(IJ)), the aux=1 sector the
/// root residual. Per entry: mask, one multi-controlled y-rotation by
/// 2*arccos of the normalized value, unmask.
void load_pointwise(StateVector& state, const RegisterLayout& layout, const ClassicalMatrix& f);

/// Embeds the constant c on every column of one previously untouched row.
/// Costs at most 2*n_I mask X gates plus a single y-rotation controlled
/// only on the row register, independent of the column count.
/// Throws RangeError when |c| > 1.
void load_constant_row(StateVector& state, const RegisterLayout& layout, std::uint64_t row,
                       double c);

/// Debug extractor: the aux=0 (and mul=0) sector rearranged as an I x J
/// real matrix, scaled by sqrt(IJ). Bypasses measurement; exists only so
/// tests and demos can verify states against classical references.
ClassicalMatrix read_matrix(const StateVector& state, const RegisterLayout& layout);

/// One row of the aux-selected sector, scaled by sqrt(J) (the length-J
/// array unit used by the shift constructions).
std::vector<double> read_row_sector(const StateVector& state, const RegisterLayout& layout,
                                    std::uint64_t row, bool aux_bit = false);

}  // namespace qmat
