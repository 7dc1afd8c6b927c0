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

#include "qmat/layout.hpp"
#include "qmat/ledger.hpp"
#include "qmat/oracle.hpp"
#include "qmat/state_vector.hpp"

namespace qmat {

/// Target of a row/column-local operation.
struct RowSelector {
    enum class Kind { Row, Col, All };

    Kind kind = Kind::All;
    std::uint64_t index = 0;

    static RowSelector row(std::uint64_t i) { return {Kind::Row, i}; }
    static RowSelector col(std::uint64_t j) { return {Kind::Col, j}; }
    static RowSelector all() { return {Kind::All, 0}; }
};

/// Reverses the selected row (c_ij -> c_{i,J-1-j}), column, or, with zero
/// controls, the whole matrix. Self-inverse.
void reverse(StateVector& state, const RegisterLayout& layout, RowSelector sel);

/// Exchanges the column entries at `pos` and J-1 in every row, restoring
/// everything else. pos = J-1 short-circuits to the identity.
void swap_with_pivot(StateVector& state, const RegisterLayout& layout, std::uint64_t pos);

/// Generic two-element swap as at most three pivot swaps.
void swap_elements(StateVector& state, const RegisterLayout& layout, std::uint64_t i,
                   std::uint64_t j);

enum class ShiftDirection { Left, Right };

/// Cyclic permutation of the selected row (or of every row), realized as
/// a controlled NOT cascade (binary decrement for Left, increment for
/// Right). Left: output[j] = input[(j+1) mod J]. A column selector
/// permutes that column's entries across rows instead.
void cyclic_shift(StateVector& state, const RegisterLayout& layout, ShiftDirection direction,
                  RowSelector sel);

/// Hadamard on the least significant row qubit: row 2i becomes the pair
/// sum (f_{2i}+f_{2i+1})/sqrt2 and row 2i+1 the pair difference.
/// Ledger factor 1/sqrt2.
void pairwise_sum_diff(StateVector& state, const RegisterLayout& layout,
                       NormLedger* ledger = nullptr);

/// Walsh-Hadamard over the column register: column 0 of each row picks up
/// the row sum divided by sqrt(J) (ledger factor), the other columns the
/// remaining signed Walsh combinations.
void reduce_rows(StateVector& state, const RegisterLayout& layout, NormLedger* ledger = nullptr);

/// Multiplies the selected row/column/matrix by alpha in [0, 1] via one
/// rotation on the mul flag; the sqrt(1-alpha^2) residual moves to mul=1.
/// Throws RangeError for alpha outside [0, 1].
void scale_by_constant(StateVector& state, const RegisterLayout& layout, RowSelector sel,
                       double alpha);

/// Elementwise product of two arrays: load f, swap the two flag qubits,
/// load g. The aux=0, mul=0 sector of the returned state carries f_j*g_j
/// in array units. Layout must be flag-flag-columns (no row register).
StateVector multiply_arrays(const Oracle& f, const Oracle& g, const RegisterLayout& layout,
                            NormLedger* ledger = nullptr);

/// multiply_arrays of an array with itself.
StateVector square_array(const Oracle& f, const RegisterLayout& layout,
                         NormLedger* ledger = nullptr);

/// Product followed by a reduction: column 0 of the double-flag-0 sector
/// carries <f, g>/sqrt(J).
StateVector scalar_product(const Oracle& f, const Oracle& g, const RegisterLayout& layout,
                           NormLedger* ledger = nullptr);

}  // namespace qmat
