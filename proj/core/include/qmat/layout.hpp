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

#include "qmat/gates.hpp"
#include "qmat/state_vector.hpp"

namespace qmat {

/// Assignment of qubit indices to quantum-matrix roles: one aux flag, an
/// optional multiplier flag, a row register and a column register.
/// Registers are little-endian: entry 0 of each list is the least
/// significant address bit.
struct RegisterLayout {
    std::size_t aux = 0;
    std::optional<std::size_t> mul;
    std::vector<std::size_t> row_qubits;
    std::vector<std::size_t> col_qubits;

    /// Columns on the low qubits, rows above them, then mul (if any),
    /// aux on top. With this order the aux=0/mul=0 data sector occupies
    /// the first rows*cols amplitudes as z = i*cols + j.
    static RegisterLayout standard(std::size_t n_row_qubits, std::size_t n_col_qubits,
                                   bool with_mul = false);

    std::size_t n_row_qubits() const { return row_qubits.size(); }
    std::size_t n_col_qubits() const { return col_qubits.size(); }
    std::uint64_t rows() const { return std::uint64_t{1} << row_qubits.size(); }
    std::uint64_t cols() const { return std::uint64_t{1} << col_qubits.size(); }
    std::size_t total_qubits() const;

    /// Throws DimensionError when indices collide or overflow 64 bits.
    void validate() const;

    /// Basis index with row address i, column address j and the given flag bits.
    std::uint64_t basis_index(std::uint64_t i, std::uint64_t j, bool aux_bit = false,
                              bool mul_bit = false) const;

    /// Pattern fixing the aux bit (and mul, when present) plus any given
    /// row/column address; unset addresses stay free.
    BasisPattern sector(std::optional<std::uint64_t> i, std::optional<std::uint64_t> j,
                        bool aux_bit = false, bool mul_bit = false) const;
};

/// The X gates that flip every register qubit whose target address bit is
/// zero, so the masked address reads all-ones. Self-inverse.
struct MaskPlan {
    std::vector<GateOp> gates;

    void apply(StateVector& state) const;
};

/// Mask plan for a row address, a column address, or both. `nullopt`
/// leaves that register untouched.
MaskPlan make_mask(const RegisterLayout& layout, std::optional<std::uint64_t> row,
                   std::optional<std::uint64_t> col);

}  // namespace qmat
