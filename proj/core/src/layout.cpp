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

#include "qmat/layout.hpp"

#include <set>

#include "qmat/errors.hpp"

namespace qmat {

RegisterLayout RegisterLayout::standard(std::size_t n_row_qubits, std::size_t n_col_qubits,
                                        bool with_mul) {
    RegisterLayout layout;
    std::size_t next = 0;
    layout.col_qubits.resize(n_col_qubits);
    for (std::size_t b = 0; b < n_col_qubits; ++b) {
        layout.col_qubits[b] = next++;
    }
    layout.row_qubits.resize(n_row_qubits);
    for (std::size_t b = 0; b < n_row_qubits; ++b) {
        layout.row_qubits[b] = next++;
    }
    if (with_mul) {
        layout.mul = next++;
    }
    layout.aux = next;
    return layout;
}

std::size_t RegisterLayout::total_qubits() const {
    return 1 + (mul.has_value() ? 1 : 0) + row_qubits.size() + col_qubits.size();
}

void RegisterLayout::validate() const {
    std::set<std::size_t> seen;
    seen.insert(aux);
    if (mul.has_value() && !seen.insert(*mul).second) {
        throw DimensionError("layout flag qubits collide");
    }
    for (std::size_t q : row_qubits) {
        if (!seen.insert(q).second) {
            throw DimensionError("layout row qubit reused");
        }
    }
    for (std::size_t q : col_qubits) {
        if (!seen.insert(q).second) {
            throw DimensionError("layout column qubit reused");
        }
    }
    if (row_qubits.size() + col_qubits.size() + 2 > 63) {
        throw DimensionError("layout exceeds the 64-bit basis index");
    }
}

std::uint64_t RegisterLayout::basis_index(std::uint64_t i, std::uint64_t j, bool aux_bit,
                                          bool mul_bit) const {
    if (i >= rows() || j >= cols()) {
        throw AddressError("matrix address out of range");
    }
    std::uint64_t z = 0;
    for (std::size_t b = 0; b < row_qubits.size(); ++b) {
        if ((i >> b) & 1) {
            z |= std::uint64_t{1} << row_qubits[b];
        }
    }
    for (std::size_t b = 0; b < col_qubits.size(); ++b) {
        if ((j >> b) & 1) {
            z |= std::uint64_t{1} << col_qubits[b];
        }
    }
    if (aux_bit) {
        z |= std::uint64_t{1} << aux;
    }
    if (mul_bit) {
        if (!mul.has_value()) {
            throw DimensionError("layout has no mul qubit");
        }
        z |= std::uint64_t{1} << *mul;
    }
    return z;
}

BasisPattern RegisterLayout::sector(std::optional<std::uint64_t> i, std::optional<std::uint64_t> j,
                                    bool aux_bit, bool mul_bit) const {
    BasisPattern p;
    p.set(aux, aux_bit);
    if (mul.has_value()) {
        p.set(*mul, mul_bit);
    } else if (mul_bit) {
        throw DimensionError("layout has no mul qubit");
    }
    if (i.has_value()) {
        if (*i >= rows()) {
            throw AddressError("row address out of range");
        }
        for (std::size_t b = 0; b < row_qubits.size(); ++b) {
            p.set(row_qubits[b], (*i >> b) & 1);
        }
    }
    if (j.has_value()) {
        if (*j >= cols()) {
            throw AddressError("column address out of range");
        }
        for (std::size_t b = 0; b < col_qubits.size(); ++b) {
            p.set(col_qubits[b], (*j >> b) & 1);
        }
    }
    return p;
}

void MaskPlan::apply(StateVector& state) const {
    for (const GateOp& g : gates) {
        state.apply(g);
    }
}

MaskPlan make_mask(const RegisterLayout& layout, std::optional<std::uint64_t> row,
                   std::optional<std::uint64_t> col) {
    MaskPlan plan;
    if (row.has_value()) {
        if (*row >= layout.rows()) {
            throw AddressError("mask row out of range");
        }
        for (std::size_t b = 0; b < layout.row_qubits.size(); ++b) {
            if (((*row >> b) & 1) == 0) {
                plan.gates.push_back(GateOp::x(layout.row_qubits[b]));
            }
        }
    }
    if (col.has_value()) {
        if (*col >= layout.cols()) {
            throw AddressError("mask column out of range");
        }
        for (std::size_t b = 0; b < layout.col_qubits.size(); ++b) {
            if (((*col >> b) & 1) == 0) {
                plan.gates.push_back(GateOp::x(layout.col_qubits[b]));
            }
        }
    }
    return plan;
}

}  // namespace qmat
